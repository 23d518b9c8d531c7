#include "gwgames/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwg {

namespace {

// Normal and misere differ only in the leaf rule.
std::vector<NodeStatus> solve_two_player(const SampledTree& tree, NodeState leaf_state) {
    std::vector<NodeStatus> st(tree.nodes.size());
    for (std::size_t i = tree.nodes.size(); i-- > 0;) {
        const auto& node = tree.nodes[i];
        if (node.truncated) {
            st[i] = {NodeState::undecided, 0};
            continue;
        }
        if (node.n_children == 0) {
            st[i] = {leaf_state, 1};
            continue;
        }
        std::uint32_t min_prev = 0;
        std::uint32_t max_next = 0;
        bool any_undecided = false;
        for (std::uint32_t c = node.first_child; c < node.first_child + node.n_children; ++c) {
            switch (st[c].state) {
                case NodeState::prev_win:
                    if (min_prev == 0 || st[c].index < min_prev) min_prev = st[c].index;
                    break;
                case NodeState::next_win:
                    max_next = std::max(max_next, st[c].index);
                    break;
                default:
                    any_undecided = true;
                    break;
            }
        }
        if (min_prev != 0)
            st[i] = {NodeState::next_win, min_prev + 1};
        else if (any_undecided)
            st[i] = {NodeState::undecided, 0};
        else
            st[i] = {NodeState::prev_win, max_next + 1};
    }
    return st;
}

} // namespace

std::vector<NodeStatus> solve_normal(const SampledTree& tree) {
    return solve_two_player(tree, NodeState::prev_win);
}

std::vector<NodeStatus> solve_misere(const SampledTree& tree) {
    return solve_two_player(tree, NodeState::next_win);
}

std::vector<NodeStatus> solve_escape(const SampledTree& tree, bool stopper_moves_first) {
    std::vector<NodeStatus> st(tree.nodes.size());
    for (std::size_t i = tree.nodes.size(); i-- > 0;) {
        const auto& node = tree.nodes[i];
        if (node.truncated) {
            st[i] = {NodeState::escaper_win, 0};
            continue;
        }
        if (node.n_children == 0) {
            st[i] = {NodeState::stopper_win, 1};
            continue;
        }
        const bool stopper_to_move = (node.depth % 2 == 0) == stopper_moves_first;
        if (stopper_to_move) {
            std::uint32_t min_s = 0;
            for (std::uint32_t c = node.first_child; c < node.first_child + node.n_children; ++c)
                if (st[c].state == NodeState::stopper_win && (min_s == 0 || st[c].index < min_s))
                    min_s = st[c].index;
            st[i] = min_s != 0 ? NodeStatus{NodeState::stopper_win, min_s + 1}
                               : NodeStatus{NodeState::escaper_win, 0};
        } else {
            std::uint32_t max_s = 0;
            bool all_stopper = true;
            for (std::uint32_t c = node.first_child; c < node.first_child + node.n_children; ++c) {
                if (st[c].state != NodeState::stopper_win) {
                    all_stopper = false;
                    break;
                }
                max_s = std::max(max_s, st[c].index);
            }
            st[i] = all_stopper ? NodeStatus{NodeState::stopper_win, max_s + 1}
                                : NodeStatus{NodeState::escaper_win, 0};
        }
    }
    return st;
}

ReducedTree reduced_tree(const SampledTree& tree, const std::vector<NodeStatus>& marks) {
    if (marks.size() != tree.nodes.size())
        throw std::invalid_argument("reduced_tree: marks do not match tree");
    for (const auto& m : marks)
        if (m.state == NodeState::stopper_win || m.state == NodeState::escaper_win)
            throw std::invalid_argument("reduced_tree needs normal or misere marks");

    ReducedTree out;
    if (marks[0].state == NodeState::undecided) {
        out.censored = true;
        return out;
    }
    out.kept.push_back(0);
    for (std::size_t qi = 0; qi < out.kept.size(); ++qi) {
        const std::uint32_t v = out.kept[qi];
        const auto& node = tree.nodes[v];
        std::uint32_t prev_children = 0;
        bool any_undecided = false;
        for (std::uint32_t c = node.first_child; c < node.first_child + node.n_children; ++c) {
            if (marks[c].state == NodeState::prev_win) ++prev_children;
            if (marks[c].state == NodeState::undecided) any_undecided = true;
        }
        if (any_undecided) out.censored = true; // a child's mark is unknown, so badness is ambiguous
        for (std::uint32_t c = node.first_child; c < node.first_child + node.n_children; ++c) {
            const NodeState cs = marks[c].state;
            if (cs == NodeState::undecided) continue;
            const bool bad =
                (cs == NodeState::next_win && marks[v].state == NodeState::next_win) ||
                (cs == NodeState::prev_win && (prev_children > 1 || any_undecided));
            if (!bad) {
                out.kept.push_back(c);
                out.height = std::max(out.height, static_cast<int>(tree.nodes[c].depth));
            }
        }
    }
    return out;
}

} // namespace gwg
