#include "gwgames/tree.hpp"

#include <limits>

#include "gwgames/rng.hpp"

namespace gwg {

SampledTree sample_tree(const OffspringDistribution& dist, int depth_cutoff, std::uint64_t seed,
                        std::uint64_t node_budget) {
    if (depth_cutoff < 0) throw std::invalid_argument("depth_cutoff must be >= 0");
    if (depth_cutoff > std::numeric_limits<std::uint16_t>::max() - 1)
        throw std::invalid_argument("depth_cutoff too large");

    SplitMix64 rng(seed);
    SampledTree tree;
    tree.depth_cutoff = depth_cutoff;
    tree.nodes.push_back({0, 0, 0, 0, depth_cutoff == 0});

    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const std::uint16_t depth = tree.nodes[i].depth;
        if (depth >= depth_cutoff) continue; // truncated boundary, children not sampled
        const std::uint64_t k = dist.sample_count(rng);
        if (tree.nodes.size() + k > node_budget)
            throw TreeBudgetExceeded("tree too large: node budget " +
                                     std::to_string(node_budget) + " exceeded at depth " +
                                     std::to_string(depth));
        tree.nodes[i].first_child = static_cast<std::uint32_t>(tree.nodes.size());
        tree.nodes[i].n_children = static_cast<std::uint32_t>(k);
        const bool child_truncated = depth + 1 == depth_cutoff;
        for (std::uint64_t c = 0; c < k; ++c)
            tree.nodes.push_back({static_cast<std::uint32_t>(i), 0, 0,
                                  static_cast<std::uint16_t>(depth + 1), child_truncated});
    }
    return tree;
}

SampledTree truncate_tree(const SampledTree& tree, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    if (cutoff >= tree.depth_cutoff) return tree;

    SampledTree out;
    out.depth_cutoff = cutoff;
    // BFS order is depth-sorted, so the restriction is a prefix of the arena.
    std::size_t keep = tree.nodes.size();
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        if (tree.nodes[i].depth > cutoff) {
            keep = i;
            break;
        }
    }
    out.nodes.assign(tree.nodes.begin(), tree.nodes.begin() + keep);
    for (auto& n : out.nodes) {
        if (n.depth == cutoff) {
            n.first_child = 0;
            n.n_children = 0;
            n.truncated = true;
        }
    }
    return out;
}

} // namespace gwg
