#pragma once

#include <cstdint>
#include <vector>

#include "gwgames/tree.hpp"

namespace gwg {

enum class NodeState : std::uint8_t {
    next_win,     // player about to move wins (normal / misere)
    prev_win,     // player who just moved wins
    undecided,    // not settled within the truncation horizon
    stopper_win,  // escape game
    escaper_win,
};

/// Game status of one node. For decided normal/misere nodes `index` is the
/// least k such that the winner can force the win in fewer than k moves, so
/// the optimal move count is index - 1. Same convention for stopper_win in
/// the escape game; escaper_win carries no index.
struct NodeStatus {
    NodeState state;
    std::uint32_t index;
};

/// Bottom-up solve of the normal game: leaves are prev_win(1), truncated
/// leaves undecided, a node with a prev_win child is next_win over the
/// cheapest such child, a node with all children next_win is prev_win over
/// the costliest child.
std::vector<NodeStatus> solve_normal(const SampledTree& tree);

/// Misere play: identical recursion with the leaf rule flipped to next_win(1).
std::vector<NodeStatus> solve_misere(const SampledTree& tree);

/// Escape game. Truncated leaves are declared escaper wins; real leaves are
/// stopper wins in one move. stopper_moves_first fixes which parity of depths
/// the stopper moves at.
std::vector<NodeStatus> solve_escape(const SampledTree& tree, bool stopper_moves_first);

struct ReducedTree {
    bool censored = false;          // truncation (undecided marks) touched the component
    int height = 0;                 // max depth over kept nodes = T* when not censored
    std::vector<std::uint32_t> kept;  // node indices, BFS order from the root
};

/// Deletes bad nodes -- a next_win child of a next_win node, and any prev_win
/// node whose parent has more than one prev_win child -- and returns the
/// component of the root. Height is the forced-play horizon T*.
/// Works on normal or misere marks.
ReducedTree reduced_tree(const SampledTree& tree, const std::vector<NodeStatus>& marks);

} // namespace gwg
