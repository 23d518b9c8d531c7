#pragma once

#include <cstdint>
#include <vector>

#include "gwgames/errors.hpp"
#include "gwgames/offspring.hpp"

namespace gwg {

class TreeBudgetExceeded : public ComputeError {
public:
    explicit TreeBudgetExceeded(const std::string& what) : ComputeError(what) {}
};

/// Depth-truncated sampled tree stored as an index arena in BFS order, so a
/// node's children occupy a contiguous block and every child index is larger
/// than its parent's. Nodes at depth == depth_cutoff carry no sampled
/// children and are flagged truncated.
struct SampledTree {
    struct Node {
        std::uint32_t parent;
        std::uint32_t first_child;
        std::uint32_t n_children;
        std::uint16_t depth;
        bool truncated;
    };

    std::vector<Node> nodes;
    int depth_cutoff = 0;

    std::size_t size() const { return nodes.size(); }
};

/// Samples i.i.d. offspring counts per node breadth-first, truncating at
/// depth_cutoff. Deterministic for a given seed. Throws TreeBudgetExceeded
/// when the arena would grow past node_budget.
SampledTree sample_tree(const OffspringDistribution& dist, int depth_cutoff, std::uint64_t seed,
                        std::uint64_t node_budget = 10'000'000);

/// Restriction of a sampled tree to depth <= cutoff (statuses-only-refine
/// checks need the same tree at two horizons).
SampledTree truncate_tree(const SampledTree& tree, int cutoff);

} // namespace gwg
