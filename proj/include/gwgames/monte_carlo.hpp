#pragma once

#include <cstdint>
#include <vector>

#include "gwgames/outcomes.hpp"
#include "gwgames/solver.hpp"
#include "gwgames/tree.hpp"

namespace gwg {

/// statuses: trees are explored lazily with short-circuit pruning and only
/// root statuses are recorded. This is the mode that scales to supercritical
/// laws at depth 30, where materializing the truncated tree is hopeless.
/// full: each tree is materialized and solved with win indices, giving the
/// optimal-play length T and (normal/misere) the reduced-tree height T*.
enum class McMode { statuses, full };

struct McOptions {
    McMode mode = McMode::statuses;
    std::uint64_t node_budget = 10'000'000; // per tree: sampled nodes, or explored nodes when lazy
    int threads = 1;
    bool collect_tstar = true; // full mode, normal/misere only
};

struct Estimate {
    double value = 0.0;
    double se = 0.0;
};

struct McEstimate {
    Game game = Game::normal;
    McMode mode = McMode::statuses;
    int depth_cutoff = 0;
    std::uint64_t seed = 0;
    std::size_t n_samples = 0;
    std::size_t n_effective = 0; // samples that were not skipped

    // normal / misere
    Estimate next_win, prev_win, undecided;
    std::size_t censored = 0; // undecided roots

    // escape, both parities (independent streams in statuses mode)
    Estimate s1, s2, e1, e2;

    std::size_t skipped = 0; // per-sample budget overruns, never silently dropped
    std::uint64_t explored_nodes = 0; // sampled (lazy) or materialized nodes, all samples

    // full mode only
    std::vector<std::uint64_t> t_histogram; // decided games, move counts
    double mean_t = 0.0, se_t = 0.0;
    std::size_t t_count = 0;
    std::vector<std::uint64_t> tstar_histogram;
    double mean_tstar = 0.0, se_tstar = 0.0;
    std::size_t tstar_count = 0;
    std::size_t tstar_censored = 0;

    double seconds = 0.0;
};

/// Estimates outcome probabilities (and in full mode, length statistics) from
/// n_samples i.i.d. depth-truncated trees. Sample i draws its own stream seed
/// from (seed, i), so the result is deterministic for a fixed
/// (seed, n_samples, depth_cutoff, mode) regardless of the thread count.
McEstimate monte_carlo(const OffspringDistribution& dist, Game game, int depth_cutoff,
                       std::size_t n_samples, std::uint64_t seed, const McOptions& opts = {});

} // namespace gwg
