#pragma once

#include <cstdint>
#include <vector>

#include "gwgames/monte_carlo.hpp"
#include "gwgames/outcomes.hpp"

namespace gwg {

/// Expected optimal-play length report. The underlying series sums the
/// probabilities that the game is still open after n moves; its n = 0 term is
/// identically 1, so the raw series value exceeds the expected move count by
/// exactly one. Both values are reported; e_t_moves is the one that matches
/// the tree-level brute force and the Monte Carlo mean of T.
struct LengthReport {
    Game game = Game::normal;
    bool divergent = false;
    double e_t_moves = 0.0;   // sum_{n>=1} D_n
    double e_t_raw = 0.0;     // sum_{n>=0} D_n = e_t_moves + 1
    bool truncated_at_n_max = false;
    double tail_bound = 0.0;  // geometric bound on the dropped tail when truncated
    double tail_ratio = 0.0;  // last observed D_{n+2} / D_n
    long terms_used = 0;
    std::vector<double> partial_sums; // running raw sums (head of the sequence)
    double draw_probability = 0.0;    // raw draw probability of the game
    double grandchild_mean = 0.0;     // G'(N)^2, 0 when undefined (draw-positive)
};

/// Sums the open-game probabilities D_n built from the parity-correct
/// iterates of F (normal) or H (misere) applied to 0 and 1. Divergence is
/// declared when the draw probability is positive or the two-step tail ratio
/// stays above 1 - 1e-6 for 100 consecutive terms.
LengthReport expected_T(const OffspringDistribution& dist, Game game, long n_max = 10'000,
                        double tol = 1e-12);

/// G'(N)^2 with N the next-player win probability (G'(N~)^2 for misere).
/// Requires a draw-free law; the deterministic p1 = 1 path is the one
/// draw-positive input accepted, since G' == 1 there regardless of N.
double grandchild_mean(const OffspringDistribution& dist, Game game);

struct TstarEstimate {
    double mean = 0.0;           // over clean samples only
    double se = 0.0;
    double lower_bound_mean = 0.0;  // censored samples contribute the height they reached,
    double lower_bound_se = 0.0;    // a per-sample lower bound on T*; robust to censoring bias
    std::size_t count = 0;       // clean samples
    std::size_t censored = 0;    // a needed mark stayed unsettled within the caps
    std::size_t skipped = 0;     // node budget overruns
    bool draw_warning = false;   // analytic draw probability positive: censoring dominates
    std::vector<std::uint64_t> histogram; // clean samples
};

/// Monte Carlo estimate of E[T*]: samples trees, solves the game, builds the
/// reduced tree and averages its height over clean samples.
///
/// The tree is materialized on demand: a node's subtree is extended exactly
/// as far as deciding the marks the reduced tree needs (on draw-free laws
/// every mark decides at an a.s. finite depth). A fixed sampling horizon
/// would censor nearly every sample for supercritical laws, where whole
/// trees are exponentially large but reduced trees stay small. depth_cutoff
/// acts as the extension cap: samples needing marks beyond it count as
/// censored, and budget overruns as skipped.
/// mark_budget caps the status-search visits spent on any single mark;
/// marks that exhaust it are censored like depth-cap hits (refuting every
/// certificate up to the cap costs a subtree sweep, while real certificates
/// stay thin).
TstarEstimate expected_Tstar_mc(const OffspringDistribution& dist, Game game, int depth_cutoff,
                                std::size_t n_samples, std::uint64_t seed, int threads = 1,
                                std::uint64_t node_budget = 10'000'000,
                                std::uint64_t mark_budget = 200'000);

} // namespace gwg
