#pragma once

#include <string>
#include <vector>

#include "gwgames/family.hpp"
#include "gwgames/outcomes.hpp"

namespace gwg {

/// Order parameter of a game: the draw probability for normal/misere play,
/// the first-move escape probability E1 for the escape game. Raw value, not
/// snapped; positivity is judged against kOrderParameterPositive.
double order_parameter(const OffspringDistribution& dist, Game game);

inline constexpr double kOrderParameterPositive = 1e-9;

/// mu * p1. Above 1 the escaper can survive on a supercritical thinned tree.
double escape_criterion(const OffspringDistribution& dist);

enum class TransitionKind { continuous, discontinuous, boundary_crossing_mu_p1, indeterminate };

std::string transition_kind_name(TransitionKind k);

struct TransitionReport {
    std::string family;
    Game game = Game::normal;
    double t_critical = 0.0;
    TransitionKind classification = TransitionKind::indeterminate;
    double jump = 0.0;         // order-parameter limit from above minus limit from below
    double value_below = 0.0;  // order parameter just under t_critical
    double value_at = 0.0;     // order parameter at t_critical counting emerging roots
    double slope_diagnostic = 0.0;  // F'(x*) (H' analogue for misere) at t_critical
    double mu_p1 = 0.0;             // escape only
    bool mu_p1_crossing = false;    // escape only: mu*p1 crosses 1 at t_critical
    double bracket_width = 0.0;
    std::vector<double> emerging_roots;               // near-tangent folds at t_critical
    std::vector<std::pair<double, double>> deltas;    // (delta, order parameter at t+delta)
};

/// Bisects the boolean "order parameter > 1e-9" over [t_lo, t_hi] down to
/// bracket width tol_t and returns the midpoint. Preconditions: the predicate
/// is false at t_lo and true at t_hi (std::invalid_argument otherwise), and
/// it must switch exactly once at the prescan resolution -- families with
/// several transitions have to be scanned piecewise (ComputeError names the
/// offending subinterval).
double critical_parameter(const Family& family, Game game, double t_lo, double t_hi,
                          double tol_t = 1e-10, int prescan_points = 129);

/// Classifies the transition at t_critical: samples the order parameter at
/// t_critical + delta for delta = 1e-2 .. 1e-6, extrapolates the limit from
/// above, and calls the transition continuous when that limit falls below
/// 1e-4. For discontinuous transitions the jump is re-evaluated at
/// t_critical itself from the fixed-point set including emerging (fold)
/// roots, which is accurate to O(|t_located - t_true|) instead of O(sqrt).
TransitionReport classify_transition(const Family& family, Game game, double t_critical);

inline constexpr double kClassifyContinuousTol = 1e-4;

/// Fixed points of the game map including fold points whose value is within
/// emerge_eps of zero (the double roots present exactly at a discontinuous
/// transition). Used to evaluate outcomes *at* a located critical point.
std::vector<double> fixed_points_with_emerging(const OffspringDistribution& dist, MapId id,
                                               double emerge_eps = 1e-7,
                                               int grid_resolution = 10'000);

struct ScanRow {
    double t = 0.0;
    bool failed = false;
    std::string error;
    GameOutcomes oc;
};

/// Outcomes for every grid point; per-point failures are recorded and the
/// scan continues.
std::vector<ScanRow> scan_curve(const Family& family, const std::vector<double>& ts);

std::vector<double> linear_grid(double lo, double hi, int points);

struct DetectedTransition {
    double t = 0.0;
    bool onset = false;   // order parameter switches from ~0 to positive
    double level_lo = 0.0, level_hi = 0.0;
};

/// Coarse pre-scan that partitions [t_lo, t_hi] into monotone-predicate
/// segments: finds onsets (0 -> positive) and interior jumps (level change
/// above jump_tol) and refines each by bisection.
std::vector<DetectedTransition> find_transitions(const Family& family, Game game, double t_lo,
                                                 double t_hi, int prescan_points = 1000,
                                                 double jump_tol = 0.05, double tol_t = 1e-10);

} // namespace gwg
