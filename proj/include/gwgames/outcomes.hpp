#pragma once

#include <array>
#include <string>
#include <vector>

#include "gwgames/fixed_point.hpp"
#include "gwgames/maps.hpp"
#include "gwgames/offspring.hpp"

namespace gwg {

enum class Game { normal, misere, escape };

std::string game_name(Game g);
Game parse_game(std::string_view name);

struct SolveInfo {
    MapId map = MapId::F2;
    bool from_zero = true;
    long iterations = 0;
    bool converged = false;
    bool refined = false;
};

/// The ten outcome probabilities of one offspring law.
///
/// n/p/d: next-player win, previous-player win, draw under normal play;
/// the _mis triple is the misere analogue. s1/s2: the stopping player wins
/// moving first/second; e1 = 1 - s2 and e2 = 1 - s1 exactly.
///
/// d (and d_mis) snap to exactly 0 below 1e-9 so downstream predicates get a
/// crisp draw-free answer; the raw differences stay in d_raw/d_mis_raw.
struct GameOutcomes {
    double n = 0, p = 0, d = 0;
    double n_mis = 0, p_mis = 0, d_mis = 0;
    double s1 = 0, s2 = 0, e1 = 0, e2 = 0;

    double d_raw = 0, d_mis_raw = 0;

    double x_star = 0, slope_x_star = 0;          // fixed point of F and F' there
    double x_star_mis = 0, slope_x_star_mis = 0;  // fixed point of H and H' there

    // |1-p - F(n)|, |n - F(1-p)|, |1-p~ - H(n~)|, |n~ - H(1-p~)|,
    // |s1 - H(e1)|, |e1 - F(s1)|
    std::array<double, 6> residuals{};
    double max_residual = 0;

    std::vector<SolveInfo> solves;

    double by_symbol(std::string_view symbol) const; // "N","P","D","Nm","Pm","Dm","S1","S2","E1","E2"
};

/// Computes all ten probabilities from the fixed points of F^2, H^2, H o F
/// and F o H, plus the consistency residuals and slope diagnostics.
GameOutcomes outcomes(const OffspringDistribution& dist, double tol = 1e-12,
                      long max_iter = 1'000'000);

/// Uniform samples of map(x) - x, rows (x_i, value), i = 0..resolution.
std::vector<std::pair<double, double>> curve_samples(const OffspringDistribution& dist, MapId id,
                                                     int resolution);

inline constexpr double kDrawSnapTolerance = 1e-9;

} // namespace gwg
