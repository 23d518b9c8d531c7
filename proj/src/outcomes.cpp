#include "gwgames/outcomes.hpp"

#include <cmath>
#include <stdexcept>

namespace gwg {

std::string game_name(Game g) {
    switch (g) {
        case Game::normal: return "normal";
        case Game::misere: return "misere";
        case Game::escape: return "escape";
    }
    return {};
}

Game parse_game(std::string_view name) {
    if (name == "normal") return Game::normal;
    if (name == "misere" || name == "misère") return Game::misere;
    if (name == "escape") return Game::escape;
    throw std::invalid_argument("unknown game '" + std::string(name) +
                                "' (expected normal, misere or escape)");
}

namespace {

double solve(const OffspringDistribution& dist, MapId id, bool from_zero, double tol,
             long max_iter, std::vector<SolveInfo>& infos) {
    const ComposedMap m(dist, id);
    IterationTrace trace;
    const double v = from_zero ? min_fixed_point(m, tol, max_iter, &trace)
                               : max_fixed_point(m, tol, max_iter, &trace);
    infos.push_back({id, from_zero, trace.iterations, trace.converged, trace.refined});
    return v;
}

} // namespace

GameOutcomes outcomes(const OffspringDistribution& dist, double tol, long max_iter) {
    GameOutcomes out;

    double n = solve(dist, MapId::F2, true, tol, max_iter, out.solves);
    double f2_max = solve(dist, MapId::F2, false, tol, max_iter, out.solves);
    collapse_spurious_pair(ComposedMap(dist, MapId::F2), n, f2_max);
    double nm = solve(dist, MapId::H2, true, tol, max_iter, out.solves);
    double h2_max = solve(dist, MapId::H2, false, tol, max_iter, out.solves);
    collapse_spurious_pair(ComposedMap(dist, MapId::H2), nm, h2_max);
    const double s1 = solve(dist, MapId::HF, true, tol, max_iter, out.solves);
    const double e1 = solve(dist, MapId::FH, false, tol, max_iter, out.solves);

    out.n = n;
    out.p = 1.0 - f2_max;
    out.d_raw = std::max(0.0, f2_max - n);
    out.d = out.d_raw < kDrawSnapTolerance ? 0.0 : out.d_raw;

    out.n_mis = nm;
    out.p_mis = 1.0 - h2_max;
    out.d_mis_raw = std::max(0.0, h2_max - nm);
    out.d_mis = out.d_mis_raw < kDrawSnapTolerance ? 0.0 : out.d_mis_raw;

    out.s1 = s1;
    out.e1 = e1;
    out.s2 = 1.0 - e1;
    out.e2 = 1.0 - s1;

    out.x_star = decreasing_map_fixed_point(ComposedMap(dist, MapId::F));
    out.slope_x_star = -dist.g_prime(out.x_star);
    out.x_star_mis = decreasing_map_fixed_point(ComposedMap(dist, MapId::H));
    out.slope_x_star_mis = -dist.g_prime(out.x_star_mis);

    out.residuals[0] = std::abs((1.0 - out.p) - dist.f(out.n));
    out.residuals[1] = std::abs(out.n - dist.f(1.0 - out.p));
    out.residuals[2] = std::abs((1.0 - out.p_mis) - dist.h(out.n_mis));
    out.residuals[3] = std::abs(out.n_mis - dist.h(1.0 - out.p_mis));
    out.residuals[4] = std::abs(out.s1 - dist.h(out.e1));
    out.residuals[5] = std::abs(out.e1 - dist.f(out.s1));
    out.max_residual = 0.0;
    for (double r : out.residuals) out.max_residual = std::max(out.max_residual, r);

    return out;
}

double GameOutcomes::by_symbol(std::string_view symbol) const {
    if (symbol == "N") return n;
    if (symbol == "P") return p;
    if (symbol == "D") return d;
    if (symbol == "Nm") return n_mis;
    if (symbol == "Pm") return p_mis;
    if (symbol == "Dm") return d_mis;
    if (symbol == "S1") return s1;
    if (symbol == "S2") return s2;
    if (symbol == "E1") return e1;
    if (symbol == "E2") return e2;
    throw std::invalid_argument("unknown outcome symbol '" + std::string(symbol) + "'");
}

std::vector<std::pair<double, double>> curve_samples(const OffspringDistribution& dist, MapId id,
                                                     int resolution) {
    if (resolution < 2) throw std::invalid_argument("curve resolution must be >= 2");
    const ComposedMap m(dist, id);
    std::vector<std::pair<double, double>> rows;
    rows.reserve(resolution + 1);
    for (int i = 0; i <= resolution; ++i) {
        const double x = (i == resolution) ? 1.0 : static_cast<double>(i) / resolution;
        rows.emplace_back(x, m(x) - x);
    }
    return rows;
}

} // namespace gwg
