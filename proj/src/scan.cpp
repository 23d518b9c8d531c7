#include "gwgames/scan.hpp"

#include <algorithm>
#include <cmath>

#include "gwgames/errors.hpp"
#include "gwgames/fixed_point.hpp"
#include "gwgames/format.hpp"

namespace gwg {

namespace {

MapId game_map(Game game) {
    switch (game) {
        case Game::normal: return MapId::F2;
        case Game::misere: return MapId::H2;
        case Game::escape: return MapId::FH;
    }
    return MapId::F2;
}

} // namespace

double order_parameter(const OffspringDistribution& dist, Game game) {
    switch (game) {
        case Game::normal: {
            const ComposedMap m(dist, MapId::F2);
            double lo = min_fixed_point(m), hi = max_fixed_point(m);
            collapse_spurious_pair(m, lo, hi);
            return std::max(0.0, hi - lo);
        }
        case Game::misere: {
            const ComposedMap m(dist, MapId::H2);
            double lo = min_fixed_point(m), hi = max_fixed_point(m);
            collapse_spurious_pair(m, lo, hi);
            return std::max(0.0, hi - lo);
        }
        case Game::escape:
            return max_fixed_point(ComposedMap(dist, MapId::FH));
    }
    return 0.0;
}

double escape_criterion(const OffspringDistribution& dist) { return dist.mean() * dist.p1(); }

std::string transition_kind_name(TransitionKind k) {
    switch (k) {
        case TransitionKind::continuous: return "continuous";
        case TransitionKind::discontinuous: return "discontinuous";
        case TransitionKind::boundary_crossing_mu_p1: return "boundary-crossing-mu-p1";
        case TransitionKind::indeterminate: return "indeterminate";
    }
    return {};
}

double critical_parameter(const Family& family, Game game, double t_lo, double t_hi, double tol_t,
                          int prescan_points) {
    if (!(t_lo < t_hi)) throw std::invalid_argument("critical_parameter needs t_lo < t_hi");
    if (prescan_points < 2) throw std::invalid_argument("prescan_points must be >= 2");
    auto positive = [&](double t) {
        return order_parameter(family.at(t), game) > kOrderParameterPositive;
    };
    if (positive(t_lo))
        throw std::invalid_argument("order parameter already positive at t_lo=" +
                                    format_number(t_lo));
    if (!positive(t_hi))
        throw std::invalid_argument("order parameter not positive at t_hi=" + format_number(t_hi));

    // One switch only at this resolution; several transitions must be scanned piecewise.
    bool prev = false;
    double prev_t = t_lo;
    int switches = 0;
    std::string offender;
    for (int i = 1; i <= prescan_points; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / prescan_points;
        const bool cur = positive(t);
        if (cur != prev) {
            ++switches;
            if (switches > 1 && offender.empty())
                offender = "[" + format_number(prev_t) + ", " + format_number(t) + "]";
        }
        prev = cur;
        prev_t = t;
    }
    if (switches != 1)
        throw ComputeError("order-parameter predicate is not monotone on [" +
                           format_number(t_lo) + ", " + format_number(t_hi) + "]: second switch in " +
                           offender + "; scan the family piecewise");

    double lo = t_lo, hi = t_hi;
    while (hi - lo > tol_t) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (positive(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> fixed_points_with_emerging(const OffspringDistribution& dist, MapId id,
                                               double emerge_eps, int grid_resolution) {
    const ComposedMap m(dist, id);
    FixedPointSet fps = isolate_fixed_points(dist, id, grid_resolution);
    std::vector<double> roots = fps.all;
    for (double u : fps.unresolved) roots.push_back(u);

    // Folds that have not (quite) touched the axis yet: critical points of
    // map(x)-x whose value is within emerge_eps of zero.
    const int n = grid_resolution;
    double prev_x = 0.0;
    double prev_d = m.derivative(0.0) - 1.0;
    for (int i = 1; i <= n; ++i) {
        const double x = (i == n) ? 1.0 : static_cast<double>(i) / n;
        const double d = m.derivative(x) - 1.0;
        if ((prev_d > 0.0) != (d > 0.0) && prev_d != 0.0) {
            double lo = prev_x, hi = x;
            const bool lo_positive = prev_d > 0.0;
            while (true) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                const double v = m.derivative(mid) - 1.0;
                if (v == 0.0) { lo = hi = mid; break; }
                ((v > 0.0) == lo_positive ? lo : hi) = mid;
            }
            const double xc = 0.5 * (lo + hi);
            if (std::abs(m(xc) - xc) <= emerge_eps) roots.push_back(xc);
        }
        prev_x = x;
        prev_d = d;
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> dedup;
    for (double r : roots)
        if (dedup.empty() || r - dedup.back() > 1e-7) dedup.push_back(r);
    return dedup;
}

namespace {

// Order parameter at a located critical point, counting roots that are just
// emerging there.
double order_parameter_at_criticality(const OffspringDistribution& dist, Game game,
                                      std::vector<double>& emerging) {
    const MapId id = game_map(game);
    const std::vector<double> roots = fixed_points_with_emerging(dist, id);
    const FixedPointSet plain = isolate_fixed_points(dist, id);
    for (double r : roots) {
        bool known = false;
        for (double k : plain.all)
            if (std::abs(k - r) <= 1e-7) known = true;
        if (!known) emerging.push_back(r);
    }
    if (roots.empty()) return 0.0;
    if (game == Game::escape) return roots.back();
    return roots.back() - roots.front();
}

} // namespace

TransitionReport classify_transition(const Family& family, Game game, double t_critical) {
    TransitionReport rep;
    rep.family = family.name();
    rep.game = game;
    rep.t_critical = t_critical;

    const auto [range_lo, range_hi] = family.range();
    const double below_t = std::max(range_lo, t_critical - 1e-7);
    rep.value_below = order_parameter(family.at(below_t), game);

    for (double delta : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const double t = t_critical + delta;
        if (t > range_hi) continue;
        rep.deltas.emplace_back(delta, order_parameter(family.at(t), game));
    }

    if (game == Game::escape) {
        const OffspringDistribution at_c = family.at(t_critical);
        rep.mu_p1 = escape_criterion(at_c);
        const double h = 1e-6;
        const double lo_val = escape_criterion(family.at(std::max(range_lo, t_critical - h)));
        const double hi_val = escape_criterion(family.at(std::min(range_hi, t_critical + h)));
        rep.mu_p1_crossing =
            std::abs(rep.mu_p1 - 1.0) <= 1e-9 || ((lo_val - 1.0) * (hi_val - 1.0) < 0.0);
    }

    const OffspringDistribution at_c = family.at(t_critical);
    {
        const MapId base = game == Game::misere ? MapId::H : MapId::F;
        const double xs = decreasing_map_fixed_point(ComposedMap(at_c, base));
        rep.slope_diagnostic = -at_c.g_prime(xs);
    }

    if (rep.deltas.size() < 3) {
        rep.classification = TransitionKind::indeterminate;
        return rep;
    }
    for (std::size_t i = 1; i < rep.deltas.size(); ++i) {
        if (rep.deltas[i].second > rep.deltas[i - 1].second + 1e-9) {
            rep.classification = TransitionKind::indeterminate;
            return rep;
        }
    }

    // Limit from above: the delta sequence decays geometrically toward it
    // (sqrt(delta) scaling gives ratio ~ 10^{-1/2} per step).
    const std::size_t m = rep.deltas.size();
    const double w0 = rep.deltas[m - 3].second;
    const double w1 = rep.deltas[m - 2].second;
    const double w2 = rep.deltas[m - 1].second;
    double limit = w2;
    const double d0 = w0 - w1, d1 = w1 - w2;
    if (d0 > 0.0 && d1 > 0.0 && d1 < d0) {
        const double r = d1 / d0;
        limit = w2 - d1 * r / (1.0 - r);
    }
    rep.value_at = limit;
    const double jump_raw = limit - rep.value_below;

    if (jump_raw < kClassifyContinuousTol) {
        rep.jump = std::max(0.0, jump_raw);
        rep.classification = (game == Game::escape && rep.mu_p1_crossing)
                                 ? TransitionKind::boundary_crossing_mu_p1
                                 : TransitionKind::continuous;
        return rep;
    }

    rep.classification = TransitionKind::discontinuous;
    // Sharper jump value from the fixed points present at t_critical itself,
    // counting the just-emerging double roots.
    std::vector<double> emerging;
    const double at_value = order_parameter_at_criticality(at_c, game, emerging);
    rep.emerging_roots = std::move(emerging);
    if (!rep.emerging_roots.empty() && std::abs(at_value - limit) < 0.1) {
        rep.value_at = at_value;
        rep.jump = at_value - rep.value_below;
    } else {
        rep.jump = jump_raw;
    }
    return rep;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<double> ts(points);
    for (int i = 0; i < points; ++i)
        ts[i] = (i == points - 1) ? hi : lo + (hi - lo) * i / (points - 1);
    return ts;
}

std::vector<ScanRow> scan_curve(const Family& family, const std::vector<double>& ts) {
    std::vector<ScanRow> rows;
    rows.reserve(ts.size());
    for (double t : ts) {
        ScanRow row;
        row.t = t;
        try {
            row.oc = outcomes(family.at(t));
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<DetectedTransition> find_transitions(const Family& family, Game game, double t_lo,
                                                 double t_hi, int prescan_points, double jump_tol,
                                                 double tol_t) {
    if (!(t_lo < t_hi)) throw std::invalid_argument("find_transitions needs t_lo < t_hi");
    std::vector<double> ts = linear_grid(t_lo, t_hi, prescan_points + 1);
    std::vector<double> omega(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        omega[i] = order_parameter(family.at(ts[i]), game);

    std::vector<DetectedTransition> found;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const bool pos_lo = omega[i] > kOrderParameterPositive;
        const bool pos_hi = omega[i + 1] > kOrderParameterPositive;
        if (!pos_lo && pos_hi) {
            DetectedTransition tr;
            tr.onset = true;
            tr.level_lo = omega[i];
            tr.level_hi = omega[i + 1];
            double lo = ts[i], hi = ts[i + 1];
            while (hi - lo > tol_t) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                (order_parameter(family.at(mid), game) > kOrderParameterPositive ? hi : lo) = mid;
            }
            tr.t = 0.5 * (lo + hi);
            found.push_back(tr);
        } else if (pos_lo && pos_hi && omega[i + 1] - omega[i] > jump_tol) {
            DetectedTransition tr;
            tr.onset = false;
            tr.level_lo = omega[i];
            tr.level_hi = omega[i + 1];
            const double threshold = 0.5 * (omega[i] + omega[i + 1]);
            double lo = ts[i], hi = ts[i + 1];
            while (hi - lo > tol_t) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                (order_parameter(family.at(mid), game) > threshold ? hi : lo) = mid;
            }
            tr.t = 0.5 * (lo + hi);
            found.push_back(tr);
        }
    }
    return found;
}

} // namespace gwg
