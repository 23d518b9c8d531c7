#include "gwgames/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gwgames/errors.hpp"
#include "gwgames/format.hpp"

namespace gwg {

namespace {

constexpr double kTouchEps = 1e-13;    // |psi| at a fold below this counts as a root
constexpr double kTangencyEps = 1e-10; // fold values below this are flagged unresolved
constexpr int kScanCells = 2048;
constexpr int kTraceCap = 512;
constexpr double kCertSlope = 0.97;    // contraction needed to trust plain iteration

double psi(const ComposedMap& m, double x) { return m(x) - x; }
double dpsi(const ComposedMap& m, double x) { return m.derivative(x) - 1.0; }

// psi has opposite (or zero) signs at lo/hi; narrows to double precision.
double bisect_psi(const ComposedMap& m, double lo, double hi, double psi_lo) {
    const bool lo_positive = psi_lo > 0.0;
    if (psi_lo == 0.0) return lo;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) return mid;
        const double v = psi(m, mid);
        if (v == 0.0) return mid;
        if ((v > 0.0) == lo_positive) lo = mid;
        else hi = mid;
    }
}

// Locates a sign change of psi' in [lo,hi]; both orientations allowed.
double bisect_dpsi(const ComposedMap& m, double lo, double hi, double d_lo) {
    const bool lo_positive = d_lo > 0.0;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) return mid;
        const double v = dpsi(m, mid);
        if (v == 0.0) return mid;
        if ((v > 0.0) == lo_positive) lo = mid;
        else hi = mid;
    }
}

// Walks [lo,hi] left to right looking for the first root, assuming
// psi(lo) > 0. Cells whose derivative changes from negative to positive hide
// a local minimum; its value decides whether a sub-grid dip crosses zero.
std::optional<double> scan_first_root(const ComposedMap& m, double lo, double hi) {
    double prev_x = lo;
    double prev_psi = psi(m, lo);
    if (prev_psi <= 0.0) return lo;
    double prev_d = dpsi(m, lo);
    for (int i = 1; i <= kScanCells; ++i) {
        const double x = (i == kScanCells) ? hi : lo + (hi - lo) * i / kScanCells;
        if (x <= prev_x) continue;
        const double ps = psi(m, x);
        if (ps <= 0.0) return bisect_psi(m, prev_x, x, prev_psi);
        const double d = dpsi(m, x);
        if (prev_d < 0.0 && d >= 0.0) {
            const double xc = bisect_dpsi(m, prev_x, x, prev_d);
            const double pc = psi(m, xc);
            if (pc < -kTouchEps) return bisect_psi(m, prev_x, xc, prev_psi);
            if (pc <= kTouchEps) return xc; // touching double root
        }
        prev_x = x;
        prev_psi = ps;
        prev_d = d;
    }
    return std::nullopt;
}

// Mirror: walks right to left from hi, assuming psi(hi) < 0, looking for the
// largest root; local maxima may poke above zero inside a cell.
std::optional<double> scan_last_root(const ComposedMap& m, double lo, double hi) {
    double prev_x = hi;
    double prev_psi = psi(m, hi);
    if (prev_psi >= 0.0) return hi;
    double prev_d = dpsi(m, hi);
    for (int i = 1; i <= kScanCells; ++i) {
        const double x = (i == kScanCells) ? lo : hi - (hi - lo) * i / kScanCells;
        if (x >= prev_x) continue;
        const double ps = psi(m, x);
        if (ps >= 0.0) return bisect_psi(m, x, prev_x, ps);
        const double d = dpsi(m, x);
        if (prev_d < 0.0 && d >= 0.0) { // scanning leftward: local max inside the cell
            const double xc = bisect_dpsi(m, x, prev_x, d);
            const double pc = psi(m, xc);
            if (pc > kTouchEps) return bisect_psi(m, xc, prev_x, pc);
            if (pc >= -kTouchEps) return xc;
        }
        prev_x = x;
        prev_psi = ps;
        prev_d = d;
    }
    return std::nullopt;
}

} // namespace

double bisect_fixed_point(const ComposedMap& map, double lo, double hi) {
    return bisect_psi(map, lo, hi, psi(map, lo));
}

std::optional<double> first_root_at_or_above(const ComposedMap& map, double x0,
                                             double scale_hint) {
    if (psi(map, x0) <= 0.0) return x0;
    if (scale_hint > 0.0) {
        const double hi = std::min(1.0, x0 + 64.0 * scale_hint);
        if (hi > x0)
            if (auto r = scan_first_root(map, x0, hi)) return r;
    }
    if (x0 >= 1.0) return std::nullopt;
    return scan_first_root(map, x0, 1.0);
}

std::optional<double> last_root_at_or_below(const ComposedMap& map, double x0,
                                            double scale_hint) {
    if (psi(map, x0) >= 0.0) return x0;
    if (scale_hint > 0.0) {
        const double lo = std::max(0.0, x0 - 64.0 * scale_hint);
        if (lo < x0)
            if (auto r = scan_last_root(map, lo, x0)) return r;
    }
    if (x0 <= 0.0) return std::nullopt;
    return scan_last_root(map, 0.0, x0);
}

double decreasing_map_fixed_point(const ComposedMap& map) {
    const double at0 = psi(map, 0.0);
    if (at0 <= 0.0) return 0.0;
    return bisect_psi(map, 0.0, 1.0, at0);
}

double min_fixed_point(const ComposedMap& map, double tol, long max_iter, IterationTrace* trace) {
    if (!(tol > 0.0)) throw std::invalid_argument("min_fixed_point: tol must be positive");
    if (!map.increasing()) {
        const double r = decreasing_map_fixed_point(map);
        if (trace) { trace->converged = true; trace->values = {r}; }
        return r;
    }
    double x = 0.0;
    double change = std::numeric_limits<double>::infinity();
    long it = 0;
    for (; it < max_iter; ++it) {
        double x1 = map(x);
        if (x1 < x) x1 = x; // iterates from 0 are nondecreasing; guard rounding
        change = x1 - x;
        if (trace && it < kTraceCap) trace->values.push_back(x1);
        x = x1;
        if (change <= tol) {
            if (trace) trace->iterations = it + 1;
            if (change <= 0.0) {
                if (trace) trace->converged = true;
                return x;
            }
            const double slope = map.derivative(x);
            if (slope < kCertSlope) {
                // root is about change*slope/(1-slope) ahead; box it and bisect
                const double ahead = std::max(change, change * slope / (1.0 - slope));
                const double probe = std::min(1.0, x + 4.0 * ahead + 1e-15);
                const double pv = psi(map, probe);
                if (pv <= 0.0) {
                    if (trace) trace->converged = true;
                    return bisect_psi(map, x, probe, change);
                }
            }
            break; // weak contraction: fall through to bracketed refinement
        }
    }
    if (trace) { trace->iterations = it; trace->refined = true; }
    const double slope = map.derivative(x);
    const double hint = slope < 1.0 ? change / (1.0 - slope) : 0.0;
    auto r = first_root_at_or_above(map, x, hint);
    if (!r)
        throw ComputeError("min_fixed_point(" + map_name(map.id()) +
                           "): iteration stalled at x=" + format_number(x) +
                           " and no bracket was found");
    return *r;
}

double max_fixed_point(const ComposedMap& map, double tol, long max_iter, IterationTrace* trace) {
    if (!(tol > 0.0)) throw std::invalid_argument("max_fixed_point: tol must be positive");
    if (!map.increasing()) {
        const double r = decreasing_map_fixed_point(map);
        if (trace) { trace->converged = true; trace->values = {r}; }
        return r;
    }
    double x = 1.0;
    double change = std::numeric_limits<double>::infinity();
    long it = 0;
    for (; it < max_iter; ++it) {
        double x1 = map(x);
        if (x1 > x) x1 = x; // iterates from 1 are nonincreasing
        change = x - x1;
        if (trace && it < kTraceCap) trace->values.push_back(x1);
        x = x1;
        if (change <= tol) {
            if (trace) trace->iterations = it + 1;
            if (change <= 0.0) {
                if (trace) trace->converged = true;
                return x;
            }
            const double slope = map.derivative(x);
            if (slope < kCertSlope) {
                const double ahead = std::max(change, change * slope / (1.0 - slope));
                const double probe = std::max(0.0, x - 4.0 * ahead - 1e-15);
                const double pv = psi(map, probe);
                if (pv >= 0.0) {
                    if (trace) trace->converged = true;
                    return bisect_psi(map, probe, x, pv);
                }
            }
            break;
        }
    }
    if (trace) { trace->iterations = it; trace->refined = true; }
    const double slope = map.derivative(x);
    const double hint = slope < 1.0 ? change / (1.0 - slope) : 0.0;
    auto r = last_root_at_or_below(map, x, hint);
    if (!r)
        throw ComputeError("max_fixed_point(" + map_name(map.id()) +
                           "): iteration stalled at x=" + format_number(x) +
                           " and no bracket was found");
    return *r;
}

void collapse_spurious_pair(const ComposedMap& map, double& lo, double& hi) {
    // the landing width at a tangency scales like cbrt(eps); 1e-4 comfortably
    // covers it, and the derivative sign is what actually decides
    if (!(hi > lo) || hi - lo > 1e-4) return;
    const double mid = 0.5 * (lo + hi);
    if (dpsi(map, mid) < 0.0) lo = hi = mid;
}

FixedPointSet isolate_fixed_points(const OffspringDistribution& dist, MapId id,
                                   int grid_resolution) {
    if (grid_resolution < 2) throw std::invalid_argument("grid_resolution must be >= 2");
    const ComposedMap m(dist, id);
    FixedPointSet out;
    out.map_id = id;

    const bool diag_misere = (id == MapId::H2 || id == MapId::H);
    const ComposedMap base(dist, diag_misere ? MapId::H : MapId::F);
    out.x_star = decreasing_map_fixed_point(base);
    out.slope_at_x_star = -dist.g_prime(out.x_star);

    std::vector<double> roots;
    if (!m.increasing()) {
        roots.push_back(decreasing_map_fixed_point(m));
    } else {
        const int n = grid_resolution;
        double prev_x = 0.0;
        double prev_psi = psi(m, 0.0);
        double prev_d = dpsi(m, 0.0);
        if (prev_psi == 0.0) roots.push_back(0.0);
        for (int i = 1; i <= n; ++i) {
            const double x = (i == n) ? 1.0 : static_cast<double>(i) / n;
            const double ps = psi(m, x);
            const double d = dpsi(m, x);
            if (ps == 0.0) {
                roots.push_back(x);
            } else if (prev_psi != 0.0 && (ps > 0.0) != (prev_psi > 0.0)) {
                roots.push_back(bisect_psi(m, prev_x, x, prev_psi));
            } else if (prev_d < 0.0 && d >= 0.0 && prev_psi > 0.0 && ps > 0.0) {
                // local minimum between grid points while psi is positive
                const double xc = bisect_dpsi(m, prev_x, x, prev_d);
                const double pc = psi(m, xc);
                if (pc < -kTouchEps) {
                    roots.push_back(bisect_psi(m, prev_x, xc, prev_psi));
                    roots.push_back(bisect_psi(m, xc, x, pc));
                } else if (pc <= kTangencyEps) {
                    out.unresolved.push_back(xc);
                }
            } else if (prev_d > 0.0 && d <= 0.0 && prev_psi < 0.0 && ps < 0.0) {
                // local maximum below the axis
                const double xc = bisect_dpsi(m, prev_x, x, prev_d);
                const double pc = psi(m, xc);
                if (pc > kTouchEps) {
                    roots.push_back(bisect_psi(m, prev_x, xc, prev_psi));
                    roots.push_back(bisect_psi(m, xc, x, pc));
                } else if (pc >= -kTangencyEps) {
                    out.unresolved.push_back(xc);
                }
            }
            prev_x = x;
            prev_psi = ps;
            prev_d = d;
        }
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> dedup;
    for (double r : roots)
        if (dedup.empty() || r - dedup.back() > 1e-9) dedup.push_back(r);
    out.all = std::move(dedup);
    if (!out.all.empty()) {
        out.min_fp = out.all.front();
        out.max_fp = out.all.back();
    }
    return out;
}

} // namespace gwg
