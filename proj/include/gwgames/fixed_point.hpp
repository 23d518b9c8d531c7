#pragma once

#include <optional>
#include <vector>

#include "gwgames/maps.hpp"

namespace gwg {

struct FixedPointOptions {
    double tol = 1e-12;          // iteration stopping threshold
    long max_iter = 1'000'000;   // iteration budget before bracketed refinement
    int grid = 10'000;           // default resolution for whole-interval isolation
};

/// Head of the iterate sequence plus convergence bookkeeping. Iterates from 0
/// are nondecreasing, from 1 nonincreasing; both stay in [0,1].
struct IterationTrace {
    std::vector<double> values;  // first iterates (capped)
    long iterations = 0;
    bool converged = false;      // plain iteration met tol with certified contraction
    bool refined = false;        // answer came from bracketed bisection
};

/// Smallest fixed point of an increasing map, the limit of iterating from 0.
/// Plain iteration is used while it contracts; once it stalls (slope near 1,
/// which happens close to criticality) the root is boxed in by a sign-change
/// or fold bracket and bisected to full precision.
/// Throws ComputeError if no bracket can be produced.
double min_fixed_point(const ComposedMap& map, double tol = 1e-12, long max_iter = 1'000'000,
                       IterationTrace* trace = nullptr);

/// Largest fixed point, iterating from 1; mirror of min_fixed_point.
double max_fixed_point(const ComposedMap& map, double tol = 1e-12, long max_iter = 1'000'000,
                       IterationTrace* trace = nullptr);

/// Unique fixed point of a strictly decreasing map (F or H), by bisection.
double decreasing_map_fixed_point(const ComposedMap& map);

struct FixedPointSet {
    MapId map_id = MapId::F2;
    double min_fp = 0.0;
    double max_fp = 0.0;
    std::vector<double> all;          // isolated fixed points, sorted
    std::vector<double> unresolved;   // fold points that touch zero within 1e-10:
                                      // double roots that sign-change scanning cannot split
    double x_star = 0.0;              // fixed point of F (of H for the H-maps)
    double slope_at_x_star = 0.0;     // F'(x*) = -G'(x*), same formula for H
};

/// Scans map(x)-x on a uniform grid, bisects every sign-change cell to 1e-12,
/// and additionally locates interior extrema (sign changes of the derivative)
/// so that dips narrower than a grid cell still yield brackets. Tangential
/// double roots are reported in `unresolved` rather than silently missed.
FixedPointSet isolate_fixed_points(const OffspringDistribution& dist, MapId id,
                                   int grid_resolution = 10'000);

/// Root of psi = map(x)-x in [lo,hi] given psi(lo) and psi(hi) of opposite
/// sign (either orientation); bisects to double precision.
double bisect_fixed_point(const ComposedMap& map, double lo, double hi);

/// Smallest root of map(x)-x at or above x0, assuming map(x0) >= x0.
/// Detects sub-grid dips through derivative sign changes. `scale_hint`
/// narrows the initial search window when the caller knows roughly how far
/// the root is (from iteration stall data).
std::optional<double> first_root_at_or_above(const ComposedMap& map, double x0,
                                             double scale_hint = 0.0);

/// Largest root of map(x)-x at or below x0, assuming map(x0) <= x0.
std::optional<double> last_root_at_or_below(const ComposedMap& map, double x0,
                                            double scale_hint = 0.0);

/// Very close to a fold the min and max solvers can land a whisker apart on
/// one and the same root, because psi' vanishes there and the root position
/// carries O(eps/psi') noise. A genuine root pair brackets an unstable
/// middle fixed point (psi' > 0 between them); if instead psi' < 0 at the
/// midpoint, the pair is spurious and gets collapsed. The derivative sign is
/// reliable far below the width at which positions blur.
void collapse_spurious_pair(const ComposedMap& map, double& lo, double& hi);

} // namespace gwg
