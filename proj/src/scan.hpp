#pragma once

#include <optional>
#include <vector>

#include "fdiff.hpp"
#include "system.hpp"

namespace frhopf {

/// A refined point on the bifurcation surface: the top minor vanishes to
/// tolerance, the lower leading minors are positive and the auxiliary
/// minor is negative, so the classify verdict carries the critical radius
/// and the boundary root pair.
struct BifurcationPoint {
    std::vector<double> mu;
    double critical_radius = 0.0;
    ComplexRoot pair_up, pair_down;
    Transversality transversality = Transversality::Inconclusive;
    std::vector<double> gradient;
    std::optional<Definiteness> hessian_verdict;
};

struct ScanWindow {
    double x0 = 0.0, x1 = 0.0; ///< range of the first axis
    double y0 = 0.0, y1 = 0.0; ///< range of the second axis
};

/// Detects top-minor sign changes along grid edges (both axis directions)
/// whose endpoints both satisfy the side conditions, refines each crossing
/// by bisection and re-validates the full criterion at the refined point.
/// Output order is deterministic by grid index regardless of `threads`
/// (0 means hardware concurrency).
std::vector<BifurcationPoint> grid_scan(const ParamSystem& sys, int axis1, int axis2,
                                        std::vector<double> mu_fixed, const ScanWindow& window,
                                        int res1, int res2, int threads = 0,
                                        const TolerancePolicy& tol = {});

/// Bisection on one parameter segment; requires a strict top-minor sign
/// change and side conditions holding at both endpoints. The refined point
/// is validated the same way scan points are.
BifurcationPoint refine_on_segment(const ParamSystem& sys, std::span<const double> mu_a,
                                   std::span<const double> mu_b,
                                   const TolerancePolicy& tol = {});

} // namespace frhopf
