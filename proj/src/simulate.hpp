#pragma once

#include <functional>
#include <span>
#include <vector>

#include "system.hpp"

namespace frhopf {

/// Right-hand side g(x) of an autonomous Caputo initial-value problem
/// D^alpha x = g(x), 1 < alpha < 2, with x(0) and x'(0) given.
using VectorField = std::function<void(std::span<const double> x, std::span<double> out)>;

struct SimConfig {
    double alpha = 1.5;
    int dim = 1;
    VectorField field;
    std::vector<double> x0;
    std::vector<double> v0; ///< empty means zero initial derivative
    double horizon = 1.0;
    double step = 1e-2;
};

struct SimTrajectory {
    double step = 0.0;
    int dim = 0;
    std::vector<double> states; ///< row-major, one row per time node 0..K
    int blowup_index = -1;      ///< first non-finite step, -1 if none
    double max_residual = 0.0;  ///< max |corrector - predictor| over accepted steps

    int size() const { return static_cast<int>(states.size()) / dim; }
    double time_at(int i) const { return step * i; }
    std::span<const double> state_at(int i) const {
        return {states.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
};

/// Fractional Adams-Bashforth-Moulton predictor-corrector (one corrector
/// pass per step, full memory). The lead term x0 + v0 t carries the two
/// initial conditions of the order-in-(1,2) Caputo problem.
SimTrajectory integrate(const SimConfig& cfg);

/// Convenience wrapper for the built-in demo system at a parameter point.
SimTrajectory simulate_demo(const ParamSystem& sys, std::span<const double> mu,
                            std::span<const double> x0, std::span<const double> v0, double horizon,
                            double step);

/// Peak-to-peak amplitude of ||x(t)|| over the trailing fraction of the
/// horizon. Throws TrajectoryTooShort when fewer than two samples land in
/// the tail (a blowup marker truncates the usable range).
double oscillation_metric(const SimTrajectory& tr, double tail_fraction);

} // namespace frhopf
