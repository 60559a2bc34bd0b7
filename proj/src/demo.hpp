#pragma once

#include <array>
#include <optional>
#include <span>

#include "poly.hpp"

namespace frhopf {

/// Built-in three-neuron network demo: state equations
///   D^alpha x1 = -mu1 x1 + k11 tanh(x1) + k12 tanh(x2) + k13 tanh(x3)
///   D^alpha x2 = -mu1 x2 + k21 tanh(x1) + k22 tanh(x2) + k23 tanh(x3)
///   D^alpha x3 = -mu2 x3 + k31 tanh(x1) + k32 tanh(x2) + k33 tanh(x3)
/// with equilibrium at the origin (tanh'(0) = 1). The characteristic
/// coefficients of the Jacobian there are polynomial in (mu1, mu2, k).
struct DemoSystem {
    // row-major k[i][j], defaults k11=k12=k13=k23=2, k21=k22=k31=k33=-2, k32=1
    std::array<double, 9> k{2, 2, 2, -2, -2, 2, -2, 1, -2};

    /// a1..a3 of det(lambda I - J) at the origin.
    CharPoly char_poly(double mu1, double mu2) const;

    /// Right-hand side g(x, mu) of the state equations.
    void vector_field(std::span<const double> x, double mu1, double mu2,
                      std::span<double> out) const;
};

/// The demo characteristic polynomial with optional k overrides.
/// Validates alpha even though the coefficients do not depend on it, since
/// every downstream use requires alpha in (1,2).
CharPoly demo_charpoly(double mu1, double mu2, double alpha,
                       const std::optional<std::array<double, 9>>& k_overrides = {});

} // namespace frhopf
