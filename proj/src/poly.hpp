#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tolerance.hpp"

namespace frhopf {

/// Monic real characteristic polynomial lambda^n + a1 lambda^(n-1) + ... + an.
/// Only a1..an are stored; the leading coefficient is implicitly 1 and
/// non-monic input cannot be expressed, by design.
struct CharPoly {
    std::vector<double> coeffs; // a1..an

    CharPoly() = default;
    explicit CharPoly(std::vector<double> a);

    int degree() const { return static_cast<int>(coeffs.size()); }
};

/// A root with its polar data cached. The argument is the principal value
/// in (-pi, pi]; a negative real root has argument exactly +pi.
struct ComplexRoot {
    double re = 0.0;
    double im = 0.0;
    double modulus = 0.0;
    double argument = 0.0;

    static ComplexRoot from(std::complex<double> z);
    std::complex<double> value() const { return {re, im}; }
};

/// Root counts relative to the stability sector for a fractional order
/// alpha: stable |arg| > alpha*pi/2, unstable |arg| < alpha*pi/2, critical
/// on the boundary rays (within arg_tol). Roots with modulus below
/// zero_modulus are counted separately and not assigned a sector.
struct SectorVerdict {
    int n_stable = 0;
    int n_critical = 0;
    int n_unstable = 0;
    int n_zero = 0;
};

std::complex<double> evaluate(const CharPoly& p, std::complex<double> z);

/// All n roots with multiplicity, Aberth-Ehrlich simultaneous iteration.
/// Conjugate symmetry is enforced exactly: non-real roots are returned as
/// adjacent (im > 0, im < 0) pairs. Ordering is deterministic: ascending
/// real part, then ascending |im|.
/// Throws ConvergenceFailure if the iteration budget is exhausted or the
/// residual bound 1e-8 (1 + sum|a_i|) max(1,|z|)^n is not met.
std::vector<ComplexRoot> roots(const CharPoly& p, int max_iterations = 400);

SectorVerdict sector_classify(std::span<const ComplexRoot> rts, double alpha,
                              const TolerancePolicy& tol = {});

} // namespace frhopf
