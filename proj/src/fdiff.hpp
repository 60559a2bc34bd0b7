#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "system.hpp"
#include "tolerance.hpp"

namespace frhopf {

using ScalarField = std::function<double(std::span<const double>)>;

enum class Definiteness { Indefinite, PosDefinite, NegDefinite, Semidefinite };

enum class Transversality { Transversal, DegenerateStationary, Inconclusive };

/// Central differences, step h_i = eps^(1/3) * max(1, |x_i|).
std::vector<double> fd_gradient(const ScalarField& f, std::span<const double> x);

/// Symmetrized central second differences, step h_i = eps^(1/4) * max(1, |x_i|).
/// Row-major k x k.
std::vector<double> fd_hessian(const ScalarField& f, std::span<const double> x);

/// Eigenvalues of a symmetric k x k matrix (cyclic Jacobi), ascending.
std::vector<double> sym_eigenvalues(std::span<const double> m, int k);

/// Definiteness from eigenvalue signs with band |lambda| <= eig_rel*max|lambda|.
/// Eigenvalues inside the band count for neither side: the verdict is
/// Indefinite only when both strict signs appear, PosDefinite/NegDefinite
/// when exactly one does, Semidefinite when the whole spectrum sits in the
/// band.
Definiteness classify_definiteness(std::span<const double> hessian, int k, double eig_rel);

struct TransversalityResult {
    std::vector<double> gradient;
    std::optional<Definiteness> hessian_verdict; // absent when the gradient already decides
    Transversality verdict = Transversality::Inconclusive;
};

/// Sufficient-condition test at a surface point: nonzero gradient of the
/// top minor implies a sign change in every neighborhood; otherwise the
/// Hessian decides (indefinite -> sign change, definite -> locally
/// one-signed). Throws NotOnSurface when |top minor| > 10x its tolerance.
TransversalityResult transversality(const ParamSystem& sys, std::span<const double> mu,
                                    const TolerancePolicy& tol = {});

/// Same decision logic over an arbitrary scalar field; `on_surface_tol`
/// guards the |f| check (pass +inf to skip).
TransversalityResult transversality_field(const ScalarField& f, std::span<const double> x,
                                          double on_surface_tol, const TolerancePolicy& tol = {});

struct StationaryPoint {
    std::vector<double> location;
    std::vector<double> gradient;
    Definiteness hessian_verdict = Definiteness::Semidefinite;
    double field_value = 0.0;
    int iterations = 0;
};

/// Damped Newton on grad f = 0 with finite-difference derivatives. The
/// Hessian solve drops eigen-components below 1e-8 * ||H|| so rank-deficient
/// stationary points (where Newton converges linearly) remain reachable.
/// Budget 100 iterations, line-search damping floor 1e-8.
StationaryPoint find_stationary(const ScalarField& f, std::span<const double> guess,
                                const TolerancePolicy& tol = {});

/// find_stationary on the top minor of `sys`, then verify the stationary
/// point sits on the bifurcation surface. Requires two free parameters.
StationaryPoint find_degenerate(const ParamSystem& sys, std::span<const double> guess,
                                const TolerancePolicy& tol = {});

} // namespace frhopf
