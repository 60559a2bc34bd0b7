#pragma once

#include <algorithm>

namespace frhopf {

/// Numerical tolerances shared across the criterion pipeline. Minor sign
/// tests mix an absolute floor with a scale taken from the Hadamard bound
/// of the block, since matrix entries combine O(1) trig factors with
/// user-scale coefficients.
struct TolerancePolicy {
    double minor_rel = 1e-9;         ///< value tolerance = minor_rel * max(1, hadamard)
    double pivot_tol = 1e-7;         ///< equilibrated-pivot floor below which a minor sign is 0
    double arg_tol = 1e-7;           ///< sector boundary half-width on |arg z|
    double zero_modulus = 1e-10;     ///< roots below this modulus are reported as zero-roots
    double grad_rel = 1e-6;          ///< transversality gradient threshold factor
    double eig_rel = 1e-5;           ///< Hessian eigenvalue classification band
    double root_residual_rel = 1e-8; ///< root finder acceptance residual factor
    double refine_rel = 1e-12;       ///< segment-parameter uncertainty for bisection

    double minor_sign_tol(double hadamard) const {
        return minor_rel * std::max(1.0, hadamard);
    }
};

} // namespace frhopf
