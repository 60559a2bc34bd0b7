#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "tolerance.hpp"

namespace frhopf {

/// The monic polynomial evaluated along the rotated ray r*e^(i*alpha*pi/2),
/// split into real and imaginary parts:
///   f1(r) = sum_j abar_j r^(n-j)   (imaginary part)
///   f2(r) = sum_j bbar_j r^(n-j)   (real part)
/// with abar_j = a_j sin((n-j) alpha pi/2), bbar_j = a_j cos((n-j) alpha pi/2)
/// and a_0 = 1. Note abar_n = 0 and bbar_n = a_n exactly.
struct RotatedPair {
    int n = 0;
    double alpha = 0.0;
    std::vector<double> abar; // abar_0..abar_n
    std::vector<double> bbar; // bbar_0..bbar_n
};

/// Dense 2n x 2n fractional-order Routh-Hurwitz matrix. Row pair i
/// (1-based, i = 1..n) holds abar_0..abar_n on the odd row and
/// bbar_0..bbar_n on the even row, both starting at column i; everything
/// else is zero. Row 2n therefore ends with bbar_n at column 2n.
struct HurwitzMatrix {
    int n = 0;
    std::vector<double> entries; // row-major, (2n)^2

    double at(int row, int col) const { return entries[(row - 1) * 2 * n + (col - 1)]; } // 1-based
};

/// Leading principal minors of even order and the auxiliary minor.
/// leading[p-1] is the determinant of the top-left 2p x 2p block;
/// auxiliary is the determinant of the block taken from rows 1..2n-2 and
/// columns (1..2n-3, 2n-1). Each value ships with the Hadamard bound of
/// its block (the coefficient-scale reference) and the smallest pivot of
/// the row-equilibrated LU, which decides whether the sign is meaningful.
/// For n = 1 the auxiliary block is empty and the value is reported as 0.
struct MinorSequence {
    std::vector<double> leading;
    std::vector<double> leading_scale;
    std::vector<double> leading_pivot;
    double auxiliary = 0.0;
    double auxiliary_scale = 0.0;
    double auxiliary_pivot = 0.0;
};

enum class StabilityTag { Stable, HopfCandidate, Indeterminate };

/// Outcome of the explicit criterion at one polynomial. Sign entries are
/// -1/0/+1 relative to the mixed tolerance. `degenerate_minor` marks the
/// case |leading[n-2]| and |leading[n-1]| both below tolerance, where the
/// critical radius -auxiliary/leading[n-2] is undefined.
struct StabilityVerdict {
    StabilityTag tag = StabilityTag::Indeterminate;
    std::optional<double> critical_radius; // r0, set for HopfCandidate
    MinorSequence minors;
    std::vector<int> leading_signs;
    int auxiliary_sign = 0;
    bool degenerate_minor = false;
};

RotatedPair rotate(const CharPoly& p, double alpha);

HurwitzMatrix build_matrix(const RotatedPair& rp);

MinorSequence minors(const HurwitzMatrix& H);

/// Total version: never throws on degenerate minors, only on alpha range.
StabilityVerdict classify_verdict(const MinorSequence& m, const TolerancePolicy& tol = {});

/// The criterion proper: Stable when every leading minor is positive,
/// HopfCandidate when the top minor vanishes, the others are positive and
/// the auxiliary minor is negative (then critical_radius > 0), otherwise
/// Indeterminate. Throws DegenerateMinor when the radius is undefined.
StabilityVerdict classify(const CharPoly& p, double alpha, const TolerancePolicy& tol = {});

/// The conjugate pair on the critical sector boundary,
/// r0 * e^(+-i alpha pi/2). Requires a HopfCandidate verdict.
std::pair<ComplexRoot, ComplexRoot> critical_roots(const StabilityVerdict& v, double alpha);

/// Sylvester resultant of (f1, f2) at formal degree n, computed by the
/// root-product formula Res = abar_0^n * prod f2(roots of f1) through the
/// root oracle, independently of the determinant pipeline. Satisfies
/// det H = (-1)^(n(n-1)/2) * Res. Intended for cross-checks; accuracy
/// degrades when abar_0 is close to zero (f1 drops degree).
double resultant_check(const RotatedPair& rp);

} // namespace frhopf
