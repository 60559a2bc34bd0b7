#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace frhopf::detail {

struct DetResult {
    double value = 0.0;     ///< determinant
    double hadamard = 0.0;  ///< product of row 2-norms of the input matrix
    double min_pivot = 0.0; ///< smallest |pivot| of the row-equilibrated LU
};

/// Determinant of a dense row-major m x m matrix. Rows are scaled to unit
/// 2-norm before the partially pivoted LU so the pivot magnitudes expose
/// near-singularity independently of the coefficient scale: the sign of a
/// minor is trustworthy only while `min_pivot` stays above rounding level.
/// `value` is the determinant of the original matrix (equilibrated
/// determinant times the row-norm product).
DetResult det_lu(std::span<const double> matrix, std::size_t m);

/// Determinant of the leading k x k block of a row-major m x m matrix.
DetResult det_leading_block(std::span<const double> matrix, std::size_t m, std::size_t k);

} // namespace frhopf::detail
