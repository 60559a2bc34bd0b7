#include "detail/determinant.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace frhopf::detail {

// The elimination runs in long double: the minors feed sign decisions and
// the critical-radius ratio, and the extra mantissa keeps mildly
// ill-conditioned blocks (clustered roots, mixed coefficient scales) well
// inside the documented tolerances. On targets where long double is plain
// double this degrades gracefully.
DetResult det_lu(std::span<const double> matrix, std::size_t m) {
    DetResult out;
    if (m == 0) {
        out.value = 1.0; // empty product convention
        out.hadamard = 1.0;
        out.min_pivot = 1.0;
        return out;
    }
    std::vector<long double> a(matrix.begin(), matrix.begin() + m * m);

    long double hadamard = 1.0L;
    std::vector<long double> norms(m);
    for (std::size_t i = 0; i < m; ++i) {
        long double s = 0.0L;
        for (std::size_t j = 0; j < m; ++j) s += a[i * m + j] * a[i * m + j];
        norms[i] = sqrtl(s);
        hadamard *= norms[i];
    }
    out.hadamard = static_cast<double>(hadamard);
    for (std::size_t i = 0; i < m; ++i) {
        if (norms[i] == 0.0L) { out.value = 0.0; out.min_pivot = 0.0; return out; }
        for (std::size_t j = 0; j < m; ++j) a[i * m + j] /= norms[i];
    }

    long double det_eq = 1.0L;
    long double min_pivot = std::numeric_limits<long double>::infinity();
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        long double best = fabsl(a[c * m + c]);
        for (std::size_t r = c + 1; r < m; ++r) {
            long double v = fabsl(a[r * m + c]);
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0L) { out.value = 0.0; out.min_pivot = 0.0; return out; }
        if (piv != c) {
            for (std::size_t j = 0; j < m; ++j) std::swap(a[piv * m + j], a[c * m + j]);
            det_eq = -det_eq;
        }
        const long double p = a[c * m + c];
        det_eq *= p;
        min_pivot = std::min(min_pivot, fabsl(p));
        for (std::size_t r = c + 1; r < m; ++r) {
            long double f = a[r * m + c] / p;
            if (f == 0.0L) continue;
            for (std::size_t j = c + 1; j < m; ++j) a[r * m + j] -= f * a[c * m + j];
        }
    }
    out.value = static_cast<double>(det_eq * hadamard);
    out.min_pivot = static_cast<double>(min_pivot);
    return out;
}

DetResult det_leading_block(std::span<const double> matrix, std::size_t m, std::size_t k) {
    std::vector<double> block(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block[i * k + j] = matrix[i * m + j];
    return det_lu(block, k);
}

} // namespace frhopf::detail
