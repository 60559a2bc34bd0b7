// Test-only reference implementations, kept independent of the library
// code paths they are used to check.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracles {

/// Plain Gaussian elimination determinant (no shared code with the
/// library's pivoted LU).
inline double det_gauss(std::vector<double> a, int m) {
    double det = 1.0;
    for (int c = 0; c < m; ++c) {
        int piv = c;
        for (int r = c + 1; r < m; ++r)
            if (std::fabs(a[r * m + c]) > std::fabs(a[piv * m + c])) piv = r;
        if (a[piv * m + c] == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < m; ++j) std::swap(a[piv * m + j], a[c * m + j]);
            det = -det;
        }
        det *= a[c * m + c];
        for (int r = c + 1; r < m; ++r) {
            double f = a[r * m + c] / a[c * m + c];
            for (int j = c; j < m; ++j) a[r * m + j] -= f * a[c * m + j];
        }
    }
    return det;
}

/// Brute-force Sylvester matrix of two formal degree-n polynomials given
/// highest-first coefficient rows f (n+1 values) and g (n+1 values).
inline double sylvester_resultant(const std::vector<double>& f, const std::vector<double>& g) {
    const int n = static_cast<int>(f.size()) - 1;
    const int m = 2 * n;
    std::vector<double> s(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) s[i * m + i + j] = f[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) s[(n + i) * m + i + j] = g[j];
    return det_gauss(std::move(s), m);
}

/// Monic polynomial coefficients (a1..an) from a root multiset given as
/// real roots plus conjugate pair representatives (re, im > 0).
inline std::vector<double> poly_from_roots(const std::vector<double>& real_roots,
                                           const std::vector<std::complex<double>>& pairs) {
    std::vector<std::complex<double>> coeffs{1.0};
    auto mul_linear = [&](std::complex<double> root) {
        coeffs.push_back(0.0);
        for (std::size_t i = coeffs.size() - 1; i >= 1; --i) coeffs[i] -= root * coeffs[i - 1];
    };
    for (double r : real_roots) mul_linear(r);
    for (auto z : pairs) { mul_linear(z); mul_linear(std::conj(z)); }
    std::vector<double> out;
    for (std::size_t i = 1; i < coeffs.size(); ++i) out.push_back(coeffs[i].real());
    return out;
}

/// Two-parameter Mittag-Leffler value E_{alpha,1}(-t^alpha), the solution
/// of D^alpha x = -x with x(0) = 1, x'(0) = 0, by a 200-term series with
/// log-gamma scaling.
inline double mittag_leffler_decay(double alpha, double t) {
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        double log_term = k * alpha * std::log(t <= 0.0 ? 1.0 : t) - std::lgamma(alpha * k + 1.0);
        double term = std::exp(log_term);
        if (t <= 0.0 && k > 0) term = 0.0;
        sum += (k % 2 == 0 ? term : -term);
        if (term != 0.0 && term < 1e-30 && k > 4) break;
    }
    return sum;
}

/// Characteristic coefficients of a 3x3 matrix by evaluating
/// det(lambda I - J) at three nodes and solving the small Vandermonde
/// system, avoiding the closed-form trace/minor formulas the library uses.
inline std::vector<double> charpoly3_from_det(const double J[9]) {
    auto det_shift = [&](double lambda) {
        std::vector<double> a(9);
        for (int i = 0; i < 9; ++i) a[i] = -J[i];
        a[0] += lambda;
        a[4] += lambda;
        a[8] += lambda;
        return det_gauss(std::move(a), 3);
    };
    // det(lambda I - J) = lambda^3 + c1 lambda^2 + c2 lambda + c3
    const double nodes[3] = {0.0, 1.0, -1.0};
    std::vector<double> m(9);
    double rhs[3];
    for (int i = 0; i < 3; ++i) {
        const double l = nodes[i];
        rhs[i] = det_shift(l) - l * l * l;
        m[i * 3 + 0] = l * l;
        m[i * 3 + 1] = l;
        m[i * 3 + 2] = 1.0;
    }
    auto solve3 = [&](int col) {
        std::vector<double> a = m;
        for (int r = 0; r < 3; ++r) a[r * 3 + col] = rhs[r];
        return det_gauss(std::move(a), 3) / det_gauss(m, 3);
    };
    return {solve3(0), solve3(1), solve3(2)};
}

} // namespace oracles
