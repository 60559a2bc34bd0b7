#include "hurwitz.hpp"

#include <cmath>
#include <numbers>

#include "detail/determinant.hpp"
#include "errors.hpp"

namespace frhopf {

RotatedPair rotate(const CharPoly& p, double alpha) {
    require_alpha(alpha);
    const int n = p.degree();
    const double theta = alpha * std::numbers::pi / 2.0;

    RotatedPair rp;
    rp.n = n;
    rp.alpha = alpha;
    rp.abar.resize(n + 1);
    rp.bbar.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double aj = j == 0 ? 1.0 : p.coeffs[j - 1];
        rp.abar[j] = aj * std::sin((n - j) * theta);
        rp.bbar[j] = aj * std::cos((n - j) * theta);
    }
    // the j = n terms carry angle 0; keep them exact
    rp.abar[n] = 0.0;
    rp.bbar[n] = p.coeffs[n - 1];
    return rp;
}

HurwitzMatrix build_matrix(const RotatedPair& rp) {
    const int n = rp.n;
    const int m = 2 * n;
    HurwitzMatrix H;
    H.n = n;
    H.entries.assign(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const int col = i + j; // 1-based
            if (col > m) break;
            H.entries[(2 * i - 2) * m + (col - 1)] = rp.abar[j];
            H.entries[(2 * i - 1) * m + (col - 1)] = rp.bbar[j];
        }
    }
    return H;
}

MinorSequence minors(const HurwitzMatrix& H) {
    const int n = H.n;
    const int m = 2 * n;
    MinorSequence out;
    out.leading.resize(n);
    out.leading_scale.resize(n);
    out.leading_pivot.resize(n);
    for (int p = 1; p <= n; ++p) {
        auto d = detail::det_leading_block(H.entries, m, 2 * p);
        out.leading[p - 1] = d.value;
        out.leading_scale[p - 1] = d.hadamard;
        out.leading_pivot[p - 1] = d.min_pivot;
    }
    if (n >= 2) {
        // rows 1..2n-2, columns 1..2n-3 plus column 2n-1
        const int k = 2 * n - 2;
        std::vector<double> block(static_cast<std::size_t>(k) * k);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k - 1; ++c) block[r * k + c] = H.entries[r * m + c];
            block[r * k + (k - 1)] = H.entries[r * m + (2 * n - 2)];
        }
        auto d = detail::det_lu(block, k);
        out.auxiliary = d.value;
        out.auxiliary_scale = d.hadamard;
        out.auxiliary_pivot = d.min_pivot;
    }
    return out;
}

StabilityVerdict classify_verdict(const MinorSequence& m, const TolerancePolicy& tol) {
    const int n = static_cast<int>(m.leading.size());
    StabilityVerdict v;
    v.minors = m;
    v.leading_signs.resize(n);
    // A minor counts as zero when its equilibrated block is numerically
    // rank deficient; the determinant value alone cannot be compared
    // against a coefficient-scale threshold without either missing true
    // zeros or flagging every large-n minor.
    auto sign_of = [&tol](double value, double min_pivot) {
        if (min_pivot <= tol.pivot_tol) return 0;
        return value > 0.0 ? 1 : (value < 0.0 ? -1 : 0);
    };
    for (int p = 0; p < n; ++p)
        v.leading_signs[p] = sign_of(m.leading[p], m.leading_pivot[p]);
    v.auxiliary_sign = n >= 2 ? sign_of(m.auxiliary, m.auxiliary_pivot) : 0;

    bool all_positive = true;
    bool side_positive = true; // leading minors below the top one
    for (int p = 0; p < n; ++p) {
        if (v.leading_signs[p] != 1) {
            all_positive = false;
            if (p < n - 1) side_positive = false;
        }
    }
    if (all_positive) {
        v.tag = StabilityTag::Stable;
        return v;
    }
    if (v.leading_signs[n - 1] == 0) {
        const bool prev_zero = n >= 2 ? v.leading_signs[n - 2] == 0 : false;
        if (prev_zero) {
            v.degenerate_minor = true;
            v.tag = StabilityTag::Indeterminate;
            return v;
        }
        if (side_positive && v.auxiliary_sign == -1) {
            const double denom = n >= 2 ? m.leading[n - 2] : 1.0;
            v.tag = StabilityTag::HopfCandidate;
            v.critical_radius = -m.auxiliary / denom;
            return v;
        }
    }
    v.tag = StabilityTag::Indeterminate;
    return v;
}

StabilityVerdict classify(const CharPoly& p, double alpha, const TolerancePolicy& tol) {
    require_alpha(alpha);
    auto verdict = classify_verdict(minors(build_matrix(rotate(p, alpha))), tol);
    if (verdict.degenerate_minor)
        throw Error(ErrorCode::DegenerateMinor,
                    "top two leading minors vanish together; critical radius undefined");
    return verdict;
}

std::pair<ComplexRoot, ComplexRoot> critical_roots(const StabilityVerdict& v, double alpha) {
    require_alpha(alpha);
    if (v.tag != StabilityTag::HopfCandidate || !v.critical_radius)
        throw Error(ErrorCode::NotCritical, "critical roots require a HopfCandidate verdict");
    const double r0 = *v.critical_radius;
    const double theta = alpha * std::numbers::pi / 2.0;
    auto up = ComplexRoot::from(std::polar(r0, theta));
    auto down = ComplexRoot::from(std::polar(r0, -theta));
    // arguments are +-alpha*pi/2 by construction; pin them against polar rounding
    up.argument = theta;
    down.argument = -theta;
    up.modulus = r0;
    down.modulus = r0;
    return {up, down};
}

double resultant_check(const RotatedPair& rp) {
    const int n = rp.n;

    // Strip (near-)zero leading coefficients of f1; each stripped degree
    // contributes a factor bbar_0 to the formal-degree Sylvester determinant.
    double max_abar = 0.0;
    for (double c : rp.abar) max_abar = std::max(max_abar, std::abs(c));
    int lead = 0;
    while (lead < n && std::abs(rp.abar[lead]) <= 1e-14 * max_abar) ++lead;
    const int d = n - lead; // actual degree of f1
    if (d == 0) return 0.0; // f1 ~ 0: every value is a common root in the formal sense

    double result = 1.0;
    for (int s = 0; s < lead; ++s) result *= rp.bbar[0];

    const double a_lead = rp.abar[lead];
    std::vector<double> monic(d);
    for (int j = 1; j <= d; ++j) monic[j - 1] = rp.abar[lead + j] / a_lead;
    auto f1_roots = roots(CharPoly(std::move(monic)));

    std::complex<double> prod(1.0, 0.0);
    for (const auto& r : f1_roots) {
        std::complex<double> acc(rp.bbar[0], 0.0);
        for (int j = 1; j <= n; ++j) acc = acc * r.value() + rp.bbar[j];
        prod *= acc;
    }
    result *= std::pow(a_lead, n) * prod.real();
    return result;
}

} // namespace frhopf
