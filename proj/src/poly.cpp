#include "poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace frhopf {

CharPoly::CharPoly(std::vector<double> a) : coeffs(std::move(a)) {
    if (coeffs.empty())
        throw Error(ErrorCode::BadArgument, "polynomial degree must be at least 1");
    for (double c : coeffs)
        if (!std::isfinite(c))
            throw Error(ErrorCode::BadArgument, "polynomial coefficients must be finite");
}

ComplexRoot ComplexRoot::from(std::complex<double> z) {
    ComplexRoot r;
    r.re = z.real();
    r.im = z.imag() == 0.0 ? 0.0 : z.imag(); // normalize -0 so atan2 gives +pi on the negative axis
    r.modulus = std::hypot(r.re, r.im);
    r.argument = std::atan2(r.im, r.re);
    return r;
}

namespace {

std::complex<double> horner(const CharPoly& p, std::complex<double> z) {
    std::complex<double> acc(1.0, 0.0);
    for (double a : p.coeffs) acc = acc * z + a;
    return acc;
}

// p'(z) for the monic polynomial, Horner on the derivative coefficients.
std::complex<double> derivative_at(const CharPoly& p, std::complex<double> z) {
    const int n = p.degree();
    std::complex<double> acc(static_cast<double>(n), 0.0);
    for (int j = 1; j < n; ++j) acc = acc * z + static_cast<double>(n - j) * p.coeffs[j - 1];
    return acc;
}

bool residual_ok(const CharPoly& p, std::complex<double> z, double coeff_sum, double rel) {
    const double bound = rel * (1.0 + coeff_sum) * std::pow(std::max(1.0, std::abs(z)), p.degree());
    return std::abs(horner(p, z)) <= bound;
}

} // namespace

std::complex<double> evaluate(const CharPoly& p, std::complex<double> z) {
    auto v = horner(p, z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(ErrorCode::EvalNonFinite, "polynomial evaluation overflowed");
    return v;
}

std::vector<ComplexRoot> roots(const CharPoly& p, int max_iterations) {
    const int n = p.degree();
    if (n > 64)
        throw Error(ErrorCode::BadArgument, "root finder supports degree <= 64");

    // Exact zero roots deflate immediately: lambda^m * q(lambda).
    int zero_count = 0;
    {
        int m = n;
        while (m > 0 && p.coeffs[m - 1] == 0.0) { ++zero_count; --m; }
    }
    const int d = n - zero_count;

    std::vector<std::complex<double>> z;
    if (d > 0) {
        CharPoly q(std::vector<double>(p.coeffs.begin(), p.coeffs.begin() + d));
        double maxc = 0.0;
        for (double c : q.coeffs) maxc = std::max(maxc, std::abs(c));
        const double radius = 1.0 + maxc;

        // Deterministic start: points on a circle with an irrational angular
        // offset so no start point sits exactly on the real axis.
        z.resize(d);
        for (int i = 0; i < d; ++i) {
            double theta = 2.0 * std::numbers::pi * (i + 0.3531) / d + 0.6180339887;
            z[i] = std::polar(radius, theta);
        }

        double qsum = 0.0;
        for (double c : q.coeffs) qsum += std::abs(c);

        // A root freezes once its residual reaches rounding level; clustered
        // roots stall on step size long before that, so steps alone cannot
        // decide convergence.
        std::vector<bool> done(d, false);
        bool settled = false;
        for (int iter = 0; iter < max_iterations && !settled; ++iter) {
            double max_step = 0.0;
            for (int i = 0; i < d; ++i) {
                if (done[i]) continue;
                std::complex<double> pv = horner(q, z[i]);
                const double floor_i =
                    1e-13 * (1.0 + qsum) * std::pow(std::max(1.0, std::abs(z[i])), d);
                if (std::abs(pv) <= floor_i) { done[i] = true; continue; }
                std::complex<double> dv = derivative_at(q, z[i]);
                if (dv == std::complex<double>(0.0, 0.0)) {
                    z[i] += std::complex<double>(1e-8 * radius, 1e-8 * radius);
                    max_step = radius;
                    continue;
                }
                std::complex<double> newton = pv / dv;
                std::complex<double> sum(0.0, 0.0);
                for (int j = 0; j < d; ++j) {
                    if (j == i) continue;
                    std::complex<double> diff = z[i] - z[j];
                    if (diff == std::complex<double>(0.0, 0.0))
                        diff = std::complex<double>(1e-12 * radius, 0.0);
                    sum += 1.0 / diff;
                }
                std::complex<double> denom = 1.0 - newton * sum;
                std::complex<double> w = denom == std::complex<double>(0.0, 0.0) ? newton : newton / denom;
                z[i] -= w;
                const double rel_step = std::abs(w) / (1.0 + std::abs(z[i]));
                if (rel_step <= 1e-14) done[i] = true;
                max_step = std::max(max_step, rel_step);
            }
            settled = max_step <= 1e-14;
            if (!settled) {
                settled = true;
                for (int i = 0; i < d; ++i)
                    if (!done[i]) { settled = false; break; }
            }
        }
        if (!settled)
            throw Error(ErrorCode::ConvergenceFailure,
                        "root iteration did not settle within the iteration budget");
    }

    for (int i = 0; i < zero_count; ++i) z.push_back({0.0, 0.0});

    // Enforce conjugate symmetry: roots with an imaginary part at rounding
    // level are snapped to the real axis first, the rest are greedily
    // paired positive-against-negative and replaced by exact conjugates.
    std::vector<std::complex<double>> pos, neg, real_roots;
    for (auto& r : z) {
        if (std::abs(r.imag()) <= 1e-10 * (1.0 + std::abs(r))) real_roots.push_back({r.real(), 0.0});
        else if (r.imag() > 0.0) pos.push_back(r);
        else neg.push_back(r);
    }
    std::vector<std::complex<double>> paired;
    std::vector<bool> used(neg.size(), false);
    std::sort(pos.begin(), pos.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (auto& zp : pos) {
        std::size_t best = neg.size();
        double best_dist = 0.0;
        for (std::size_t j = 0; j < neg.size(); ++j) {
            if (used[j]) continue;
            double dist = std::abs(zp - std::conj(neg[j]));
            if (best == neg.size() || dist < best_dist) { best = j; best_dist = dist; }
        }
        // a genuine conjugate approximation agrees in both components, so
        // the match distance sits at convergence level, far below either
        // imaginary part; anything else is a real root that stalled
        // slightly off the axis
        const double match_tol =
            best == neg.size()
                ? 0.0
                : 10.0 * std::min(std::abs(zp.imag()), std::abs(neg[best].imag())) +
                      1e-13 * (1.0 + std::abs(zp));
        if (best == neg.size() || best_dist > match_tol) {
            real_roots.push_back({zp.real(), 0.0});
            continue;
        }
        used[best] = true;
        std::complex<double> m = 0.5 * (zp + std::conj(neg[best]));
        paired.push_back(m);
    }
    for (std::size_t j = 0; j < neg.size(); ++j)
        if (!used[j]) real_roots.push_back({neg[j].real(), 0.0});

    double coeff_sum = 0.0;
    for (double c : p.coeffs) coeff_sum += std::abs(c);
    TolerancePolicy tol;
    for (auto& r : real_roots)
        if (!residual_ok(p, r, coeff_sum, tol.root_residual_rel))
            throw Error(ErrorCode::ConvergenceFailure, "real root failed the residual bound");
    for (auto& r : paired)
        if (!residual_ok(p, r, coeff_sum, tol.root_residual_rel))
            throw Error(ErrorCode::ConvergenceFailure, "conjugate pair failed the residual bound");

    // Deterministic order: merge real roots and pairs by (re, |im|);
    // each pair is emitted with the positive-imaginary member first.
    std::sort(real_roots.begin(), real_roots.end(),
              [](auto a, auto b) { return a.real() < b.real(); });
    std::sort(paired.begin(), paired.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : std::abs(a.imag()) < std::abs(b.imag());
    });

    std::vector<ComplexRoot> out;
    out.reserve(n);
    std::size_t ir = 0, ip = 0;
    auto key = [](std::complex<double> v) { return std::pair(v.real(), std::abs(v.imag())); };
    while (ir < real_roots.size() || ip < paired.size()) {
        bool take_real = ip == paired.size() ||
                         (ir < real_roots.size() && key(real_roots[ir]) <= key(paired[ip]));
        if (take_real) {
            out.push_back(ComplexRoot::from(real_roots[ir++]));
        } else {
            out.push_back(ComplexRoot::from(paired[ip]));
            out.push_back(ComplexRoot::from(std::conj(paired[ip])));
            ++ip;
        }
    }
    return out;
}

SectorVerdict sector_classify(std::span<const ComplexRoot> rts, double alpha,
                              const TolerancePolicy& tol) {
    require_alpha(alpha);
    const double boundary = alpha * std::numbers::pi / 2.0;
    SectorVerdict v;
    for (const auto& r : rts) {
        if (r.modulus < tol.zero_modulus) { ++v.n_zero; continue; }
        const double a = std::abs(r.argument);
        if (std::abs(a - boundary) <= tol.arg_tol) ++v.n_critical;
        else if (a > boundary) ++v.n_stable;
        else ++v.n_unstable;
    }
    return v;
}

} // namespace frhopf
