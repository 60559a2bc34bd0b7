#include "fdiff.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "errors.hpp"

namespace frhopf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kGradStep = std::cbrt(kEps);
const double kHessStep = std::pow(kEps, 0.25);

double step_for(double xi, double base) { return base * std::max(1.0, std::abs(xi)); }

} // namespace

std::vector<double> fd_gradient(const ScalarField& f, std::span<const double> x) {
    const int k = static_cast<int>(x.size());
    std::vector<double> g(k), pt(x.begin(), x.end());
    for (int i = 0; i < k; ++i) {
        const double h = step_for(x[i], kGradStep);
        // five-point central difference: the fourth-order truncation term
        // matters when locating stationary points in flat valleys, where a
        // second-order bias visibly displaces the gradient zero
        pt[i] = x[i] + 2.0 * h;
        const double fp2 = f(pt);
        pt[i] = x[i] + h;
        const double fp1 = f(pt);
        pt[i] = x[i] - h;
        const double fm1 = f(pt);
        pt[i] = x[i] - 2.0 * h;
        const double fm2 = f(pt);
        pt[i] = x[i];
        g[i] = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    }
    return g;
}

std::vector<double> fd_hessian(const ScalarField& f, std::span<const double> x) {
    const int k = static_cast<int>(x.size());
    std::vector<double> H(static_cast<std::size_t>(k) * k), pt(x.begin(), x.end());
    const double fc = f(pt);
    for (int i = 0; i < k; ++i) {
        const double hi = step_for(x[i], kHessStep);
        pt[i] = x[i] + hi;
        const double fp = f(pt);
        pt[i] = x[i] - hi;
        const double fm = f(pt);
        pt[i] = x[i];
        H[i * k + i] = (fp - 2.0 * fc + fm) / (hi * hi);
        for (int j = i + 1; j < k; ++j) {
            const double hj = step_for(x[j], kHessStep);
            pt[i] = x[i] + hi; pt[j] = x[j] + hj;
            const double fpp = f(pt);
            pt[j] = x[j] - hj;
            const double fpm = f(pt);
            pt[i] = x[i] - hi; pt[j] = x[j] + hj;
            const double fmp = f(pt);
            pt[j] = x[j] - hj;
            const double fmm = f(pt);
            pt[i] = x[i]; pt[j] = x[j];
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
            H[i * k + j] = v;
            H[j * k + i] = v;
        }
    }
    return H;
}

std::vector<double> sym_eigenvalues(std::span<const double> m, int k) {
    std::vector<double> a(m.begin(), m.begin() + static_cast<std::size_t>(k) * k);
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) off += a[i * k + j] * a[i * k + j];
        if (off <= 1e-30 * (1.0 + off)) break;
        bool rotated = false;
        for (int p = 0; p < k; ++p) {
            for (int q = p + 1; q < k; ++q) {
                const double apq = a[p * k + q];
                if (apq == 0.0) continue;
                double scale = std::abs(a[p * k + p]) + std::abs(a[q * k + q]);
                if (scale + std::abs(apq) == scale) { a[p * k + q] = a[q * k + p] = 0.0; continue; }
                const double theta = (a[q * k + q] - a[p * k + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < k; ++i) {
                    const double aip = a[i * k + p], aiq = a[i * k + q];
                    a[i * k + p] = c * aip - s * aiq;
                    a[i * k + q] = s * aip + c * aiq;
                }
                for (int i = 0; i < k; ++i) {
                    const double api = a[p * k + i], aqi = a[q * k + i];
                    a[p * k + i] = c * api - s * aqi;
                    a[q * k + i] = s * api + c * aqi;
                }
                rotated = true;
            }
        }
        if (!rotated) break;
    }
    std::vector<double> eig(k);
    for (int i = 0; i < k; ++i) eig[i] = a[i * k + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

Definiteness classify_definiteness(std::span<const double> hessian, int k, double eig_rel) {
    auto eig = sym_eigenvalues(hessian, k);
    double norm = 0.0;
    for (double e : eig) norm = std::max(norm, std::abs(e));
    if (norm == 0.0) return Definiteness::Semidefinite;
    const double band = eig_rel * norm;

    int n_pos = 0, n_neg = 0;
    for (double e : eig) {
        if (e > band) ++n_pos;
        else if (e < -band) ++n_neg;
    }
    if (n_pos > 0 && n_neg > 0) return Definiteness::Indefinite;
    if (n_pos > 0) return Definiteness::PosDefinite;
    if (n_neg > 0) return Definiteness::NegDefinite;
    return Definiteness::Semidefinite;
}

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

TransversalityResult decide(const ScalarField& f, std::span<const double> x,
                            const TolerancePolicy& tol) {
    const int k = static_cast<int>(x.size());
    TransversalityResult out;
    out.gradient = fd_gradient(f, x);

    // Gradient threshold: relative to the field magnitude seen across the
    // stencil, converted to gradient units by the step.
    double stencil_scale = std::abs(f(x));
    std::vector<double> pt(x.begin(), x.end());
    double h_mean = 0.0;
    for (int i = 0; i < k; ++i) {
        const double h = step_for(x[i], kGradStep);
        h_mean += h;
        pt[i] = x[i] + h;
        stencil_scale = std::max(stencil_scale, std::abs(f(pt)));
        pt[i] = x[i] - h;
        stencil_scale = std::max(stencil_scale, std::abs(f(pt)));
        pt[i] = x[i];
    }
    h_mean /= k;
    const double grad_tol = tol.grad_rel * std::max(1.0, stencil_scale) / h_mean;

    if (norm2(out.gradient) > grad_tol) {
        out.verdict = Transversality::Transversal;
        return out;
    }

    auto H = fd_hessian(f, x);
    const auto def = classify_definiteness(H, k, tol.eig_rel);
    out.hessian_verdict = def;
    switch (def) {
        case Definiteness::Indefinite: out.verdict = Transversality::Transversal; break;
        case Definiteness::PosDefinite:
        case Definiteness::NegDefinite: out.verdict = Transversality::DegenerateStationary; break;
        case Definiteness::Semidefinite: out.verdict = Transversality::Inconclusive; break;
    }
    return out;
}

} // namespace

TransversalityResult transversality_field(const ScalarField& f, std::span<const double> x,
                                          double on_surface_tol, const TolerancePolicy& tol) {
    const double v = f(x);
    if (!(std::abs(v) <= on_surface_tol))
        throw Error(ErrorCode::NotOnSurface,
                    "field value " + std::to_string(v) + " exceeds the surface tolerance");
    return decide(f, x, tol);
}

TransversalityResult transversality(const ParamSystem& sys, std::span<const double> mu,
                                    const TolerancePolicy& tol) {
    auto res = eval_criterion(sys, mu, tol, /*strict=*/false);
    const double tau_n = tol.minor_sign_tol(res.minors.leading_scale.back());
    if (std::abs(res.minors.leading.back()) > 10.0 * tau_n)
        throw Error(ErrorCode::NotOnSurface, "top minor is not within tolerance of zero");
    ScalarField f = top_minor_field(sys);
    return decide(f, mu, tol);
}

StationaryPoint find_stationary(const ScalarField& f, std::span<const double> guess,
                                const TolerancePolicy& tol) {
    const int k = static_cast<int>(guess.size());
    std::vector<double> x(guess.begin(), guess.end());
    for (double v : x)
        if (!std::isfinite(v)) throw Error(ErrorCode::BadArgument, "guess must be finite");

    constexpr int kBudget = 100;
    constexpr double kDampFloor = 1e-8;

    auto finite = [](std::span<const double> v) {
        for (double t : v)
            if (!std::isfinite(t)) return false;
        return true;
    };

    StationaryPoint out;
    std::vector<double> g = fd_gradient(f, x);
    if (!finite(g))
        throw Error(ErrorCode::NewtonDiverged, "gradient is not finite at the starting guess");

    for (int iter = 0; iter < kBudget; ++iter) {
        out.iterations = iter;
        auto H = fd_hessian(f, x);
        if (!finite(H)) throw Error(ErrorCode::NewtonDiverged, "Hessian is not finite");
        auto eig = sym_eigenvalues(H, k);
        double hnorm = 0.0;
        for (double e : eig) hnorm = std::max(hnorm, std::abs(e));

        const double stat_tol = 1e-9 * std::max(1.0, hnorm);
        if (norm2(g) <= stat_tol) break;

        // Newton step through the eigendecomposition of the symmetric
        // Hessian, dropping near-null components (2x2 solved directly; the
        // eigenvector basis is recovered from the eigenvalues).
        std::vector<double> delta(k, 0.0);
        if (k == 2) {
            const double a = H[0], b = H[1], d = H[3];
            const double lo = eig[0], hi = eig[1];
            const double cutoff = 1e-8 * std::max(1.0, hnorm);
            // eigenvector for eigenvalue e: (b, e - a) or (e - d, b)
            for (double e : {lo, hi}) {
                if (std::abs(e) <= cutoff) continue;
                double vx = b, vy = e - a;
                if (std::abs(vx) + std::abs(vy) < 1e-300) { vx = e - d; vy = b; }
                if (std::abs(vx) + std::abs(vy) < 1e-300) { vx = 1.0; vy = 0.0; }
                const double len = std::hypot(vx, vy);
                vx /= len; vy /= len;
                const double proj = (g[0] * vx + g[1] * vy) / e;
                delta[0] -= proj * vx;
                delta[1] -= proj * vy;
            }
        } else {
            // general k: regularized diagonal solve as a serviceable fallback
            for (int i = 0; i < k; ++i) {
                double hii = H[i * k + i];
                if (std::abs(hii) < 1e-8 * std::max(1.0, hnorm)) hii = std::max(1.0, hnorm);
                delta[i] = -g[i] / hii;
            }
        }
        double dlen = norm2(delta);
        if (dlen == 0.0) break; // gradient orthogonal to the usable eigenspace

        const double g0 = norm2(g);
        double t = 1.0;
        bool descended = false;
        std::vector<double> trial(k), gt;
        while (t >= kDampFloor) {
            for (int i = 0; i < k; ++i) trial[i] = x[i] + t * delta[i];
            if (finite(trial)) {
                gt = fd_gradient(f, trial);
                if (finite(gt) && norm2(gt) < g0) { descended = true; break; }
            }
            t *= 0.5;
        }
        if (!descended) break; // stalled at the finite-difference noise floor
        const double moved = t * dlen;
        x = trial;
        g = std::move(gt);
        if (moved <= 1e-12 * std::max(1.0, norm2(x))) break;
    }

    {
        auto H = fd_hessian(f, x);
        double hnorm = 0.0;
        for (double e : sym_eigenvalues(H, k)) hnorm = std::max(hnorm, std::abs(e));
        const double stat_tol = 1e-9 * std::max(1.0, hnorm);
        if (norm2(g) > 1000.0 * stat_tol)
            throw Error(ErrorCode::NewtonDiverged,
                        "iteration stopped away from a stationary point");
        out.hessian_verdict = classify_definiteness(H, k, tol.eig_rel);
    }
    out.location = x;
    out.gradient = g;
    out.field_value = f(x);
    return out;
}

StationaryPoint find_degenerate(const ParamSystem& sys, std::span<const double> guess,
                                const TolerancePolicy& tol) {
    if (sys.params().size() != 2)
        throw Error(ErrorCode::BadArgument,
                    "degenerate-point search requires exactly two free parameters");
    ScalarField f = top_minor_field(sys);
    auto st = find_stationary(f, guess, tol);

    auto res = eval_criterion(sys, st.location, tol, /*strict=*/false);
    const double tau_n = tol.minor_sign_tol(res.minors.leading_scale.back());
    if (std::abs(res.minors.leading.back()) > 10.0 * tau_n)
        throw Error(ErrorCode::StationaryOffSurface,
                    "gradient vanishes but the top minor is far from zero");
    return st;
}

} // namespace frhopf
