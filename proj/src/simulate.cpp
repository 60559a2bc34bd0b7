#include "simulate.hpp"

#include <cmath>

#include "errors.hpp"

namespace frhopf {

SimTrajectory integrate(const SimConfig& cfg) {
    require_alpha(cfg.alpha);
    if (cfg.dim < 1 || static_cast<int>(cfg.x0.size()) != cfg.dim)
        throw Error(ErrorCode::DimensionMismatch, "initial state does not match the dimension");
    if (!cfg.v0.empty() && static_cast<int>(cfg.v0.size()) != cfg.dim)
        throw Error(ErrorCode::DimensionMismatch, "initial derivative does not match the dimension");
    if (!(cfg.horizon > 0.0) || !(cfg.step > 0.0) || cfg.step > cfg.horizon)
        throw Error(ErrorCode::BadArgument, "horizon and step must be positive with step <= horizon");
    if (cfg.step > cfg.horizon / 50.0)
        throw Error(ErrorCode::StepTooLarge, "step exceeds horizon/50");
    if (!cfg.field) throw Error(ErrorCode::BadArgument, "missing vector field");

    const double alpha = cfg.alpha;
    const double h = cfg.step;
    const int dim = cfg.dim;
    const int K = static_cast<int>(std::floor(cfg.horizon / h + 1e-9)); // nodes 0..K

    const double h_alpha = std::pow(h, alpha);
    const double gamma_alpha = std::tgamma(alpha);
    const double pred_scale = h_alpha / alpha / gamma_alpha;
    const double corr_scale = h_alpha / (alpha * (alpha + 1.0)) / gamma_alpha;

    // Predictor weight for lag m = k+1-j is pw[m]; corrector interior weight
    // for m = k-j+1 is cw[m]. Both depend only on the lag.
    std::vector<double> pw(K + 2), cw(K + 2);
    auto powa = [alpha](double v) { return std::pow(v, alpha); };
    auto powa1 = [alpha](double v) { return std::pow(v, alpha + 1.0); };
    for (int m = 1; m <= K + 1; ++m) {
        pw[m] = powa(m) - powa(m - 1.0);
        cw[m] = powa1(m + 1.0) + powa1(m - 1.0) - 2.0 * powa1(m);
    }

    SimTrajectory tr;
    tr.step = h;
    tr.dim = dim;
    tr.states.assign(static_cast<std::size_t>(K + 1) * dim, 0.0);

    std::vector<double> g_cache(static_cast<std::size_t>(K + 1) * dim, 0.0);
    std::vector<double> xp(dim), gp(dim), acc(dim);

    auto state = [&](int i) {
        return std::span<double>(tr.states.data() + static_cast<std::size_t>(i) * dim,
                                 static_cast<std::size_t>(dim));
    };
    auto cached_g = [&](int i) {
        return std::span<double>(g_cache.data() + static_cast<std::size_t>(i) * dim,
                                 static_cast<std::size_t>(dim));
    };
    auto lead = [&](double t, int i) {
        return cfg.x0[i] + (cfg.v0.empty() ? 0.0 : cfg.v0[i]) * t;
    };
    auto finite = [](std::span<const double> v) {
        for (double t : v)
            if (!std::isfinite(t)) return false;
        return true;
    };

    for (int i = 0; i < dim; ++i) state(0)[i] = cfg.x0[i];
    cfg.field(state(0), cached_g(0));

    for (int k = 0; k + 1 <= K; ++k) {
        const double t_next = h * (k + 1);

        // predictor: rectangle rule over the memory
        for (int i = 0; i < dim; ++i) acc[i] = 0.0;
        for (int j = 0; j <= k; ++j) {
            const double w = pw[k + 1 - j];
            auto gj = cached_g(j);
            for (int i = 0; i < dim; ++i) acc[i] += w * gj[i];
        }
        for (int i = 0; i < dim; ++i) xp[i] = lead(t_next, i) + pred_scale * acc[i];

        if (!finite(xp)) { tr.blowup_index = k + 1; break; }
        cfg.field(xp, gp);

        // corrector: trapezoidal weights, one pass
        for (int i = 0; i < dim; ++i) acc[i] = 0.0;
        {
            const double w0 =
                powa1(static_cast<double>(k)) - (k - alpha) * powa(static_cast<double>(k + 1));
            auto g0 = cached_g(0);
            for (int i = 0; i < dim; ++i) acc[i] += w0 * g0[i];
        }
        for (int j = 1; j <= k; ++j) {
            const double w = cw[k - j + 1];
            auto gj = cached_g(j);
            for (int i = 0; i < dim; ++i) acc[i] += w * gj[i];
        }
        for (int i = 0; i < dim; ++i) acc[i] += gp[i]; // j = k+1 weight is 1

        auto xn = state(k + 1);
        double residual = 0.0;
        for (int i = 0; i < dim; ++i) {
            xn[i] = lead(t_next, i) + corr_scale * acc[i];
            residual = std::max(residual, std::abs(xn[i] - xp[i]));
        }
        if (!finite(xn)) { tr.blowup_index = k + 1; break; }
        tr.max_residual = std::max(tr.max_residual, residual);
        cfg.field(xn, cached_g(k + 1));
    }

    if (tr.blowup_index >= 0)
        tr.states.resize(static_cast<std::size_t>(tr.blowup_index) * dim);
    return tr;
}

SimTrajectory simulate_demo(const ParamSystem& sys, std::span<const double> mu,
                            std::span<const double> x0, std::span<const double> v0, double horizon,
                            double step) {
    if (!sys.has_vector_field())
        throw Error(ErrorCode::BadArgument,
                    "time-domain simulation requires the built-in demo system");
    if (mu.size() != 2 || x0.size() != 3 || (!v0.empty() && v0.size() != 3))
        throw Error(ErrorCode::DimensionMismatch, "demo simulation expects mu in R^2, state in R^3");

    const DemoSystem demo = sys.demo_system();
    const double mu1 = mu[0], mu2 = mu[1];
    SimConfig cfg;
    cfg.alpha = sys.alpha();
    cfg.dim = 3;
    cfg.field = [demo, mu1, mu2](std::span<const double> x, std::span<double> out) {
        demo.vector_field(x, mu1, mu2, out);
    };
    cfg.x0.assign(x0.begin(), x0.end());
    cfg.v0.assign(v0.begin(), v0.end());
    cfg.horizon = horizon;
    cfg.step = step;
    return integrate(cfg);
}

double oscillation_metric(const SimTrajectory& tr, double tail_fraction) {
    if (!(tail_fraction > 0.0) || tail_fraction > 0.5)
        throw Error(ErrorCode::BadArgument, "tail fraction must lie in (0, 0.5]");
    const int total = tr.size();
    const int start = static_cast<int>(std::ceil((1.0 - tail_fraction) * (total - 1)));
    if (total < 2 || start >= total - 1)
        throw Error(ErrorCode::TrajectoryTooShort, "not enough samples in the trailing window");

    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int i = start; i < total; ++i) {
        auto x = tr.state_at(i);
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        if (first) { lo = hi = norm; first = false; }
        else { lo = std::min(lo, norm); hi = std::max(hi, norm); }
    }
    return hi - lo;
}

} // namespace frhopf
