#include "scan.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "errors.hpp"

namespace frhopf {

namespace {

struct NodeEval {
    double top = 0.0;        // raw top minor value
    bool side_ok = false;    // lower minors positive, auxiliary negative
    bool valid = false;      // evaluation succeeded
};

NodeEval eval_node(const ParamSystem& sys, std::span<const double> mu,
                   const TolerancePolicy& tol) {
    NodeEval out;
    try {
        auto res = eval_criterion(sys, mu, tol, /*strict=*/false);
        const int n = sys.degree();
        out.top = res.minors.leading.back();
        out.side_ok = res.verdict.auxiliary_sign == -1;
        for (int p = 0; p + 1 < n; ++p)
            if (res.verdict.leading_signs[p] != 1) out.side_ok = false;
        out.valid = std::isfinite(out.top);
    } catch (const Error&) {
        out.valid = false;
    }
    return out;
}

/// Bisection along mu(t) = a + t (b - a) for the top-minor sign change;
/// returns the midpoint parameter once the bracket is below refine_rel.
double bisect_crossing(const ParamSystem& sys, std::span<const double> a,
                       std::span<const double> b, double fa, const TolerancePolicy& tol) {
    const std::size_t k = a.size();
    std::vector<double> mid(k);
    double lo = 0.0, hi = 1.0;
    const bool neg_at_lo = fa < 0.0;
    while (hi - lo > tol.refine_rel) {
        const double t = 0.5 * (lo + hi);
        for (std::size_t i = 0; i < k; ++i) mid[i] = a[i] + t * (b[i] - a[i]);
        const double f = top_minor_value(sys, mid);
        if (f == 0.0) return t;
        if ((f < 0.0) == neg_at_lo) lo = t;
        else hi = t;
    }
    return 0.5 * (lo + hi);
}

std::optional<BifurcationPoint> refine_edge(const ParamSystem& sys, std::span<const double> a,
                                            std::span<const double> b, double fa,
                                            const TolerancePolicy& tol, bool want_transversality) {
    const std::size_t k = a.size();
    const double t = bisect_crossing(sys, a, b, fa, tol);
    std::vector<double> mu(k);
    for (std::size_t i = 0; i < k; ++i) mu[i] = a[i] + t * (b[i] - a[i]);

    auto res = eval_criterion(sys, mu, tol, /*strict=*/false);
    if (res.verdict.tag != StabilityTag::HopfCandidate) return std::nullopt;

    BifurcationPoint pt;
    pt.mu = std::move(mu);
    pt.critical_radius = *res.verdict.critical_radius;
    auto pair = critical_roots(res.verdict, sys.alpha());
    pt.pair_up = pair.first;
    pt.pair_down = pair.second;
    if (want_transversality) {
        auto tv = transversality(sys, pt.mu, tol);
        pt.transversality = tv.verdict;
        pt.gradient = std::move(tv.gradient);
        pt.hessian_verdict = tv.hessian_verdict;
    }
    return pt;
}

} // namespace

std::vector<BifurcationPoint> grid_scan(const ParamSystem& sys, int axis1, int axis2,
                                        std::vector<double> mu_fixed, const ScanWindow& window,
                                        int res1, int res2, int threads,
                                        const TolerancePolicy& tol) {
    const int k = static_cast<int>(sys.params().size());
    if (axis1 < 0 || axis1 >= k || axis2 < 0 || axis2 >= k || axis1 == axis2)
        throw Error(ErrorCode::AxisUnknown, "scan axes must name two distinct parameters");
    if (static_cast<int>(mu_fixed.size()) != k)
        throw Error(ErrorCode::DimensionMismatch, "fixed parameter vector has the wrong length");
    if (!(window.x1 > window.x0) || !(window.y1 > window.y0))
        throw Error(ErrorCode::WindowDegenerate, "scan window must have positive area");
    if (res1 < 2 || res2 < 2)
        throw Error(ErrorCode::BadArgument, "scan resolution must be at least 2 per axis");

    int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;

    auto mu_at = [&](int i, int j) {
        std::vector<double> mu = mu_fixed;
        mu[axis1] = window.x0 + (window.x1 - window.x0) * i / (res1 - 1);
        mu[axis2] = window.y0 + (window.y1 - window.y0) * j / (res2 - 1);
        return mu;
    };

    // Phase 1: node values, embarrassingly parallel.
    std::vector<NodeEval> nodes(static_cast<std::size_t>(res1) * res2);
    {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                int j = next.fetch_add(1);
                if (j >= res2) return;
                for (int i = 0; i < res1; ++i)
                    nodes[static_cast<std::size_t>(j) * res1 + i] = eval_node(sys, mu_at(i, j), tol);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Phase 2: qualifying edges in deterministic order.
    struct Edge { int i, j; bool horizontal; };
    std::vector<Edge> edges;
    auto node = [&](int i, int j) -> const NodeEval& {
        return nodes[static_cast<std::size_t>(j) * res1 + i];
    };
    auto qualifies = [](const NodeEval& a, const NodeEval& b) {
        return a.valid && b.valid && a.side_ok && b.side_ok && a.top * b.top < 0.0;
    };
    for (int j = 0; j < res2; ++j) {
        for (int i = 0; i < res1; ++i) {
            if (i + 1 < res1 && qualifies(node(i, j), node(i + 1, j)))
                edges.push_back({i, j, true});
            if (j + 1 < res2 && qualifies(node(i, j), node(i, j + 1)))
                edges.push_back({i, j, false});
        }
    }

    // Phase 3: refine each edge; slots keep the deterministic order.
    std::vector<std::optional<BifurcationPoint>> slots(edges.size());
    {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t e = next.fetch_add(1);
                if (e >= edges.size()) return;
                const Edge& ed = edges[e];
                auto a = mu_at(ed.i, ed.j);
                auto b = ed.horizontal ? mu_at(ed.i + 1, ed.j) : mu_at(ed.i, ed.j + 1);
                const double fa = node(ed.i, ed.j).top;
                try {
                    slots[e] = refine_edge(sys, a, b, fa, tol, /*want_transversality=*/true);
                } catch (const Error&) {
                    slots[e] = std::nullopt;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<BifurcationPoint> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

BifurcationPoint refine_on_segment(const ParamSystem& sys, std::span<const double> mu_a,
                                   std::span<const double> mu_b, const TolerancePolicy& tol) {
    if (mu_a.size() != mu_b.size() || mu_a.size() != sys.params().size())
        throw Error(ErrorCode::DimensionMismatch, "segment endpoints have the wrong length");

    auto ea = eval_node(sys, mu_a, tol);
    auto eb = eval_node(sys, mu_b, tol);
    if (!ea.valid || !eb.valid)
        throw Error(ErrorCode::BadArgument, "criterion evaluation failed at a segment endpoint");
    if (!(ea.top * eb.top < 0.0))
        throw Error(ErrorCode::NoSignChange, "top minor has the same sign at both endpoints");
    if (!ea.side_ok || !eb.side_ok)
        throw Error(ErrorCode::SideConditionViolated,
                    "side conditions (positive lower minors, negative auxiliary minor) fail at an endpoint");

    auto pt = refine_edge(sys, mu_a, mu_b, ea.top, tol, /*want_transversality=*/true);
    if (!pt)
        throw Error(ErrorCode::SideConditionViolated,
                    "refined point does not satisfy the criterion sign conditions");
    return *pt;
}

} // namespace frhopf
