#include "frhopf.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fdiff.hpp"
#include "hurwitz.hpp"
#include "poly.hpp"
#include "scan.hpp"
#include "selftest.hpp"
#include "simulate.hpp"
#include "system.hpp"

using namespace frhopf;

namespace {

thread_local std::string t_last_error;

frh_status map_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::BadArgument: return FRH_ERR_BAD_ARGUMENT;
        case ErrorCode::AlphaOutOfRange: return FRH_ERR_ALPHA_RANGE;
        case ErrorCode::SyntaxError: return FRH_ERR_SYNTAX;
        case ErrorCode::UnknownFunction: return FRH_ERR_UNKNOWN_FUNCTION;
        case ErrorCode::UnboundIdentifier: return FRH_ERR_UNBOUND_IDENTIFIER;
        case ErrorCode::EvalDivByZero:
        case ErrorCode::EvalNonFinite:
        case ErrorCode::EvalUnbound: return FRH_ERR_EVAL;
        case ErrorCode::ConvergenceFailure: return FRH_ERR_CONVERGENCE;
        case ErrorCode::DegenerateMinor: return FRH_ERR_DEGENERATE_MINOR;
        case ErrorCode::NotCritical: return FRH_ERR_NOT_CRITICAL;
        case ErrorCode::NoSignChange: return FRH_ERR_NO_SIGN_CHANGE;
        case ErrorCode::SideConditionViolated: return FRH_ERR_SIDE_CONDITION;
        case ErrorCode::NotOnSurface: return FRH_ERR_NOT_ON_SURFACE;
        case ErrorCode::NewtonDiverged: return FRH_ERR_NEWTON_DIVERGED;
        case ErrorCode::StationaryOffSurface: return FRH_ERR_STATIONARY_OFF_SURFACE;
        case ErrorCode::WindowDegenerate: return FRH_ERR_WINDOW_DEGENERATE;
        case ErrorCode::AxisUnknown: return FRH_ERR_AXIS_UNKNOWN;
        case ErrorCode::StepTooLarge: return FRH_ERR_STEP_TOO_LARGE;
        case ErrorCode::TrajectoryTooShort: return FRH_ERR_TRAJECTORY_TOO_SHORT;
        case ErrorCode::DimensionMismatch: return FRH_ERR_DIMENSION;
    }
    return FRH_ERR_INTERNAL;
}

template <typename Fn>
frh_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return FRH_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return FRH_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown failure";
        return FRH_ERR_INTERNAL;
    }
}

frh_status bad_argument(const char* msg) {
    t_last_error = msg;
    return FRH_ERR_BAD_ARGUMENT;
}

frh_transversality to_c(Transversality t) {
    switch (t) {
        case Transversality::Transversal: return FRH_TRANSVERSAL;
        case Transversality::DegenerateStationary: return FRH_DEGENERATE_STATIONARY;
        case Transversality::Inconclusive: return FRH_INCONCLUSIVE;
    }
    return FRH_INCONCLUSIVE;
}

frh_definiteness to_c(Definiteness d) {
    switch (d) {
        case Definiteness::Indefinite: return FRH_HESS_INDEFINITE;
        case Definiteness::PosDefinite: return FRH_HESS_POS_DEFINITE;
        case Definiteness::NegDefinite: return FRH_HESS_NEG_DEFINITE;
        case Definiteness::Semidefinite: return FRH_HESS_SEMIDEFINITE;
    }
    return FRH_HESS_NOT_COMPUTED;
}

} // namespace

struct frh_system {
    ParamSystem sys;
};

struct frh_report {
    CharPoly poly;
    MinorSequence minors;
    StabilityVerdict verdict;
    std::vector<ComplexRoot> oracle_roots;
    SectorVerdict sectors;
    double alpha = 0.0;
};

struct frh_scan_result {
    std::vector<BifurcationPoint> points;
    int param_count = 0;
};

struct frh_trajectory {
    SimTrajectory tr;
};

extern "C" {

const char* frh_version(void) { return "0.1.0"; }

const char* frh_status_name(frh_status s) {
    switch (s) {
        case FRH_OK: return "ok";
        case FRH_ERR_BAD_ARGUMENT: return "bad argument";
        case FRH_ERR_ALPHA_RANGE: return "alpha out of range";
        case FRH_ERR_SYNTAX: return "syntax error";
        case FRH_ERR_UNKNOWN_FUNCTION: return "unknown function";
        case FRH_ERR_UNBOUND_IDENTIFIER: return "unbound identifier";
        case FRH_ERR_EVAL: return "evaluation error";
        case FRH_ERR_CONVERGENCE: return "convergence failure";
        case FRH_ERR_DEGENERATE_MINOR: return "degenerate minor";
        case FRH_ERR_NOT_CRITICAL: return "not a Hopf candidate";
        case FRH_ERR_NO_SIGN_CHANGE: return "no sign change";
        case FRH_ERR_SIDE_CONDITION: return "side condition violated";
        case FRH_ERR_NOT_ON_SURFACE: return "not on the bifurcation surface";
        case FRH_ERR_NEWTON_DIVERGED: return "Newton iteration diverged";
        case FRH_ERR_STATIONARY_OFF_SURFACE: return "stationary point off the surface";
        case FRH_ERR_WINDOW_DEGENERATE: return "degenerate scan window";
        case FRH_ERR_AXIS_UNKNOWN: return "unknown axis";
        case FRH_ERR_STEP_TOO_LARGE: return "step too large";
        case FRH_ERR_TRAJECTORY_TOO_SHORT: return "trajectory too short";
        case FRH_ERR_DIMENSION: return "dimension mismatch";
        case FRH_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* frh_last_error(void) { return t_last_error.c_str(); }

void frh_default_tolerances(frh_tolerances* out) {
    if (!out) return;
    TolerancePolicy tol;
    out->minor_rel = tol.minor_rel;
    out->pivot_tol = tol.pivot_tol;
    out->arg_tol = tol.arg_tol;
    out->zero_modulus = tol.zero_modulus;
    out->grad_rel = tol.grad_rel;
    out->eig_rel = tol.eig_rel;
    out->root_residual = tol.root_residual_rel;
    out->refine_rel = tol.refine_rel;
}

frh_status frh_system_create_demo(double alpha, const double* k, frh_system** out) {
    if (!out) return bad_argument("null output pointer");
    return guarded([&] {
        std::optional<std::array<double, 9>> kk;
        if (k) {
            std::array<double, 9> arr;
            std::memcpy(arr.data(), k, sizeof arr);
            kk = arr;
        }
        *out = new frh_system{ParamSystem::demo(alpha, kk)};
    });
}

frh_status frh_system_create_expr(int degree, const char* const* coeff_exprs,
                                  const char* const* param_names, int n_params, double alpha,
                                  frh_system** out) {
    if (!out || !coeff_exprs || (n_params > 0 && !param_names))
        return bad_argument("null pointer argument");
    if (degree < 1 || n_params < 0) return bad_argument("degree must be >= 1");
    return guarded([&] {
        std::vector<std::string> exprs(coeff_exprs, coeff_exprs + degree);
        std::vector<std::string> names(param_names, param_names + n_params);
        *out = new frh_system{ParamSystem::from_expressions(std::move(exprs), std::move(names), alpha)};
    });
}

void frh_system_free(frh_system* sys) { delete sys; }

int frh_system_degree(const frh_system* sys) { return sys ? sys->sys.degree() : 0; }
int frh_system_param_count(const frh_system* sys) {
    return sys ? static_cast<int>(sys->sys.params().size()) : 0;
}
const char* frh_system_param_name(const frh_system* sys, int index) {
    if (!sys || index < 0 || index >= static_cast<int>(sys->sys.params().size())) return nullptr;
    return sys->sys.params()[index].c_str();
}
double frh_system_alpha(const frh_system* sys) { return sys ? sys->sys.alpha() : 0.0; }
int frh_system_has_vector_field(const frh_system* sys) {
    return sys && sys->sys.has_vector_field() ? 1 : 0;
}

frh_status frh_system_coefficients(const frh_system* sys, const double* mu, double* out_coeffs) {
    if (!sys || !out_coeffs || (!mu && !sys->sys.params().empty()))
        return bad_argument("null pointer argument");
    return guarded([&] {
        auto p = sys->sys.char_poly({mu, sys->sys.params().size()});
        std::memcpy(out_coeffs, p.coeffs.data(), p.coeffs.size() * sizeof(double));
    });
}

frh_status frh_classify(const frh_system* sys, const double* mu, frh_report** out) {
    if (!sys || !out || (!mu && !sys->sys.params().empty()))
        return bad_argument("null pointer argument");
    return guarded([&] {
        const auto& s = sys->sys;
        auto res = eval_criterion(s, {mu, s.params().size()}, {}, /*strict=*/true);
        auto report = std::make_unique<frh_report>();
        report->poly = res.poly;
        report->minors = res.minors;
        report->verdict = res.verdict;
        report->alpha = s.alpha();
        report->oracle_roots = roots(res.poly);
        report->sectors = sector_classify(report->oracle_roots, s.alpha());
        *out = report.release();
    });
}

void frh_report_free(frh_report* report) { delete report; }

int frh_report_degree(const frh_report* report) { return report ? report->poly.degree() : 0; }

frh_verdict frh_report_verdict(const frh_report* report) {
    if (!report) return FRH_INDETERMINATE;
    switch (report->verdict.tag) {
        case StabilityTag::Stable: return FRH_STABLE;
        case StabilityTag::HopfCandidate: return FRH_HOPF_CANDIDATE;
        case StabilityTag::Indeterminate: return FRH_INDETERMINATE;
    }
    return FRH_INDETERMINATE;
}

frh_status frh_report_coefficients(const frh_report* report, double* out_coeffs) {
    if (!report || !out_coeffs) return bad_argument("null pointer argument");
    std::memcpy(out_coeffs, report->poly.coeffs.data(), report->poly.coeffs.size() * sizeof(double));
    return FRH_OK;
}

frh_status frh_report_minors(const frh_report* report, double* out_leading, double* out_auxiliary) {
    if (!report) return bad_argument("null report");
    if (out_leading)
        std::memcpy(out_leading, report->minors.leading.data(),
                    report->minors.leading.size() * sizeof(double));
    if (out_auxiliary) *out_auxiliary = report->minors.auxiliary;
    return FRH_OK;
}

frh_status frh_report_minor_scales(const frh_report* report, double* out_leading,
                                   double* out_auxiliary) {
    if (!report) return bad_argument("null report");
    if (out_leading)
        std::memcpy(out_leading, report->minors.leading_scale.data(),
                    report->minors.leading_scale.size() * sizeof(double));
    if (out_auxiliary) *out_auxiliary = report->minors.auxiliary_scale;
    return FRH_OK;
}

double frh_report_critical_radius(const frh_report* report) {
    if (!report || !report->verdict.critical_radius)
        return std::numeric_limits<double>::quiet_NaN();
    return *report->verdict.critical_radius;
}

frh_status frh_report_critical_pair(const frh_report* report, double* out_re, double* out_im) {
    if (!report || !out_re || !out_im) return bad_argument("null pointer argument");
    return guarded([&] {
        auto pair = critical_roots(report->verdict, report->alpha);
        *out_re = pair.first.re;
        *out_im = pair.first.im;
    });
}

int frh_report_root_count(const frh_report* report) {
    return report ? static_cast<int>(report->oracle_roots.size()) : 0;
}

frh_status frh_report_root(const frh_report* report, int index, double* out_re, double* out_im,
                           double* out_modulus, double* out_argument) {
    if (!report) return bad_argument("null report");
    if (index < 0 || index >= static_cast<int>(report->oracle_roots.size()))
        return bad_argument("root index out of range");
    const auto& r = report->oracle_roots[index];
    if (out_re) *out_re = r.re;
    if (out_im) *out_im = r.im;
    if (out_modulus) *out_modulus = r.modulus;
    if (out_argument) *out_argument = r.argument;
    return FRH_OK;
}

frh_status frh_report_sector_counts(const frh_report* report, int* out_stable, int* out_critical,
                                    int* out_unstable, int* out_zero) {
    if (!report) return bad_argument("null report");
    if (out_stable) *out_stable = report->sectors.n_stable;
    if (out_critical) *out_critical = report->sectors.n_critical;
    if (out_unstable) *out_unstable = report->sectors.n_unstable;
    if (out_zero) *out_zero = report->sectors.n_zero;
    return FRH_OK;
}

frh_status frh_scan(const frh_system* sys, const char* axis1, const char* axis2,
                    const double* mu_fixed, double x0, double x1, double y0, double y1, int res1,
                    int res2, int threads, frh_scan_result** out) {
    if (!sys || !axis1 || !axis2 || !mu_fixed || !out) return bad_argument("null pointer argument");
    return guarded([&] {
        const auto& s = sys->sys;
        const int k = static_cast<int>(s.params().size());
        std::vector<double> fixed(mu_fixed, mu_fixed + k);
        auto points = grid_scan(s, s.param_index(axis1), s.param_index(axis2), std::move(fixed),
                                ScanWindow{x0, x1, y0, y1}, res1, res2, threads);
        *out = new frh_scan_result{std::move(points), k};
    });
}

void frh_scan_free(frh_scan_result* scan) { delete scan; }

int frh_scan_size(const frh_scan_result* scan) {
    return scan ? static_cast<int>(scan->points.size()) : 0;
}

frh_status frh_scan_point(const frh_scan_result* scan, int index, double* out_mu, double* out_r0,
                          frh_transversality* out_transversality) {
    if (!scan) return bad_argument("null scan");
    if (index < 0 || index >= static_cast<int>(scan->points.size()))
        return bad_argument("scan index out of range");
    const auto& pt = scan->points[index];
    if (out_mu) std::memcpy(out_mu, pt.mu.data(), pt.mu.size() * sizeof(double));
    if (out_r0) *out_r0 = pt.critical_radius;
    if (out_transversality) *out_transversality = to_c(pt.transversality);
    return FRH_OK;
}

frh_status frh_refine_segment(const frh_system* sys, const double* mu_a, const double* mu_b,
                              double* out_mu, double* out_r0,
                              frh_transversality* out_transversality) {
    if (!sys || !mu_a || !mu_b) return bad_argument("null pointer argument");
    return guarded([&] {
        const auto& s = sys->sys;
        const std::size_t k = s.params().size();
        auto pt = refine_on_segment(s, {mu_a, k}, {mu_b, k});
        if (out_mu) std::memcpy(out_mu, pt.mu.data(), pt.mu.size() * sizeof(double));
        if (out_r0) *out_r0 = pt.critical_radius;
        if (out_transversality) *out_transversality = to_c(pt.transversality);
    });
}

frh_status frh_transversality_test(const frh_system* sys, const double* mu, double* out_gradient,
                                   frh_definiteness* out_hessian,
                                   frh_transversality* out_verdict) {
    if (!sys || !mu) return bad_argument("null pointer argument");
    return guarded([&] {
        const auto& s = sys->sys;
        auto res = transversality(s, {mu, s.params().size()});
        if (out_gradient)
            std::memcpy(out_gradient, res.gradient.data(), res.gradient.size() * sizeof(double));
        if (out_hessian)
            *out_hessian = res.hessian_verdict ? to_c(*res.hessian_verdict) : FRH_HESS_NOT_COMPUTED;
        if (out_verdict) *out_verdict = to_c(res.verdict);
    });
}

frh_status frh_find_degenerate(const frh_system* sys, const double* guess, double* out_mu,
                               frh_definiteness* out_hessian, double* out_top_minor) {
    if (!sys || !guess) return bad_argument("null pointer argument");
    return guarded([&] {
        const auto& s = sys->sys;
        auto st = find_degenerate(s, {guess, s.params().size()});
        if (out_mu) std::memcpy(out_mu, st.location.data(), st.location.size() * sizeof(double));
        if (out_hessian) *out_hessian = to_c(st.hessian_verdict);
        if (out_top_minor) *out_top_minor = st.field_value;
    });
}

frh_status frh_simulate(const frh_system* sys, const double* mu, const double* x0,
                        const double* v0, double horizon, double step, frh_trajectory** out) {
    if (!sys || !mu || !x0 || !out) return bad_argument("null pointer argument");
    return guarded([&] {
        const auto& s = sys->sys;
        std::span<const double> v0_span = v0 ? std::span<const double>(v0, 3)
                                             : std::span<const double>();
        auto tr = simulate_demo(s, {mu, s.params().size()}, {x0, 3}, v0_span, horizon, step);
        *out = new frh_trajectory{std::move(tr)};
    });
}

void frh_trajectory_free(frh_trajectory* trajectory) { delete trajectory; }

int frh_trajectory_size(const frh_trajectory* trajectory) {
    return trajectory ? trajectory->tr.size() : 0;
}

int frh_trajectory_dim(const frh_trajectory* trajectory) {
    return trajectory ? trajectory->tr.dim : 0;
}

frh_status frh_trajectory_sample(const frh_trajectory* trajectory, int index, double* out_t,
                                 double* out_x) {
    if (!trajectory) return bad_argument("null trajectory");
    if (index < 0 || index >= trajectory->tr.size())
        return bad_argument("trajectory index out of range");
    if (out_t) *out_t = trajectory->tr.time_at(index);
    if (out_x) {
        auto x = trajectory->tr.state_at(index);
        std::memcpy(out_x, x.data(), x.size() * sizeof(double));
    }
    return FRH_OK;
}

int frh_trajectory_blowup_index(const frh_trajectory* trajectory) {
    return trajectory ? trajectory->tr.blowup_index : -1;
}

double frh_trajectory_max_residual(const frh_trajectory* trajectory) {
    return trajectory ? trajectory->tr.max_residual : 0.0;
}

frh_status frh_oscillation_metric(const frh_trajectory* trajectory, double tail_fraction,
                                  double* out) {
    if (!trajectory || !out) return bad_argument("null pointer argument");
    return guarded([&] { *out = oscillation_metric(trajectory->tr, tail_fraction); });
}

frh_status frh_selftest(frh_log_fn log, void* user, int* out_failed) {
    return guarded([&] {
        int failed = selftest([&](const std::string& line) {
            if (log) log(line.c_str(), user);
        });
        if (out_failed) *out_failed = failed;
    });
}

} // extern "C"
