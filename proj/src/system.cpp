#include "system.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace frhopf {

ParamSystem ParamSystem::demo(double alpha, const std::optional<std::array<double, 9>>& k) {
    require_alpha(alpha);
    ParamSystem s;
    s.degree_ = 3;
    s.alpha_ = alpha;
    s.params_ = {"mu1", "mu2"};
    DemoSystem d;
    if (k) d.k = *k;
    s.impl_ = d;
    return s;
}

ParamSystem ParamSystem::from_expressions(std::vector<std::string> coeff_sources,
                                          std::vector<std::string> param_names, double alpha) {
    require_alpha(alpha);
    if (coeff_sources.empty())
        throw Error(ErrorCode::BadArgument, "at least one coefficient expression is required");
    for (const auto& p : param_names) {
        if (p == "alpha" || p == "pi")
            throw Error(ErrorCode::BadArgument, "'" + p + "' is reserved and cannot be a parameter");
        for (const auto& q : param_names)
            if (&p != &q && p == q)
                throw Error(ErrorCode::BadArgument, "duplicate parameter name '" + p + "'");
    }

    ParamSystem s;
    s.degree_ = static_cast<int>(coeff_sources.size());
    s.alpha_ = alpha;
    s.params_ = std::move(param_names);

    std::vector<std::string> bindable = s.params_;
    bindable.push_back("alpha");
    std::vector<expr::NodePtr> asts;
    asts.reserve(coeff_sources.size());
    for (const auto& src : coeff_sources) {
        auto ast = expr::parse(src);
        expr::bind_check(ast, bindable);
        asts.push_back(std::move(ast));
    }
    s.impl_ = std::move(asts);
    return s;
}

int ParamSystem::param_index(const std::string& name) const {
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i] == name) return static_cast<int>(i);
    throw Error(ErrorCode::AxisUnknown, "unknown parameter '" + name + "'");
}

CharPoly ParamSystem::char_poly(std::span<const double> mu) const {
    if (mu.size() != params_.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(params_.size()) + " parameter values, got " +
                        std::to_string(mu.size()));
    for (double v : mu)
        if (!std::isfinite(v))
            throw Error(ErrorCode::BadArgument, "parameter values must be finite");

    if (auto* d = std::get_if<DemoSystem>(&impl_)) return d->char_poly(mu[0], mu[1]);

    const auto& asts = std::get<std::vector<expr::NodePtr>>(impl_);
    std::map<std::string, double> bindings;
    for (std::size_t i = 0; i < params_.size(); ++i) bindings[params_[i]] = mu[i];
    bindings["alpha"] = alpha_;
    std::vector<double> coeffs(asts.size());
    for (std::size_t i = 0; i < asts.size(); ++i) coeffs[i] = expr::eval(asts[i], bindings);
    return CharPoly(std::move(coeffs));
}

CriterionResult eval_criterion(const ParamSystem& sys, std::span<const double> mu,
                               const TolerancePolicy& tol, bool strict) {
    CriterionResult r;
    r.poly = sys.char_poly(mu);
    r.minors = minors(build_matrix(rotate(r.poly, sys.alpha())));
    r.verdict = classify_verdict(r.minors, tol);
    if (strict && r.verdict.degenerate_minor)
        throw Error(ErrorCode::DegenerateMinor,
                    "top two leading minors vanish together; critical radius undefined");
    return r;
}

double top_minor_value(const ParamSystem& sys, std::span<const double> mu) {
    auto poly = sys.char_poly(mu);
    auto m = minors(build_matrix(rotate(poly, sys.alpha())));
    return m.leading.back();
}

std::function<double(std::span<const double>)> top_minor_field(const ParamSystem& sys) {
    return [&sys](std::span<const double> mu) -> double {
        try {
            return top_minor_value(sys, mu);
        } catch (const Error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
}

} // namespace frhopf
