#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "demo.hpp"
#include "expr.hpp"
#include "hurwitz.hpp"
#include "poly.hpp"
#include "tolerance.hpp"

namespace frhopf {

/// A family of characteristic polynomials over named bifurcation
/// parameters: coefficients come either from the built-in demo system or
/// from user expressions in (parameter names, alpha). Evaluation at any
/// finite parameter point yields a valid CharPoly.
class ParamSystem {
public:
    static ParamSystem demo(double alpha, const std::optional<std::array<double, 9>>& k = {});
    static ParamSystem from_expressions(std::vector<std::string> coeff_sources,
                                        std::vector<std::string> param_names, double alpha);

    int degree() const { return degree_; }
    double alpha() const { return alpha_; }
    const std::vector<std::string>& params() const { return params_; }
    int param_index(const std::string& name) const; // throws AxisUnknown

    bool has_vector_field() const { return std::holds_alternative<DemoSystem>(impl_); }
    const DemoSystem& demo_system() const { return std::get<DemoSystem>(impl_); }

    CharPoly char_poly(std::span<const double> mu) const;

private:
    ParamSystem() = default;

    int degree_ = 0;
    double alpha_ = 0.0;
    std::vector<std::string> params_;
    std::variant<DemoSystem, std::vector<expr::NodePtr>> impl_;
};

/// One evaluation of the full criterion pipeline at a parameter point.
struct CriterionResult {
    CharPoly poly;
    MinorSequence minors;
    StabilityVerdict verdict;
};

/// charpoly -> rotate -> matrix -> minors -> verdict, deterministic in its
/// inputs. Throws DegenerateMinor like classify() when `strict` is set.
CriterionResult eval_criterion(const ParamSystem& sys, std::span<const double> mu,
                               const TolerancePolicy& tol = {}, bool strict = true);

/// The top minor as a scalar field over the parameters, the quantity whose
/// zero set carries the bifurcation surface.
double top_minor_value(const ParamSystem& sys, std::span<const double> mu);

/// Same field packaged for iterative callers: evaluation failures
/// (overflowed coefficients, expression domain errors) come back as NaN so
/// line searches can retreat instead of unwinding.
std::function<double(std::span<const double>)> top_minor_field(const ParamSystem& sys);

} // namespace frhopf
