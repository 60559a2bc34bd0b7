#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "demo.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "oracles.hpp"

using namespace frhopf;
namespace ex = frhopf::expr;

TEST_CASE("parse: five-term coefficient expression") {
    auto ast = ex::parse("mu2 - k33 + 2*mu1 - k22 - k11");
    // left-associated subtraction chain: (((mu2 - k33) + 2*mu1) - k22) - k11
    REQUIRE(ast->kind == ex::NodeKind::Sub);
    CHECK(ast->rhs->name == "k11");
    CHECK(ast->lhs->kind == ex::NodeKind::Sub);
    CHECK(ast->lhs->lhs->kind == ex::NodeKind::Add);
    auto ids = ex::free_identifiers(ast);
    CHECK(ids.size() == 5);
}

TEST_CASE("parse/eval: exponent binds tighter than unary minus") {
    auto ast = ex::parse("2*sin(pi/2) - -1^2");
    CHECK(ex::eval(ast, {}) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(ex::eval(ex::parse("(-1)^2"), {}) == 1.0);
    CHECK(ex::eval(ex::parse("-1^2"), {}) == -1.0);
}

TEST_CASE("parse: syntax error carries the 1-based byte offset") {
    try {
        (void)ex::parse("sin(mu1");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        CHECK(e.offset() == 8);
    }
    try {
        (void)ex::parse(" sin(mu1");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.offset() == 9);
    }
}

TEST_CASE("parse: unknown function") {
    try {
        (void)ex::parse("sinc(mu1)");
        FAIL("expected UnknownFunction");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownFunction);
    }
}

TEST_CASE("bind_check: unbound identifier is a bind-time error") {
    auto ast = ex::parse("mu1 + rogue");
    CHECK_NOTHROW(ex::bind_check(ast, {"mu1", "rogue"}));
    try {
        ex::bind_check(ast, {"mu1", "alpha"});
        FAIL("expected UnboundIdentifier");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnboundIdentifier);
    }
}

TEST_CASE("eval: demo a1 at a reference parameter point") {
    auto ast = ex::parse("mu2 - k33 + 2*mu1 - k22 - k11");
    std::map<std::string, double> env{{"mu1", 2.0}, {"mu2", 2.0}, {"k11", 2.0},
                                      {"k22", -2.0}, {"k33", -2.0}};
    CHECK(ex::eval(ast, env) == 8.0);
}

TEST_CASE("eval: pi within one ulp and error taxonomy") {
    CHECK(ex::eval(ex::parse("pi"), {}) == std::numbers::pi);
    try {
        (void)ex::eval(ex::parse("1/(mu1-2)"), {{"mu1", 2.0}});
        FAIL("expected DivByZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvalDivByZero);
    }
    try {
        (void)ex::eval(ex::parse("sqrt(0-1)"), {});
        FAIL("expected NonFinite");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvalNonFinite);
    }
    try {
        (void)ex::eval(ex::parse("exp(10000)"), {});
        FAIL("expected NonFinite overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvalNonFinite);
    }
    try {
        (void)ex::eval(ex::parse("mu9"), {});
        FAIL("expected Unbound");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvalUnbound);
    }
}

TEST_CASE("eval: integer powers, including negative exponents") {
    CHECK(ex::eval(ex::parse("2^10"), {}) == 1024.0);
    CHECK(ex::eval(ex::parse("2^-2"), {}) == 0.25);
    try {
        (void)ex::eval(ex::parse("0^-1"), {});
        FAIL("expected DivByZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvalDivByZero);
    }
    try {
        (void)ex::parse("2^x");
        FAIL("expected SyntaxError: exponent must be an integer literal");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
    }
}

namespace {

// small generator of well-formed expressions for the round-trip property
std::string gen_expr(std::mt19937& rng, int depth);

std::string gen_atom(std::mt19937& rng, int depth) {
    switch (rng() % (depth > 0 ? 5 : 2)) {
        case 0: {
            double v = static_cast<double>(rng() % 1000) / 8.0;
            char buf[32];
            snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }
        case 1: {
            const char* names[] = {"mu1", "mu2", "alpha", "x_3", "pi"};
            return names[rng() % 5];
        }
        case 2:
            return "(" + gen_expr(rng, depth - 1) + ")";
        case 3: {
            const char* funcs[] = {"sin", "cos", "tan", "tanh", "exp", "abs"};
            return std::string(funcs[rng() % 6]) + "(" + gen_expr(rng, depth - 1) + ")";
        }
        default:
            return gen_atom(rng, depth - 1) + "^" + std::to_string(rng() % 5);
    }
}

std::string gen_unary(std::mt19937& rng, int depth) {
    if (rng() % 4 == 0) return "-" + gen_unary(rng, depth);
    return gen_atom(rng, depth);
}

std::string gen_expr(std::mt19937& rng, int depth) {
    std::string out = gen_unary(rng, depth);
    int terms = rng() % 3;
    for (int i = 0; i < terms; ++i) {
        const char* ops[] = {" + ", " - ", "*", "/"};
        out += ops[rng() % 4];
        out += gen_unary(rng, depth);
    }
    return out;
}

} // namespace

TEST_CASE("pretty_print round trip on fuzzed expressions") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        std::string source = gen_expr(rng, 3);
        ex::NodePtr ast;
        try {
            ast = ex::parse(source);
        } catch (const Error&) {
            continue; // generator can produce 0^-k style strings; parse-time rejects are fine
        }
        auto printed = ex::pretty_print(ast);
        auto reparsed = ex::parse(printed);
        if (!ex::structurally_equal(ast, reparsed)) {
            CAPTURE(source);
            CAPTURE(printed);
            CHECK(ex::structurally_equal(ast, reparsed));
        }
    }
}

TEST_CASE("demo_charpoly: reference point, decoupled point, random oracle check") {
    auto p = demo_charpoly(2.0, 2.0, 1.1);
    CHECK(p.coeffs[0] == 8.0);

    // all k = 0 decouples the system into three damped scalars
    std::array<double, 9> zero{};
    auto q = demo_charpoly(1.0, 1.0, 1.5, zero);
    CHECK(q.coeffs[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(q.coeffs[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(q.coeffs[2] == doctest::Approx(1.0).epsilon(1e-14));

    std::mt19937 rng(32);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
        std::array<double, 9> k;
        for (auto& v : k) v = val(rng);
        const double mu1 = val(rng), mu2 = val(rng);
        auto poly = demo_charpoly(mu1, mu2, 1.1, k);

        const double J[9] = {k[0] - mu1, k[1],       k[2],
                             k[3],       k[4] - mu1, k[5],
                             k[6],       k[7],       k[8] - mu2};
        auto ref = oracles::charpoly3_from_det(J);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(poly.coeffs[i] - ref[i]) <=
                  1e-10 * std::max(1.0, std::abs(ref[i])));
    }
}

TEST_CASE("demo_charpoly: alpha validation") {
    CHECK_THROWS_AS((void)demo_charpoly(1.0, 1.0, 2.5), Error);
}
