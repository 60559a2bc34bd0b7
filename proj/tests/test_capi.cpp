// Exercises the shared-library surface exactly as an external caller
// would: only frhopf.h, opaque handles and status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <frhopf.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct Demo {
    frh_system* sys = nullptr;
    Demo(double alpha = 1.1) { REQUIRE(frh_system_create_demo(alpha, nullptr, &sys) == FRH_OK); }
    ~Demo() { frh_system_free(sys); }
};

} // namespace

TEST_CASE("version and tolerance snapshot") {
    CHECK(std::string(frh_version()) == "0.1.0");
    frh_tolerances tol;
    frh_default_tolerances(&tol);
    CHECK(tol.minor_rel == 1e-9);
    CHECK(tol.pivot_tol == 1e-7);
    CHECK(tol.arg_tol == 1e-7);
    CHECK(tol.zero_modulus == 1e-10);
    CHECK(tol.refine_rel == 1e-12);
}

TEST_CASE("demo system accessors") {
    Demo demo;
    CHECK(frh_system_degree(demo.sys) == 3);
    CHECK(frh_system_param_count(demo.sys) == 2);
    CHECK(std::string(frh_system_param_name(demo.sys, 0)) == "mu1");
    CHECK(std::string(frh_system_param_name(demo.sys, 1)) == "mu2");
    CHECK(frh_system_alpha(demo.sys) == 1.1);
    CHECK(frh_system_has_vector_field(demo.sys) == 1);

    const double mu[2] = {2.0, 2.0};
    double coeffs[3];
    REQUIRE(frh_system_coefficients(demo.sys, mu, coeffs) == FRH_OK);
    CHECK(coeffs[0] == 8.0);
}

TEST_CASE("alpha validation surfaces as FRH_ERR_ALPHA_RANGE") {
    frh_system* sys = nullptr;
    CHECK(frh_system_create_demo(2.4, nullptr, &sys) == FRH_ERR_ALPHA_RANGE);
    CHECK(sys == nullptr);
    CHECK(std::string(frh_last_error()).find("alpha") != std::string::npos);
}

TEST_CASE("expression systems: creation and error codes") {
    const char* ok_exprs[1] = {"mu1 + alpha"};
    const char* params[1] = {"mu1"};
    frh_system* sys = nullptr;
    REQUIRE(frh_system_create_expr(1, ok_exprs, params, 1, 1.5, &sys) == FRH_OK);
    CHECK(frh_system_degree(sys) == 1);
    CHECK(frh_system_has_vector_field(sys) == 0);
    frh_system_free(sys);

    const char* bad_syntax[1] = {"sin(mu1"};
    CHECK(frh_system_create_expr(1, bad_syntax, params, 1, 1.5, &sys) == FRH_ERR_SYNTAX);
    const char* bad_func[1] = {"sinc(mu1)"};
    CHECK(frh_system_create_expr(1, bad_func, params, 1, 1.5, &sys) == FRH_ERR_UNKNOWN_FUNCTION);
    const char* unbound[1] = {"mu1 + rogue"};
    CHECK(frh_system_create_expr(1, unbound, params, 1, 1.5, &sys) ==
          FRH_ERR_UNBOUND_IDENTIFIER);
}

TEST_CASE("classify through the C API") {
    Demo demo;
    const double mu[2] = {2.0, 2.0};
    frh_report* report = nullptr;
    REQUIRE(frh_classify(demo.sys, mu, &report) == FRH_OK);
    CHECK(frh_report_verdict(report) == FRH_STABLE);
    CHECK(frh_report_degree(report) == 3);

    double leading[3], aux = 0.0;
    REQUIRE(frh_report_minors(report, leading, &aux) == FRH_OK);
    CHECK(leading[0] == doctest::Approx(8.0 * std::sin(0.55 * 3.14159265358979)).epsilon(1e-6));

    CHECK(std::isnan(frh_report_critical_radius(report)));
    double re, im;
    CHECK(frh_report_critical_pair(report, &re, &im) == FRH_ERR_NOT_CRITICAL);

    CHECK(frh_report_root_count(report) == 3);
    int stable = 0, critical = 0, unstable = 0, zero = 0;
    REQUIRE(frh_report_sector_counts(report, &stable, &critical, &unstable, &zero) == FRH_OK);
    CHECK(stable == 3);
    frh_report_free(report);
}

TEST_CASE("classify: Hopf candidate carries radius and pair") {
    // coefficients of (lambda + 1)(lambda^2 - 2 cos(0.55 pi) lambda + 1)
    const double theta = 0.55 * 3.141592653589793;
    const double a = 1.0 - 2.0 * std::cos(theta);
    char buf1[64], buf2[64];
    snprintf(buf1, sizeof buf1, "%.17g", a);
    snprintf(buf2, sizeof buf2, "%.17g", a);
    const char* exprs[3] = {buf1, buf2, "1"};
    frh_system* sys = nullptr;
    REQUIRE(frh_system_create_expr(3, exprs, nullptr, 0, 1.1, &sys) == FRH_OK);

    frh_report* report = nullptr;
    // a parameterless system accepts a null mu; a parameterized one must not
    Demo demo;
    REQUIRE(frh_classify(demo.sys, nullptr, &report) == FRH_ERR_BAD_ARGUMENT);
    REQUIRE(frh_classify(sys, nullptr, &report) == FRH_OK);
    CHECK(frh_report_verdict(report) == FRH_HOPF_CANDIDATE);
    CHECK(frh_report_critical_radius(report) == doctest::Approx(1.0).epsilon(1e-6));
    double re = 0, im = 0;
    REQUIRE(frh_report_critical_pair(report, &re, &im) == FRH_OK);
    CHECK(re == doctest::Approx(std::cos(theta)).epsilon(1e-9));
    CHECK(im == doctest::Approx(std::sin(theta)).epsilon(1e-9));
    frh_report_free(report);
    frh_system_free(sys);
}

TEST_CASE("scan: nonempty demo window, deterministic, points re-classify as Hopf") {
    Demo demo;
    const double fixed[2] = {0.0, 0.0};
    frh_scan_result* scan = nullptr;
    REQUIRE(frh_scan(demo.sys, "mu1", "mu2", fixed, 0.5, 2.5, -2.0, 2.0, 25, 25, 2, &scan) ==
            FRH_OK);
    const int count = frh_scan_size(scan);
    CHECK(count > 0);

    frh_scan_result* scan2 = nullptr;
    REQUIRE(frh_scan(demo.sys, "mu1", "mu2", fixed, 0.5, 2.5, -2.0, 2.0, 25, 25, 1, &scan2) ==
            FRH_OK);
    REQUIRE(frh_scan_size(scan2) == count);

    for (int i = 0; i < count; ++i) {
        double mu[2], mu2[2], r0 = 0, r0b = 0;
        frh_transversality tv, tvb;
        REQUIRE(frh_scan_point(scan, i, mu, &r0, &tv) == FRH_OK);
        REQUIRE(frh_scan_point(scan2, i, mu2, &r0b, &tvb) == FRH_OK);
        CHECK(mu[0] == mu2[0]);
        CHECK(mu[1] == mu2[1]);
        CHECK(r0 == r0b);
        CHECK(r0 > 0.0);

        frh_report* report = nullptr;
        REQUIRE(frh_classify(demo.sys, mu, &report) == FRH_OK);
        CHECK(frh_report_verdict(report) == FRH_HOPF_CANDIDATE);
        frh_report_free(report);
    }
    frh_scan_free(scan2);
    frh_scan_free(scan);
}

TEST_CASE("scan: bad axis and degenerate window") {
    Demo demo;
    const double fixed[2] = {0.0, 0.0};
    frh_scan_result* scan = nullptr;
    CHECK(frh_scan(demo.sys, "mu1", "nope", fixed, 0, 1, 0, 1, 4, 4, 1, &scan) ==
          FRH_ERR_AXIS_UNKNOWN);
    CHECK(frh_scan(demo.sys, "mu1", "mu2", fixed, 1, 1, 0, 1, 4, 4, 1, &scan) ==
          FRH_ERR_WINDOW_DEGENERATE);
}

TEST_CASE("refine segment and transversality through the C API") {
    Demo demo;
    const double a[2] = {2.3, -2.0};
    const double b[2] = {3.3, -2.0};
    double mu[2], r0 = 0.0;
    frh_transversality tv = FRH_INCONCLUSIVE;
    REQUIRE(frh_refine_segment(demo.sys, a, b, mu, &r0, &tv) == FRH_OK);
    CHECK(r0 > 0.0);
    CHECK(tv == FRH_TRANSVERSAL);

    double grad[2];
    frh_definiteness hess = FRH_HESS_NOT_COMPUTED;
    frh_transversality verdict = FRH_INCONCLUSIVE;
    REQUIRE(frh_transversality_test(demo.sys, mu, grad, &hess, &verdict) == FRH_OK);
    CHECK(verdict == FRH_TRANSVERSAL);
    CHECK(hess == FRH_HESS_NOT_COMPUTED);

    const double stable_a[2] = {2.0, 2.0};
    const double stable_b[2] = {3.0, 2.0};
    CHECK(frh_refine_segment(demo.sys, stable_a, stable_b, mu, &r0, &tv) ==
          FRH_ERR_NO_SIGN_CHANGE);
}

TEST_CASE("find_degenerate through the C API") {
    Demo demo;
    const double guess[2] = {3.8, -4.2};
    double mu0[2];
    frh_definiteness hess = FRH_HESS_NOT_COMPUTED;
    double top = 0.0;
    REQUIRE(frh_find_degenerate(demo.sys, guess, mu0, &hess, &top) == FRH_OK);
    CHECK(std::abs(mu0[0] - 3.817533638) < 1e-4);
    CHECK(std::abs(mu0[1] + 4.170716050) < 1e-4);
    CHECK(hess == FRH_HESS_NEG_DEFINITE);
}

TEST_CASE("simulation through the C API") {
    Demo demo;
    const double mu[2] = {2.0, 2.0};
    const double x0[3] = {0.1, 0.1, 0.1};
    frh_trajectory* tr = nullptr;
    REQUIRE(frh_simulate(demo.sys, mu, x0, nullptr, 20.0, 0.05, &tr) == FRH_OK);
    CHECK(frh_trajectory_dim(tr) == 3);
    CHECK(frh_trajectory_size(tr) == 401);
    CHECK(frh_trajectory_blowup_index(tr) == -1);

    double t = -1.0, x[3];
    REQUIRE(frh_trajectory_sample(tr, 0, &t, x) == FRH_OK);
    CHECK(t == 0.0);
    CHECK(x[0] == 0.1);

    double metric = 0.0;
    REQUIRE(frh_oscillation_metric(tr, 0.25, &metric) == FRH_OK);
    CHECK(metric >= 0.0);
    CHECK(frh_oscillation_metric(tr, 0.0, &metric) == FRH_ERR_BAD_ARGUMENT);
    frh_trajectory_free(tr);

    CHECK(frh_simulate(demo.sys, mu, x0, nullptr, 200.0, 100.0, &tr) == FRH_ERR_STEP_TOO_LARGE);
}

TEST_CASE("selftest through the C API") {
    int failed = -1;
    std::vector<std::string> lines;
    auto log = [](const char* line, void* user) {
        static_cast<std::vector<std::string>*>(user)->push_back(line);
    };
    REQUIRE(frh_selftest(log, &lines, &failed) == FRH_OK);
    CHECK(failed == 0);
    CHECK(lines.size() >= 5);
    for (const auto& l : lines) CHECK(l.rfind("ok", 0) == 0);
}
