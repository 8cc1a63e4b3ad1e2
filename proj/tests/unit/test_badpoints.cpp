#include "core/badpoints.hpp"
#include "core/fixtures.hpp"

#include <doctest.h>

using namespace samc;

namespace {
const double kInvSqrt2 = 0.7071067811865476;
}

TEST_CASE("curve_cauchy_check: compactifiable, divergent and constant curves") {
    auto t_list = dyadic_t_list(8, 20);
    // d_X along (t, 0): every pair is within max(t, t')/2 <= 2^-9
    double residual = curve_cauchy_check(make_strip_dX<double>(), line_curve(0.0, 0.0), t_list);
    CHECK(residual <= std::ldexp(1.0, -9));
    CHECK(residual > 0.0);
}

TEST_CASE("curve_cauchy_check flags the paper's simplest non-example") {
    Curve diverging;
    diverging.eval = [](double t) { return Vec2<double>{1.0 / t, 0.0}; };
    diverging.limit = {0.0, 0.0};
    diverging.label = "1/t";
    auto t_list = dyadic_t_list(1, 10);
    CHECK(curve_cauchy_check(make_euclid_plane(), diverging, t_list) > 100.0);

    Curve constant;
    constant.eval = [](double) { return Vec2<double>{0.5, 0.5}; };
    constant.limit = {0.5, 0.5};
    CHECK(curve_cauchy_check(make_euclid_plane(), constant, t_list) == 0.0);
}

TEST_CASE("curve_cauchy residual decays along deeper dyadic tails for every fixture") {
    for (const Metric<double>& m : {make_strip_dX<double>(), make_sigma_fixture(),
                                    make_annulus_fixture(), make_euclid_strip()}) {
        double prev = 1e9;
        for (int head : {4, 8, 12, 16}) {
            double r = curve_cauchy_check(m, line_curve(0.25, 0.5), dyadic_t_list(head, head + 8));
            CHECK(r < prev);
            prev = r;
        }
        CHECK(prev < 1e-3);
    }
}

TEST_CASE("limit_estimate pinned sigma values") {
    Metric<double> m = make_sigma_fixture();
    auto t_list = dyadic_t_list(6, 24);
    LimitEstimate est = limit_estimate(m, line_curve(0.0, 0.0), line_curve(0.0, 1.0), t_list);
    CHECK(est.defined);
    CHECK(est.value == doctest::Approx(kInvSqrt2).epsilon(1e-4));
    LimitEstimate same = limit_estimate(m, line_curve(0.0, 1.0), line_curve(0.0, 1.0), t_list);
    CHECK(same.value == 0.0);
}

TEST_CASE("limit_estimate pinned annulus ray values") {
    Metric<double> m = make_annulus_fixture();
    auto t_list = dyadic_t_list(6, 30);
    for (double c1 : {0.0, 1.0, -0.5})
        for (double c2 : {0.5, -1.0}) {
            LimitEstimate est =
                limit_estimate(m, line_curve(0.0, c1), line_curve(0.0, c2), t_list);
            double n1 = std::hypot(1.0, c1), n2 = std::hypot(1.0, c2);
            double expected = annulus_eps * std::hypot(1.0 / n1 - 1.0 / n2, c1 / n1 - c2 / n2);
            CHECK(est.value == doctest::Approx(expected).epsilon(1e-6));
        }
}

TEST_CASE("detect_bad on the sigma fixture") {
    Metric<double> m = make_sigma_fixture();
    auto t_list = dyadic_t_list(6, 20);
    BadnessReport at_origin = detect_bad(m, {0.0, 0.0}, default_curve_family(0.0), t_list);
    CHECK(at_origin.verdict_bad);
    CHECK(at_origin.witness_a == "line c=0");
    CHECK(at_origin.witness_b == "line c=1");
    CHECK(at_origin.limit == doctest::Approx(kInvSqrt2).epsilon(1e-3));

    BadnessReport away = detect_bad(m, {0.0, 0.5}, default_curve_family(0.5), t_list);
    CHECK_FALSE(away.verdict_bad);

    BadnessReport euclid =
        detect_bad(make_euclid_strip(), {0.0, 0.0}, default_curve_family(0.0), t_list);
    CHECK_FALSE(euclid.verdict_bad);
}

TEST_CASE("detect_bad is symmetric in the pair and survives reparametrization") {
    Metric<double> m = make_sigma_fixture();
    auto t_list = dyadic_t_list(6, 20);
    Curve a = line_curve(0.0, 0.0), b = line_curve(0.0, 1.0);
    LimitEstimate ab = limit_estimate(m, a, b, t_list);
    LimitEstimate ba = limit_estimate(m, b, a, t_list);
    CHECK(ab.value == ba.value);

    // the same witness through a square-root reparametrization of the clock
    Curve slow;
    slow.eval = [](double s) { return Vec2<double>{s * s, s * s}; };
    slow.limit = {0.0, 0.0};
    slow.label = "slow diagonal";
    Curve renorm = standard_reparam(slow);
    for (double t : {0.25, 0.0625, 1.0 / 1024}) {
        CHECK(renorm.eval(t).x1 == doctest::Approx(t).epsilon(1e-10));
        CHECK(renorm.eval(t).x2 == doctest::Approx(t).epsilon(1e-10));
    }
    LimitEstimate via = limit_estimate(m, a, renorm, t_list);
    CHECK(via.value == doctest::Approx(ab.value).epsilon(1e-6));
}

TEST_CASE("standard_reparam contract on a rational-speed curve") {
    Curve c;
    c.eval = [](double s) { return Vec2<double>{s * (2.0 + s) / 3.0, s}; };
    c.limit = {0.0, 0.0};
    Curve std_form = standard_reparam(c);
    for (double t : {0.5, 0.125, 1.0 / 4096}) {
        CHECK(std::abs(std_form.eval(t).x1 - t) < 1e-12);
    }
    Curve bad;
    bad.eval = [](double s) { return Vec2<double>{0.5, s}; };  // constant first coordinate
    bad.limit = {0.5, 0.0};
    CHECK_THROWS_AS(standard_reparam(bad), domain_error);
}

TEST_CASE("detect_r_bad: sigma lines are t-bad, sqrt separation is not") {
    Metric<double> m = make_sigma_fixture();
    auto t_list = dyadic_t_list(6, 20);
    BadnessReport rep = detect_r_bad(m, {0.0, 0.0}, default_curve_family(0.0),
                                     Gauge::identity(), t_list);
    CHECK(rep.verdict_bad);
    CHECK(rep.verdict_r_bad);
    CHECK(rep.ratio_sup <= 2.0 + 1e-9);

    // |gamma - gamma'| = sqrt(t): bad but the ratio sup diverges past the cap
    std::vector<Curve> fam;
    fam.push_back(line_curve(0.0, 0.0));
    Curve root;
    root.eval = [](double t) { return Vec2<double>{t, std::sqrt(t) * 0.9}; };
    root.limit = {0.0, 0.0};
    root.label = "sqrt separation";
    fam.push_back(root);
    BadnessReport root_rep = detect_r_bad(m, {0.0, 0.0}, fam, Gauge::identity(), t_list);
    CHECK(root_rep.verdict_bad);
    CHECK_FALSE(root_rep.verdict_r_bad);
    CHECK(root_rep.ratio_sup > 100.0);
}

TEST_CASE("r-badness is monotone: bad within a smaller gauge stays bad within a larger one") {
    Metric<double> m = make_sigma_fixture();
    auto t_list = dyadic_t_list(6, 20);
    Gauge identity = Gauge::identity();
    Gauge larger;  // r'(t) = 2^-bin >= t on each bin
    for (int bin = 0; bin <= 20; ++bin)
        larger.steps.push_back({std::ldexp(1.0, -bin), std::ldexp(1.0, -bin)});
    auto fam = default_curve_family(0.0);
    BadnessReport small_gauge = detect_r_bad(m, {0.0, 0.0}, fam, identity, t_list);
    BadnessReport large_gauge = detect_r_bad(m, {0.0, 0.0}, fam, larger, t_list);
    CHECK(small_gauge.verdict_r_bad);
    CHECK(large_gauge.verdict_r_bad);
    CHECK(large_gauge.ratio_sup <= small_gauge.ratio_sup + 1e-12);
}

TEST_CASE("estimate_gauge pinned values") {
    // a single sample: half the only envelope value
    Gauge single = estimate_gauge({{0.5, 0.25, 1.0}}, 0.01);
    CHECK(single(0.5) == doctest::Approx(0.125));

    // all samples with u >= 1: constant staircase at 1/2
    std::vector<GaugeSample> ones;
    for (int i = 1; i <= 10; ++i) ones.push_back({std::ldexp(1.0, -i), 1.0, 1.0});
    Gauge flat = estimate_gauge(ones, 0.01);
    for (int i = 1; i <= 10; ++i) CHECK(flat(std::ldexp(1.0, -i)) == doctest::Approx(0.5));

    CHECK_THROWS_AS(estimate_gauge({}, 0.01), domain_error);
    CHECK_THROWS_AS(estimate_gauge({{0.5, 0.25, 0.001}}, 0.01), domain_error);
}

TEST_CASE("estimate_gauge on sigma samples separates every recorded pair") {
    Metric<double> m = make_sigma_fixture();
    auto t_list = dyadic_t_list(1, 14);
    auto samples = collect_gauge_samples(m, default_curve_family(0.0), t_list);
    REQUIRE_FALSE(samples.empty());
    Gauge g = estimate_gauge(samples, 0.01);
    for (const GaugeSample& s : samples) CHECK(s.u > g(s.t));
    CHECK(g(std::ldexp(1.0, -10)) < 1e-2);
    // non-increasing toward 0
    double prev = g(1.0);
    for (int i = 1; i <= 14; ++i) {
        double cur = g(std::ldexp(1.0, -i));
        CHECK(cur <= prev + 1e-15);
        prev = cur;
    }
}
