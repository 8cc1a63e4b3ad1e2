#include "core/isometry.hpp"

#include <doctest.h>

using namespace samc;

namespace {
Vec2<Rational> pt(const char* a, const char* b) {
    return Vec2<Rational>{parse_rational(a), parse_rational(b)};
}
}  // namespace

TEST_CASE("phi_strip_map pinned values") {
    auto w0 = IsometryWitness<Rational>::from_boundary_angle(Rational(0));
    CHECK(phi_strip_map(w0, pt("1", "5")) == pt("1", "5"));
    CHECK(phi_strip_map(w0, pt("1/2", "0")) == pt("1/2", "-1"));
    auto wh = IsometryWitness<Rational>::from_boundary_angle(Rational(1, 2));
    CHECK(phi_strip_map(wh, pt("1", "0")) == pt("1", "1/2"));
}

TEST_CASE("phi_disk_map pinned values") {
    auto w = IsometryWitness<Rational>::from_boundary_angle(Rational(0));
    CHECK(phi_disk_map(w, pt("1", "0")) == pt("1", "0"));
    CHECK(phi_disk_map(w, pt("1/2", "1/2")) == pt("1/2", "3/2"));
    CHECK(phi_disk_map(w, pt("0", "0")) == pt("0", "0"));
}

TEST_CASE("phi_disk_map sends (1,0) to b0 exactly on the rational boundary grid") {
    for (long k = 0; k < 16; ++k) {
        auto w = IsometryWitness<Rational>::from_boundary_angle(make_rational(k, 8));
        CHECK(phi_disk_map(w, pt("1", "0")) == w.b0);
    }
}

TEST_CASE("phi_disk_map preserves the radius, hence the origin rule transports") {
    auto w = IsometryWitness<Rational>::from_boundary_angle(Rational(3, 8));
    Box<Rational> box{Rational(0), Rational(1), Rational(0), Rational(2)};
    TwistFn<Rational> tw;
    for (int i = 0; i < 400; ++i) {
        Vec2<Rational> b = sample_point<Rational>(SpaceKind::disk, box, 19, 1, uint64_t(i));
        Vec2<Rational> image = phi_disk_map(w, b);
        CHECK(image.x1 == b.x1);
        CHECK(d_disk(pt("0", "0"), image) == d_disk_twisted(pt("0", "0"), b, tw));
    }
}

TEST_CASE("lift independence: representatives a and a+2 map to the same disk point") {
    auto w = IsometryWitness<Rational>::from_boundary_angle(Rational(5, 8));
    for (int i = 0; i < 200; ++i) {
        Box<Rational> box{Rational(0), Rational(1), Rational(0), Rational(2)};
        Vec2<Rational> b = sample_point<Rational>(SpaceKind::disk, box, 23, 1, uint64_t(i));
        if (is_origin(b)) continue;
        Vec2<Rational> up{b.x1, b.x2 + Rational(2)};
        CHECK(phi_disk_map(w, b) == phi_disk_map(w, up));
    }
}

TEST_CASE("verify_isometry finds no violations in exact mode") {
    SampleConfig cfg;
    cfg.count = 3000;
    cfg.seed = 71;
    for (long k : {0L, 3L, 11L}) {
        auto rep = verify_isometry(IsometryWitness<Rational>::from_boundary_angle(make_rational(k, 8)),
                                   cfg);
        CHECK(rep.passed());
    }
}

TEST_CASE("the orientation-reversing partner is an isometry too") {
    SampleConfig cfg;
    cfg.count = 2000;
    cfg.seed = 73;
    auto w = IsometryWitness<Rational>::from_boundary_angle(Rational(1, 4), true);
    CHECK(verify_isometry(w, cfg).passed());
}

TEST_CASE("reversed means reflecting outputs; reflecting inputs is not an isometry") {
    TwistFn<Rational> tw;
    auto w = IsometryWitness<Rational>::from_boundary_angle(Rational(0));
    CHECK(phi_disk_map(IsometryWitness<Rational>::from_boundary_angle(Rational(1, 4), true),
                       pt("1", "0")) == pt("1", "1/4"));

    // twisted gaps |d +- (phi - phi')| differ, so the input-side reflection
    // changes the distance on this pair
    auto wrong = [&](Vec2<Rational> b) {
        b.x2 = reduce_angle(Rational(-b.x2));
        return phi_disk_map(w, b);
    };
    Vec2<Rational> b = pt("1", "0"), c = pt("9/10", "1/10");
    CHECK(d_disk_twisted(b, c, tw) == Rational(1, 10));
    CHECK(d_disk(wrong(b), wrong(c)) == Rational(19, 90));
    CHECK(d_disk(phi_disk_map(w, b), phi_disk_map(w, c)) == Rational(1, 10));
}

TEST_CASE("winding profile pinned values") {
    auto w = IsometryWitness<double>::from_boundary_angle(0.0);
    auto rows = winding_profile(w, {1.0, 0.5, 1e-3});
    CHECK(rows[0].half_turns_analytic == 0.0);
    CHECK(rows[0].half_turns_accumulated == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rows[1].half_turns_analytic == doctest::Approx(1.0));
    CHECK(std::abs(rows[1].half_turns_accumulated - 1.0) < 1.0);
    CHECK(rows[2].half_turns_analytic == doctest::Approx(999.0));
    CHECK(std::abs(rows[2].half_turns_accumulated - 999.0) < 1.0);
}

TEST_CASE("winding is monotone and unbounded in decreasing x1") {
    auto w = IsometryWitness<double>::from_boundary_angle(0.25);
    std::vector<double> xs;
    for (int m : {10, 100, 1000}) xs.push_back(1.0 / (m + 2));
    auto rows = winding_profile(w, xs);
    double prev = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].half_turns_accumulated > prev);
        prev = rows[i].half_turns_accumulated;
    }
    CHECK(rows[0].half_turns_accumulated > 10);
    CHECK(rows[1].half_turns_accumulated > 100);
    CHECK(rows[2].half_turns_accumulated > 1000);
}

TEST_CASE("winding rejects x1 outside (0,1]") {
    auto w = IsometryWitness<double>::from_boundary_angle(0.0);
    CHECK_THROWS_AS(winding_profile(w, {0.0}), domain_error);
    CHECK_THROWS_AS(winding_profile(w, {1.5}), domain_error);
}

TEST_CASE("three seeded landmarks separate samples; one landmark collides") {
    SampleConfig cfg;
    cfg.count = 2000;
    cfg.seed = 2026;
    Metric<Rational> m;
    m.name = "disk.d";
    m.kind = SpaceKind::disk;
    m.exact_capable = true;
    m.region = Box<Rational>{Rational(0), Rational(1), Rational(0), Rational(2)};
    m.domain = [](const Vec2<Rational>& p) { return in_disk(p); };
    m.dist = [](const Vec2<Rational>& p, const Vec2<Rational>& q) { return d_disk(p, q); };

    auto three = default_landmarks<Rational>(cfg.seed, 3);
    REQUIRE(three.size() == 3);
    CHECK(is_origin(three[0]));
    auto fp = landmark_fingerprint(m, three, three[1]);
    CHECK(fp[1] == Rational(0));
    CHECK(landmark_injectivity_check(m, three, cfg).collisions == 0);

    auto one = default_landmarks<Rational>(cfg.seed, 1);
    REQUIRE(one.size() == 1);
    CHECK_FALSE(is_origin(one[0]));
    CHECK(landmark_injectivity_check(m, one, cfg).collisions > 0);
}
