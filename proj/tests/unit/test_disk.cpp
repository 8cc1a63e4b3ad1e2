#include "core/conditions.hpp"
#include "core/disk_metric.hpp"
#include "core/rng.hpp"

#include <doctest.h>

using namespace samc;

namespace {

Vec2<Rational> pt(const char* a, const char* b) {
    return Vec2<Rational>{parse_rational(a), parse_rational(b)};
}

// Brute-force quotient over a wide shift window, the oracle guarding the
// three-shift reduction.
Rational brute_quotient(const Vec2<Rational>& b, const Vec2<Rational>& c, bool twisted) {
    TwistFn<Rational> tw;
    Rational best;
    bool first = true;
    for (long n = -10; n <= 10; ++n) {
        Vec2<Rational> shifted{c.x1, c.x2 + Rational(2 * n)};
        Rational v = twisted ? d_strip_twisted(b, shifted, tw) : d_strip(b, shifted);
        if (first || v < best) best = v, first = false;
    }
    return best;
}

}  // namespace

TEST_CASE("shift_reduce pinned values") {
    CHECK(shift_reduce(Rational(1, 10), Rational(19, 10)) == 1);
    // reduced gap |1/10 - 19/10 + 2| = 1/5
    CHECK(abs_val<Rational>(Rational(1, 10) - Rational(19, 10) + Rational(2)) == Rational(1, 5));
    CHECK(shift_reduce(Rational(3, 7), Rational(3, 7)) == 0);
    // tie |gap| = 1 both ways: smaller n wins, distance unaffected
    long n0 = shift_reduce(Rational(0), Rational(1));
    CHECK(n0 == 0);
    CHECK(abs_val<Rational>(Rational(0) - Rational(1) + Rational(2 * n0)) == Rational(1));
    CHECK(abs_val<Rational>(Rational(0) - Rational(1) + Rational(2 * (n0 + 1))) == Rational(1));
}

TEST_CASE("d_disk pinned values") {
    CHECK(d_disk(pt("0", "0"), pt("3/5", "7/5")) == Rational(3, 10));
    CHECK(d_disk(pt("3/5", "7/5"), pt("0", "0")) == Rational(3, 10));
    CHECK(d_disk(pt("4/5", "1/10"), pt("4/5", "19/10")) == Rational(1, 5));
    CHECK(d_disk(pt("1/2", "1"), pt("1/2", "1")) == Rational(0));
    CHECK(d_disk(pt("0", "0"), pt("0", "0")) == Rational(0));
}

TEST_CASE("d_disk_twisted pinned values") {
    TwistFn<Rational> tw;
    CHECK(d_disk_twisted(pt("0", "0"), pt("3/5", "1/3"), tw) == Rational(3, 10));
    // equal radii: twist cancels
    Vec2<Rational> a = pt("1", "0"), b = pt("1", "5/4");
    CHECK(d_disk_twisted(a, b, tw) == d_disk(a, b));
    CHECK(d_disk_twisted(b, b, tw) == Rational(0));
}

TEST_CASE("three-shift window matches the brute-force quotient") {
    Box<Rational> box{Rational(0), Rational(1), Rational(-6), Rational(6)};
    TwistFn<Rational> tw;
    for (int i = 0; i < 3000; ++i) {
        Vec2<Rational> b = sample_point<Rational>(SpaceKind::strip, box, 31, 1, uint64_t(i));
        Vec2<Rational> c = sample_point<Rational>(SpaceKind::strip, box, 31, 2, uint64_t(i));
        CHECK(d_disk(b, c) == brute_quotient(b, c, false));
        CHECK(d_disk_twisted(b, c, tw) == brute_quotient(b, c, true));
    }
}

TEST_CASE("well-definedness across fiber representatives") {
    Box<Rational> box{Rational(0), Rational(1), Rational(0), Rational(2)};
    TwistFn<Rational> tw;
    for (int i = 0; i < 500; ++i) {
        Vec2<Rational> b = sample_point<Rational>(SpaceKind::disk, box, 37, 1, uint64_t(i));
        Vec2<Rational> c = sample_point<Rational>(SpaceKind::disk, box, 37, 2, uint64_t(i));
        if (is_origin(b) || is_origin(c)) continue;
        Rational base = d_disk(b, c);
        Rational base_tw = d_disk_twisted(b, c, tw);
        for (long k = -2; k <= 2; ++k)
            for (long m = -2; m <= 2; ++m) {
                Vec2<Rational> bk{b.x1, b.x2 + Rational(2 * k)};
                Vec2<Rational> cm{c.x1, c.x2 + Rational(2 * m)};
                CHECK(d_disk(bk, cm) == base);
                CHECK(d_disk_twisted(bk, cm, tw) == base_tw);
            }
    }
}

TEST_CASE("condition (*) and its twisted variant hold on samples") {
    SampleConfig cfg;
    cfg.count = 4000;
    cfg.seed = 41;
    CHECK(check_condition_star<Rational>(cfg, false).passed());
    CHECK(check_condition_star<Rational>(cfg, true).passed());
}

TEST_CASE("condition (*) split: equality below gap 1, domination above") {
    // raw gap 201/100 saturates the direct distance at the cap; the reduced
    // representative lands in the max branch strictly below it
    Vec2<Rational> x = pt("1/2", "0"), y = pt("1/2", "201/100");
    CHECK(d_strip(x, y) == Rational(1, 4));
    CHECK(d_disk(x, y) == Rational(1, 100));
    CHECK(d_disk(x, y) < d_strip(x, y));
    // gap zero: equality
    Vec2<Rational> z = pt("2/3", "0");
    CHECK(d_disk(pt("1", "0"), z) == d_strip(pt("1", "0"), z));
}

TEST_CASE("condition (**): exact plateau once t < r'/2") {
    std::vector<Rational> ts;
    for (int i = 2; i <= 20; ++i) ts.push_back(Rational(1, 1L << i));
    for (const char* r : {"1/4", "3/5", "1"}) {
        Vec2<Rational> bprime = pt(r, "2/3");
        for (bool twisted : {false, true}) {
            ConvergenceReport rep = check_condition_starstar(bprime, ts, twisted, 8, 51);
            CHECK(rep.passed());
            bool plateau_row_seen = false;
            for (const ConvergenceRow& row : rep.rows)
                if (row.exact_zero) plateau_row_seen = true;
            CHECK(plateau_row_seen);
        }
    }
}

TEST_CASE("condition (**) rejects the origin as b'") {
    std::vector<Rational> ts{Rational(1, 4)};
    CHECK_THROWS_AS(check_condition_starstar(pt("0", "0"), ts, false, 4, 1), domain_error);
}

TEST_CASE("to_cartesian maps the canonical points") {
    auto [ox, oy] = to_cartesian(Vec2<Rational>{Rational(0), Rational(0)});
    CHECK(ox == 0.0);
    CHECK(oy == 0.0);
    auto [px, py] = to_cartesian(Vec2<Rational>{Rational(1), Rational(0)});
    CHECK(px == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(py == doctest::Approx(0.0).epsilon(1e-12));
    auto [hx, hy] = to_cartesian(Vec2<Rational>{Rational(1), Rational(1)});
    CHECK(hx == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(hy) < 1e-12);
}

TEST_CASE("disk points reject malformed inputs") {
    CHECK(in_disk(pt("0", "0")));
    CHECK_FALSE(in_disk(pt("0", "1/2")));   // non-canonical origin
    CHECK_FALSE(in_disk(pt("1/2", "2")));   // angle out of range
    CHECK_FALSE(in_disk(pt("3/2", "0")));   // radius out of range
}
