#include "core/metric.hpp"
#include "core/strip_metric.hpp"

#include <doctest.h>

using namespace samc;

namespace {
Vec2<Rational> pt(const char* a, const char* b) {
    return Vec2<Rational>{parse_rational(a), parse_rational(b)};
}
}  // namespace

TEST_CASE("d_strip pinned values") {
    // both gaps within x1/2: max branch
    CHECK(d_strip(pt("4/5", "1/10"), pt("3/5", "3/10")) == Rational(1, 5));
    // first-coordinate gap 3/5 > 2/5: cap branch x1/2 with the larger x1
    CHECK(d_strip(pt("4/5", "0"), pt("1/5", "0")) == Rational(2, 5));
    // swap clause gives the same value
    CHECK(d_strip(pt("1/5", "0"), pt("4/5", "0")) == Rational(2, 5));
    CHECK(d_strip(pt("1/3", "5"), pt("1/3", "5")) == Rational(0));
}

TEST_CASE("phi pinned values and domain") {
    CHECK(phi(Rational(1)) == Rational(0));
    CHECK(phi(Rational(1, 2)) == Rational(-1));
    CHECK(phi(Rational(1, 1000)) == Rational(-999));
    CHECK_THROWS_AS(phi(Rational(0)), domain_error);
    CHECK_THROWS_AS(phi(Rational(-1)), domain_error);
}

TEST_CASE("phi is strictly increasing on sampled points") {
    Rational prev = phi(make_rational(1, 64));
    for (long k = 2; k <= 64; ++k) {
        Rational cur = phi(make_rational(k, 64));
        CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("twisted metric pinned values") {
    TwistFn<Rational> tw;
    // twisted points (1,0) and (1/2,0); cap branch gives 1/2
    CHECK(d_strip_twisted(pt("1", "0"), pt("1/2", "1"), tw) == Rational(1, 2));
    // equal x1 means the twist cancels
    Vec2<Rational> a = pt("1/3", "2"), b = pt("1/3", "7/2");
    CHECK(d_strip_twisted(a, b, tw) == d_strip(a, b));
    CHECK(d_strip_twisted(pt("1", "0"), pt("1", "0"), tw) == Rational(0));
}

TEST_CASE("twisted metric equals d_strip after the shear, pointwise") {
    TwistFn<Rational> tw;
    for (int i = 0; i < 500; ++i) {
        Box<Rational> box{Rational(0), Rational(1), Rational(-2), Rational(2)};
        Vec2<Rational> p = sample_point<Rational>(SpaceKind::strip, box, 77, 1, uint64_t(i));
        Vec2<Rational> q = sample_point<Rational>(SpaceKind::strip, box, 77, 2, uint64_t(i));
        CHECK(d_strip_twisted(p, q, tw) == d_strip(twist_point(p, tw), twist_point(q, tw)));
    }
}

TEST_CASE("local max form near the diagonal") {
    // |dx1| <= min(x1,x1')/2 and |dx2| <= min/2 force the max branch
    for (int i = 0; i < 2000; ++i) {
        Box<Rational> box{Rational(1, 4), Rational(1), Rational(-1), Rational(1)};
        Vec2<Rational> p = sample_point<Rational>(SpaceKind::plane, box, 99, 1, uint64_t(i));
        Rational h = lattice_to_unit<Rational>(sample_lattice(99, 3, uint64_t(i)));
        Rational v = lattice_to_unit<Rational>(sample_lattice(99, 4, uint64_t(i)));
        Rational m = min_val(p.x1, Rational(1));
        Vec2<Rational> q{p.x1 + (h - Rational(1, 2)) * m / 2, p.x2 + (v - Rational(1, 2)) * m / 2};
        if (!(Rational(0) < q.x1 && q.x1 <= Rational(1))) continue;
        Rational lo = min_val(p.x1, q.x1);
        if (!(abs_val<Rational>(p.x1 - q.x1) <= lo / 2)) continue;
        if (!(abs_val<Rational>(p.x2 - q.x2) <= lo / 2)) continue;
        CHECK(d_strip(p, q) ==
              max_val(abs_val<Rational>(p.x1 - q.x1), abs_val<Rational>(p.x2 - q.x2)));
    }
}

TEST_CASE("d_strip never exceeds max(x1,x1')/2, with equality on the cap branch") {
    for (int i = 0; i < 2000; ++i) {
        Box<Rational> box{Rational(0), Rational(1), Rational(-3), Rational(3)};
        Vec2<Rational> p = sample_point<Rational>(SpaceKind::strip, box, 13, 1, uint64_t(i));
        Vec2<Rational> q = sample_point<Rational>(SpaceKind::strip, box, 13, 2, uint64_t(i));
        Rational cap = max_val(p.x1, q.x1) / 2;
        Rational d = d_strip(p, q);
        CHECK(d <= cap);
        bool in_branch = abs_val<Rational>(p.x1 - q.x1) <= cap &&
                         abs_val<Rational>(p.x2 - q.x2) <= cap;
        if (!in_branch) CHECK(d == cap);
    }
}

TEST_CASE("triangle inequality holds exactly on a coarse exhaustive strip grid") {
    // x1 in {1/8..1}, x2 in {-1..1 step 1/4}: all ordered triples
    std::vector<Vec2<Rational>> pts;
    for (long i = 1; i <= 8; ++i)
        for (long j = -4; j <= 4; ++j) pts.push_back({make_rational(i, 8), make_rational(j, 4)});
    std::vector<std::vector<Rational>> d(pts.size(), std::vector<Rational>(pts.size()));
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = 0; b < pts.size(); ++b) d[a][b] = d_strip(pts[a], pts[b]);
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = 0; b < pts.size(); ++b)
            for (size_t c = 0; c < pts.size(); ++c)
                if (!(d[a][c] <= d[a][b] + d[b][c])) {
                    FAIL("triangle violation at indices ", a, ",", b, ",", c);
                }
    CHECK(true);
}
