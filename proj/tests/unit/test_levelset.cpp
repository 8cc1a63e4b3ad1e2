#include "core/csvio.hpp"
#include "core/fixtures.hpp"
#include "core/grid.hpp"
#include "core/svg.hpp"

#include <doctest.h>

#include <cmath>

using namespace samc;

namespace {

Grid synthetic(int n, const std::function<double(double, double)>& f) {
    Grid g;
    g.region = Box<double>{0.0, 1.0, 0.0, 1.0};
    g.nx = g.ny = n;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            g.values.push_back(f(double(i) / (n - 1), double(j) / (n - 1)));
    return g;
}

}  // namespace

TEST_CASE("sample_grid: minimum sits at the base point") {
    Metric<double> m = make_strip_dX<double>();
    Box<double> region{1.0 / 64, 1.0, -1.0, 1.0};
    Grid g = sample_grid(m, {0.5, 0.0}, region, 64, 65);
    double min_v = 1e9;
    int min_i = -1, min_j = -1;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (g.at(i, j) < min_v) min_v = g.at(i, j), min_i = i, min_j = j;
    CHECK(min_v == 0.0);
    CHECK(g.x_at(min_i) == doctest::Approx(0.5));
    CHECK(g.y_at(min_j) == doctest::Approx(0.0));
}

TEST_CASE("sample_grid on the disk with the origin base is the radial field r/2") {
    Metric<double> m = make_disk_d<double>();
    Grid g = sample_grid(m, {0.0, 0.0}, Box<double>{0.0, 1.0, 0.0, 2.0}, 33, 33);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            CHECK(g.at(i, j) == doctest::Approx(g.x_at(i) / 2).epsilon(1e-12));
}

TEST_CASE("marching squares: constant field yields nothing") {
    Grid g = synthetic(16, [](double, double) { return 1.0; });
    CHECK(marching_squares(g, 0.5).empty());
    CHECK(marching_squares(g, 1.0).empty());
}

TEST_CASE("marching squares: x-coordinate field yields one vertical polyline") {
    Grid g = synthetic(32, [](double x, double) { return x; });
    auto polys = marching_squares(g, 0.40625);
    REQUIRE(polys.size() == 1);
    for (auto& [vx, vy] : polys[0].vertices) CHECK(vx == doctest::Approx(0.40625).epsilon(1e-12));
    SlopeFractions f = slope_classify(polys, 2.0);
    CHECK(f.vertical == doctest::Approx(1.0));
    CHECK(f.other == 0.0);
}

TEST_CASE("slope classifier: diagonal field and circular control") {
    Grid diag = synthetic(32, [](double x, double y) { return x + y; });
    SlopeFractions f = slope_classify(marching_squares(diag, 0.8), 2.0);
    CHECK(f.minus45 == doctest::Approx(1.0));

    LevelPolyline circle;
    circle.value = 1.0;
    for (int k = 0; k <= 256; ++k) {
        double a = 2 * M_PI * k / 256;
        circle.vertices.emplace_back(std::cos(a), std::sin(a));
    }
    SlopeFractions c = slope_classify({circle}, 2.0);
    CHECK(c.other > 0.5);
}

TEST_CASE("plateau detection") {
    Grid flat = synthetic(16, [](double, double) { return 0.25; });
    CHECK(plateau_detect(flat, 0.25, 1e-9) == 1.0);

    Metric<double> m = make_strip_dX<double>();
    Grid g = sample_grid(m, {0.5, 0.0}, Box<double>{1.0 / 512, 1.0, -1.0, 1.0}, 512, 512);
    // the cap branch of d_X paints the exact value 1/4 on an open region
    CHECK(plateau_detect(g, 0.25, 1e-9) > 0.05);
    // a regular level has measure zero up to grid-aligned hits
    CHECK(plateau_detect(g, 0.125, 1e-9) < 0.001);
}

TEST_CASE("disk level polylines are concentric for the origin base") {
    Metric<double> m = make_disk_d<double>();
    Grid g = sample_grid(m, {0.0, 0.0}, Box<double>{0.0, 1.0, 0.0, 2.0}, 257, 257);
    for (double v : {0.1, 0.25, 0.4}) {
        auto polys = marching_squares(g, v);
        REQUIRE_FALSE(polys.empty());
        double lo = 1e9, hi = -1e9;
        for (const auto& poly : polys)
            for (auto& [r, a] : poly.vertices) {
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        CHECK((hi - lo) / hi < 1e-3);
        CHECK(hi == doctest::Approx(2 * v).epsilon(1e-6));
    }
}

TEST_CASE("svg emission is byte-stable and handles the empty case") {
    SvgSpec spec;
    spec.title = "empty";
    std::string empty_svg = emit_svg({}, Box<double>{0, 1, -1, 1}, spec);
    CHECK(empty_svg.find("<svg") != std::string::npos);
    CHECK(empty_svg.find("</svg>") != std::string::npos);

    Grid g = synthetic(24, [](double x, double y) { return x + 0.3 * y; });
    auto polys = marching_squares(g, 0.5);
    std::string a = emit_svg(polys, g.region, spec);
    std::string b = emit_svg(polys, g.region, spec);
    CHECK(a == b);
    CHECK(a.find("polyline") != std::string::npos);
}

TEST_CASE("grid csv round-trips bit for bit") {
    Metric<double> m = make_sigma_fixture();
    Grid g = sample_grid(m, {0.5, 0.0}, Box<double>{1.0 / 16, 1.0, -1.0, 1.0}, 17, 9);
    Grid back = grid_from_csv(grid_csv(g));
    CHECK(back.nx == g.nx);
    CHECK(back.ny == g.ny);
    REQUIRE(back.values.size() == g.values.size());
    for (size_t i = 0; i < g.values.size(); ++i) CHECK(back.values[i] == g.values[i]);
}
