#pragma once

// Scalar field sampling and level-set extraction. Grids are sampled in the
// space's own coordinates (strip coordinates for disk metrics, so domains
// stay rectangular); Cartesian mapping happens only at render time.

#include "core/metric.hpp"

#include <string>
#include <vector>

namespace samc {

struct Grid {
    Box<double> region{};
    int nx = 0, ny = 0;
    std::vector<double> values;  // row-major, index = j * nx + i

    double x_at(int i) const {
        return region.x1_lo + (region.x1_hi - region.x1_lo) * double(i) / double(nx - 1);
    }
    double y_at(int j) const {
        return region.x2_lo + (region.x2_hi - region.x2_lo) * double(j) / double(ny - 1);
    }
    double at(int i, int j) const { return values[size_t(j) * size_t(nx) + size_t(i)]; }
};

struct LevelPolyline {
    double value = 0.0;
    std::vector<std::pair<double, double>> vertices;
    bool closed = false;
};

Grid sample_grid(const Metric<double>& m, const Vec2<double>& base, const Box<double>& region,
                 int nx, int ny);

// Standard cell-by-cell linear interpolation; saddle cells split by the cell
// center average.
std::vector<LevelPolyline> marching_squares(const Grid& g, double value);

struct SlopeFractions {
    double vertical = 0.0;
    double plus45 = 0.0;
    double minus45 = 0.0;
    double other = 0.0;
    double total_length = 0.0;
};

// Length-weighted classification of polyline segment directions.
SlopeFractions slope_classify(const std::vector<LevelPolyline>& polys, double tol_deg);

// Fraction of grid nodes whose value sits within tol of the level.
double plateau_detect(const Grid& g, double value, double tol);

std::string grid_csv(const Grid& g);
Grid grid_from_csv(const std::string& text);

}  // namespace samc
