#pragma once

// Constructive compactification of strip descriptors: detect the finite bad
// set on the boundary edge, optionally reparametrize by an estimated gauge,
// blow up holes at the bad points, pull the metric back, and probe the
// extension to the full new boundary.

#include "core/badpoints.hpp"
#include "core/blowup.hpp"
#include "core/extension.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace samc {

using CurveFamilyBuilder = std::function<std::vector<Curve>(double /*x20*/)>;

// A strip descriptor whose first coordinate is rescaled so the given gauge
// becomes r(t) = t. The staircase is bridged by strictly increasing
// piecewise-linear interpolation (duplicate plateau values merged) so the
// change of coordinates is invertible; distances are unchanged on
// corresponding points.
Metric<double> gauge_reparam(const Metric<double>& m, const Gauge& g);

// The bridged staircase behind gauge_reparam, exposed so corresponding
// points can be computed: forward maps old first coordinates to new ones.
double gauge_bridge_forward(const Gauge& g, double t);
double gauge_bridge_inverse(const Gauge& g, double s);

// Scans the boundary edge {0} x [x2_lo, x2_hi] at the given resolution,
// flags bad points, and sharpens each flagged cluster down to
// resolution / 64 by local rescanning.
std::vector<Vec2<double>> detect_boundary_bad_set(
    const Metric<double>& m, double resolution,
    const CurveFamilyBuilder& family = default_curve_family, const DetectorOptions& opt = {});

struct CompactifyOptions {
    double eps = 0.125;      // hole radius; shrunk automatically to keep nesting
    double resolution = 1.0 / 64;
    int arc_samples = 128;   // boundary table resolution per blown-up point
    bool use_gauge = false;
    int t_exp_min = 6, t_exp_max = 20;
    DetectorOptions detector{};
    ProbeOptions probe{};
    CurveFamilyBuilder family = default_curve_family;
};

// A point of the compactified space: either an interior point of the
// blown-up domain or a boundary point (on a hole arc or on the surviving
// part of the old edge).
struct ExtPoint {
    Vec2<double> coords{};
    bool boundary = false;
    int hole = -1;      // >= 0 when on that hole's arc
    double alpha = 0.0;  // arc parameter when hole >= 0

    static ExtPoint interior(Vec2<double> p) { return ExtPoint{p, false, -1, 0.0}; }
};

class CompactificationResult;

// Distance on the compactified domain. Interior pairs evaluate the pullback
// formula exactly; pairs involving boundary points replace each boundary
// point by a deep point on its approach curve, so values carry an
// O(2^-table_t_exp) estimation error.
class ExtendedMetric {
  public:
    double dist(const ExtPoint& a, const ExtPoint& b) const;

  private:
    friend class CompactificationResult;
    friend CompactificationResult compactify_strip(const Metric<double>&,
                                                   const CompactifyOptions&);
    Metric<double> pulled_;
    std::vector<Vec2<double>> centers_;
    std::vector<double> eps_;
    double t_deep_ = 0x1p-40;
    Vec2<double> proxy(const ExtPoint& p) const;
};

class CompactificationResult {
  public:
    std::string input_name;
    Gauge gauge;  // identity when unused
    std::vector<Vec2<double>> bad_set;
    std::vector<double> eps;  // per bad point
    ExtensionVerdict verdict = ExtensionVerdict::inconclusive;
    std::string detail;
    std::vector<double> arc_params;                        // shared arc grid
    std::vector<std::vector<std::vector<double>>> tables;  // per hole: matrix
    ExtendedMetric extended;

    bool passed() const { return verdict == ExtensionVerdict::extends; }
    ExtPoint arc_point(int hole, double alpha) const;
    ExtPoint edge_point(double x20) const;

    // Serializes metadata, per-hole boundary matrices, the chain description
    // and the verdict into the directory.
    void write_directory(const std::string& dir) const;
};

CompactificationResult compactify_strip(const Metric<double>& m,
                                        const CompactifyOptions& options = {});

}  // namespace samc
