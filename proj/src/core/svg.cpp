#include "core/svg.hpp"

#include "core/disk_metric.hpp"

#include <cmath>
#include <cstdio>

namespace samc {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string emit_svg(const std::vector<LevelPolyline>& polys, const Box<double>& region,
                     const SvgSpec& spec) {
    const double px = double(spec.size_px);
    Box<double> view = region;
    if (spec.disk_coords) view = Box<double>{-1.0, 1.0, -1.0, 1.0};
    double sx = px / (view.x1_hi - view.x1_lo);
    double sy = px / (view.x2_hi - view.x2_lo);

    // y-up: flip the second coordinate into SVG's y-down pixel space.
    auto map_x = [&](double x) { return (x - view.x1_lo) * sx; };
    auto map_y = [&](double y) { return px - (y - view.x2_lo) * sy; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<!-- coordinate convention: y-up, region [" + fmt(view.x1_lo) + "," +
           fmt(view.x1_hi) + "]x[" + fmt(view.x2_lo) + "," + fmt(view.x2_hi) + "] mapped to a " +
           std::to_string(spec.size_px) + "px viewbox -->\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.size_px) + "\" height=\"" + std::to_string(spec.size_px) +
           "\" viewBox=\"0 0 " + std::to_string(spec.size_px) + " " +
           std::to_string(spec.size_px) + "\">\n";
    if (!spec.title.empty()) out += "<title>" + spec.title + "</title>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes (domain frame).
    if (spec.disk_coords) {
        out += "<circle cx=\"" + fmt(map_x(0)) + "\" cy=\"" + fmt(map_y(0)) + "\" r=\"" +
               fmt(sx) + "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    } else {
        out += "<rect x=\"" + fmt(map_x(region.x1_lo)) + "\" y=\"" + fmt(map_y(region.x2_hi)) +
               "\" width=\"" + fmt((region.x1_hi - region.x1_lo) * sx) + "\" height=\"" +
               fmt((region.x2_hi - region.x2_lo) * sy) +
               "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }

    size_t color = 0;
    double last_value = std::nan("");
    for (const LevelPolyline& poly : polys) {
        if (poly.vertices.size() < 2) continue;
        if (!(poly.value == last_value)) {
            if (!std::isnan(last_value)) ++color;
            last_value = poly.value;
        }
        std::string pts;
        for (const auto& [vx, vy] : poly.vertices) {
            double cx = vx, cy = vy;
            if (spec.disk_coords) {
                auto [ex, ey] = to_cartesian(vx, vy);
                cx = ex, cy = ey;
            }
            if (!pts.empty()) pts += " ";
            pts += fmt(map_x(cx)) + "," + fmt(map_y(cy));
        }
        out += "<polyline fill=\"none\" stroke=\"" +
               std::string(kPalette[color % (sizeof kPalette / sizeof *kPalette)]) +
               "\" stroke-width=\"1.2\" points=\"" + pts + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace samc
