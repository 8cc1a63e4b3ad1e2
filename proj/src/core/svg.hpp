#pragma once

#include "core/grid.hpp"

#include <string>
#include <vector>

namespace samc {

struct SvgSpec {
    int size_px = 512;
    bool disk_coords = false;  // map (r, half-turns) vertices to Cartesian
    std::string title;
};

// SVG 1.1, y-up, byte-stable for identical inputs. The coordinate convention
// is documented in the output header comment.
std::string emit_svg(const std::vector<LevelPolyline>& polys, const Box<double>& region,
                     const SvgSpec& spec);

}  // namespace samc
