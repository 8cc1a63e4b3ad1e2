#include "core/grid.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace samc {

Grid sample_grid(const Metric<double>& m, const Vec2<double>& base, const Box<double>& region,
                 int nx, int ny) {
    if (nx < 2 || ny < 2) throw domain_error("sample_grid: need at least a 2x2 grid");
    if (!m.domain(base)) throw domain_error("sample_grid: base point outside domain");
    Grid g;
    g.region = region;
    g.nx = nx;
    g.ny = ny;
    g.values.resize(size_t(nx) * size_t(ny));
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            Vec2<double> p{g.x_at(i), g.y_at(j)};
            g.values[size_t(j) * size_t(nx) + size_t(i)] = m.dist(p, base);
        }
    return g;
}

namespace {

struct Segment {
    std::pair<double, double> a, b;
};

std::pair<double, double> interp(double xa, double ya, double va, double xb, double yb, double vb,
                                 double value) {
    double t = (value - va) / (vb - va);
    return {xa + t * (xb - xa), ya + t * (yb - ya)};
}

// Cell corner order: 0 = (i,j), 1 = (i+1,j), 2 = (i+1,j+1), 3 = (i,j+1).
void emit_cell(const Grid& g, int i, int j, double value, std::vector<Segment>& out) {
    double x0 = g.x_at(i), x1 = g.x_at(i + 1);
    double y0 = g.y_at(j), y1 = g.y_at(j + 1);
    double v[4] = {g.at(i, j), g.at(i + 1, j), g.at(i + 1, j + 1), g.at(i, j + 1)};
    double cx[4] = {x0, x1, x1, x0};
    double cy[4] = {y0, y0, y1, y1};

    int mask = 0;
    for (int k = 0; k < 4; ++k)
        if (v[k] > value) mask |= 1 << k;
    if (mask == 0 || mask == 15) return;

    auto edge_point = [&](int a, int b) {
        return interp(cx[a], cy[a], v[a], cx[b], cy[b], v[b], value);
    };

    // Edge k joins corner k and corner (k+1)%4.
    auto crossing = [&](int e) {
        int a = e, b = (e + 1) % 4;
        return ((mask >> a) & 1) != ((mask >> b) & 1);
    };
    int edges[4], n = 0;
    for (int e = 0; e < 4; ++e)
        if (crossing(e)) edges[n++] = e;

    auto point_on = [&](int e) { return edge_point(e, (e + 1) % 4); };

    if (n == 2) {
        out.push_back({point_on(edges[0]), point_on(edges[1])});
    } else if (n == 4) {
        // Saddle: resolve with the center average.
        double center = 0.25 * (v[0] + v[1] + v[2] + v[3]);
        bool center_above = center > value;
        bool corner0_above = (mask & 1) != 0;
        if (center_above == corner0_above) {
            out.push_back({point_on(0), point_on(3)});
            out.push_back({point_on(1), point_on(2)});
        } else {
            out.push_back({point_on(0), point_on(1)});
            out.push_back({point_on(2), point_on(3)});
        }
    }
}

}  // namespace

std::vector<LevelPolyline> marching_squares(const Grid& g, double value) {
    std::vector<Segment> segs;
    for (int j = 0; j + 1 < g.ny; ++j)
        for (int i = 0; i + 1 < g.nx; ++i) emit_cell(g, i, j, value, segs);

    // Stitch shared endpoints into polylines, deterministically: quantized
    // endpoint keys, segments consumed in emission order.
    auto key = [&](const std::pair<double, double>& p) {
        double sx = (g.region.x1_hi - g.region.x1_lo) / (g.nx - 1);
        double sy = (g.region.x2_hi - g.region.x2_lo) / (g.ny - 1);
        long qx = lround((p.first - g.region.x1_lo) / sx * 256.0);
        long qy = lround((p.second - g.region.x2_lo) / sy * 256.0);
        return std::pair<long, long>{qx, qy};
    };
    std::multimap<std::pair<long, long>, size_t> by_end;
    for (size_t s = 0; s < segs.size(); ++s) {
        by_end.emplace(key(segs[s].a), s);
        by_end.emplace(key(segs[s].b), s);
    }
    std::vector<bool> used(segs.size(), false);
    std::vector<LevelPolyline> polys;
    for (size_t s0 = 0; s0 < segs.size(); ++s0) {
        if (used[s0]) continue;
        used[s0] = true;
        LevelPolyline poly;
        poly.value = value;
        poly.vertices = {segs[s0].a, segs[s0].b};
        // Extend forward from the back, then backward from the front.
        for (int dir = 0; dir < 2; ++dir) {
            for (;;) {
                auto endpoint = dir == 0 ? poly.vertices.back() : poly.vertices.front();
                auto range = by_end.equal_range(key(endpoint));
                size_t next = size_t(-1);
                for (auto it = range.first; it != range.second; ++it)
                    if (!used[it->second]) {
                        next = it->second;
                        break;
                    }
                if (next == size_t(-1)) break;
                used[next] = true;
                auto ka = key(segs[next].a);
                auto other = ka == key(endpoint) ? segs[next].b : segs[next].a;
                if (dir == 0)
                    poly.vertices.push_back(other);
                else
                    poly.vertices.insert(poly.vertices.begin(), other);
            }
        }
        if (poly.vertices.size() > 2 && key(poly.vertices.front()) == key(poly.vertices.back()))
            poly.closed = true;
        polys.push_back(std::move(poly));
    }
    return polys;
}

SlopeFractions slope_classify(const std::vector<LevelPolyline>& polys, double tol_deg) {
    SlopeFractions f;
    for (const LevelPolyline& poly : polys) {
        for (size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
            double dx = poly.vertices[i + 1].first - poly.vertices[i].first;
            double dy = poly.vertices[i + 1].second - poly.vertices[i].second;
            double len = std::hypot(dx, dy);
            if (len == 0.0) continue;
            double ang = std::atan2(dy, dx) * 180.0 / M_PI;  // (-180, 180]
            if (ang < 0) ang += 180.0;                       // undirected, in [0, 180)
            double len_weighted = len;
            f.total_length += len_weighted;
            if (std::abs(ang - 90.0) <= tol_deg)
                f.vertical += len_weighted;
            else if (std::abs(ang - 45.0) <= tol_deg)
                f.plus45 += len_weighted;
            else if (std::abs(ang - 135.0) <= tol_deg)
                f.minus45 += len_weighted;
            else
                f.other += len_weighted;
        }
    }
    if (f.total_length > 0) {
        f.vertical /= f.total_length;
        f.plus45 /= f.total_length;
        f.minus45 /= f.total_length;
        f.other /= f.total_length;
    }
    return f;
}

double plateau_detect(const Grid& g, double value, double tol) {
    int64_t hits = 0;
    for (double v : g.values)
        if (std::abs(v - value) <= tol) ++hits;
    return double(hits) / double(g.values.size());
}

std::string grid_csv(const Grid& g) {
    std::string out = "# region," + format_scalar(g.region.x1_lo) + "," +
                      format_scalar(g.region.x1_hi) + "," + format_scalar(g.region.x2_lo) + "," +
                      format_scalar(g.region.x2_hi) + "\n";
    out += "# size," + std::to_string(g.nx) + "," + std::to_string(g.ny) + "\n";
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (i) out += ",";
            out += format_scalar(g.at(i, j));
        }
        out += "\n";
    }
    return out;
}

Grid grid_from_csv(const std::string& text) {
    Grid g;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# region,", 0) != 0)
        throw std::runtime_error("grid csv: missing region header");
    std::istringstream hdr(line.substr(9));
    std::string tok;
    double vals[4];
    for (double& v : vals) {
        if (!std::getline(hdr, tok, ',')) throw std::runtime_error("grid csv: bad region");
        v = parse_double(tok);
    }
    g.region = Box<double>{vals[0], vals[1], vals[2], vals[3]};
    if (!std::getline(in, line) || line.rfind("# size,", 0) != 0)
        throw std::runtime_error("grid csv: missing size header");
    std::istringstream sz(line.substr(7));
    std::getline(sz, tok, ',');
    g.nx = std::stoi(tok);
    std::getline(sz, tok, ',');
    g.ny = std::stoi(tok);
    g.values.reserve(size_t(g.nx) * size_t(g.ny));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        while (std::getline(row, tok, ',')) g.values.push_back(parse_double(tok));
    }
    if (g.values.size() != size_t(g.nx) * size_t(g.ny))
        throw std::runtime_error("grid csv: value count mismatch");
    return g;
}

}  // namespace samc
