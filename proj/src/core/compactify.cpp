#include "core/compactify.hpp"

#include "core/csvio.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

namespace samc {

namespace {

// Strictly increasing piecewise-linear bridge of the staircase, anchored at
// (0, 0) and normalized so the reparametrized strip is again (0, 1].
struct GaugeBridge {
    std::vector<std::pair<double, double>> knots;  // (t, value), t increasing
    double scale = 1.0;

    explicit GaugeBridge(const Gauge& g) {
        knots.emplace_back(0.0, 0.0);
        std::vector<std::pair<double, double>> raw;
        for (auto it = g.steps.rbegin(); it != g.steps.rend(); ++it)
            raw.emplace_back(it->t, it->r);  // t ascending
        double last_r = 0.0;
        for (auto& [t, r] : raw) {
            if (r <= last_r) continue;  // merge plateau duplicates
            knots.emplace_back(t, r);
            last_r = r;
        }
        if (knots.back().first < 1.0) {
            double top = std::max(last_r * 2.0, last_r + 1.0 - knots.back().first);
            knots.emplace_back(1.0, top);
        }
        scale = knots.back().second;
    }

    double forward(double t) const {  // (0,1] -> (0,1]
        for (size_t i = 1; i < knots.size(); ++i)
            if (t <= knots[i].first) {
                auto [t0, v0] = knots[i - 1];
                auto [t1, v1] = knots[i];
                return (v0 + (v1 - v0) * (t - t0) / (t1 - t0)) / scale;
            }
        return knots.back().second / scale;
    }

    double inverse(double s) const {  // (0,1] -> (0,1]
        double v = s * scale;
        for (size_t i = 1; i < knots.size(); ++i)
            if (v <= knots[i].second) {
                auto [t0, v0] = knots[i - 1];
                auto [t1, v1] = knots[i];
                return t0 + (t1 - t0) * (v - v0) / (v1 - v0);
            }
        return knots.back().first;
    }
};

}  // namespace

double gauge_bridge_forward(const Gauge& g, double t) {
    if (g.is_identity()) return t;
    return GaugeBridge(g).forward(t);
}

double gauge_bridge_inverse(const Gauge& g, double s) {
    if (g.is_identity()) return s;
    return GaugeBridge(g).inverse(s);
}

Metric<double> gauge_reparam(const Metric<double>& m, const Gauge& g) {
    if (g.is_identity()) return m;
    auto bridge = std::make_shared<GaugeBridge>(g);
    Metric<double> out;
    out.name = m.name + ".reparam";
    out.kind = m.kind;
    out.exact_capable = false;
    out.region = m.region;
    auto base_domain = m.domain;
    out.domain = [bridge, base_domain](const Vec2<double>& p) {
        if (!(0.0 < p.x1 && p.x1 <= 1.0)) return false;
        return base_domain(Vec2<double>{bridge->inverse(p.x1), p.x2});
    };
    auto base_dist = m.dist;
    out.dist = [bridge, base_dist](const Vec2<double>& a, const Vec2<double>& b) {
        return base_dist(Vec2<double>{bridge->inverse(a.x1), a.x2},
                         Vec2<double>{bridge->inverse(b.x1), b.x2});
    };
    return out;
}

namespace {

// Witness limit at a boundary point; zero when no witness is found.
double witness_limit_at(const Metric<double>& m, double x20, const CurveFamilyBuilder& family,
                        const std::vector<double>& t_list, const DetectorOptions& opt) {
    BadnessReport rep = detect_bad(m, Vec2<double>{0.0, x20}, family(x20), t_list, opt);
    return rep.verdict_bad ? rep.limit : 0.0;
}

}  // namespace

std::vector<Vec2<double>> detect_boundary_bad_set(const Metric<double>& m, double resolution,
                                                  const CurveFamilyBuilder& family,
                                                  const DetectorOptions& opt) {
    const std::vector<double> t_list = dyadic_t_list(6, 20);
    const double lo = m.region.x2_lo, hi = m.region.x2_hi;

    std::vector<double> flagged;
    int n = int(std::round((hi - lo) / resolution));
    for (int k = 0; k <= n; ++k) {
        double x20 = lo + k * resolution;
        if (witness_limit_at(m, x20, family, t_list, opt) > 0.0) flagged.push_back(x20);
    }

    // Cluster adjacent flags, then sharpen each cluster center by local
    // rescans at halving steps down to resolution / 64, following the
    // strongest witness.
    std::vector<Vec2<double>> out;
    size_t i = 0;
    while (i < flagged.size()) {
        size_t j = i;
        while (j + 1 < flagged.size() && flagged[j + 1] - flagged[j] <= 1.5 * resolution) ++j;
        double candidate = flagged[(i + j) / 2];
        double best_limit = witness_limit_at(m, candidate, family, t_list, opt);
        for (double step = resolution / 2; step >= resolution / 64; step /= 2) {
            for (double c : {candidate - step, candidate + step}) {
                double lim = witness_limit_at(m, c, family, t_list, opt);
                if (lim > best_limit) {
                    best_limit = lim;
                    candidate = c;
                }
            }
        }
        out.push_back(Vec2<double>{0.0, candidate});
        i = j + 1;
    }
    return out;
}

Vec2<double> ExtendedMetric::proxy(const ExtPoint& p) const {
    if (!p.boundary) return p.coords;
    if (p.hole >= 0) {
        const Vec2<double>& c = centers_[size_t(p.hole)];
        double e = eps_[size_t(p.hole)];
        for (double tilt : {0.0, 1.0, -1.0}) {
            double ang = p.alpha - tilt * t_deep_;
            Vec2<double> q{c.x1 + (e + t_deep_) * std::cos(ang),
                           c.x2 + (e + t_deep_) * std::sin(ang)};
            if (pulled_.domain(q)) return q;
        }
        throw domain_error("extended metric: no admissible approach at arc point");
    }
    Vec2<double> q{t_deep_, p.coords.x2};
    if (!pulled_.domain(q))
        throw domain_error("extended metric: edge point shadowed by a hole");
    return q;
}

double ExtendedMetric::dist(const ExtPoint& a, const ExtPoint& b) const {
    if (a.boundary && b.boundary && a.hole == b.hole && a.alpha == b.alpha &&
        a.coords == b.coords)
        return 0.0;
    return pulled_.dist(proxy(a), proxy(b));
}

ExtPoint CompactificationResult::arc_point(int hole, double alpha) const {
    const Vec2<double>& c = bad_set[size_t(hole)];
    double e = eps[size_t(hole)];
    ExtPoint p;
    p.coords = Vec2<double>{c.x1 + e * std::cos(alpha), c.x2 + e * std::sin(alpha)};
    p.boundary = true;
    p.hole = hole;
    p.alpha = alpha;
    return p;
}

ExtPoint CompactificationResult::edge_point(double x20) const {
    ExtPoint p;
    p.coords = Vec2<double>{0.0, x20};
    p.boundary = true;
    return p;
}

void CompactificationResult::write_directory(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    std::string meta;
    meta += "input=" + input_name + "\n";
    meta += "verdict=" + std::string(to_string(verdict)) + "\n";
    if (!detail.empty()) meta += "detail=" + detail + "\n";
    meta += "bad_points=" + std::to_string(bad_set.size()) + "\n";
    for (size_t i = 0; i < bad_set.size(); ++i)
        meta += "bad_point_" + std::to_string(i) + "=" + format_scalar(bad_set[i].x1) + "," +
                format_scalar(bad_set[i].x2) + "\n";
    meta += "gauge=" + std::string(gauge.is_identity() ? "identity" : "staircase") + "\n";
    write_text_file(dir + "/metadata.txt", meta);

    std::string chain;
    if (bad_set.empty()) {
        chain = "empty chain: no bad points detected, closure keeps the metric\n";
    } else {
        for (size_t i = 0; i < bad_set.size(); ++i)
            chain += "hole-blow-up center=(" + format_scalar(bad_set[i].x1) + "," +
                     format_scalar(bad_set[i].x2) + ") eps=" + format_scalar(eps[i]) + "\n";
    }
    write_text_file(dir + "/chain.txt", chain);
    write_text_file(dir + "/verdict.txt", std::string(to_string(verdict)) + "\n");
    if (!gauge.is_identity()) write_text_file(dir + "/gauge.csv", gauge_csv(gauge));
    for (size_t h = 0; h < tables.size(); ++h)
        write_text_file(dir + "/boundary_matrix_" + std::to_string(h) + ".csv",
                        boundary_matrix_csv(arc_params, tables[h]));
}

CompactificationResult compactify_strip(const Metric<double>& m,
                                        const CompactifyOptions& options) {
    CompactificationResult res;
    res.input_name = m.name;
    const std::vector<double> t_list = dyadic_t_list(options.t_exp_min, options.t_exp_max);

    Metric<double> working = m;
    res.bad_set = detect_boundary_bad_set(working, options.resolution, options.family,
                                          options.detector);

    if (options.use_gauge && !res.bad_set.empty()) {
        std::vector<GaugeSample> samples;
        for (const Vec2<double>& b : res.bad_set) {
            auto more = collect_gauge_samples(working, options.family(b.x2), t_list,
                                              options.detector);
            samples.insert(samples.end(), more.begin(), more.end());
        }
        if (!samples.empty()) {
            res.gauge = estimate_gauge(samples, options.detector.bad_threshold);
            working = gauge_reparam(working, res.gauge);
        }
    }

    if (res.bad_set.empty()) {
        res.verdict = ExtensionVerdict::extends;
        res.detail = "no bad points; closure keeps the metric";
        res.extended.pulled_ = working;
        return res;
    }

    // Hole radii: requested eps, shrunk to keep every 3-eps ball clear of the
    // other holes and inside the x2 range.
    res.eps.assign(res.bad_set.size(), options.eps);
    for (size_t k = 0; k < res.bad_set.size(); ++k) {
        for (size_t l = 0; l < res.bad_set.size(); ++l) {
            if (l == k) continue;
            double d = std::abs(res.bad_set[k].x2 - res.bad_set[l].x2);
            res.eps[k] = std::min(res.eps[k], d / 5.0);
        }
    }

    Metric<double> pulled;
    if (res.bad_set.size() == 1) {
        auto h = HoleBlowUp<double>::at_point(
            VecN<double>{res.bad_set[0].x1, res.bad_set[0].x2}, res.eps[0]);
        pulled = pullback_metric(working, h);
    } else {
        std::vector<VecN<double>> centers;
        for (const Vec2<double>& b : res.bad_set) centers.push_back({b.x1, b.x2});
        auto h = HoleBlowUp<double>::at_finite_set(centers, res.eps);
        pulled = pullback_metric(working, h);
    }

    // Arc grid shared by every hole.
    res.arc_params.clear();
    for (int k = 0; k < options.arc_samples; ++k)
        res.arc_params.push_back(-M_PI / 2 +
                                 M_PI * double(k) / double(options.arc_samples - 1));

    ExtensionVerdict verdict = ExtensionVerdict::extends;
    std::string detail;
    for (size_t h = 0; h < res.bad_set.size(); ++h) {
        BoundaryApproach ap{res.bad_set[h], res.eps[h]};
        ExtensionReport rep =
            extension_probe(pulled, ap, res.arc_params, t_list, options.probe);
        res.tables.push_back(rep.boundary);
        if (rep.verdict == ExtensionVerdict::fails) {
            verdict = ExtensionVerdict::fails;
            detail = "hole " + std::to_string(h) + ": " + rep.detail;
            break;
        }
        if (rep.verdict == ExtensionVerdict::inconclusive &&
            verdict == ExtensionVerdict::extends) {
            verdict = ExtensionVerdict::inconclusive;
            detail = "hole " + std::to_string(h) + ": " + rep.detail;
        }
    }

    // Consistency spot checks on the surviving old edge.
    if (verdict == ExtensionVerdict::extends) {
        const double t_verdict = std::ldexp(1.0, -options.probe.verdict_t_exp);
        int n = 16;
        for (int k = 0; k <= n; ++k) {
            double x20 = m.region.x2_lo + (m.region.x2_hi - m.region.x2_lo) * double(k) / n;
            bool shadowed = false;
            for (size_t h = 0; h < res.bad_set.size(); ++h)
                if (std::abs(x20 - res.bad_set[h].x2) <= res.eps[h] * 1.5) shadowed = true;
            if (shadowed) continue;
            Vec2<double> pa{t_verdict, x20};
            Vec2<double> pb{t_verdict, x20 + t_verdict};
            if (!pulled.domain(pa) || !pulled.domain(pb)) continue;
            if (pulled.dist(pa, pb) > options.probe.extends_residual) {
                verdict = ExtensionVerdict::inconclusive;
                detail = "old edge point " + format_scalar(x20) + " fails consistency";
                break;
            }
        }
    }

    res.verdict = verdict;
    res.detail = detail;
    res.extended.pulled_ = pulled;
    res.extended.centers_ = res.bad_set;
    res.extended.eps_ = res.eps;
    return res;
}

}  // namespace samc
