#pragma once

// Bad-point detection over finite curve families, the r-bad refinement, and
// the separation-gauge estimator. Numeric detection can certify badness
// through a positive witness; a clean scan only means "no witness found at
// this resolution".

#include "core/curves.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace samc {

struct DetectorOptions {
    double bad_threshold = 1e-2;       // tail limit above this flags a witness
    double stability_frac = 0.25;      // oscillation must stay below frac * value
    double ratio_cap = 100.0;          // declared boundedness cap for r-bad ratios
};

struct BadnessReport {
    Vec2<double> point{};
    bool verdict_bad = false;
    bool verdict_r_bad = false;
    std::string witness_a, witness_b;
    double limit = 0.0;      // witness tail limit
    double ratio_sup = 0.0;  // sup |gamma - gamma'| / r(t) for the witness pair
    int64_t pairs_scanned = 0;
};

// Staircase gauge on dyadic bins (2^{-i-1}, 2^{-i}]; positive, non-increasing
// toward 0, evaluable by step lookup.
struct Gauge {
    struct Breakpoint {
        double t;  // right end of the bin
        double r;
    };
    std::vector<Breakpoint> steps;  // t decreasing

    static Gauge identity() { return Gauge{}; }  // empty staircase means r(t) = t

    double operator()(double t) const {
        if (steps.empty()) return t;
        if (t > steps.front().t) return steps.front().r;
        for (const Breakpoint& b : steps)
            if (t > b.t / 2) return b.r;
        return steps.back().r;
    }
    bool is_identity() const { return steps.empty(); }
};

inline bool stable_tail(const LimitEstimate& est, const DetectorOptions& opt) {
    return est.defined && est.oscillation <= std::max(1e-9, opt.stability_frac * est.value);
}

namespace detail {

template <class RatioFn>
BadnessReport scan_pairs(const Metric<double>& m, const Vec2<double>& point,
                         const std::vector<Curve>& family, const std::vector<double>& t_list,
                         const DetectorOptions& opt, RatioFn&& ratio_fn) {
    BadnessReport rep;
    rep.point = point;
    for (size_t i = 0; i < family.size(); ++i) {
        if (admissible_ts(m, family[i], t_list).size() < t_list.size() / 2) continue;
        for (size_t j = i + 1; j < family.size(); ++j) {
            if (admissible_ts(m, family[j], t_list).size() < t_list.size() / 2) continue;
            ++rep.pairs_scanned;
            LimitEstimate est = limit_estimate(m, family[i], family[j], t_list);
            if (!(est.defined && est.value > opt.bad_threshold && stable_tail(est, opt))) continue;
            double ratio_sup = ratio_fn(family[i], family[j]);
            bool r_bad = ratio_sup <= opt.ratio_cap;
            if (!rep.verdict_bad) {
                rep.verdict_bad = true;
                rep.witness_a = family[i].label;
                rep.witness_b = family[j].label;
                rep.limit = est.value;
                rep.ratio_sup = ratio_sup;
                rep.verdict_r_bad = r_bad;
            } else if (r_bad && !rep.verdict_r_bad) {
                // keep the first witness, but upgrade the r-bad verdict if a
                // later pair stays within the gauge
                rep.verdict_r_bad = true;
            }
        }
    }
    return rep;
}

}  // namespace detail

// Bad iff some pair of admissible curves converging to the point keeps a
// stable positive limit distance.
inline BadnessReport detect_bad(const Metric<double>& m, const Vec2<double>& point,
                                const std::vector<Curve>& family,
                                const std::vector<double>& t_list,
                                const DetectorOptions& opt = {}) {
    return detail::scan_pairs(m, point, family, t_list, opt,
                              [](const Curve&, const Curve&) { return 0.0; });
}

// r-bad iff additionally the witness pair's Euclidean separation stays within
// the gauge: sup |gamma(t) - gamma'(t)| / r(t) bounded by the declared cap.
// The identity gauge r(t) = t gives the t-bad test.
inline BadnessReport detect_r_bad(const Metric<double>& m, const Vec2<double>& point,
                                  const std::vector<Curve>& family, const Gauge& gauge,
                                  const std::vector<double>& t_list,
                                  const DetectorOptions& opt = {}) {
    auto ratio = [&](const Curve& a, const Curve& b) {
        double sup = 0.0;
        for (double t : t_list) {
            if (t > a.t_max || t > b.t_max) continue;
            Vec2<double> pa = a.eval(t), pb = b.eval(t);
            if (!m.domain(pa) || !m.domain(pb)) continue;
            double sep = std::hypot(pa.x1 - pb.x1, pa.x2 - pb.x2);
            double r = gauge(t);
            if (r > 0) sup = std::max(sup, sep / r);
        }
        return sup;
    };
    return detail::scan_pairs(m, point, family, t_list, opt, ratio);
}

struct GaugeSample {
    double t;
    double u;  // |gamma(t) - gamma'(t)|
    double v;  // limit distance of the pair
};

// Separation data for the gauge estimator: one sample per admissible t of
// every curve pair with a stable positive limit.
inline std::vector<GaugeSample> collect_gauge_samples(const Metric<double>& m,
                                                      const std::vector<Curve>& family,
                                                      const std::vector<double>& t_list,
                                                      const DetectorOptions& opt = {}) {
    std::vector<GaugeSample> samples;
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            LimitEstimate est = limit_estimate(m, family[i], family[j], t_list);
            if (!(est.defined && est.value > opt.bad_threshold && stable_tail(est, opt))) continue;
            for (double t : t_list) {
                Vec2<double> pa = family[i].eval(t), pb = family[j].eval(t);
                if (!m.domain(pa) || !m.domain(pb)) continue;
                double u = std::hypot(pa.x1 - pb.x1, pa.x2 - pb.x2);
                // curves may cross at isolated t away from 0; a zero
                // separation there carries no envelope information
                if (u > 0.0) samples.push_back({t, u, est.value});
            }
        }
    return samples;
}

// Staircase estimate from bad-pair samples: half the per-bin envelope of u,
// forced non-increasing toward 0. Every recorded sample ends up strictly
// above the staircase.
inline Gauge estimate_gauge(const std::vector<GaugeSample>& samples, double v_min) {
    std::map<int, double> bin_min;  // dyadic bin index -> min u
    for (const GaugeSample& s : samples) {
        if (s.v < v_min || !(s.t > 0) || !(s.u > 0)) continue;
        int bin = int(std::floor(-std::log2(s.t) + 1e-12));  // t in (2^{-bin-1}, 2^{-bin}]
        bin = std::max(bin, 0);
        auto [it, inserted] = bin_min.emplace(bin, s.u);
        if (!inserted) it->second = std::min(it->second, s.u);
    }
    if (bin_min.empty()) throw domain_error("estimate_gauge: no samples above v_min");

    Gauge g;
    double running = std::numeric_limits<double>::infinity();
    for (auto& [bin, umin] : bin_min) {  // map iterates bins from large t to small t
        running = std::min(running, umin / 2);
        g.steps.push_back({std::ldexp(1.0, -bin), running});
    }
    return g;
}

}  // namespace samc
