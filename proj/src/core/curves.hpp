#pragma once

// Definable-curve model for the boundary analysis: standard-form curves
// t -> (t, g(t)), general curves with declared limits, reparametrization to
// standard form, and tail-limit estimation along curve pairs.

#include "core/metric.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace samc {

struct Curve {
    std::function<Vec2<double>(double)> eval;  // defined on (0, t_max]
    Vec2<double> limit{};                      // declared closure limit as t -> 0
    double t_max = 1.0;
    bool standard_form = false;  // eval(t).x1 == t
    std::string label;
};

inline Curve line_curve(double x20, double slope, double t_max = 1.0) {
    Curve c;
    c.eval = [x20, slope](double t) { return Vec2<double>{t, x20 + slope * t}; };
    c.limit = {0.0, x20};
    c.t_max = t_max;
    c.standard_form = true;
    c.label = "line c=" + format_scalar(slope);
    return c;
}

inline Curve parabola_curve(double x20, double coeff, double t_max = 1.0) {
    Curve c;
    c.eval = [x20, coeff](double t) { return Vec2<double>{t, x20 + coeff * t * t}; };
    c.limit = {0.0, x20};
    c.t_max = t_max;
    c.standard_form = true;
    c.label = "parabola c=" + format_scalar(coeff);
    return c;
}

// Default probing family at a boundary point (0, x20): lines ordered so the
// scan meets (c=0, c=1) first, plus two parabolas. Curves leaving the
// descriptor domain are dropped by the detectors.
inline std::vector<Curve> default_curve_family(double x20) {
    std::vector<Curve> fam;
    for (double c : {0.0, 1.0, -1.0, 0.5, -0.5}) fam.push_back(line_curve(x20, c));
    for (double c : {2.0, -2.0}) fam.push_back(parabola_curve(x20, c));
    return fam;
}

inline std::vector<double> dyadic_t_list(int i_min, int i_max) {
    std::vector<double> out;
    for (int i = i_min; i <= i_max; ++i) out.push_back(std::ldexp(1.0, -i));
    return out;
}

// Largest tail prefix of the (decreasing) t list on which the curve stays in
// the metric's domain.
inline std::vector<double> admissible_ts(const Metric<double>& m, const Curve& c,
                                         const std::vector<double>& t_list) {
    std::vector<double> out;
    for (double t : t_list)
        if (t <= c.t_max && m.domain(c.eval(t))) out.push_back(t);
    return out;
}

// sup of d(gamma(t), gamma(t')) over tail pairs; small residuals support
// compactifiability, a large residual is a counterexample witness.
inline double curve_cauchy_check(const Metric<double>& m, const Curve& c,
                                 const std::vector<double>& t_list) {
    std::vector<double> ts = admissible_ts(m, c, t_list);
    double sup = 0.0;
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            sup = std::max(sup, m.dist(c.eval(ts[i]), c.eval(ts[j])));
    return sup;
}

struct LimitEstimate {
    double value = 0.0;        // last-tail value of d(a(t), b(t))
    double oscillation = 0.0;  // max spread over the last quarter of the list
    bool defined = false;      // both curves admissible on a tail
};

inline LimitEstimate limit_estimate(const Metric<double>& m, const Curve& a, const Curve& b,
                                    const std::vector<double>& t_list) {
    LimitEstimate est;
    std::vector<double> vals;
    for (double t : t_list) {
        if (t > a.t_max || t > b.t_max) continue;
        Vec2<double> pa = a.eval(t), pb = b.eval(t);
        if (!m.domain(pa) || !m.domain(pb)) continue;
        vals.push_back(m.dist(pa, pb));
    }
    if (vals.size() < 4) return est;
    size_t tail = vals.size() - std::max<size_t>(1, vals.size() / 4);
    double lo = vals.back(), hi = vals.back();
    for (size_t i = tail; i < vals.size(); ++i) {
        lo = std::min(lo, vals[i]);
        hi = std::max(hi, vals[i]);
    }
    est.value = vals.back();
    est.oscillation = hi - lo;
    est.defined = true;
    return est;
}

// Rewrites a curve with strictly monotone first coordinate near 0 as
// t -> (t, g2(t)) with the same image germ. Inversion of the first
// coordinate is numeric (monotone bisection) unless an exact inverse is
// supplied with the curve.
inline Curve standard_reparam(const Curve& c,
                              const std::function<double(double)>& inverse_x1 = nullptr) {
    if (c.standard_form) return c;
    double t_probe = c.t_max;
    double x1_hi = c.eval(t_probe).x1;
    double x1_lo_probe = c.eval(t_probe / 1024).x1;
    if (!(x1_lo_probe < x1_hi))
        throw domain_error("standard_reparam: first coordinate not increasing near 0");

    auto invert = [c](double target) {
        double lo = 0.0, hi = c.t_max;
        for (int iter = 0; iter < 200; ++iter) {
            double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            (c.eval(mid).x1 < target ? lo : hi) = mid;
        }
        return hi;
    };

    Curve out;
    auto eval = c.eval;
    if (inverse_x1)
        out.eval = [eval, inverse_x1](double t) { return eval(inverse_x1(t)); };
    else
        out.eval = [eval, invert](double t) { return eval(invert(t)); };
    out.limit = c.limit;
    out.t_max = x1_hi;
    out.standard_form = true;
    out.label = c.label + " (reparam)";
    return out;
}

}  // namespace samc
