#pragma once

// Numerical probe of the hole-blow-up notes' conclusion: does the pullback
// metric extend continuously to the new boundary circle? Boundary points are
// parametrized by the approach angle; each gets a small family of inward
// curves, and verdicts come from tail limits along curve pairs.

#include "core/blowup.hpp"
#include "core/curves.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace samc {

enum class ExtensionVerdict { extends, fails, inconclusive };

inline const char* to_string(ExtensionVerdict v) {
    switch (v) {
        case ExtensionVerdict::extends: return "extends";
        case ExtensionVerdict::fails: return "fails";
        default: return "inconclusive";
    }
}

struct ProbeOptions {
    int verdict_t_exp = 20;       // verdict residuals read at t = 2^-20
    int table_t_exp = 40;         // boundary distances read deeper for accuracy
    double extends_residual = 1e-3;
    double fails_residual = 1e-1;
};

struct ExtensionRow {
    double alpha, beta, t, estimate;
};

struct ExtensionReport {
    std::vector<double> params;                  // boundary parameters (angles)
    std::vector<std::vector<double>> boundary;   // limit distance matrix
    std::vector<double> residuals;               // same-point curve-pair residuals
    std::vector<ExtensionRow> rows;              // per-pair convergence traces
    ExtensionVerdict verdict = ExtensionVerdict::inconclusive;
    std::string detail;

    bool passed() const { return verdict == ExtensionVerdict::extends; }
};

// Curves approaching the boundary point of the hole at angle alpha from the
// interior. The tilted variants double as domain-legal approaches at arc
// endpoints that sit on the old boundary edge.
struct BoundaryApproach {
    Vec2<double> center;
    double eps;
    std::vector<Curve> curves(double alpha) const {
        std::vector<Curve> out;
        for (double tilt : {0.0, 1.0, -1.0}) {
            Curve c;
            Vec2<double> ctr = center;
            double e = eps;
            c.eval = [ctr, e, alpha, tilt](double t) {
                double ang = alpha - tilt * t;
                return Vec2<double>{ctr.x1 + (e + t) * std::cos(ang),
                                    ctr.x2 + (e + t) * std::sin(ang)};
            };
            c.limit = {center.x1 + eps * std::cos(alpha), center.x2 + eps * std::sin(alpha)};
            c.t_max = 0.5;
            c.label = "approach a=" + format_scalar(alpha) + " tilt=" + format_scalar(tilt);
            out.push_back(c);
        }
        return out;
    }
};

inline ExtensionReport extension_probe(const Metric<double>& pulled, const BoundaryApproach& ap,
                                       const std::vector<double>& boundary_params,
                                       const std::vector<double>& t_list,
                                       const ProbeOptions& opt = {}) {
    ExtensionReport rep;
    rep.params = boundary_params;
    const double t_verdict = std::ldexp(1.0, -opt.verdict_t_exp);
    const double t_table = std::ldexp(1.0, -opt.table_t_exp);

    // Primary (domain-admissible) curve per parameter.
    std::vector<Curve> primary;
    std::vector<std::vector<Curve>> all;
    for (double a : boundary_params) {
        std::vector<Curve> fam;
        for (const Curve& c : ap.curves(a))
            if (!admissible_ts(pulled, c, t_list).empty() && pulled.domain(c.eval(t_table)))
                fam.push_back(c);
        if (fam.empty())
            throw domain_error("extension_probe: no admissible approach at parameter " +
                               format_scalar(a));
        primary.push_back(fam.front());
        all.push_back(std::move(fam));
    }

    // Same-point consistency residuals decide the verdict.
    bool any_fail = false, all_small = true;
    for (size_t i = 0; i < all.size(); ++i) {
        double residual = 0.0;
        for (size_t a = 0; a < all[i].size(); ++a)
            for (size_t b = a + 1; b < all[i].size(); ++b) {
                const Curve& ca = all[i][a];
                const Curve& cb = all[i][b];
                LimitEstimate est = limit_estimate(pulled, ca, cb, t_list);
                double v;
                if (pulled.domain(ca.eval(t_verdict)) && pulled.domain(cb.eval(t_verdict)))
                    v = pulled.dist(ca.eval(t_verdict), cb.eval(t_verdict));
                else
                    v = est.defined ? est.value : opt.fails_residual * 2;
                residual = std::max(residual, v);
                if (est.defined && est.value > opt.fails_residual &&
                    est.oscillation <= 0.25 * est.value)
                    any_fail = true;
            }
        rep.residuals.push_back(residual);
        if (residual >= opt.extends_residual) all_small = false;
    }

    // Boundary distance matrix from the deep tail of the primary curves.
    rep.boundary.assign(boundary_params.size(), std::vector<double>(boundary_params.size(), 0.0));
    for (size_t i = 0; i < primary.size(); ++i)
        for (size_t j = 0; j < primary.size(); ++j) {
            if (i == j) continue;
            rep.boundary[i][j] =
                pulled.dist(primary[i].eval(t_table), primary[j].eval(t_table));
        }
    // Symmetrize away float noise; the deep estimates agree to ~1e-12.
    for (size_t i = 0; i < primary.size(); ++i)
        for (size_t j = i + 1; j < primary.size(); ++j) {
            double v = 0.5 * (rep.boundary[i][j] + rep.boundary[j][i]);
            rep.boundary[i][j] = rep.boundary[j][i] = v;
        }

    for (size_t i = 0; i < primary.size(); ++i)
        for (size_t j = i; j < primary.size(); ++j)
            for (double t : t_list)
                rep.rows.push_back({boundary_params[i], boundary_params[j], t,
                                    pulled.dist(primary[i].eval(t), primary[j].eval(t))});

    if (any_fail) {
        rep.verdict = ExtensionVerdict::fails;
        rep.detail = "same-point approach curves keep positive limit distance";
    } else if (all_small) {
        rep.verdict = ExtensionVerdict::extends;
    } else {
        rep.verdict = ExtensionVerdict::inconclusive;
        rep.detail = "same-point residuals between thresholds";
    }
    return rep;
}

}  // namespace samc
