#include "samc/samc.h"

#include "core/axiom_check.hpp"
#include "core/compactify.hpp"
#include "core/conditions.hpp"
#include "core/csvio.hpp"
#include "core/grid.hpp"
#include "core/isometry.hpp"
#include "core/registry.hpp"
#include "core/svg.hpp"

#include <cstring>
#include <map>
#include <optional>

using namespace samc;

struct samc_space {
    samc_mode mode;
    std::string name;
    std::optional<Metric<Rational>> exact;
    std::optional<Metric<double>> flt;

    const Metric<double>& f() const { return *flt; }
    const Metric<Rational>& e() const { return *exact; }
};

struct samc_report {
    bool passed = true;
    int64_t violations = 0;
    int64_t checked = 0;
    std::map<std::string, double> stats;
    std::string summary;
    std::string csv;
    std::string matrix_csv;  // square boundary matrix, when applicable
};

namespace {

thread_local std::string g_last_error;

samc_status fail(samc_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

samc_status translate_exception() {
    try {
        throw;
    } catch (const domain_error& e) {
        return fail(SAMC_ERR_DOMAIN, e.what());
    } catch (const parse_error& e) {
        return fail(SAMC_ERR_BAD_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(SAMC_ERR_INTERNAL, e.what());
    }
}

SampleConfig to_config(const samc_sample_cfg* cfg) {
    SampleConfig out;
    if (!cfg) return out;
    out.seed = cfg->seed;
    out.count = cfg->count;
    out.workers = cfg->workers > 0 ? cfg->workers : 1;
    out.tol = cfg->tol > 0 ? cfg->tol : 1e-12;
    if (cfg->use_region) {
        out.has_region = true;
        out.region = Box<double>{cfg->region[0], cfg->region[1], cfg->region[2], cfg->region[3]};
    }
    return out;
}

samc_report* from_axiom_report(const AxiomReport& rep, const std::string& summary) {
    auto* r = new samc_report;
    r->passed = rep.passed();
    r->violations = int64_t(rep.violations.size());
    r->checked = rep.checked_total();
    r->csv = axiom_report_csv(rep);
    r->summary = summary + (rep.passed() ? ": no violations" : ": VIOLATIONS FOUND");
    return r;
}

template <class S>
Vec2<S> parse_point_arg(const std::string& text) {
    if (text == "origin" || text == "0") return Vec2<S>{S(0), S(0)};
    return parse_point<S>(text);
}

bool write_out(char* out, size_t cap, const std::string& text) {
    if (!out || cap == 0) return false;
    if (text.size() + 1 > cap) return false;
    std::memcpy(out, text.c_str(), text.size() + 1);
    return true;
}

}  // namespace

extern "C" {

const char* samc_last_error(void) { return g_last_error.c_str(); }

size_t samc_registry_names(char* buf, size_t cap) {
    std::string all;
    for (const std::string& n : registry_names()) {
        if (!all.empty()) all += "\n";
        all += n;
    }
    if (buf && cap > 0) {
        size_t len = std::min(cap - 1, all.size());
        std::memcpy(buf, all.data(), len);
        buf[len] = '\0';
    }
    return all.size() + 1;
}

samc_status samc_space_open(const char* name, samc_mode mode, samc_space** out) {
    if (!name || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        if (!registry_has(name)) return fail(SAMC_ERR_BAD_NAME, std::string("unknown space: ") + name);
        auto s = std::make_unique<samc_space>();
        s->mode = mode;
        s->name = name;
        if (mode == SAMC_MODE_EXACT) {
            if (!lookup_exact_capable(name))
                return fail(SAMC_ERR_UNSUPPORTED, std::string("not exact-capable: ") + name);
            s->exact = lookup_exact(name);
        }
        s->flt = lookup_float(name);
        *out = s.release();
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

void samc_space_close(samc_space* s) { delete s; }

const char* samc_space_name(const samc_space* s) { return s ? s->name.c_str() : ""; }

int samc_space_exact_capable(const samc_space* s) {
    return s && lookup_exact_capable(s->name) ? 1 : 0;
}

samc_status samc_space_eval(const samc_space* s, const char* p, const char* q, char* out,
                            size_t cap) {
    if (!s || !p || !q || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        std::string text;
        if (s->mode == SAMC_MODE_EXACT) {
            Rational d = eval_metric(s->e(), parse_point_arg<Rational>(p),
                                     parse_point_arg<Rational>(q));
            text = format_scalar(d);
        } else {
            double d = eval_metric(s->f(), parse_point_arg<double>(p), parse_point_arg<double>(q));
            text = format_scalar(d);
        }
        if (!write_out(out, cap, text)) return fail(SAMC_ERR_BAD_ARG, "output buffer too small");
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_space_eval_f64(const samc_space* s, double p1, double p2, double q1, double q2,
                                double* out) {
    if (!s || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        *out = eval_metric(s->f(), Vec2<double>{p1, p2}, Vec2<double>{q1, q2});
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

int samc_report_passed(const samc_report* r) { return r && r->passed ? 1 : 0; }
int64_t samc_report_violations(const samc_report* r) { return r ? r->violations : 0; }
int64_t samc_report_checked(const samc_report* r) { return r ? r->checked : 0; }

samc_status samc_report_stat(const samc_report* r, const char* key, double* out) {
    if (!r || !key || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    auto it = r->stats.find(key);
    if (it == r->stats.end()) return fail(SAMC_ERR_BAD_ARG, std::string("no such stat: ") + key);
    *out = it->second;
    return SAMC_OK;
}

const char* samc_report_summary(const samc_report* r) { return r ? r->summary.c_str() : ""; }

samc_status samc_report_write_csv(const samc_report* r, const char* path) {
    if (!r || !path) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        write_text_file(path, r->csv);
        return SAMC_OK;
    } catch (const std::exception& e) {
        return fail(SAMC_ERR_IO, e.what());
    }
}

samc_status samc_report_write_matrix_csv(const samc_report* r, const char* path) {
    if (!r || !path) return fail(SAMC_ERR_BAD_ARG, "null argument");
    if (r->matrix_csv.empty())
        return fail(SAMC_ERR_UNSUPPORTED, "report carries no boundary matrix");
    try {
        write_text_file(path, r->matrix_csv);
        return SAMC_OK;
    } catch (const std::exception& e) {
        return fail(SAMC_ERR_IO, e.what());
    }
}

void samc_report_close(samc_report* r) { delete r; }

samc_status samc_check_axioms(const samc_space* s, const samc_sample_cfg* cfg,
                              samc_report** out) {
    if (!s || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        SampleConfig c = to_config(cfg);
        AxiomReport rep = s->mode == SAMC_MODE_EXACT ? check_metric_axioms(s->e(), c)
                                                     : check_metric_axioms(s->f(), c);
        *out = from_axiom_report(rep, "metric axioms on " + s->name);
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_check_boundedness(const samc_space* s, const samc_sample_cfg* cfg,
                                   samc_report** out) {
    if (!s || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        SampleConfig c = to_config(cfg);
        double sup = s->mode == SAMC_MODE_EXACT ? to_double(check_boundedness(s->e(), c))
                                                : check_boundedness(s->f(), c);
        auto* r = new samc_report;
        r->checked = c.count;
        r->stats["sup"] = sup;
        r->summary = "empirical sup of " + s->name + " = " + format_scalar(sup);
        r->csv = "stat,value\nsup," + format_scalar(sup) + "\n";
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_check_uniformity(const samc_space* s, const char* shift,
                                  const samc_sample_cfg* cfg, samc_report** out) {
    if (!s || !shift || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        SampleConfig c = to_config(cfg);
        AxiomReport rep = s->mode == SAMC_MODE_EXACT
                              ? check_uniformity(s->e(), parse_scalar<Rational>(shift), c)
                              : check_uniformity(s->f(), parse_scalar<double>(shift), c);
        *out = from_axiom_report(rep, "uniformity of " + s->name + " under shift " + shift);
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_check_condition_star(samc_mode mode, int twisted, const samc_sample_cfg* cfg,
                                      samc_report** out) {
    if (!out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        SampleConfig c = to_config(cfg);
        AxiomReport rep = mode == SAMC_MODE_EXACT
                              ? check_condition_star<Rational>(c, twisted != 0)
                              : check_condition_star<double>(c, twisted != 0);
        *out = from_axiom_report(rep, std::string("condition (*)") + (twisted ? " twisted" : ""));
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_check_condition_starstar(samc_mode mode, int twisted, const char* bprime,
                                          int t_exp_min, int t_exp_max, int angle_samples,
                                          uint64_t seed, samc_report** out) {
    if (!bprime || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    if (t_exp_min > t_exp_max || angle_samples <= 0)
        return fail(SAMC_ERR_BAD_ARG, "bad t-exponent range or angle count");
    try {
        ConvergenceReport rep;
        if (mode == SAMC_MODE_EXACT) {
            std::vector<Rational> ts;
            for (int i = t_exp_min; i <= t_exp_max; ++i)
                ts.push_back(Rational(1, 1L << std::min(i, 62)));
            rep = check_condition_starstar<Rational>(parse_point_arg<Rational>(bprime), ts,
                                                     twisted != 0, angle_samples, seed);
        } else {
            std::vector<double> ts;
            for (int i = t_exp_min; i <= t_exp_max; ++i) ts.push_back(std::ldexp(1.0, -i));
            rep = check_condition_starstar<double>(parse_point_arg<double>(bprime), ts,
                                                   twisted != 0, angle_samples, seed);
        }
        auto* r = new samc_report;
        r->passed = rep.passed();
        r->violations = rep.plateau_failures;
        r->checked = int64_t(rep.rows.size());
        r->csv = convergence_report_csv(rep);
        r->summary = std::string("condition (**)") + (twisted ? " twisted" : "") + " at b'=" +
                     bprime + (rep.passed() ? ": plateau exact" : ": PLATEAU FAILURES");
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_verify_isometry(samc_mode mode, const char* b0, int reversed,
                                 const samc_sample_cfg* cfg, samc_report** out) {
    if (!b0 || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        SampleConfig c = to_config(cfg);
        AxiomReport rep;
        if (mode == SAMC_MODE_EXACT) {
            Vec2<Rational> b = parse_point_arg<Rational>(b0);
            if (b.x1 != Rational(1)) return fail(SAMC_ERR_BAD_ARG, "b0 must lie on the boundary");
            rep = verify_isometry(IsometryWitness<Rational>::from_boundary_angle(b.x2,
                                                                                  reversed != 0),
                                  c);
        } else {
            Vec2<double> b = parse_point_arg<double>(b0);
            if (b.x1 != 1.0) return fail(SAMC_ERR_BAD_ARG, "b0 must lie on the boundary");
            rep = verify_isometry(IsometryWitness<double>::from_boundary_angle(b.x2,
                                                                                reversed != 0),
                                  c);
        }
        *out = from_axiom_report(rep, std::string("isometry at b0=") + b0);
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_winding_profile(const char* b0, const double* x1, size_t n, samc_report** out) {
    if (!b0 || !x1 || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        Vec2<double> b = parse_point_arg<double>(b0);
        if (b.x1 != 1.0) return fail(SAMC_ERR_BAD_ARG, "b0 must lie on the boundary");
        auto w = IsometryWitness<double>::from_boundary_angle(b.x2);
        std::vector<double> xs(x1, x1 + n);
        auto rows = winding_profile(w, xs);
        auto* r = new samc_report;
        r->checked = int64_t(rows.size());
        bool ok = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            r->stats["analytic." + std::to_string(i)] = rows[i].half_turns_analytic;
            r->stats["accumulated." + std::to_string(i)] = rows[i].half_turns_accumulated;
            if (std::abs(rows[i].half_turns_analytic - rows[i].half_turns_accumulated) > 1.0)
                ok = false;
        }
        r->passed = ok;
        r->csv = winding_csv(rows);
        r->summary = "winding profile at b0=" + std::string(b0) +
                     (ok ? ": accumulation matches analytic" : ": MISMATCH");
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_landmark_injectivity(const samc_space* s, int landmarks,
                                      const samc_sample_cfg* cfg, samc_report** out) {
    if (!s || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    if (landmarks < 1) return fail(SAMC_ERR_BAD_ARG, "need at least one landmark");
    try {
        SampleConfig c = to_config(cfg);
        CollisionReport rep;
        if (s->mode == SAMC_MODE_EXACT)
            rep = landmark_injectivity_check(s->e(), default_landmarks<Rational>(c.seed, landmarks),
                                             c);
        else
            rep = landmark_injectivity_check(s->f(), default_landmarks<double>(c.seed, landmarks),
                                             c);
        auto* r = new samc_report;
        r->passed = rep.collisions == 0;
        r->violations = rep.collisions;
        r->checked = rep.sampled;
        r->stats["collisions"] = double(rep.collisions);
        r->csv = "p,q\n";
        for (auto& [p, q] : rep.witnesses) r->csv += p + "," + q + "\n";
        r->summary = "fingerprint injectivity with " + std::to_string(landmarks) +
                     " landmarks: " + std::to_string(rep.collisions) + " collisions";
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_detect_boundary_bad(const samc_space* s, double resolution, samc_report** out) {
    if (!s || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    if (!(resolution > 0)) return fail(SAMC_ERR_BAD_ARG, "resolution must be positive");
    try {
        auto points = detect_boundary_bad_set(s->f(), resolution);
        std::vector<BadnessReport> reports;
        auto t_list = dyadic_t_list(6, 20);
        for (const Vec2<double>& p : points)
            reports.push_back(
                detect_r_bad(s->f(), p, default_curve_family(p.x2), Gauge::identity(), t_list));
        auto* r = new samc_report;
        r->checked = int64_t(points.size());
        r->stats["count"] = double(points.size());
        for (size_t i = 0; i < points.size(); ++i) {
            r->stats["point." + std::to_string(i) + ".x1"] = points[i].x1;
            r->stats["point." + std::to_string(i) + ".x2"] = points[i].x2;
            r->stats["point." + std::to_string(i) + ".limit"] = reports[i].limit;
        }
        r->csv = badness_csv(reports);
        r->summary = "boundary scan of " + s->name + ": " + std::to_string(points.size()) +
                     " bad point(s)";
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_detect_bad_point(const samc_space* s, const char* point, int r_bad,
                                  samc_report** out) {
    if (!s || !point || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        Vec2<double> p = parse_point_arg<double>(point);
        auto t_list = dyadic_t_list(6, 20);
        BadnessReport rep =
            r_bad ? detect_r_bad(s->f(), p, default_curve_family(p.x2), Gauge::identity(), t_list)
                  : detect_bad(s->f(), p, default_curve_family(p.x2), t_list);
        auto* r = new samc_report;
        r->passed = true;
        r->checked = rep.pairs_scanned;
        r->stats["bad"] = rep.verdict_bad ? 1.0 : 0.0;
        r->stats["r_bad"] = rep.verdict_r_bad ? 1.0 : 0.0;
        r->stats["limit"] = rep.limit;
        r->stats["ratio_sup"] = rep.ratio_sup;
        r->csv = badness_csv({rep});
        r->summary = std::string("point ") + point + " on " + s->name + ": " +
                     (rep.verdict_bad ? "bad" : "no witness found at this resolution");
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_estimate_gauge(const samc_space* s, double resolution, samc_report** out) {
    if (!s || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        auto t_list = dyadic_t_list(6, 20);
        auto points = detect_boundary_bad_set(s->f(), resolution);
        if (points.empty())
            return fail(SAMC_ERR_DOMAIN, "no bad points detected; nothing to separate");
        std::vector<GaugeSample> samples;
        for (const Vec2<double>& p : points) {
            auto more = collect_gauge_samples(s->f(), default_curve_family(p.x2), t_list);
            samples.insert(samples.end(), more.begin(), more.end());
        }
        DetectorOptions opt;
        Gauge g = estimate_gauge(samples, opt.bad_threshold);
        bool contract = true;
        for (const GaugeSample& smp : samples)
            if (!(smp.u > g(smp.t))) contract = false;
        auto* r = new samc_report;
        r->passed = contract;
        r->checked = int64_t(samples.size());
        for (int e = 0; e <= 24; ++e)
            r->stats["r_at." + std::to_string(e)] = g(std::ldexp(1.0, -e));
        r->csv = gauge_csv(g);
        r->summary = "gauge from " + std::to_string(samples.size()) + " samples" +
                     (contract ? " (all samples above the staircase)" : ": CONTRACT FAILURE");
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_blowup_probe(const samc_space* s, const char* center, const char* eps,
                              int arc_samples, samc_report** out) {
    if (!s || !center || !eps || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    if (arc_samples < 2) return fail(SAMC_ERR_BAD_ARG, "need at least two arc samples");
    try {
        Vec2<double> c = parse_point_arg<double>(center);
        double e = parse_double(eps);
        if (!(e > 0)) return fail(SAMC_ERR_BAD_ARG, "eps must be positive");
        auto h = HoleBlowUp<double>::at_point(VecN<double>{c.x1, c.x2}, e);
        Metric<double> pulled = pullback_metric(s->f(), h);
        double a_lo = s->f().kind == SpaceKind::plane ? -M_PI : -M_PI / 2;
        double a_hi = s->f().kind == SpaceKind::plane ? M_PI : M_PI / 2;
        std::vector<double> params;
        for (int k = 0; k < arc_samples; ++k)
            params.push_back(a_lo + (a_hi - a_lo) * double(k) / double(arc_samples - 1));
        ExtensionReport rep =
            extension_probe(pulled, BoundaryApproach{c, e}, params, dyadic_t_list(6, 20));
        auto* r = new samc_report;
        r->passed = rep.passed();
        r->checked = int64_t(rep.rows.size());
        double residual_max = 0;
        for (double v : rep.residuals) residual_max = std::max(residual_max, v);
        r->stats["residual_max"] = residual_max;
        for (size_t i = 0; i < rep.boundary.size(); ++i) {
            r->stats["param." + std::to_string(i)] = params[i];
            for (size_t j = 0; j < rep.boundary.size(); ++j)
                r->stats["boundary." + std::to_string(i) + "." + std::to_string(j)] =
                    rep.boundary[i][j];
        }
        r->csv = extension_report_csv(rep);
        r->matrix_csv = boundary_matrix_csv(params, rep.boundary);
        r->summary = "extension probe at center " + std::string(center) + ": " +
                     to_string(rep.verdict);
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_compactify(const samc_space* s, const char* eps, double resolution,
                            int arc_samples, const char* outdir, samc_report** out) {
    if (!s || !eps || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    try {
        CompactifyOptions opt;
        opt.eps = parse_double(eps);
        if (!(opt.eps > 0)) return fail(SAMC_ERR_BAD_ARG, "eps must be positive");
        if (resolution > 0) opt.resolution = resolution;
        if (arc_samples >= 2) opt.arc_samples = arc_samples;
        CompactificationResult res = compactify_strip(s->f(), opt);
        if (outdir) res.write_directory(outdir);
        auto* r = new samc_report;
        r->passed = res.passed();
        r->checked = int64_t(res.bad_set.size());
        r->stats["bad_count"] = double(res.bad_set.size());
        for (size_t i = 0; i < res.bad_set.size(); ++i) {
            r->stats["bad." + std::to_string(i) + ".x1"] = res.bad_set[i].x1;
            r->stats["bad." + std::to_string(i) + ".x2"] = res.bad_set[i].x2;
            r->stats["eps." + std::to_string(i)] = res.eps[i];
        }
        r->csv = res.tables.empty() ? std::string("alpha\n")
                                    : boundary_matrix_csv(res.arc_params, res.tables[0]);
        if (!res.tables.empty())
            r->matrix_csv = boundary_matrix_csv(res.arc_params, res.tables[0]);
        r->summary = "compactify " + s->name + ": " + to_string(res.verdict) +
                     (res.detail.empty() ? "" : " (" + res.detail + ")");
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

samc_status samc_levelset_render(const samc_space* s, const char* base, const double* values,
                                 size_t n_values, int grid, const char* svg_path,
                                 const char* csv_path, samc_report** out) {
    if (!s || !base || !values || !out) return fail(SAMC_ERR_BAD_ARG, "null argument");
    if (grid < 2) return fail(SAMC_ERR_BAD_ARG, "grid must be at least 2");
    try {
        const Metric<double>& m = s->f();
        Vec2<double> b = parse_point_arg<double>(base);
        Box<double> region = m.region;
        if (m.kind == SpaceKind::strip) region.x1_lo = 1.0 / grid;
        if (m.kind == SpaceKind::disk) region = Box<double>{0.0, 1.0, 0.0, 2.0};
        Grid g = sample_grid(m, b, region, grid, grid);

        std::vector<LevelPolyline> all;
        auto* r = new samc_report;
        for (size_t i = 0; i < n_values; ++i) {
            auto polys = marching_squares(g, values[i]);
            SlopeFractions sf = slope_classify(polys, 2.0);
            r->stats["other_frac." + std::to_string(i)] = sf.other;
            r->stats["vertical_frac." + std::to_string(i)] = sf.vertical;
            r->stats["plateau." + std::to_string(i)] = plateau_detect(g, values[i], 1e-9);
            r->stats["polylines." + std::to_string(i)] = double(polys.size());
            all.insert(all.end(), polys.begin(), polys.end());
        }
        r->checked = int64_t(all.size());
        if (svg_path) {
            SvgSpec spec;
            spec.disk_coords = m.kind == SpaceKind::disk;
            spec.title = m.name + " level sets";
            write_text_file(svg_path, emit_svg(all, region, spec));
        }
        r->csv = grid_csv(g);
        if (csv_path) write_text_file(csv_path, r->csv);
        r->summary = "level sets of " + m.name + ": " + std::to_string(all.size()) +
                     " polylines over " + std::to_string(n_values) + " value(s)";
        *out = r;
        return SAMC_OK;
    } catch (...) {
        return translate_exception();
    }
}

}  // extern "C"
