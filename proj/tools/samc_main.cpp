// Command-line front end. Subcommands map one-to-one onto the C API; exit
// code 0 means every requested verdict passed, 1 means a verification
// failure, 2 means usage errors.

#include <samc/samc.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace {

struct SpaceHandle {
    samc_space* s = nullptr;
    ~SpaceHandle() { samc_space_close(s); }
};

struct ReportHandle {
    samc_report* r = nullptr;
    ~ReportHandle() { samc_report_close(r); }
};

int fail_with(samc_status st) {
    std::fprintf(stderr, "error: %s\n", samc_last_error());
    return st == SAMC_ERR_BAD_ARG || st == SAMC_ERR_BAD_NAME ? 2 : 1;
}

// Relative output paths land in SAMC_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
    if (path.empty()) return path;
    const char* dir = std::getenv("SAMC_OUT_DIR");
    if (!dir || *dir == '\0' || std::filesystem::path(path).is_absolute()) return path;
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / path).string();
}

int open_space(const std::string& name, const std::string& mode, SpaceHandle& h) {
    samc_mode m = mode == "exact" ? SAMC_MODE_EXACT : SAMC_MODE_FLOAT;
    samc_status st = samc_space_open(name.c_str(), m, &h.s);
    if (st != SAMC_OK) return fail_with(st);
    return 0;
}

int finish(samc_report* rep, const std::string& csv_out) {
    std::printf("%s\n", samc_report_summary(rep));
    if (!csv_out.empty()) {
        std::string path = resolve_out(csv_out);
        samc_status st = samc_report_write_csv(rep, path.c_str());
        if (st != SAMC_OK) return fail_with(st);
        std::printf("report written to %s\n", path.c_str());
    }
    return samc_report_passed(rep) ? 0 : 1;
}

std::vector<double> parse_values_list(const std::string& text) {
    std::vector<double> out;
    std::string tok;
    for (char c : text + ",") {
        if (c == ',') {
            if (!tok.empty()) out.push_back(std::strtod(tok.c_str(), nullptr));
            tok.clear();
        } else {
            tok.push_back(c);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semialgebraic metric construction and verification"};
    app.set_config("--config", "", "flat key=value config with a section per subcommand");
    app.require_subcommand(1);

    std::string space = "strip.dX", mode = "exact", out_csv, point = "origin";
    std::string b0 = "1,0", shift = "1", eps = "1/8", center = "0,0", bprime = "3/5,0";
    std::string outdir;
    uint64_t seed = 7;
    int64_t samples = 10000;
    int workers = 1, grid = 256, arc_samples = 33, landmarks = 3;
    int t_exp_min = 2, t_exp_max = 20, angles = 32;
    bool twisted = false, reversed = false, r_bad = false;
    double tol = 1e-12, resolution = 1.0 / 64;
    std::string x1_text = "1e-3", values_text = "0.125,0.25,0.375";

    auto add_sampling = [&](CLI::App* cmd) {
        cmd->add_option("--samples", samples, "sample count");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--workers", workers, "worker threads");
        cmd->add_option("--tol", tol, "float-mode tolerance");
        cmd->add_option("--mode", mode, "exact | float");
    };

    auto* vm = app.add_subcommand("verify-metric", "metric axioms on sampled triples");
    vm->add_option("--space", space, "registered space name");
    add_sampling(vm);
    vm->add_option("--out", out_csv, "violations CSV path");

    auto* vi = app.add_subcommand("verify-isometry", "isometry family exactness");
    vi->add_option("--b0", b0, "boundary point r,a");
    vi->add_flag("--reversed", reversed, "orientation-reversing partner");
    add_sampling(vi);
    vi->add_option("--out", out_csv, "violations CSV path");

    auto* vc = app.add_subcommand("verify-conditions", "quotient conditions (*) and (**)");
    vc->add_flag("--twisted", twisted, "use the twisted metrics");
    vc->add_option("--bprime", bprime, "reference point for the origin limit");
    vc->add_option("--tmin", t_exp_min, "smallest t exponent");
    vc->add_option("--tmax", t_exp_max, "largest t exponent");
    vc->add_option("--angles", angles, "angle samples per t");
    add_sampling(vc);
    vc->add_option("--out", out_csv, "convergence CSV path");

    auto* bp = app.add_subcommand("badpoints", "boundary bad-set scan / point verdict");
    bp->add_option("--space", space, "registered space name");
    bp->add_option("--resolution", resolution, "boundary grid resolution");
    bp->add_option("--point", point, "single point to test instead of scanning");
    bp->add_flag("--r-bad", r_bad, "also test r-badness with gauge r(t)=t");
    bp->add_option("--out", out_csv, "badness CSV path");

    auto* ga = app.add_subcommand("gauge", "separation gauge estimation");
    ga->add_option("--space", space, "registered space name");
    ga->add_option("--resolution", resolution, "boundary grid resolution");
    ga->add_option("--out", out_csv, "gauge breakpoints CSV path");

    auto* bl = app.add_subcommand("blowup", "hole-blow-up extension probe");
    bl->add_option("--space", space, "registered space name");
    bl->add_option("--center", center, "center point x,y");
    bl->add_option("--eps", eps, "hole radius");
    bl->add_option("--arc-samples", arc_samples, "boundary parameters probed");
    bl->add_option("--out", out_csv, "extension report CSV path");

    auto* co = app.add_subcommand("compactify", "strip compactification pipeline");
    co->add_option("--space", space, "registered space name");
    co->add_option("--eps", eps, "hole radius at each bad point");
    co->add_option("--resolution", resolution, "boundary grid resolution");
    co->add_option("--arc-samples", arc_samples, "boundary table resolution");
    co->add_option("--outdir", outdir, "result directory");
    co->add_option("--out", out_csv, "boundary matrix CSV path");

    auto* wi = app.add_subcommand("winding", "winding profile of the isometry image");
    wi->add_option("--b0", b0, "boundary point r,a");
    wi->add_option("--x1", x1_text, "comma-separated x1 values");
    wi->add_option("--out", out_csv, "profile CSV path");

    auto* ls = app.add_subcommand("levelset", "level-set extraction and SVG render");
    ls->add_option("--space", space, "registered space name");
    ls->add_option("--base", point, "base point of the distance field");
    ls->add_option("--values", values_text, "comma-separated level values");
    ls->add_option("--grid", grid, "grid resolution per axis");
    ls->add_option("--out", out_csv, "SVG path");
    std::string grid_csv_path;
    ls->add_option("--grid-csv", grid_csv_path, "grid CSV path");

    auto* fp = app.add_subcommand("landmarks", "fingerprint injectivity check");
    fp->add_option("--space", space, "registered space name");
    fp->add_option("--landmarks", landmarks, "landmark count");
    add_sampling(fp);
    fp->add_option("--out", out_csv, "collision CSV path");

    auto* un = app.add_subcommand("uniformity", "x2-translation invariance");
    un->add_option("--space", space, "registered space name");
    un->add_option("--shift", shift, "translation amount");
    add_sampling(un);
    un->add_option("--out", out_csv, "violations CSV path");

    auto* names = app.add_subcommand("spaces", "list registered spaces");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    samc_sample_cfg cfg{};
    cfg.seed = seed;
    cfg.count = samples;
    cfg.workers = workers;
    cfg.tol = tol;
    samc_mode smode = mode == "exact" ? SAMC_MODE_EXACT : SAMC_MODE_FLOAT;

    if (names->parsed()) {
        size_t need = samc_registry_names(nullptr, 0);
        std::string buf(need, '\0');
        samc_registry_names(buf.data(), buf.size());
        std::printf("%s\n", buf.c_str());
        return 0;
    }

    ReportHandle rep;
    samc_status st = SAMC_OK;

    if (vm->parsed()) {
        SpaceHandle h;
        if (int rc = open_space(space, mode, h)) return rc;
        st = samc_check_axioms(h.s, &cfg, &rep.r);
    } else if (vi->parsed()) {
        st = samc_verify_isometry(smode, b0.c_str(), reversed ? 1 : 0, &cfg, &rep.r);
    } else if (vc->parsed()) {
        ReportHandle star;
        st = samc_check_condition_star(smode, twisted ? 1 : 0, &cfg, &star.r);
        if (st != SAMC_OK) return fail_with(st);
        std::printf("%s\n", samc_report_summary(star.r));
        if (!samc_report_passed(star.r)) return 1;
        st = samc_check_condition_starstar(smode, twisted ? 1 : 0, bprime.c_str(), t_exp_min,
                                           t_exp_max, angles, seed, &rep.r);
    } else if (bp->parsed()) {
        SpaceHandle h;
        if (int rc = open_space(space, "float", h)) return rc;
        if (bp->count("--point"))
            st = samc_detect_bad_point(h.s, point.c_str(), r_bad ? 1 : 0, &rep.r);
        else
            st = samc_detect_boundary_bad(h.s, resolution, &rep.r);
    } else if (ga->parsed()) {
        SpaceHandle h;
        if (int rc = open_space(space, "float", h)) return rc;
        st = samc_estimate_gauge(h.s, resolution, &rep.r);
    } else if (bl->parsed()) {
        SpaceHandle h;
        if (int rc = open_space(space, "float", h)) return rc;
        st = samc_blowup_probe(h.s, center.c_str(), eps.c_str(), arc_samples, &rep.r);
        if (st == SAMC_OK && !out_csv.empty()) {
            std::string mpath = resolve_out(out_csv) + ".matrix.csv";
            if (samc_report_write_matrix_csv(rep.r, mpath.c_str()) == SAMC_OK)
                std::printf("boundary matrix written to %s\n", mpath.c_str());
        }
    } else if (co->parsed()) {
        SpaceHandle h;
        if (int rc = open_space(space, "float", h)) return rc;
        std::string dir = outdir.empty() ? "" : resolve_out(outdir);
        st = samc_compactify(h.s, eps.c_str(), resolution, arc_samples,
                             dir.empty() ? nullptr : dir.c_str(), &rep.r);
    } else if (wi->parsed()) {
        std::vector<double> xs = parse_values_list(x1_text);
        st = samc_winding_profile(b0.c_str(), xs.data(), xs.size(), &rep.r);
        if (st == SAMC_OK) {
            for (size_t i = 0; i < xs.size(); ++i) {
                double analytic = 0, accumulated = 0;
                samc_report_stat(rep.r, ("analytic." + std::to_string(i)).c_str(), &analytic);
                samc_report_stat(rep.r, ("accumulated." + std::to_string(i)).c_str(),
                                 &accumulated);
                std::printf("x1=%g: %g half-turns analytic, %g accumulated\n", xs[i], analytic,
                            accumulated);
            }
        }
    } else if (ls->parsed()) {
        SpaceHandle h;
        if (int rc = open_space(space, "float", h)) return rc;
        std::vector<double> vals = parse_values_list(values_text);
        std::string svg = out_csv.empty() ? "" : resolve_out(out_csv);
        std::string gcsv = grid_csv_path.empty() ? "" : resolve_out(grid_csv_path);
        st = samc_levelset_render(h.s, point.c_str(), vals.data(), vals.size(), grid,
                                  svg.empty() ? nullptr : svg.c_str(),
                                  gcsv.empty() ? nullptr : gcsv.c_str(), &rep.r);
        if (st == SAMC_OK && !svg.empty()) std::printf("svg written to %s\n", svg.c_str());
        out_csv.clear();  // already written as SVG
    } else if (fp->parsed()) {
        SpaceHandle h;
        if (int rc = open_space(space, mode, h)) return rc;
        st = samc_landmark_injectivity(h.s, landmarks, &cfg, &rep.r);
    } else if (un->parsed()) {
        SpaceHandle h;
        if (int rc = open_space(space, mode, h)) return rc;
        st = samc_check_uniformity(h.s, shift.c_str(), &cfg, &rep.r);
    }

    if (st != SAMC_OK) return fail_with(st);
    return finish(rep.r, out_csv);
}
