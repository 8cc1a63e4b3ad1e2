/*
 * samc - semialgebraic metric construction and verification library.
 *
 * C API over the core: opaque handles, integer status codes, scalar values
 * passed as text ("num/den", integers, or decimal literals; exact-mode
 * results come back as "num/den"). Points are comma-separated coordinate
 * pairs; disk points use strip coordinates (radius, angle in half-turns)
 * with "origin" accepted for the center.
 */

#ifndef SAMC_H
#define SAMC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef SAMC_API
#if defined(_WIN32)
#define SAMC_API __declspec(dllexport)
#else
#define SAMC_API __attribute__((visibility("default")))
#endif
#endif

typedef enum samc_status {
    SAMC_OK = 0,
    SAMC_ERR_BAD_NAME = 1,    /* unknown space name */
    SAMC_ERR_DOMAIN = 2,      /* point outside the descriptor domain */
    SAMC_ERR_BAD_ARG = 3,     /* malformed argument or config */
    SAMC_ERR_UNSUPPORTED = 4, /* e.g. exact mode on a float-only space */
    SAMC_ERR_IO = 5,
    SAMC_ERR_INTERNAL = 6
} samc_status;

typedef enum samc_mode { SAMC_MODE_EXACT = 0, SAMC_MODE_FLOAT = 1 } samc_mode;

typedef struct samc_space samc_space;
typedef struct samc_report samc_report;

typedef struct samc_sample_cfg {
    uint64_t seed;
    int64_t count;
    int workers;
    double tol;          /* float mode comparisons only */
    int use_region;      /* nonzero: region overrides the space default */
    double region[4];    /* x1_lo, x1_hi, x2_lo, x2_hi */
} samc_sample_cfg;

/* Message for the most recent failing call on this thread. */
SAMC_API const char* samc_last_error(void);

/* Newline-joined registry names; returns the required buffer size. */
SAMC_API size_t samc_registry_names(char* buf, size_t cap);

SAMC_API samc_status samc_space_open(const char* name, samc_mode mode, samc_space** out);
SAMC_API void samc_space_close(samc_space* s);
SAMC_API const char* samc_space_name(const samc_space* s);
SAMC_API int samc_space_exact_capable(const samc_space* s);

/* Distance between two points, written as text into out (exact mode yields
 * "num/den"). */
SAMC_API samc_status samc_space_eval(const samc_space* s, const char* p, const char* q, char* out,
                            size_t cap);
SAMC_API samc_status samc_space_eval_f64(const samc_space* s, double p1, double p2, double q1, double q2,
                                double* out);

/* Reports: verdict, named statistics, row/violation counts, CSV dumps. */
SAMC_API int samc_report_passed(const samc_report* r);
SAMC_API int64_t samc_report_violations(const samc_report* r);
SAMC_API int64_t samc_report_checked(const samc_report* r);
SAMC_API samc_status samc_report_stat(const samc_report* r, const char* key, double* out);
SAMC_API const char* samc_report_summary(const samc_report* r);
SAMC_API samc_status samc_report_write_csv(const samc_report* r, const char* path);
/* Square boundary-distance matrix, when the report carries one (extension
 * probes and compactifications). */
SAMC_API samc_status samc_report_write_matrix_csv(const samc_report* r, const char* path);
SAMC_API void samc_report_close(samc_report* r);

/* Metric-axiom verification on seeded samples. */
SAMC_API samc_status samc_check_axioms(const samc_space* s, const samc_sample_cfg* cfg,
                              samc_report** out);
/* Empirical sup of the distance over sampled pairs (stat key "sup"). */
SAMC_API samc_status samc_check_boundedness(const samc_space* s, const samc_sample_cfg* cfg,
                                   samc_report** out);
/* Invariance under x2 translation by the given shift. */
SAMC_API samc_status samc_check_uniformity(const samc_space* s, const char* shift,
                                  const samc_sample_cfg* cfg, samc_report** out);

/* Quotient-compatibility conditions of the disk construction. */
SAMC_API samc_status samc_check_condition_star(samc_mode mode, int twisted, const samc_sample_cfg* cfg,
                                      samc_report** out);
SAMC_API samc_status samc_check_condition_starstar(samc_mode mode, int twisted, const char* bprime,
                                          int t_exp_min, int t_exp_max, int angle_samples,
                                          uint64_t seed, samc_report** out);

/* Isometry family verification for the boundary point b0 = "1,a". */
SAMC_API samc_status samc_verify_isometry(samc_mode mode, const char* b0, int reversed,
                                 const samc_sample_cfg* cfg, samc_report** out);

/* Winding profile of the image of the radius b0*0; stats
 * "analytic.<i>" / "accumulated.<i>" per requested x1. */
SAMC_API samc_status samc_winding_profile(const char* b0, const double* x1, size_t n,
                                 samc_report** out);

/* Landmark fingerprint injectivity check (landmark count >= 1). */
SAMC_API samc_status samc_landmark_injectivity(const samc_space* s, int landmarks,
                                      const samc_sample_cfg* cfg, samc_report** out);

/* Boundary bad-set scan for strip spaces (float mode). Stats
 * "count", "point.<i>.x1", "point.<i>.x2". */
SAMC_API samc_status samc_detect_boundary_bad(const samc_space* s, double resolution,
                                     samc_report** out);

/* Bad / r-bad verdict at one boundary point with the default curve family.
 * gauge_exponent selects r(t) = t^k for k = 1 (t-bad test). */
SAMC_API samc_status samc_detect_bad_point(const samc_space* s, const char* point, int r_bad,
                                  samc_report** out);

/* Gauge estimation from the default family at detected bad points; writes a
 * breakpoint staircase (stats "r_at.<exp>" evaluate r(2^-exp)). */
SAMC_API samc_status samc_estimate_gauge(const samc_space* s, double resolution, samc_report** out);

/* Extension probe of the pullback metric under a hole-blow-up at the given
 * center ("x,y") and radius eps. */
SAMC_API samc_status samc_blowup_probe(const samc_space* s, const char* center, const char* eps,
                              int arc_samples, samc_report** out);

/* Full compactification pipeline; writes the result directory when outdir is
 * non-NULL. */
SAMC_API samc_status samc_compactify(const samc_space* s, const char* eps, double resolution,
                            int arc_samples, const char* outdir, samc_report** out);

/* Level-set rendering: samples the field d(x, base), extracts the level
 * polylines and writes SVG / grid CSV (either path may be NULL). */
SAMC_API samc_status samc_levelset_render(const samc_space* s, const char* base, const double* values,
                                 size_t n_values, int grid, const char* svg_path,
                                 const char* csv_path, samc_report** out);

#ifdef __cplusplus
}
#endif

#endif /* SAMC_H */
