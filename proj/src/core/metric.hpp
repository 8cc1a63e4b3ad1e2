#pragma once

#include "core/geom.hpp"
#include "core/rng.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace samc {

enum class SpaceKind { strip, disk, plane };

// Runtime metric descriptor: a named distance function with a domain
// predicate. Kernels behind `dist` are pure; evaluation through eval_metric
// enforces the domain.
template <class S>
struct Metric {
    std::string name;
    SpaceKind kind = SpaceKind::plane;
    bool exact_capable = false;
    Box<S> region{};  // default sampling region
    std::function<bool(const Vec2<S>&)> domain;
    std::function<S(const Vec2<S>&, const Vec2<S>&)> dist;
};

template <class S>
S eval_metric(const Metric<S>& m, const Vec2<S>& p, const Vec2<S>& q) {
    if (!m.domain(p))
        throw domain_error(m.name + ": point outside domain: " + format_point(p));
    if (!m.domain(q))
        throw domain_error(m.name + ": point outside domain: " + format_point(q));
    return m.dist(p, q);
}

struct SampleConfig {
    uint64_t seed = 1;
    int64_t count = 1000;
    int workers = 1;
    double tol = 1e-12;  // float mode only; exact mode compares exactly
    bool has_region = false;
    Box<double> region{};  // overrides the metric's default when set
};

struct Violation {
    std::string axiom;
    std::string p, q, r;  // r empty for two-point axioms
    std::string lhs, rhs;
};

struct AxiomReport {
    int64_t checked_identity = 0;
    int64_t checked_positivity = 0;
    int64_t checked_symmetry = 0;
    int64_t checked_triangle = 0;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    int64_t checked_total() const {
        return checked_identity + checked_positivity + checked_symmetry + checked_triangle;
    }
};

// Deterministic point sampler. Disk points are drawn canonically (r in (0,1],
// a in [0,2)) with the origin injected periodically so origin rules are
// always exercised; strip x1 stays in the half-open (0, hi].
template <class S>
Vec2<S> sample_point(SpaceKind kind, const Box<S>& box, uint64_t seed, uint64_t stream,
                     uint64_t index) {
    if (kind == SpaceKind::disk) {
        if (index % 997 == 0) return Vec2<S>{S(0), S(0)};
        S r = lattice_to_unit_open<S>(sample_lattice(seed, stream * 2 + 1, index));
        S a = lattice_to_unit<S>(sample_lattice(seed, stream * 2 + 2, index)) * S(2);
        if (a >= S(2)) a = S(0);
        return Vec2<S>{r, a};
    }
    S x1;
    if (kind == SpaceKind::strip && box.x1_lo == S(0)) {
        x1 = box.x1_lo +
             lattice_to_unit_open<S>(sample_lattice(seed, stream * 2 + 1, index)) *
                 (box.x1_hi - box.x1_lo);
    } else {
        x1 = sample_in<S>(seed, stream * 2 + 1, index, box.x1_lo, box.x1_hi);
    }
    S x2 = sample_in<S>(seed, stream * 2 + 2, index, box.x2_lo, box.x2_hi);
    return Vec2<S>{x1, x2};
}

template <class S>
Box<S> effective_region(const Metric<S>& m, const SampleConfig& cfg) {
    if (!cfg.has_region) return m.region;
    // Doubles are binary rationals, so this conversion is exact in both modes.
    return Box<S>{S(cfg.region.x1_lo), S(cfg.region.x1_hi), S(cfg.region.x2_lo),
                  S(cfg.region.x2_hi)};
}

}  // namespace samc
