#pragma once

// Checkers for the quotient-compatibility conditions the strip metrics must
// satisfy: the fiber-distance identity for small second-coordinate gaps and
// the |b'|/2 limit at the origin.

#include "core/disk_metric.hpp"
#include "core/metric.hpp"

namespace samc {

// For sampled strip pairs, the min over deck shifts must equal the direct
// strip distance whenever the (twisted) gap is <= 1 and never exceed it
// otherwise. Exact in exact mode.
template <class S>
AxiomReport check_condition_star(const SampleConfig& cfg, bool twisted) {
    AxiomReport rep;
    TwistFn<S> tw{};
    Box<S> box{S(0), S(1), S(-3), S(3)};  // wide x2 so both branches occur
    for (int64_t i = 0; i < cfg.count; ++i) {
        Vec2<S> x = sample_point<S>(SpaceKind::strip, box, cfg.seed, 61, uint64_t(i));
        Vec2<S> y = sample_point<S>(SpaceKind::strip, box, cfg.seed, 67, uint64_t(i));
        S direct = twisted ? d_strip_twisted(x, y, tw) : d_strip(x, y);
        S gap = twisted ? abs_val<S>(x.x2 + tw(x.x1) - y.x2 - tw(y.x1)) : abs_val<S>(x.x2 - y.x2);
        S quotient = twisted ? d_disk_twisted(Vec2<S>{x.x1, x.x2}, Vec2<S>{y.x1, y.x2}, tw)
                             : d_disk(Vec2<S>{x.x1, x.x2}, Vec2<S>{y.x1, y.x2});
        const char* axiom = twisted ? "condition_star_twisted" : "condition_star";
        if (gap <= S(1)) {
            ++rep.checked_identity;
            if (!(quotient == direct))
                rep.violations.push_back({axiom, format_point(x), format_point(y), "",
                                          format_scalar(quotient), format_scalar(direct)});
        } else {
            ++rep.checked_triangle;
            if (!(quotient <= direct))
                rep.violations.push_back({axiom, format_point(x), format_point(y), "",
                                          format_scalar(quotient), format_scalar(direct)});
        }
    }
    return rep;
}

struct ConvergenceRow {
    std::string t, a, value, target, diff;
    bool exact_zero = false;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    // Rows where the plateau identity d(b_t, b') = r'/2 failed although
    // t < r'/2 already held.
    int64_t plateau_failures = 0;
    bool passed() const { return plateau_failures == 0; }
};

// d(b_t, b') - r'/2 for b_t = (t, a) over sampled angles; once t < r'/2 the
// difference must vanish exactly (the "otherwise" branch forces r'/2 for
// every deck shift).
template <class S>
ConvergenceReport check_condition_starstar(const Vec2<S>& bprime, const std::vector<S>& t_list,
                                           bool twisted, int angle_samples, uint64_t seed) {
    if (is_origin(bprime))
        throw domain_error("check_condition_starstar: b' must not be the origin");
    ConvergenceReport rep;
    TwistFn<S> tw{};
    S target = bprime.x1 / 2;
    for (const S& t : t_list) {
        for (int k = 0; k < angle_samples; ++k) {
            S a = lattice_to_unit<S>(sample_lattice(seed, 71, uint64_t(k))) * S(2);
            Vec2<S> bt{t, reduce_angle(a)};
            S value = twisted ? d_disk_twisted(bt, bprime, tw) : d_disk(bt, bprime);
            S diff = value - target;
            bool plateau_due = t < target;
            bool zero = diff == S(0);
            if (plateau_due && !zero) ++rep.plateau_failures;
            rep.rows.push_back({format_scalar(t), format_scalar(bt.x2), format_scalar(value),
                                format_scalar(target), format_scalar(diff), zero});
        }
    }
    return rep;
}

}  // namespace samc
