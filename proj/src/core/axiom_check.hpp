#pragma once

// Sampling-based verification of metric axioms and related invariants.
// Exact mode compares rationals exactly; float mode always compares against
// the explicit tolerance from the config. Work splits into per-index chunks
// whose samples are counter-based, so violation lists are identical for any
// worker count.

#include "core/metric.hpp"

#include <thread>

namespace samc {

namespace detail {

template <class S>
bool leq_tol(const S& lhs, const S& rhs, double tol) {
    if constexpr (scalar_traits<S>::exact)
        return lhs <= rhs;
    else
        return to_double(lhs) <= to_double(rhs) + tol;
}

template <class S>
bool eq_tol(const S& lhs, const S& rhs, double tol) {
    if constexpr (scalar_traits<S>::exact)
        return lhs == rhs;
    else
        return std::abs(to_double(lhs) - to_double(rhs)) <= tol;
}

inline void run_chunked(int64_t count, int workers,
                        const std::function<void(int64_t, int64_t, int)>& body) {
    if (workers <= 1) {
        body(0, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    int64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int64_t lo = w * chunk, hi = std::min<int64_t>(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, w] { body(lo, hi, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

template <class S>
AxiomReport check_metric_axioms(const Metric<S>& m, const SampleConfig& cfg) {
    const Box<S> box = effective_region(m, cfg);
    const int workers = std::max(1, cfg.workers);
    std::vector<AxiomReport> parts(static_cast<size_t>(workers));

    detail::run_chunked(cfg.count, workers, [&](int64_t lo, int64_t hi, int w) {
        AxiomReport& rep = parts[static_cast<size_t>(w)];
        for (int64_t i = lo; i < hi; ++i) {
            Vec2<S> p = sample_point<S>(m.kind, box, cfg.seed, 11, uint64_t(i));
            Vec2<S> q = sample_point<S>(m.kind, box, cfg.seed, 13, uint64_t(i));
            Vec2<S> r = sample_point<S>(m.kind, box, cfg.seed, 17, uint64_t(i));
            S dpq = m.dist(p, q), dqp = m.dist(q, p);
            S dpr = m.dist(p, r), dqr = m.dist(q, r);
            S dpp = m.dist(p, p);

            ++rep.checked_identity;
            if (!detail::eq_tol(dpp, S(0), cfg.tol))
                rep.violations.push_back({"identity", format_point(p), format_point(p), "",
                                          format_scalar(dpp), format_scalar(S(0))});
            ++rep.checked_positivity;
            if (p != q && detail::eq_tol(dpq, S(0), cfg.tol))
                rep.violations.push_back({"positivity", format_point(p), format_point(q), "",
                                          format_scalar(dpq), "0"});
            ++rep.checked_symmetry;
            if (!detail::eq_tol(dpq, dqp, cfg.tol))
                rep.violations.push_back({"symmetry", format_point(p), format_point(q), "",
                                          format_scalar(dpq), format_scalar(dqp)});
            ++rep.checked_triangle;
            if (!detail::leq_tol(dpr, S(dpq + dqr), cfg.tol))
                rep.violations.push_back({"triangle", format_point(p), format_point(q),
                                          format_point(r), format_scalar(dpr),
                                          format_scalar(S(dpq + dqr))});
        }
    });

    AxiomReport out;
    for (const AxiomReport& part : parts) {
        out.checked_identity += part.checked_identity;
        out.checked_positivity += part.checked_positivity;
        out.checked_symmetry += part.checked_symmetry;
        out.checked_triangle += part.checked_triangle;
        out.violations.insert(out.violations.end(), part.violations.begin(),
                              part.violations.end());
    }
    return out;
}

// Empirical sup of the distance over sampled pairs; the caller compares the
// result against the expected bound.
template <class S>
S check_boundedness(const Metric<S>& m, const SampleConfig& cfg) {
    const Box<S> box = effective_region(m, cfg);
    S sup(0);
    for (int64_t i = 0; i < cfg.count; ++i) {
        Vec2<S> p = sample_point<S>(m.kind, box, cfg.seed, 23, uint64_t(i));
        Vec2<S> q = sample_point<S>(m.kind, box, cfg.seed, 29, uint64_t(i));
        S d = m.dist(p, q);
        if (sup < d) sup = d;
    }
    return sup;
}

// Uniformity on the x2 factor: d(p + (0,a), q + (0,a)) = d(p, q).
template <class S>
AxiomReport check_uniformity(const Metric<S>& m, const S& shift, const SampleConfig& cfg) {
    const Box<S> box = effective_region(m, cfg);
    AxiomReport rep;
    for (int64_t i = 0; i < cfg.count; ++i) {
        Vec2<S> p = sample_point<S>(m.kind, box, cfg.seed, 31, uint64_t(i));
        Vec2<S> q = sample_point<S>(m.kind, box, cfg.seed, 37, uint64_t(i));
        Vec2<S> ps{p.x1, p.x2 + shift}, qs{q.x1, q.x2 + shift};
        S lhs = m.dist(ps, qs), rhs = m.dist(p, q);
        ++rep.checked_symmetry;
        if (!detail::eq_tol(lhs, rhs, cfg.tol))
            rep.violations.push_back({"uniformity", format_point(p), format_point(q), "",
                                      format_scalar(lhs), format_scalar(rhs)});
    }
    return rep;
}

}  // namespace samc
