#pragma once

// The closed disk as quotient of the strip by the covering x2 -> x2 + 2
// (angles counted in half-turns). Disk points are stored in strip
// coordinates (r, a), which keeps the whole construction rational; Cartesian
// form exists only for rendering.

#include "core/strip_metric.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace samc {

template <class S>
bool is_origin(const Vec2<S>& b) {
    return b.x1 == S(0);
}

template <class S>
bool in_disk(const Vec2<S>& b) {
    if (b.x1 < S(0) || S(1) < b.x1) return false;
    if (is_origin(b)) return b.x2 == S(0);
    return S(0) <= b.x2 && b.x2 < S(2);
}

// Reduce an angle to the canonical representative in [0, 2).
template <class S>
S reduce_angle(const S& a) {
    long n = scalar_traits<S>::floor_long(a / 2);
    S r = a - S(2) * scalar_traits<S>::from_int(n);
    if (r < S(0)) r += S(2);   // guards float rounding near the seam
    if (r >= S(2)) r -= S(2);
    return r;
}

// Deck shift n0 minimizing |x2 - y2 + 2 n0|; the tie (both residuals equal 1)
// goes to the smaller n. Either choice yields the same distance because the
// strip metrics depend on the second coordinate only through |delta|.
template <class S>
long shift_reduce(const S& x2, const S& y2) {
    S target = (y2 - x2) / 2;
    long nf = scalar_traits<S>::floor_long(target);
    S lo = abs_val<S>(x2 - y2 + S(2) * scalar_traits<S>::from_int(nf));
    S hi = abs_val<S>(x2 - y2 + S(2) * scalar_traits<S>::from_int(nf + 1));
    return hi < lo ? nf + 1 : nf;
}

namespace detail {

// Quotient distance: min over deck shifts of the given strip metric. A
// three-shift window around shift_reduce suffices because the strip metrics
// are non-decreasing in |delta x2| and capped; tests re-verify against a
// brute-force min over n in [-10, 10].
template <class S, class DistFn>
S quotient_min(const Vec2<S>& x, const Vec2<S>& y, const S& x2_eff, const S& y2_eff,
               DistFn&& dist) {
    long n0 = shift_reduce(x2_eff, y2_eff);
    S best = dist(x, Vec2<S>{y.x1, y.x2 - S(2) * scalar_traits<S>::from_int(n0)});
    for (long n : {n0 - 1, n0 + 1}) {
        S cand = dist(x, Vec2<S>{y.x1, y.x2 - S(2) * scalar_traits<S>::from_int(n)});
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace detail

template <class S>
S d_disk(const Vec2<S>& b, const Vec2<S>& c) {
    if (is_origin(b)) return c.x1 / 2;
    if (is_origin(c)) return b.x1 / 2;
    return detail::quotient_min<S>(b, c, b.x2, c.x2,
                                   [](const Vec2<S>& p, const Vec2<S>& q) { return d_strip(p, q); });
}

template <class S>
S d_disk_twisted(const Vec2<S>& b, const Vec2<S>& c, const TwistFn<S>& tw = {}) {
    if (is_origin(b)) return c.x1 / 2;
    if (is_origin(c)) return b.x1 / 2;
    // Shift reduction happens on the twisted second coordinates.
    S b2t = b.x2 + tw(b.x1), c2t = c.x2 + tw(c.x1);
    return detail::quotient_min<S>(b, c, b2t, c2t, [&](const Vec2<S>& p, const Vec2<S>& q) {
        return d_strip_twisted(p, q, tw);
    });
}

inline std::pair<double, double> to_cartesian(double r, double half_turns) {
    return {r * std::cos(M_PI * half_turns), r * std::sin(M_PI * half_turns)};
}

template <class S>
std::pair<double, double> to_cartesian(const Vec2<S>& b) {
    return to_cartesian(to_double(b.x1), to_double(b.x2));
}

}  // namespace samc
