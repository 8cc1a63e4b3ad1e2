#pragma once

// Explicit metrics on the strip X = (0,1] x R: the piecewise max-form d_X,
// the twisting function phi, and the sheared metric obtained by evaluating
// d_X on twisted second coordinates. All three are piecewise rational, so
// exact mode is total for them.

#include "core/geom.hpp"

#include <functional>

namespace samc {

template <class S>
bool in_strip(const Vec2<S>& p) {
    return S(0) < p.x1 && p.x1 <= S(1);
}

// d_X. The pair is normalized so the first argument carries the larger first
// coordinate; ties fall through both orderings to the same value.
template <class S>
S d_strip(const Vec2<S>& p, const Vec2<S>& q) {
    const Vec2<S>* hi = &p;
    const Vec2<S>* lo = &q;
    if (hi->x1 < lo->x1) std::swap(hi, lo);
    S gap1 = hi->x1 - lo->x1;
    S gap2 = abs_val<S>(hi->x2 - lo->x2);
    S cap = hi->x1 / 2;
    if (gap1 <= cap && gap2 <= cap) return max_val(gap1, gap2);
    return cap;
}

template <class S>
S phi(const S& t) {
    if (!(S(0) < t)) throw domain_error("phi: argument must be positive, got " + format_scalar(t));
    return S(-S(1) / t + S(1));
}

// Pluggable twist; the default is phi(t) = -1/t + 1 (strictly increasing,
// phi(1) = 0, unbounded below as t -> 0+).
template <class S>
struct TwistFn {
    std::function<S(const S&)> eval = [](const S& t) { return phi<S>(t); };
    S operator()(const S& t) const { return eval(t); }
};

template <class S>
Vec2<S> twist_point(const Vec2<S>& p, const TwistFn<S>& tw) {
    return Vec2<S>{p.x1, p.x2 + tw(p.x1)};
}

template <class S>
S d_strip_twisted(const Vec2<S>& p, const Vec2<S>& q, const TwistFn<S>& tw = {}) {
    return d_strip(twist_point(p, tw), twist_point(q, tw));
}

}  // namespace samc
