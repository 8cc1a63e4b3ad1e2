#pragma once

#include "core/scalar.hpp"

#include <string>
#include <vector>

namespace samc {

// Plain 2-vector. Interpretation depends on the space: strip points carry
// (x1, x2) with 0 < x1 <= 1; disk points carry (r, a) with the angle a in
// half-turns, r in [0,1], and the canonical origin (0, 0).
template <class S>
struct Vec2 {
    S x1{};
    S x2{};

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x1 == b.x1 && a.x2 == b.x2; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

template <class S>
std::string format_point(const Vec2<S>& p) {
    return format_scalar(p.x1) + ";" + format_scalar(p.x2);
}

template <class S>
Vec2<S> parse_point(const std::string& text) {
    auto sep = text.find(',');
    if (sep == std::string::npos) sep = text.find(';');
    if (sep == std::string::npos) throw parse_error("point needs two coordinates: " + text);
    return Vec2<S>{parse_scalar<S>(text.substr(0, sep)), parse_scalar<S>(text.substr(sep + 1))};
}

template <class S>
struct Box {
    S x1_lo{}, x1_hi{}, x2_lo{}, x2_hi{};
};

// Small dynamic vector for the blow-up maps, which are dimension generic.
template <class S>
using VecN = std::vector<S>;

template <class S>
S squared_norm(const VecN<S>& v) {
    S acc(0);
    for (const S& c : v) acc += c * c;
    return acc;
}

template <class S>
S norm(const VecN<S>& v) {
    return scalar_traits<S>::sqrt(squared_norm(v));
}

template <class S>
VecN<S> sub(const VecN<S>& a, const VecN<S>& b) {
    VecN<S> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

template <class S>
VecN<S> add(const VecN<S>& a, const VecN<S>& b) {
    VecN<S> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

template <class S>
VecN<S> scale(const S& c, const VecN<S>& v) {
    VecN<S> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

template <class S>
std::string format_vec(const VecN<S>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ";";
        out += format_scalar(v[i]);
    }
    return out;
}

}  // namespace samc
