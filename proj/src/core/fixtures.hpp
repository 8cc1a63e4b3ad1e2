#pragma once

// Shipped metric descriptors. The four Theorem-2 metrics are exact-capable;
// the analysis fixtures involve Euclidean norms and live in float mode.
//
// sigma fixture: graph metric of sigma(x2/x1) = (x2/x1)/sqrt(1+(x2/x1)^2) on
// the strip. Along a line (t, x20 + c t) the third coordinate tends to
// sigma(c) when x20 = 0 and to sign(x20) otherwise, so (0,0) is the unique
// bad point and witness limits are |sigma(c) - sigma(c')|.
//
// annulus fixture: d(x, x') = |psi0^{-1}(x) - psi0^{-1}(x')| with
// psi0^{-1}(x) = (1 + eps/|x|) x, the metric the punctured disk inherits
// from the annulus {|y| >= eps}. Rays into 0 separate by eps|u - v|.

#include "core/disk_metric.hpp"
#include "core/metric.hpp"
#include "core/strip_metric.hpp"

#include <cmath>

namespace samc {

inline constexpr double annulus_eps = 0.25;

template <class S>
Metric<S> make_strip_dX() {
    Metric<S> m;
    m.name = "strip.dX";
    m.kind = SpaceKind::strip;
    m.exact_capable = true;
    m.region = Box<S>{S(0), S(1), S(-1), S(1)};
    m.domain = [](const Vec2<S>& p) { return in_strip(p); };
    m.dist = [](const Vec2<S>& p, const Vec2<S>& q) { return d_strip(p, q); };
    return m;
}

template <class S>
Metric<S> make_strip_dX_twisted() {
    Metric<S> m;
    m.name = "strip.dX_twisted";
    m.kind = SpaceKind::strip;
    m.exact_capable = true;
    m.region = Box<S>{S(0), S(1), S(-1), S(1)};
    m.domain = [](const Vec2<S>& p) { return in_strip(p); };
    m.dist = [](const Vec2<S>& p, const Vec2<S>& q) { return d_strip_twisted(p, q); };
    return m;
}

template <class S>
Metric<S> make_disk_d() {
    Metric<S> m;
    m.name = "disk.d";
    m.kind = SpaceKind::disk;
    m.exact_capable = true;
    m.region = Box<S>{S(0), S(1), S(0), S(2)};
    m.domain = [](const Vec2<S>& p) { return in_disk(p); };
    m.dist = [](const Vec2<S>& p, const Vec2<S>& q) { return d_disk(p, q); };
    return m;
}

template <class S>
Metric<S> make_disk_d_twisted() {
    Metric<S> m;
    m.name = "disk.d_twisted";
    m.kind = SpaceKind::disk;
    m.exact_capable = true;
    m.region = Box<S>{S(0), S(1), S(0), S(2)};
    m.domain = [](const Vec2<S>& p) { return in_disk(p); };
    m.dist = [](const Vec2<S>& p, const Vec2<S>& q) { return d_disk_twisted(p, q); };
    return m;
}

inline double sigma_of_slope(double s) { return s / std::sqrt(1.0 + s * s); }

inline Metric<double> make_sigma_fixture() {
    Metric<double> m;
    m.name = "fixture.sigma";
    m.kind = SpaceKind::strip;
    m.exact_capable = false;
    m.region = Box<double>{0.0, 1.0, -1.0, 1.0};
    m.domain = [](const Vec2<double>& p) {
        return 0.0 < p.x1 && p.x1 <= 1.0 && -1.0 <= p.x2 && p.x2 <= 1.0;
    };
    m.dist = [](const Vec2<double>& p, const Vec2<double>& q) {
        double sp = sigma_of_slope(p.x2 / p.x1), sq = sigma_of_slope(q.x2 / q.x1);
        double d1 = p.x1 - q.x1, d2 = p.x2 - q.x2, d3 = sp - sq;
        return std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
    };
    return m;
}

inline Vec2<double> annulus_lift(const Vec2<double>& x, double eps) {
    double n = std::hypot(x.x1, x.x2);
    double f = 1.0 + eps / n;
    return Vec2<double>{f * x.x1, f * x.x2};
}

// Strip-domain presentation: the bad point is the corner (0,0), where all ray
// directions collapse to the same hole.
inline Metric<double> make_annulus_fixture() {
    Metric<double> m;
    m.name = "fixture.annulus";
    m.kind = SpaceKind::strip;
    m.exact_capable = false;
    m.region = Box<double>{0.0, 1.0, -1.0, 1.0};
    m.domain = [](const Vec2<double>& p) {
        return 0.0 < p.x1 && p.x1 <= 1.0 && -1.0 <= p.x2 && p.x2 <= 1.0;
    };
    m.dist = [](const Vec2<double>& p, const Vec2<double>& q) {
        Vec2<double> lp = annulus_lift(p, annulus_eps), lq = annulus_lift(q, annulus_eps);
        return std::hypot(lp.x1 - lq.x1, lp.x2 - lq.x2);
    };
    return m;
}

// Plane presentation of the same metric on the punctured disk |x| <= 1.
inline Metric<double> make_annulus_plane_fixture() {
    Metric<double> m;
    m.name = "fixture.annulus_plane";
    m.kind = SpaceKind::plane;
    m.exact_capable = false;
    m.region = Box<double>{-1.0, 1.0, -1.0, 1.0};
    m.domain = [](const Vec2<double>& p) {
        double n2 = p.x1 * p.x1 + p.x2 * p.x2;
        return n2 > 0.0 && n2 <= 1.0;
    };
    m.dist = [](const Vec2<double>& p, const Vec2<double>& q) {
        Vec2<double> lp = annulus_lift(p, annulus_eps), lq = annulus_lift(q, annulus_eps);
        return std::hypot(lp.x1 - lq.x1, lp.x2 - lq.x2);
    };
    return m;
}

inline Metric<double> make_euclid_square() {
    Metric<double> m;
    m.name = "euclid.square";
    m.kind = SpaceKind::plane;
    m.exact_capable = false;
    m.region = Box<double>{0.0, 1.0, 0.0, 1.0};
    m.domain = [](const Vec2<double>& p) {
        return 0.0 <= p.x1 && p.x1 <= 1.0 && 0.0 <= p.x2 && p.x2 <= 1.0;
    };
    m.dist = [](const Vec2<double>& p, const Vec2<double>& q) {
        return std::hypot(p.x1 - q.x1, p.x2 - q.x2);
    };
    return m;
}

inline Metric<double> make_euclid_plane() {
    Metric<double> m;
    m.name = "euclid.plane";
    m.kind = SpaceKind::plane;
    m.exact_capable = false;
    m.region = Box<double>{-8.0, 8.0, -8.0, 8.0};
    m.domain = [](const Vec2<double>&) { return true; };
    m.dist = [](const Vec2<double>& p, const Vec2<double>& q) {
        return std::hypot(p.x1 - q.x1, p.x2 - q.x2);
    };
    return m;
}

inline Metric<double> make_euclid_strip() {
    Metric<double> m;
    m.name = "euclid.strip";
    m.kind = SpaceKind::strip;
    m.exact_capable = false;
    m.region = Box<double>{0.0, 1.0, -1.0, 1.0};
    m.domain = [](const Vec2<double>& p) {
        return 0.0 < p.x1 && p.x1 <= 1.0 && -1.0 <= p.x2 && p.x2 <= 1.0;
    };
    m.dist = [](const Vec2<double>& p, const Vec2<double>& q) {
        return std::hypot(p.x1 - q.x1, p.x2 - q.x2);
    };
    return m;
}

// Deliberately broken: asymmetric in the first coordinate. Test-only target
// for the failure paths of the verifiers.
inline Metric<double> make_broken_asym() {
    Metric<double> m;
    m.name = "test.broken_asym";
    m.kind = SpaceKind::plane;
    m.exact_capable = false;
    m.region = Box<double>{0.0, 1.0, 0.0, 1.0};
    m.domain = [](const Vec2<double>&) { return true; };
    m.dist = [](const Vec2<double>& p, const Vec2<double>& q) { return p.x1 - q.x1; };
    return m;
}

}  // namespace samc
