#pragma once

// Hole-blow-up maps: excise an epsilon-neighborhood of the center and
// collapse the new boundary onto it radially. Three center shapes are
// supported (single point, finite point set, affine subspace acting on a
// leading coordinate block), with two radial profiles:
//
//   pure:       rho(s) = s - eps on [eps, inf)   (the basic formula)
//   globalized: rho(s) = s - eps on [eps, 2eps],
//               rho(s) = eps*s / (4eps - s) on [2eps, 3eps],
//               rho(s) = s beyond 3eps.
//
// The globalized blend is the degree-one rational interpolant that matches
// s - eps in value and slope at 2eps and the identity at 3eps; it is strictly
// increasing, so the map stays injective. Finite-set centers compose
// globalized maps and require each 3eps-ball to clear the previous holes.

#include "core/geom.hpp"
#include "core/metric.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace samc {

enum class RadialProfile { pure, globalized };

template <class S>
S radial_forward(RadialProfile profile, const S& eps, const S& s) {
    if (s < eps) throw domain_error("hole-blow-up: point inside the excised ball");
    if (profile == RadialProfile::pure || s <= S(2) * eps) return s - eps;
    if (s <= S(3) * eps) return eps * s / (S(4) * eps - s);
    return s;
}

template <class S>
S radial_inverse(RadialProfile profile, const S& eps, const S& u) {
    if (u < S(0)) throw domain_error("hole-blow-up: negative radius");
    if (profile == RadialProfile::pure || u <= eps) return u + eps;
    if (u <= S(3) * eps) return S(4) * eps * u / (eps + u);
    return u;
}

template <class S>
struct HoleBlowUp {
    struct PointCenter {
        VecN<S> center;
        S eps;
        RadialProfile profile = RadialProfile::pure;
    };
    struct FiniteCenter {
        std::vector<VecN<S>> centers;
        std::vector<S> eps;  // one per center, nesting condition enforced
    };
    struct LinearCenter {
        // Center {0}^m x R^{k-1} after splitting R^n = R^m x R^{k-1}; the
        // radial action touches only the leading m coordinates.
        size_t radial_dims;
        S eps;
        RadialProfile profile = RadialProfile::pure;
    };

    size_t ambient_dim = 2;
    std::optional<PointCenter> point;
    std::optional<FiniteCenter> finite;
    std::optional<LinearCenter> linear;

    static HoleBlowUp at_point(VecN<S> center, S eps, RadialProfile profile = RadialProfile::pure) {
        HoleBlowUp h;
        h.ambient_dim = center.size();
        h.point = PointCenter{std::move(center), std::move(eps), profile};
        return h;
    }

    // Composite psi = psi_{k-1} o phi_k; every factor is globalized so it
    // acts as the identity outside its own 3eps ball, which the nesting
    // condition keeps inside the previous manifold. The composite is the
    // identity off the union of the 3eps balls.
    static HoleBlowUp at_finite_set(std::vector<VecN<S>> centers, std::vector<S> eps) {
        if (centers.empty() || centers.size() != eps.size())
            throw domain_error("hole-blow-up: finite center needs matching centers and radii");
        HoleBlowUp h;
        h.ambient_dim = centers[0].size();
        for (size_t k = 1; k < centers.size(); ++k)
            for (size_t l = 0; l < k; ++l) {
                S needed = S(3) * eps[k] + eps[l];
                if (!(needed * needed < squared_norm(sub(centers[k], centers[l]))))
                    throw domain_error("hole-blow-up: 3eps ball of center " + std::to_string(k) +
                                       " not contained in the previous manifold");
            }
        h.finite = FiniteCenter{std::move(centers), std::move(eps)};
        return h;
    }

    static HoleBlowUp at_line(size_t ambient_dim, size_t radial_dims, S eps,
                              RadialProfile profile = RadialProfile::pure) {
        if (radial_dims == 0 || radial_dims > ambient_dim)
            throw domain_error("hole-blow-up: bad coordinate split");
        HoleBlowUp h;
        h.ambient_dim = ambient_dim;
        h.linear = LinearCenter{radial_dims, std::move(eps), profile};
        return h;
    }

    // Squared comparisons: exact even when the norm itself is irrational.
    bool in_manifold(const VecN<S>& y) const {
        if (point) return !(squared_norm(sub(y, point->center)) < point->eps * point->eps);
        if (linear) {
            VecN<S> head(y.begin(), y.begin() + long(linear->radial_dims));
            return !(squared_norm(head) < linear->eps * linear->eps);
        }
        for (size_t k = 0; k < finite->centers.size(); ++k)
            if (squared_norm(sub(y, finite->centers[k])) < finite->eps[k] * finite->eps[k])
                return false;
        return true;
    }
};

namespace detail {

template <class S>
VecN<S> radial_map(const VecN<S>& center, const S& eps, RadialProfile profile, const VecN<S>& y,
                   bool inverse) {
    VecN<S> rel = sub(y, center);
    S sq = squared_norm(rel);
    if (profile == RadialProfile::globalized && !(sq < S(9) * eps * eps))
        return y;  // literal identity beyond 3 eps
    if (!inverse && sq == eps * eps) return center;  // boundary collapses onto the center
    if (!inverse && sq < eps * eps)
        throw domain_error("hole-blow-up: point inside the excised ball");
    if (inverse && sq == S(0))
        throw domain_error("hole-blow-up inverse: point equals the center");
    S s = scalar_traits<S>::sqrt(sq);
    S mapped = inverse ? radial_inverse(profile, eps, s) : radial_forward(profile, eps, s);
    return add(center, scale(S(mapped / s), rel));
}

}  // namespace detail

template <class S>
VecN<S> psi_forward(const HoleBlowUp<S>& h, const VecN<S>& y) {
    if (y.size() != h.ambient_dim) throw domain_error("hole-blow-up: wrong point dimension");
    if (h.point) return detail::radial_map(h.point->center, h.point->eps, h.point->profile, y, false);
    if (h.linear) {
        VecN<S> head(y.begin(), y.begin() + long(h.linear->radial_dims));
        VecN<S> mapped = detail::radial_map(VecN<S>(head.size(), S(0)), h.linear->eps,
                                            h.linear->profile, head, false);
        VecN<S> out = y;
        std::copy(mapped.begin(), mapped.end(), out.begin());
        return out;
    }
    // Finite set: apply the innermost map first, then the earlier ones.
    VecN<S> p = y;
    for (size_t k = h.finite->centers.size(); k-- > 0;)
        p = detail::radial_map(h.finite->centers[k], h.finite->eps[k],
                               RadialProfile::globalized, p, false);
    return p;
}

template <class S>
VecN<S> psi_inverse(const HoleBlowUp<S>& h, const VecN<S>& p) {
    if (p.size() != h.ambient_dim) throw domain_error("hole-blow-up: wrong point dimension");
    if (h.point) return detail::radial_map(h.point->center, h.point->eps, h.point->profile, p, true);
    if (h.linear) {
        VecN<S> head(p.begin(), p.begin() + long(h.linear->radial_dims));
        VecN<S> mapped = detail::radial_map(VecN<S>(head.size(), S(0)), h.linear->eps,
                                            h.linear->profile, head, true);
        VecN<S> out = p;
        std::copy(mapped.begin(), mapped.end(), out.begin());
        return out;
    }
    VecN<S> y = p;
    for (size_t k = 0; k < h.finite->centers.size(); ++k)
        y = detail::radial_map(h.finite->centers[k], h.finite->eps[k],
                               RadialProfile::globalized, y, true);
    return y;
}

// Pullback metric d_psi(x, x') = d(psi(x), psi(x')) on the interior of the
// blown-up manifold; a metric there because psi is injective off the
// boundary.
template <class S>
Metric<S> pullback_metric(const Metric<S>& base, const HoleBlowUp<S>& h) {
    if (h.ambient_dim != 2)
        throw domain_error("pullback_metric: descriptor pullbacks are two-dimensional");
    Metric<S> out;
    out.name = base.name + ".pullback";
    out.kind = base.kind;
    out.exact_capable = false;  // radial norms are generally irrational
    out.region = base.region;
    auto hcopy = std::make_shared<HoleBlowUp<S>>(h);
    auto base_domain = base.domain;
    out.domain = [hcopy, base_domain](const Vec2<S>& v) {
        VecN<S> y{v.x1, v.x2};
        if (!hcopy->in_manifold(y)) return false;
        VecN<S> img = psi_forward(*hcopy, y);
        return base_domain(Vec2<S>{img[0], img[1]});
    };
    auto base_dist = base.dist;
    out.dist = [hcopy, base_dist](const Vec2<S>& a, const Vec2<S>& b) {
        VecN<S> pa = psi_forward(*hcopy, VecN<S>{a.x1, a.x2});
        VecN<S> pb = psi_forward(*hcopy, VecN<S>{b.x1, b.x2});
        return base_dist(Vec2<S>{pa[0], pa[1]}, Vec2<S>{pb[0], pb[1]});
    };
    return out;
}

}  // namespace samc
