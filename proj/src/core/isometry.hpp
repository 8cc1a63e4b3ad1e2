#pragma once

// The isometry family Phi_{b0} between the twisted and untwisted disk
// metrics, its verification, the winding-number witness that the family is
// not semialgebraic, and the landmark fingerprint embedding.

#include "core/disk_metric.hpp"
#include "core/metric.hpp"

#include <map>
#include <vector>

namespace samc {

template <class S>
struct IsometryWitness {
    Vec2<S> b0{S(1), S(0)};  // boundary point, r = 1
    S x0{0};                 // lift of b0: f(1, x0) = b0, i.e. the a-coordinate
    TwistFn<S> tw{};
    bool reversed = false;  // conjugate by the reflection fixing b0

    static IsometryWitness from_boundary_angle(const S& a, bool reversed = false) {
        IsometryWitness w;
        w.b0 = Vec2<S>{S(1), reduce_angle(a)};
        w.x0 = w.b0.x2;
        w.reversed = reversed;
        return w;
    }
};

// Phi_X(x1, x2) = (x1, x0 + phi(x1) + x2) on the strip.
template <class S>
Vec2<S> phi_strip_map(const IsometryWitness<S>& w, const Vec2<S>& p) {
    return Vec2<S>{p.x1, w.x0 + w.tw(p.x1) + p.x2};
}

// Phi_{b0} = f o Phi_X o f^{-1}; the origin is fixed. Independent of the
// chosen lift because Phi_X commutes with the deck shift. The reversed
// variant composes the output with the reflection fixing b0 (a |-> 2 x0 - a);
// reflecting inputs instead would not be an isometry, the twist is not
// reflection-symmetric on the source side.
template <class S>
Vec2<S> phi_disk_map(const IsometryWitness<S>& w, const Vec2<S>& b) {
    if (is_origin(b)) return b;
    Vec2<S> image = phi_strip_map(w, b);
    if (w.reversed) image.x2 = S(2) * w.x0 - image.x2;
    return Vec2<S>{image.x1, reduce_angle(image.x2)};
}

namespace detail {

template <class S>
bool iso_eq(const S& a, const S& b, double tol) {
    if constexpr (scalar_traits<S>::exact)
        return a == b;
    else
        return std::abs(to_double(a) - to_double(b)) <= tol;
}

}  // namespace detail

// Checks d(Phi(b), Phi(c)) = d~(b, c) on sampled pairs (origin included by
// the disk sampler) plus the deck-compatibility identity
// Phi_X(x1, x2 + 2) = Phi_X(x1, x2) + (0, 2).
template <class S>
AxiomReport verify_isometry(const IsometryWitness<S>& w, const SampleConfig& cfg) {
    AxiomReport rep;
    Box<S> box{S(0), S(1), S(-2), S(2)};
    for (int64_t i = 0; i < cfg.count; ++i) {
        Vec2<S> b = sample_point<S>(SpaceKind::disk, box, cfg.seed, 41, uint64_t(i));
        Vec2<S> c = sample_point<S>(SpaceKind::disk, box, cfg.seed, 43, uint64_t(i));
        S lhs = d_disk(phi_disk_map(w, b), phi_disk_map(w, c));
        S rhs = d_disk_twisted(b, c, w.tw);
        ++rep.checked_symmetry;
        if (!detail::iso_eq(lhs, rhs, cfg.tol))
            rep.violations.push_back({"isometry", format_point(b), format_point(c), "",
                                      format_scalar(lhs), format_scalar(rhs)});

        Vec2<S> x = sample_point<S>(SpaceKind::strip, box, cfg.seed, 47, uint64_t(i));
        Vec2<S> up = phi_strip_map(w, Vec2<S>{x.x1, x.x2 + S(2)});
        Vec2<S> base = phi_strip_map(w, x);
        ++rep.checked_identity;
        if (!(up.x1 == base.x1 && detail::iso_eq(up.x2, S(base.x2 + S(2)), cfg.tol)))
            rep.violations.push_back({"deck_compat", format_point(x), "", "", format_point(up),
                                      format_point(Vec2<S>{base.x1, base.x2 + S(2)})});
    }
    return rep;
}

struct WindingRow {
    double x1;
    double half_turns_analytic;
    double half_turns_accumulated;
};

// Accumulated turning of the image of the radius b0*0 under Phi_{b0}. The
// image curve is walked in Cartesian coordinates and wrapped angle
// increments are summed, so the count is blind to the closed form; the
// analytic column is |phi(x1)| half-turns.
template <class S>
std::vector<WindingRow> winding_profile(const IsometryWitness<S>& w,
                                        const std::vector<double>& x1_list) {
    const double x0 = to_double(w.x0);
    auto curve_point = [&](double u) {  // u = 1/x1 >= 1
        double t = 1.0 / u;
        double arg = M_PI * (x0 + (-u + 1.0));
        return std::pair<double, double>{t * std::cos(arg), t * std::sin(arg)};
    };

    std::vector<WindingRow> rows;
    rows.reserve(x1_list.size());
    for (double x1_target : x1_list) {
        if (!(0.0 < x1_target && x1_target <= 1.0))
            throw domain_error("winding_profile: x1 outside (0,1]");
        const double u_end = 1.0 / x1_target;
        const double step = 1.0 / 8.0;  // angular steps of pi/8
        double accumulated = 0.0;
        auto [px, py] = curve_point(1.0);
        for (double u = 1.0 + step;; u += step) {
            double uc = std::min(u, u_end);
            auto [cx, cy] = curve_point(uc);
            accumulated += std::atan2(px * cy - py * cx, px * cx + py * cy);
            px = cx, py = cy;
            if (uc >= u_end) break;
        }
        if (u_end == 1.0) accumulated = 0.0;
        double analytic = std::abs(-u_end + 1.0);
        rows.push_back({x1_target, analytic, std::abs(accumulated) / M_PI});
    }
    return rows;
}

// Landmark fingerprints: x -> (d(x, l_1), ..., d(x, l_k)). The injectivity
// check samples distinct points and reports exact fingerprint collisions.
template <class S>
std::vector<S> landmark_fingerprint(const Metric<S>& m, const std::vector<Vec2<S>>& landmarks,
                                    const Vec2<S>& p) {
    std::vector<S> fp;
    fp.reserve(landmarks.size());
    for (const Vec2<S>& l : landmarks) fp.push_back(m.dist(p, l));
    return fp;
}

struct CollisionReport {
    int64_t sampled = 0;
    int64_t collisions = 0;
    std::vector<std::pair<std::string, std::string>> witnesses;  // first few colliding pairs
};

template <class S>
CollisionReport landmark_injectivity_check(const Metric<S>& m,
                                           const std::vector<Vec2<S>>& landmarks,
                                           const SampleConfig& cfg) {
    CollisionReport rep;
    std::map<std::vector<S>, Vec2<S>> seen;
    const Box<S> box = effective_region(m, cfg);
    for (int64_t i = 0; i < cfg.count; ++i) {
        Vec2<S> p = sample_point<S>(m.kind, box, cfg.seed, 53, uint64_t(i));
        auto fp = landmark_fingerprint(m, landmarks, p);
        auto [it, inserted] = seen.emplace(std::move(fp), p);
        if (!inserted && it->second != p) {
            ++rep.collisions;
            if (rep.witnesses.size() < 8)
                rep.witnesses.emplace_back(format_point(it->second), format_point(p));
        }
        ++rep.sampled;
    }
    return rep;
}

// Fixed seeded landmark choice: the origin plus seeded disk points. The
// origin anchor makes the first component r/2, which separates radii; purely
// random triples provably collide on the open set {r < min_i r_i / 2} where
// every distance to every landmark saturates at r_i / 2. A single landmark
// is the documented negative control and is drawn away from the origin so
// its saturation plateau shows up.
template <class S>
std::vector<Vec2<S>> default_landmarks(uint64_t seed, int count) {
    std::vector<Vec2<S>> out;
    Box<S> box{S(0), S(1), S(0), S(2)};
    if (count > 1) out.push_back(Vec2<S>{S(0), S(0)});
    for (int i = int(out.size()); i < count; ++i)
        out.push_back(sample_point<S>(SpaceKind::disk, box, seed, 59, uint64_t(i) + 1));
    return out;
}

}  // namespace samc
