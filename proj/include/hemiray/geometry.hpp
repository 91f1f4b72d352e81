#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "core.hpp"

// Sphere and domain geometry: distances, geodesics, the exponential-map
// inverse on the hemisphere, stereographic projection, illumination front
// sets and cap parameters of a scene viewed from an exterior source.

namespace hemiray::geom {

inline constexpr double kUnitTol = 1e-12;

// ---------------------------------------------------------------------------
// Points and rays on S^d in R^{d+1}

/// A point on the unit sphere S^d.  Validated to |x| = 1 within 1e-12.
template <std::size_t D>
struct SpherePoint {
    Vec<D + 1> coords;

    explicit SpherePoint(const Vec<D + 1>& c) : coords(c) {
        if (std::abs(norm(c) - 1.0) > kUnitTol)
            throw ValidationError("SpherePoint: not a unit vector");
    }
};

/// An inward boundary ray of the hemisphere: base x' on the equator S^{d-1},
/// direction xi with xi_{d+1} > 0 and <(x',0), xi> = 0.
template <std::size_t D>
struct BoundaryRay {
    Vec<D> base;
    Vec<D + 1> dir;

    BoundaryRay(const Vec<D>& x, const Vec<D + 1>& xi) : base(x), dir(xi) {
        if (std::abs(norm(x) - 1.0) > kUnitTol || std::abs(norm(xi) - 1.0) > kUnitTol)
            throw ValidationError("BoundaryRay: base and direction must be unit");
        if (xi[D] <= 0.0)
            throw ValidationError("BoundaryRay: direction must point into the upper hemisphere");
        double tangential = 0.0;
        for (std::size_t i = 0; i < D; ++i) tangential += x[i] * xi[i];
        if (std::abs(tangential) > kUnitTol)
            throw ValidationError("BoundaryRay: direction not orthogonal to base point");
    }
};

template <std::size_t D>
inline double sphere_distance(const SpherePoint<D>& x, const SpherePoint<D>& y) {
    const double c = std::clamp(dot(x.coords, y.coords), -1.0, 1.0);
    return std::acos(c);
}

/// gamma_{x',xi}(t) = cos t (x',0) + sin t xi, for t in [0,pi].
template <std::size_t D>
inline SpherePoint<D> geodesic_point(const BoundaryRay<D>& r, double t) {
    if (t < 0.0 || t > kPi)
        throw ValidationError("geodesic_point: t outside [0,pi]");
    const double c = std::cos(t), s = std::sin(t);
    Vec<D + 1> p{};
    for (std::size_t i = 0; i < D; ++i) p[i] = c * r.base[i] + s * r.dir[i];
    p[D] = s * r.dir[D];
    // renormalize away rounding drift
    return SpherePoint<D>(normalized(p));
}

template <std::size_t D>
struct ExpInverse {
    double t;        // arc length, in (0,pi)
    Vec<D + 1> dir;  // unit tangent at (base,0)
};

/// Inverse of the exponential map at the equator point (x_base, 0):
/// t = arccos<x', y'>, dir = (y - <x',y'>(x',0)) / sqrt(1 - <x',y'>^2).
/// Throws when y is equal or conjugate to the base point.
template <std::size_t D>
inline ExpInverse<D> exp_inverse(const Vec<D>& x_base, const SpherePoint<D>& y) {
    if (std::abs(norm(x_base) - 1.0) > kUnitTol)
        throw ValidationError("exp_inverse: base must be a unit vector in R^d");
    double c = 0.0;
    for (std::size_t i = 0; i < D; ++i) c += x_base[i] * y.coords[i];
    if (std::abs(c) >= 1.0 - kUnitTol)
        throw DegenerateInputError("exp_inverse: point equal or conjugate to base");
    const double t = std::acos(c);
    const double inv = 1.0 / std::sqrt(1.0 - c * c);
    Vec<D + 1> dir{};
    for (std::size_t i = 0; i < D; ++i) dir[i] = (y.coords[i] - c * x_base[i]) * inv;
    dir[D] = y.coords[D] * inv;
    return {t, normalized(dir)};
}

// ---------------------------------------------------------------------------
// Stereographic projection from the open upper hemisphere

/// sigma_+(x) = x' / x_{d+1}; requires x_{d+1} > 0.
template <std::size_t D>
inline Vec<D> stereo_project(const SpherePoint<D>& x) {
    if (x.coords[D] <= 0.0)
        throw ValidationError("stereo_project: point not in the open upper hemisphere");
    Vec<D> z{};
    for (std::size_t i = 0; i < D; ++i) z[i] = x.coords[i] / x.coords[D];
    return z;
}

/// sigma_+^{-1}(z) = (z, 1) / <z>.
template <std::size_t D>
inline SpherePoint<D> stereo_lift(const Vec<D>& z) {
    const double inv = 1.0 / jbracket(z);
    Vec<D + 1> x{};
    for (std::size_t i = 0; i < D; ++i) x[i] = z[i] * inv;
    x[D] = inv;
    return SpherePoint<D>(x);
}

// ---------------------------------------------------------------------------
// Scenes: sampled boundaries with normals, viewed from a source x0

template <std::size_t N>
struct Scene {
    std::vector<Vec<N>> points;   // boundary samples
    std::vector<Vec<N>> normals;  // outward unit normals, matching points
    Vec<N> x0{};                  // source outside the convex hull
};

/// Derived cap parameters: separating hyperplane <x - x0, omega0> = s0,
/// enclosing radius rho0, cap level alpha0 = s0 / rho0, clearance eps.
template <std::size_t N>
struct CapParams {
    double eps = 0.0;
    double rho0 = 0.0;
    double s0 = 0.0;
    double alpha0 = 0.0;
    Vec<N> omega0{};
};

inline std::vector<Vec<2>> circle_directions(std::size_t n) {
    std::vector<Vec<2>> dirs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        dirs[i] = {std::cos(a), std::sin(a)};
    }
    return dirs;
}

/// Vertices of a subdivided icosahedron (refinement `level` halves edges).
inline std::vector<Vec3> icosphere_directions(unsigned level) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> verts = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    for (auto& v : verts) v = normalized(v);
    std::vector<std::array<std::size_t, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    for (unsigned l = 0; l < level; ++l) {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> midpoint;
        auto mid = [&](std::size_t a, std::size_t b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            verts.push_back(normalized(add(verts[a], verts[b])));
            midpoint.emplace(key, verts.size() - 1);
            return verts.size() - 1;
        };
        std::vector<std::array<std::size_t, 3>> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            const std::size_t ab = mid(f[0], f[1]);
            const std::size_t bc = mid(f[1], f[2]);
            const std::size_t ca = mid(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }
    return verts;
}

namespace detail_geom {

template <std::size_t N>
std::vector<Vec<N>> sweep_directions(std::size_t resolution);

template <>
inline std::vector<Vec<2>> sweep_directions<2>(std::size_t resolution) {
    return circle_directions(resolution == 0 ? 360 : resolution);
}

template <>
inline std::vector<Vec<3>> sweep_directions<3>(std::size_t resolution) {
    return icosphere_directions(resolution == 0 ? 4 : static_cast<unsigned>(resolution));
}

/// Support margin of the point cloud {x_i - x0} in direction omega.
template <std::size_t N>
inline double support_margin(const Scene<N>& sc, const Vec<N>& omega) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : sc.points) m = std::min(m, dot(sub(p, sc.x0), omega));
    return m;
}

/// Orthonormal basis of omega's tangent space, for the local pattern search.
template <std::size_t N>
inline std::vector<Vec<N>> tangent_basis(const Vec<N>& omega) {
    std::vector<Vec<N>> basis;
    for (std::size_t axis = 0; axis < N && basis.size() < N - 1; ++axis) {
        Vec<N> e{};
        e[axis] = 1.0;
        Vec<N> v = sub(e, scale(dot(e, omega), omega));
        for (const auto& b : basis) v = sub(v, scale(dot(v, b), b));
        if (norm(v) > 1e-6) basis.push_back(normalized(v));
    }
    return basis;
}

}  // namespace detail_geom

struct CapSweepOptions {
    std::size_t resolution = 0;   // 0 = default (1 deg in 2-D, icosa level 4 in 3-D)
    unsigned refine_steps = 60;   // local pattern-search iterations after the sweep
};

/// Cap parameters of a scene: maximizes the separating margin s0 over a
/// direction grid, then polishes the best direction by a shrinking pattern
/// search.  Throws DegenerateInputError when no separating hyperplane exists
/// (x0 inside the hull of the samples).
template <std::size_t N>
inline CapParams<N> cap_params(const Scene<N>& sc, const CapSweepOptions& opt = {}) {
    if (sc.points.empty()) throw ValidationError("cap_params: empty scene");

    Vec<N> best{};
    double s_best = -std::numeric_limits<double>::infinity();
    const auto grid = detail_geom::sweep_directions<N>(opt.resolution);
    for (const auto& omega : grid) {
        const double m = detail_geom::support_margin(sc, omega);
        if (m > s_best) {
            s_best = m;
            best = omega;
        }
    }
    double step = 0.2;  // radians; shrinks whenever no neighbour improves
    for (unsigned it = 0; it < opt.refine_steps; ++it) {
        bool improved = false;
        for (const auto& tb : detail_geom::tangent_basis(best)) {
            for (const double sgn : {1.0, -1.0}) {
                const Vec<N> cand = normalized(add(best, scale(sgn * step, tb)));
                const double m = detail_geom::support_margin(sc, cand);
                if (m > s_best) {
                    s_best = m;
                    best = cand;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
        if (step < 1e-13) break;
    }

    if (s_best <= 0.0)
        throw DegenerateInputError("cap_params: x0 not separated from the boundary hull");

    CapParams<N> cp;
    cp.omega0 = best;
    cp.s0 = s_best;
    cp.eps = s_best;  // B(x0, s0) lies on the source side of the hyperplane
    for (const auto& p : sc.points) cp.rho0 = std::max(cp.rho0, norm(sub(p, sc.x0)));
    cp.alpha0 = cp.s0 / cp.rho0;

    for (const auto& p : sc.points) {
        const Vec<N> d = sub(p, sc.x0);
        if (dot(normalized(d), cp.omega0) <= cp.alpha0 - 1e-9)
            throw DegenerateInputError("cap_params: boundary direction escapes the cap");
    }
    return cp;
}

// ---------------------------------------------------------------------------
// Front sets

/// Labels and boundary weights of the enlarged front set
/// F_delta(x0) = { x in dOmega : <x - x0, nu> <= delta |x - x0|^2 },
/// with w(x) = |<nu, x - x0>| / |x - x0|^2.
template <std::size_t N>
struct FrontSet {
    double delta = 0.0;
    std::vector<bool> in_set;
    std::vector<double> weight;
};

template <std::size_t N>
inline FrontSet<N> front_set(const Scene<N>& sc, double delta) {
    if (sc.points.size() != sc.normals.size())
        throw ValidationError("front_set: points/normals size mismatch");
    FrontSet<N> fs;
    fs.delta = delta;
    fs.in_set.reserve(sc.points.size());
    fs.weight.reserve(sc.points.size());
    for (std::size_t i = 0; i < sc.points.size(); ++i) {
        if (std::abs(norm(sc.normals[i]) - 1.0) > 1e-9)
            throw ValidationError("front_set: non-unit normal");
        const Vec<N> d = sub(sc.points[i], sc.x0);
        const double r2 = dot(d, d);
        const double inner = dot(d, sc.normals[i]);
        fs.in_set.push_back(inner <= delta * r2);
        fs.weight.push_back(std::abs(inner) / r2);
    }
    return fs;
}

// ---------------------------------------------------------------------------
// Analytic scene constructors for tests and the CLI

inline Scene<3> make_ball_scene(const Vec3& center, double radius, const Vec3& x0,
                                unsigned level = 3) {
    Scene<3> sc;
    sc.x0 = x0;
    for (const auto& d : icosphere_directions(level)) {
        sc.points.push_back(add(center, scale(radius, d)));
        sc.normals.push_back(d);
    }
    return sc;
}

inline Scene<2> make_disk_scene(const Vec2& center, double radius, const Vec2& x0,
                                std::size_t n = 720) {
    Scene<2> sc;
    sc.x0 = x0;
    for (const auto& d : circle_directions(n)) {
        sc.points.push_back(add(center, scale(radius, d)));
        sc.normals.push_back(d);
    }
    return sc;
}

inline Scene<3> make_box_scene(const Vec3& lo, const Vec3& hi, const Vec3& x0,
                               std::size_t per_side = 12) {
    Scene<3> sc;
    sc.x0 = x0;
    const double n1 = static_cast<double>(per_side - 1);
    for (std::size_t face = 0; face < 6; ++face) {
        const std::size_t axis = face / 2;
        const bool top = face % 2;
        Vec3 nu{};
        nu[axis] = top ? 1.0 : -1.0;
        const std::size_t u = (axis + 1) % 3, v = (axis + 2) % 3;
        for (std::size_t i = 0; i < per_side; ++i)
            for (std::size_t j = 0; j < per_side; ++j) {
                Vec3 p{};
                p[axis] = top ? hi[axis] : lo[axis];
                p[u] = lo[u] + (hi[u] - lo[u]) * static_cast<double>(i) / n1;
                p[v] = lo[v] + (hi[v] - lo[v]) * static_cast<double>(j) / n1;
                sc.points.push_back(p);
                sc.normals.push_back(nu);
            }
    }
    return sc;
}

}  // namespace hemiray::geom
