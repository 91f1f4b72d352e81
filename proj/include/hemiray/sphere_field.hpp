#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "core.hpp"
#include "geometry.hpp"

// Scalar fields on S^2 sampled on a (theta, psi) chart, and ray data on the
// inward boundary bundle of the upper hemisphere.
//
// Chart convention (d = 2): pole at the equator point e1 = (1,0,0),
//   x = cos(theta) e1 + sin(theta) (cos(psi) e2 + sin(psi) e3),
// theta in (0,pi) cell-centered, psi in [0,2pi) periodic.  The upper
// hemisphere x3 > 0 is exactly psi in (0,pi).

namespace hemiray::hemi {

struct SphereGrid {
    std::size_t n_theta = 256;
    std::size_t n_psi = 256;

    double theta(std::size_t i) const {
        return (static_cast<double>(i) + 0.5) * kPi / static_cast<double>(n_theta);
    }
    double psi(std::size_t j) const {
        return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_psi);
    }
    double dtheta() const { return kPi / static_cast<double>(n_theta); }
    double dpsi() const { return 2.0 * kPi / static_cast<double>(n_psi); }
};

inline Vec3 chart_point(double theta, double psi) {
    const double st = std::sin(theta);
    return {std::cos(theta), st * std::cos(psi), st * std::sin(psi)};
}

/// Chart coordinates of an ambient point; psi in [0, 2pi).
inline std::pair<double, double> chart_coords(const Vec3& x) {
    const double theta = std::acos(std::clamp(x[0], -1.0, 1.0));
    double psi = std::atan2(x[2], x[1]);
    if (psi < 0.0) psi += 2.0 * kPi;
    return {theta, psi};
}

struct SphereField {
    SphereGrid grid;
    double alpha0 = 0.0;  // declared support level: f = 0 outside {x3 > alpha0}
    std::vector<double> v;

    SphereField() = default;
    SphereField(SphereGrid g, double cap)
        : grid(g), alpha0(cap), v(g.n_theta * g.n_psi, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return v[i * grid.n_psi + j]; }
    double at(std::size_t i, std::size_t j) const { return v[i * grid.n_psi + j]; }

    static SphereField from_function(SphereGrid g, double cap,
                                     const std::function<double(const Vec3&)>& f) {
        SphereField out(g, cap);
        for (std::size_t i = 0; i < g.n_theta; ++i)
            for (std::size_t j = 0; j < g.n_psi; ++j)
                out.at(i, j) = f(chart_point(g.theta(i), g.psi(j)));
        return out;
    }

    /// Bilinear evaluation in chart coordinates; psi wraps, theta clamps.
    double eval_chart(double theta, double psi) const {
        const double dth = grid.dtheta(), dps = grid.dpsi();
        double ti = theta / dth - 0.5;
        const double nth = static_cast<double>(grid.n_theta);
        ti = std::clamp(ti, 0.0, nth - 1.0);
        const std::size_t i0 = static_cast<std::size_t>(
            std::min(ti, nth - 1.000001));
        const std::size_t i1 = std::min(i0 + 1, grid.n_theta - 1);
        const double ft = ti - static_cast<double>(i0);

        double pj = psi / dps;
        const double npsd = static_cast<double>(grid.n_psi);
        pj -= std::floor(pj / npsd) * npsd;
        const std::size_t j0 = static_cast<std::size_t>(pj) % grid.n_psi;
        const std::size_t j1 = (j0 + 1) % grid.n_psi;
        const double fp = pj - std::floor(pj);

        const double a = at(i0, j0) * (1.0 - fp) + at(i0, j1) * fp;
        const double b = at(i1, j0) * (1.0 - fp) + at(i1, j1) * fp;
        return a * (1.0 - ft) + b * ft;
    }

    double eval(const Vec3& x) const {
        const auto [theta, psi] = chart_coords(x);
        return eval_chart(theta, psi);
    }
};

/// Midpoint-rule integral of f over the full chart with area weight sin(theta).
inline double surface_integral_full(const SphereField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.grid.n_theta; ++i) {
        const double w = std::sin(f.grid.theta(i));
        for (std::size_t j = 0; j < f.grid.n_psi; ++j) s += w * f.at(i, j);
    }
    return s * f.grid.dtheta() * f.grid.dpsi();
}

/// Integral restricted to the upper hemisphere psi in (0,pi).
inline double surface_integral_hemisphere(const SphereField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.grid.n_theta; ++i) {
        const double w = std::sin(f.grid.theta(i));
        for (std::size_t j = 0; j < f.grid.n_psi; ++j) {
            const double psi = f.grid.psi(j);
            if (psi > 0.0 && psi < kPi) s += w * f.at(i, j);
        }
    }
    return s * f.grid.dtheta() * f.grid.dpsi();
}

inline double l2_norm_hemisphere(const SphereField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.grid.n_theta; ++i) {
        const double w = std::sin(f.grid.theta(i));
        for (std::size_t j = 0; j < f.grid.n_psi; ++j) {
            const double psi = f.grid.psi(j);
            if (psi > 0.0 && psi < kPi) s += w * f.at(i, j) * f.at(i, j);
        }
    }
    return std::sqrt(s * f.grid.dtheta() * f.grid.dpsi());
}

// ---------------------------------------------------------------------------
// Inward boundary rays, indexed by (alpha, beta):
//   base x'(alpha) = (cos a, sin a),  direction
//   xi(alpha,beta) = cos(beta) (-sin a, cos a, 0) + sin(beta) e3,
// so xi_3 = sin(beta) and the bundle measure is d mu = sin(beta) db da.

struct HemiRayGrid {
    std::size_t n_alpha = 360;
    std::size_t n_beta = 180;

    double alpha(std::size_t i) const {
        return 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n_alpha);
    }
    double beta(std::size_t j) const {
        return (static_cast<double>(j) + 0.5) * kPi / static_cast<double>(n_beta);
    }
    double dalpha() const { return 2.0 * kPi / static_cast<double>(n_alpha); }
    double dbeta() const { return kPi / static_cast<double>(n_beta); }
};

inline geom::BoundaryRay<2> ray_from_angles(double alpha, double beta) {
    const Vec2 x{std::cos(alpha), std::sin(alpha)};
    const Vec3 xi{-std::sin(alpha) * std::cos(beta), std::cos(alpha) * std::cos(beta),
                  std::sin(beta)};
    return {x, xi};
}

struct HemiRayData {
    HemiRayGrid grid;
    double lambda = 0.0;
    std::vector<double> v;

    HemiRayData() = default;
    HemiRayData(HemiRayGrid g, double lam)
        : grid(g), lambda(lam), v(g.n_alpha * g.n_beta, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return v[i * grid.n_beta + j]; }
    double at(std::size_t i, std::size_t j) const { return v[i * grid.n_beta + j]; }

    /// Bilinear in (alpha, beta); alpha wraps, beta clamps to the grid.
    double eval(double alpha, double beta) const {
        const double na = static_cast<double>(grid.n_alpha);
        double ai = alpha / grid.dalpha();
        ai -= std::floor(ai / na) * na;
        const std::size_t i0 = static_cast<std::size_t>(ai) % grid.n_alpha;
        const std::size_t i1 = (i0 + 1) % grid.n_alpha;
        const double fa = ai - std::floor(ai);

        double bj = beta / grid.dbeta() - 0.5;
        const double nb = static_cast<double>(grid.n_beta);
        bj = std::clamp(bj, 0.0, nb - 1.0);
        const std::size_t j0 = static_cast<std::size_t>(std::min(bj, nb - 1.000001));
        const std::size_t j1 = std::min(j0 + 1, grid.n_beta - 1);
        const double fb = bj - static_cast<double>(j0);

        const double a = at(i0, j0) * (1.0 - fb) + at(i0, j1) * fb;
        const double b = at(i1, j0) * (1.0 - fb) + at(i1, j1) * fb;
        return a * (1.0 - fa) + b * fa;
    }
};

}  // namespace hemiray::hemi
