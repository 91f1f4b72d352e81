#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "core.hpp"
#include "detail/quadrature.hpp"
#include "sphere_field.hpp"

// The attenuated geodesic ray transform on the upper hemisphere,
//   T_lambda f(x', xi) = int_0^pi f(cos t (x',0) + sin t xi) e^{-lambda t} dt,
// the boundary-bundle L^2 norm with measure sin(beta) db da, and the
// Santalo-formula volume identity used to validate it.

namespace hemiray::hemi {

struct ForwardOptions {
    std::size_t n_quad = 512;  // Simpson subintervals along each ray
    unsigned threads = 0;
};

/// Forward transform of an arbitrary evaluator (used by tests for analytic
/// fields and by the grid overload below).
inline HemiRayData t_lambda_forward(const std::function<double(const Vec3&)>& f,
                                    double lambda, HemiRayGrid grid,
                                    const ForwardOptions& opt = {}) {
    if (lambda < 0.0) throw ValidationError("t_lambda_forward: lambda must be >= 0");
    HemiRayData out(grid, lambda);
    const std::size_t nq = opt.n_quad + (opt.n_quad % 2);
    const double dt = kPi / static_cast<double>(nq);
    const auto w = detail::simpson_weights(nq + 1, dt);

    detail::parallel_for(grid.n_alpha, opt.threads, [&](std::size_t i) {
        const double a = grid.alpha(i);
        const double ca = std::cos(a), sa = std::sin(a);
        for (std::size_t j = 0; j < grid.n_beta; ++j) {
            const double b = grid.beta(j);
            const double cb = std::cos(b), sb = std::sin(b);
            // gamma(t) = cos t (x',0) + sin t xi, assembled in place
            double acc = 0.0;
            for (std::size_t q = 0; q <= nq; ++q) {
                const double t = dt * static_cast<double>(q);
                const double ct = std::cos(t), st = std::sin(t);
                const Vec3 p{ct * ca - st * sa * cb, ct * sa + st * ca * cb,
                             st * sb};
                acc += w[q] * f(p) * std::exp(-lambda * t);
            }
            out.at(i, j) = acc;
        }
    });
    return out;
}

inline HemiRayData t_lambda_forward(const SphereField& f, double lambda,
                                    HemiRayGrid grid, const ForwardOptions& opt = {}) {
    return t_lambda_forward([&f](const Vec3& x) { return f.eval(x); }, lambda, grid,
                            opt);
}

/// L^2(d mu) norm of boundary ray data, d mu = sin(beta) d beta d alpha.
inline double mu_norm(const HemiRayData& F) {
    double s = 0.0;
    for (std::size_t i = 0; i < F.grid.n_alpha; ++i)
        for (std::size_t j = 0; j < F.grid.n_beta; ++j) {
            const double x = F.at(i, j);
            s += x * x * std::sin(F.grid.beta(j));
        }
    return std::sqrt(s * F.grid.dalpha() * F.grid.dbeta());
}

/// Total mass of the bundle measure on the grid (exact value 4 pi for d = 2).
inline double mu_total(HemiRayGrid grid) {
    double s = 0.0;
    for (std::size_t j = 0; j < grid.n_beta; ++j) s += std::sin(grid.beta(j));
    return s * grid.dbeta() * 2.0 * kPi;
}

/// Right-hand side of Santalo's formula,
///   (1/|S^{d-1}|) iint int_0^pi f(exp_{(x',0)}(t xi)) dt d mu,
/// which should reproduce the hemisphere surface integral of f.
inline double santalo_rhs(const SphereField& f, HemiRayGrid grid,
                          const ForwardOptions& opt = {}) {
    const HemiRayData T0 = t_lambda_forward(f, 0.0, grid, opt);
    double s = 0.0;
    for (std::size_t i = 0; i < grid.n_alpha; ++i)
        for (std::size_t j = 0; j < grid.n_beta; ++j)
            s += T0.at(i, j) * std::sin(grid.beta(j));
    s *= grid.dalpha() * grid.dbeta();
    return s / (2.0 * kPi);  // |S^1| = 2 pi
}

inline double santalo_rhs(const std::function<double(const Vec3&)>& f, HemiRayGrid grid,
                          const ForwardOptions& opt = {}) {
    const HemiRayData T0 = t_lambda_forward(f, 0.0, grid, opt);
    double s = 0.0;
    for (std::size_t i = 0; i < grid.n_alpha; ++i)
        for (std::size_t j = 0; j < grid.n_beta; ++j)
            s += T0.at(i, j) * std::sin(grid.beta(j));
    s *= grid.dalpha() * grid.dbeta();
    return s / (2.0 * kPi);
}

}  // namespace hemiray::hemi
