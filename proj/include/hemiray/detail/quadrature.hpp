#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hemiray::detail {

/// Composite Simpson over [a,b] with n subintervals (n made even if needed).
template <class F>
auto simpson(F&& f, double a, double b, std::size_t n) {
    if (n < 2) n = 2;
    if (n % 2) ++n;
    const double h = (b - a) / static_cast<double>(n);
    auto acc = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) {
        const double w = (i % 2) ? 4.0 : 2.0;
        acc = acc + w * f(a + h * static_cast<double>(i));
    }
    return acc * (h / 3.0);
}

/// Simpson weights for n+1 equispaced samples (n even subintervals).
inline std::vector<double> simpson_weights(std::size_t n_samples, double h) {
    if (n_samples < 3 || n_samples % 2 == 0)
        throw std::invalid_argument("simpson_weights: need odd sample count >= 3");
    std::vector<double> w(n_samples, 0.0);
    w.front() = w.back() = h / 3.0;
    for (std::size_t i = 1; i + 1 < n_samples; ++i)
        w[i] = ((i % 2) ? 4.0 : 2.0) * h / 3.0;
    return w;
}

namespace impl {
template <class F>
double adaptive_step(F& f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace impl

/// Adaptive Simpson with absolute tolerance.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 40) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return impl::adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace hemiray::detail
