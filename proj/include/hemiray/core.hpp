#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hemiray {

inline constexpr double kPi = std::numbers::pi;

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors

/// Input failed a documented precondition (non-unit vector, bad range, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Geometrically degenerate input (conjugate points, separation infeasible).
struct DegenerateInputError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Iterative solve left the contraction regime.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constant calibration failed its residual gate.
struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Grid too coarse for the requested oscillation; message names the cure.
struct UnderResolvedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Small fixed-size vector algebra

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
constexpr double dot(const Vec<N>& a, const Vec<N>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
}

template <std::size_t N>
constexpr double norm(const Vec<N>& a) {
    return std::sqrt(dot(a, a));
}

template <std::size_t N>
constexpr Vec<N> add(const Vec<N>& a, const Vec<N>& b) {
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
}

template <std::size_t N>
constexpr Vec<N> sub(const Vec<N>& a, const Vec<N>& b) {
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
}

template <std::size_t N>
constexpr Vec<N> scale(double c, const Vec<N>& a) {
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = c * a[i];
    return r;
}

template <std::size_t N>
inline Vec<N> normalized(const Vec<N>& a) {
    const double n = norm(a);
    if (n == 0.0) throw ValidationError("normalized: zero vector");
    return scale(1.0 / n, a);
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

/// Japanese bracket <z> = sqrt(1 + |z|^2).
template <std::size_t N>
inline double jbracket(const Vec<N>& z) {
    return std::sqrt(1.0 + dot(z, z));
}

namespace detail {

// ---------------------------------------------------------------------------
// Deterministic parallel map.  Each index writes its own output slot, so the
// result is independent of scheduling; reductions stay with the caller in
// fixed order.  threads == 0 picks hardware concurrency.

inline unsigned resolve_threads(unsigned threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& body) {
    const unsigned t = resolve_threads(threads);
    if (t <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    const std::size_t chunk = (n + t - 1) / t;
    for (unsigned w = 0; w < t; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

}  // namespace hemiray
