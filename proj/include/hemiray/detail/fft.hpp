#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "../core.hpp"

namespace hemiray::detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 FFT.  sign = -1 forward, +1 inverse (inverse divides by n).
inline void fft_1d(Cplx* a, std::size_t n, int sign) {
    if (!is_pow2(n)) throw std::invalid_argument("fft_1d: length must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const Cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Cplx u = a[i + k];
                const Cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (sign > 0) {
        const double inv = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) a[i] *= inv;
    }
}

inline void fft_1d(std::vector<Cplx>& a, int sign) { fft_1d(a.data(), a.size(), sign); }

/// Row-major n x n transform: rows then columns.
inline void fft_2d(std::vector<Cplx>& a, std::size_t n, int sign) {
    if (a.size() != n * n) throw std::invalid_argument("fft_2d: size mismatch");
    for (std::size_t r = 0; r < n; ++r) fft_1d(a.data() + r * n, n, sign);
    std::vector<Cplx> col(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) col[r] = a[r * n + c];
        fft_1d(col.data(), n, sign);
        for (std::size_t r = 0; r < n; ++r) a[r * n + c] = col[r];
    }
}

/// FFT index -> signed integer mode number.
inline long fft_mode(std::size_t idx, std::size_t n) {
    return idx <= n / 2 ? static_cast<long>(idx)
                        : static_cast<long>(idx) - static_cast<long>(n);
}

}  // namespace hemiray::detail
