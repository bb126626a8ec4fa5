#include "fft.hpp"

#include <numbers>
#include <utility>

namespace gsob::detail {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform; twiddles come from std::polar per
// butterfly, trading a little speed for phase accuracy at large lengths.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto w = std::polar(1.0, ang * double(j));
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
    if (inverse)
        for (auto& z : a) z /= double(n);
}

// Bluestein: X_k = conj(c_k) sum_j (x_j conj(c_j)) c_{k-j} with the chirp
// c_j = exp(i pi j^2 / n); the convolution runs on a padded power of two.
// j^2 is reduced mod 2n first so the phase argument stays small.
std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    std::vector<std::complex<double>> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t r = (j * j) % (2 * n);
        chirp[j] = std::polar(1.0, std::numbers::pi * double(r) / double(n));
    }

    std::vector<std::complex<double>> a(m), b(m);
    for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * std::conj(chirp[j]);
    b[0] = chirp[0];
    for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = chirp[j];
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
    fft_pow2(a, true);

    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = std::conj(chirp[k]) * a[k];
    return out;
}

}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
    if (x.size() <= 1) return x;
    if (is_pow2(x.size())) {
        auto a = x;
        fft_pow2(a, false);
        return a;
    }
    return dft_bluestein(x);
}

}  // namespace gsob::detail
