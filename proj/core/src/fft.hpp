#pragma once

#include <complex>
#include <vector>

namespace gsob::detail {

/// Forward DFT X_k = sum_j x_j exp(-2 pi i j k / n) for any length n >= 1.
/// Power-of-two lengths use iterative radix-2; everything else goes through
/// the Bluestein chirp transform, so the cost is O(n log n) throughout.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

}  // namespace gsob::detail
