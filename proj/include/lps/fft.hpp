#pragma once

#include <vector>

#include "lps/core.hpp"

namespace lps::detail {

// In-place DFT of arbitrary length. forward: X_k = sum_n x_n e^{-2pi i nk/M};
// backward: X_k = sum_n x_n e^{+2pi i nk/M}. No 1/M normalization.
void dft(std::vector<Complex>& data, bool forward);

}  // namespace lps::detail
