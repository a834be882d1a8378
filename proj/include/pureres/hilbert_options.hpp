#pragma once

#include <cstddef>

namespace pureres {

/// Truncation depth and stabilization window for Hilbert-Samuel computations.
struct HilbertOptions {
    int kmax = 30;
    /// Number of trailing equal difference values required; 0 selects nvars + 2.
    int window = 0;

    int effective_window(std::size_t nvars) const { return window > 0 ? window : static_cast<int>(nvars) + 2; }
};

} // namespace pureres
