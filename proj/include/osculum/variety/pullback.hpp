#pragma once

#include <vector>

#include "osculum/exactalg/mpoly.hpp"
#include "osculum/exactalg/sparse_kernel.hpp"

namespace osculum {

// Images P(series) of every degree-d monomial P in the given series, in the
// SymSpace order of sym_space(series.size(), d). cap < 0 means exact.
std::vector<MPoly> pullback_images(const std::vector<MPoly>& series, int d, int cap);

// Per-column weights when every series is homogeneous (graded map), else empty.
std::vector<int> pullback_weights(const std::vector<MPoly>& series, int d);

// Kernel of the map column j -> images[j], with optional extra constraints that
// force the coefficient of the listed columns to vanish. Uses the grading when
// weights are given; the result equals the ungraded canonical basis.
KernelResult image_kernel(const std::vector<MPoly>& images, const std::vector<int>& weights,
                          const std::vector<std::size_t>& forced_zero = {});

// dim of that kernel without building its basis when a rank certificate suffices.
std::size_t image_kernel_dim(const std::vector<MPoly>& images, const std::vector<int>& weights);

}  // namespace osculum
