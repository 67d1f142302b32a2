#include "osculum/exactalg/modmat.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "osculum/exactalg/rat.hpp"

namespace osculum {

std::uint32_t modular_prime(std::size_t index) {
  static std::vector<std::uint32_t> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::uint32_t cand = cache.empty() ? (1u << 26) - 1 : cache.back() - 2;
  while (cache.size() <= index) {
    bool prime = true;
    for (std::uint32_t d = 3; d * d <= cand; d += 2)
      if (cand % d == 0) {
        prime = false;
        break;
      }
    if (prime) cache.push_back(cand);
    cand -= 2;
  }
  return cache[index];
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), stride_((cols + 3) / 4 * 4), p_(p),
      data_(rows * stride_, 0.0) {
  if (p >= (1u << 26)) throw std::invalid_argument("prime too large for kernels");
}

std::vector<std::size_t> ModMatrix::rref(const simd::ModKernels& k) {
  std::vector<std::size_t> pivots;
  const double p = p_;
  const double pinv = 1.0 / p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (row(i)[c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != r) std::swap_ranges(row(piv) + c, row(piv) + cols_, row(r) + c);
    const std::size_t len = cols_ - c;
    double* pr = row(r) + c;
    auto inv = static_cast<double>(inv_mod(static_cast<std::uint64_t>(pr[0]), p_));
    k.scale(pr, inv, p, pinv, len);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      double f = row(i)[c];
      if (f == 0) continue;
      k.submul(row(i) + c, pr, f, p, pinv, len);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace osculum
