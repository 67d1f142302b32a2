#pragma once

#include <cstdint>
#include <vector>

#include "osculum/simd/kernels.hpp"

namespace osculum {

// Primes below 2^26, largest first. Deterministic.
std::uint32_t modular_prime(std::size_t index);

// Dense matrix over Z/p with p < 2^26; rows are padded to a multiple of 4.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }

  double* row(std::size_t i) { return data_.data() + i * stride_; }
  const double* row(std::size_t i) const { return data_.data() + i * stride_; }
  std::uint32_t at(std::size_t i, std::size_t j) const {
    return static_cast<std::uint32_t>(row(i)[j]);
  }
  void set(std::size_t i, std::size_t j, std::uint32_t v) { row(i)[j] = v; }

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref(const simd::ModKernels& k = simd::active_kernels());

 private:
  std::size_t rows_, cols_, stride_;
  std::uint32_t p_;
  std::vector<double> data_;
};

}  // namespace osculum
