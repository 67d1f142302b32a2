#pragma once

#include <vector>

#include "osculum/exactalg/mpoly.hpp"

namespace osculum {

// Split Cayley-Dickson algebra of dimension 1, 2, 4 or 8 over Q, built by
// doubling (a, b)(c, d) = (ac + conj(d) b, da + b conj(c)) from Q.
// Basis e_0 = 1, products e_i e_j = sign(i, j) e_index(i, j).
class CompAlgebra {
 public:
  static CompAlgebra split(std::size_t dim);

  std::size_t dim() const { return dim_; }
  int sign(std::size_t i, std::size_t j) const { return sign_[i * dim_ + j]; }
  std::size_t index(std::size_t i, std::size_t j) const { return index_[i * dim_ + j]; }
  // N(e_i) = e_i conj(e_i), which is +1 or -1.
  int norm_sign(std::size_t i) const { return norm_sign_[i]; }

  // Elements with polynomial or rational components.
  std::vector<MPoly> mul(const std::vector<MPoly>& x, const std::vector<MPoly>& y) const;
  std::vector<MPoly> conj(const std::vector<MPoly>& x) const;
  MPoly norm(const std::vector<MPoly>& x) const;

  std::vector<Rat> mul(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  std::vector<Rat> conj(const std::vector<Rat>& x) const;
  Rat norm(const std::vector<Rat>& x) const;

 private:
  std::size_t dim_ = 1;
  std::vector<int> sign_;
  std::vector<std::size_t> index_;
  std::vector<int> norm_sign_;
};

}  // namespace osculum
