#pragma once

#include <vector>

#include "osculum/exactalg/rat.hpp"

namespace osculum {

using VecQ = std::vector<Rat>;

// Dense matrix over Q, row-major.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static MatQ from_rows(const std::vector<VecQ>& rows, std::size_t cols);
  static MatQ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  VecQ row(std::size_t i) const;
  VecQ apply(const VecQ& v) const;
  MatQ transpose() const;
  MatQ operator*(const MatQ& o) const;
  bool operator==(const MatQ& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

struct Rref {
  MatQ reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(MatQ m);
std::size_t rank(const MatQ& m);

// Canonical kernel basis: one vector per free column f of the RREF, equal to
// e_f minus the RREF entries of column f placed at the pivot positions.
std::vector<VecQ> kernel(const MatQ& m);

// Inverse of a square matrix; throws std::domain_error when singular.
MatQ inverse(const MatQ& m);

// Spans of row vectors in Q^dim, returned as nonzero RREF rows.
std::vector<VecQ> span_basis(const std::vector<VecQ>& vecs, std::size_t dim);
std::vector<VecQ> span_sum(const std::vector<VecQ>& a, const std::vector<VecQ>& b,
                           std::size_t dim);
std::vector<VecQ> span_intersection(const std::vector<VecQ>& a,
                                    const std::vector<VecQ>& b, std::size_t dim);
// dim((a + b) / b)
std::size_t quotient_dim(const std::vector<VecQ>& a, const std::vector<VecQ>& b,
                         std::size_t dim);
bool span_contains(const std::vector<VecQ>& a, const VecQ& v, std::size_t dim);

}  // namespace osculum
