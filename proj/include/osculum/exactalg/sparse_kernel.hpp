#pragma once

#include <cstdint>
#include <vector>

#include "osculum/exactalg/matq.hpp"

namespace osculum {

// Sparse vector as (index, value) pairs sorted by index, no zero values.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

SparseVec to_sparse(const VecQ& v);
VecQ to_dense(const SparseVec& v, std::size_t dim);

class ColumnMatrix {
 public:
  explicit ColumnMatrix(std::size_t rows = 0) : rows_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const SparseVec& column(std::size_t j) const { return cols_[j]; }
  void add_column(SparseVec v);
  MatQ to_dense() const;

 private:
  std::size_t rows_;
  std::vector<SparseVec> cols_;
};

struct KernelResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<SparseVec> basis;  // canonical RREF kernel basis, by free column
};

struct SolveStats {
  std::size_t primes_used = 0;
  bool compressed = false;
  bool exact_fallback = false;
};

// Kernel over Q, computed modulo primes and lifted. The lifted basis is checked
// exactly against the input; when every check passes it is the canonical RREF
// basis. Falls back to exact elimination otherwise.
KernelResult certified_kernel(const ColumnMatrix& m, SolveStats* stats = nullptr);

// Rank over Q. Returns early when the modular rank already equals
// min(rows, cols); otherwise goes through certified_kernel.
std::size_t certified_rank(const ColumnMatrix& m, SolveStats* stats = nullptr);

// Rank of the span of sparse vectors of length dim.
std::size_t span_rank(const std::vector<SparseVec>& vecs, std::size_t dim);

// Reduced basis of a span as sparse vectors (nonzero RREF rows).
std::vector<SparseVec> span_rref(const std::vector<SparseVec>& vecs, std::size_t dim);

}  // namespace osculum
