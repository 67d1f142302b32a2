#include "osculum/exactalg/matq.hpp"

#include <stdexcept>

namespace osculum {

MatQ MatQ::from_rows(const std::vector<VecQ>& rows, std::size_t cols) {
  MatQ m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

VecQ MatQ::row(std::size_t i) const {
  return VecQ(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

VecQ MatQ::apply(const VecQ& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  VecQ out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatQ MatQ::operator*(const MatQ& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  MatQ r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += x * o(k, j);
    }
  return r;
}

Rref rref(MatQ m) {
  Rref out;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  Rat f;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (m(r, j) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const MatQ& m) { return rref(m).pivots.size(); }

std::vector<VecQ> kernel(const MatQ& m) {
  Rref r = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : r.pivots) is_piv[p] = true;
  std::vector<VecQ> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    VecQ v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

MatQ inverse(const MatQ& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  MatQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1)
    throw std::domain_error("singular matrix");
  MatQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::vector<VecQ> span_basis(const std::vector<VecQ>& vecs, std::size_t dim) {
  if (vecs.empty()) return {};
  Rref r = rref(MatQ::from_rows(vecs, dim));
  std::vector<VecQ> out;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(r.reduced.row(i));
  return out;
}

std::vector<VecQ> span_sum(const std::vector<VecQ>& a, const std::vector<VecQ>& b,
                           std::size_t dim) {
  std::vector<VecQ> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_basis(all, dim);
}

std::vector<VecQ> span_intersection(const std::vector<VecQ>& a,
                                    const std::vector<VecQ>& b, std::size_t dim) {
  std::vector<VecQ> ba = span_basis(a, dim), bb = span_basis(b, dim);
  if (ba.empty() || bb.empty()) return {};
  // Solve sum x_i a_i = sum y_j b_j; columns are the basis vectors.
  MatQ m(dim, ba.size() + bb.size());
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) m(k, i) = ba[i][k];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t k = 0; k < dim; ++k) m(k, ba.size() + j) = -bb[j][k];
  std::vector<VecQ> out;
  for (const auto& z : kernel(m)) {
    VecQ v(dim);
    for (std::size_t i = 0; i < ba.size(); ++i)
      if (z[i] != 0)
        for (std::size_t k = 0; k < dim; ++k) v[k] += z[i] * ba[i][k];
    out.push_back(std::move(v));
  }
  return span_basis(out, dim);
}

std::size_t quotient_dim(const std::vector<VecQ>& a, const std::vector<VecQ>& b,
                         std::size_t dim) {
  return span_sum(a, b, dim).size() - span_basis(b, dim).size();
}

bool span_contains(const std::vector<VecQ>& a, const VecQ& v, std::size_t dim) {
  std::vector<VecQ> one{v};
  return quotient_dim(one, a, dim) == 0;
}

}  // namespace osculum
