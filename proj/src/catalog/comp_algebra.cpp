#include "osculum/catalog/comp_algebra.hpp"

#include <stdexcept>

namespace osculum {

namespace {

using IVec = std::vector<long>;

IVec cd_conj(const IVec& x) {
  IVec r(x.size());
  r[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

IVec cd_mul(const IVec& x, const IVec& y) {
  const std::size_t d = x.size();
  if (d == 1) return {x[0] * y[0]};
  const std::size_t h = d / 2;
  IVec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  IVec c(y.begin(), y.begin() + h), e(y.begin() + h, y.end());
  IVec ac = cd_mul(a, c), eb = cd_mul(cd_conj(e), b);
  IVec ea = cd_mul(e, a), bc = cd_mul(b, cd_conj(c));
  IVec r(d);
  for (std::size_t i = 0; i < h; ++i) {
    r[i] = ac[i] + eb[i];
    r[h + i] = ea[i] + bc[i];
  }
  return r;
}

template <class T>
std::vector<T> mul_impl(const CompAlgebra& A, const std::vector<T>& x, const std::vector<T>& y,
                        const T& zero) {
  const std::size_t d = A.dim();
  if (x.size() != d || y.size() != d) throw std::invalid_argument("algebra element has the wrong length");
  std::vector<T> r(d, zero);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      T p = x[i] * y[j];
      if (A.sign(i, j) > 0) r[A.index(i, j)] += p;
      else r[A.index(i, j)] -= p;
    }
  return r;
}

}  // namespace

CompAlgebra CompAlgebra::split(std::size_t dim) {
  if (dim != 1 && dim != 2 && dim != 4 && dim != 8)
    throw std::invalid_argument("composition algebra dimension must be 1, 2, 4 or 8");
  CompAlgebra A;
  A.dim_ = dim;
  A.sign_.assign(dim * dim, 0);
  A.index_.assign(dim * dim, 0);
  A.norm_sign_.assign(dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      IVec ei(dim, 0), ej(dim, 0);
      ei[i] = 1;
      ej[j] = 1;
      IVec p = cd_mul(ei, ej);
      for (std::size_t k = 0; k < dim; ++k)
        if (p[k] != 0) {
          A.sign_[i * dim + j] = static_cast<int>(p[k]);
          A.index_[i * dim + j] = k;
        }
    }
  for (std::size_t i = 0; i < dim; ++i) {
    IVec ei(dim, 0);
    ei[i] = 1;
    A.norm_sign_[i] = static_cast<int>(cd_mul(ei, cd_conj(ei))[0]);
  }
  return A;
}

std::vector<MPoly> CompAlgebra::mul(const std::vector<MPoly>& x, const std::vector<MPoly>& y) const {
  return mul_impl(*this, x, y, MPoly(x.empty() ? 0 : x[0].nvars()));
}

std::vector<MPoly> CompAlgebra::conj(const std::vector<MPoly>& x) const {
  std::vector<MPoly> r = x;
  for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
  return r;
}

MPoly CompAlgebra::norm(const std::vector<MPoly>& x) const {
  MPoly r(x.empty() ? 0 : x[0].nvars());
  for (std::size_t i = 0; i < dim_; ++i) r += x[i] * x[i] * Rat(norm_sign_[i]);
  return r;
}

std::vector<Rat> CompAlgebra::mul(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  return mul_impl(*this, x, y, Rat(0));
}

std::vector<Rat> CompAlgebra::conj(const std::vector<Rat>& x) const {
  std::vector<Rat> r = x;
  for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
  return r;
}

Rat CompAlgebra::norm(const std::vector<Rat>& x) const {
  Rat r = 0;
  for (std::size_t i = 0; i < dim_; ++i) r += x[i] * x[i] * norm_sign_[i];
  return r;
}

}  // namespace osculum
