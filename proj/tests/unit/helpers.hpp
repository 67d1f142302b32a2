#pragma once

#include <random>
#include <vector>

#include "osculum/exactalg/matq.hpp"
#include "osculum/exactalg/mpoly.hpp"
#include "osculum/exactalg/sparse_kernel.hpp"

namespace testutil {

using namespace osculum;

inline Rat rand_rat(std::mt19937_64& rng, int h = 5) {
  std::uniform_int_distribution<int> num(-h, h), den(1, h);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline MPoly rand_poly(std::mt19937_64& rng, std::size_t nvars, int maxdeg, int terms) {
  std::uniform_int_distribution<int> deg(0, maxdeg);
  MPoly p(nvars);
  for (int i = 0; i < terms; ++i) {
    Exponent e(nvars, 0);
    int d = deg(rng);
    std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
    for (int k = 0; k < d; ++k) e[pick(rng)] += 1;
    p.add_term(e, rand_rat(rng));
  }
  return p;
}

inline MPoly rand_form(std::mt19937_64& rng, std::size_t nvars, int d, int terms) {
  MPoly p(nvars);
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  for (int i = 0; i < terms; ++i) {
    Exponent e(nvars, 0);
    for (int k = 0; k < d; ++k) e[pick(rng)] += 1;
    p.add_term(e, rand_rat(rng));
  }
  return p;
}

// rows x cols integer matrix of rank <= r: product of random factors.
inline MatQ rand_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r,
                            int h = 3) {
  std::uniform_int_distribution<int> c(-h, h);
  MatQ L(rows, r), R(r, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j) L(i, j) = c(rng);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) R(i, j) = c(rng);
  return L * R;
}

// Fraction-free (Bareiss) rank of an integer matrix.
inline std::size_t bareiss_rank(const MatQ& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw std::invalid_argument("bareiss oracle needs integers");
      a[i][j] = m(i, j).get_num();
    }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

inline bool is_zero_vec(const VecQ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace testutil
