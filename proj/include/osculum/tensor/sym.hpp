#pragma once

#include <functional>
#include <vector>

#include "osculum/exactalg/matq.hpp"
#include "osculum/exactalg/mpoly.hpp"

namespace osculum {

// Basis of S^k of an n-dimensional space: exponent vectors of total degree k,
// lexicographically descending (e_1^k first).
class SymSpace {
 public:
  SymSpace(std::size_t n, int k);

  std::size_t n() const { return n_; }
  int k() const { return k_; }
  std::size_t dim() const { return basis_.size(); }
  const Exponent& monomial(std::size_t i) const { return basis_[i]; }
  std::size_t index(const Exponent& e) const;

 private:
  std::size_t n_;
  int k_;
  std::vector<Exponent> basis_;
  std::map<Exponent, std::size_t> index_;
};

const SymSpace& sym_space(std::size_t n, int k);

std::size_t binomial(std::size_t n, std::size_t k);
// k! / prod e_i!: number of index tuples giving the monomial e.
Rat multinomial(const Exponent& e);

// Symmetric form in monomial coordinates: f = sum coeffs[i] * w^basis[i].
struct SymForm {
  std::size_t n = 0;
  int k = 0;
  VecQ coeffs;

  static SymForm zero(std::size_t n, int k);
  static SymForm from_poly(const MPoly& p, int k);  // p must be homogeneous of degree k
  MPoly to_poly() const;

  bool is_zero() const;
  SymForm& operator+=(const SymForm& o);
  SymForm& operator-=(const SymForm& o);
  SymForm& operator*=(const Rat& c);
  bool operator==(const SymForm& o) const {
    return n == o.n && k == o.k && coeffs == o.coeffs;
  }

  // Symmetric-array entry f_{i1...ik}: monomial coefficient over multinomial.
  Rat entry(const std::vector<std::size_t>& idx) const;
};

SymForm operator+(SymForm a, const SymForm& b);
SymForm operator-(SymForm a, const SymForm& b);
SymForm operator*(SymForm a, const Rat& c);

// Form whose symmetric array is given by arr (assumed symmetric).
SymForm form_from_array(std::size_t n, int k,
                        const std::function<Rat(const std::vector<std::size_t>&)>& arr);

SymForm sym_mult(const SymForm& a, const SymForm& b);

// Polarized contraction v -| f = (1/k) sum_i v_i d f / d w_i.
SymForm contract(const VecQ& v, const SymForm& f);

// Symmetric array of a quadric as an n x n matrix.
MatQ quadric_matrix(const SymForm& q);
std::size_t quadric_rank(const SymForm& q);

// t = sum_g t[g] (x) w^g in S^2 (x) T*. sym is the image in S^3 (the product
// sum_g t[g] w^g); s21 is t minus the polarization of sym, which lies in the
// kernel of multiplication.
struct S21Split {
  SymForm sym;
  std::vector<SymForm> s21;
};
S21Split split_s21(const std::vector<SymForm>& t);
// Polarization of a cubic: P -> sum_g (P(., ., e_g)) (x) w^g.
std::vector<SymForm> polarize_cubic(const SymForm& p);
std::size_t s21_dim(std::size_t n);

}  // namespace osculum
