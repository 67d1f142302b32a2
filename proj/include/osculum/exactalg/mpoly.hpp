#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "osculum/exactalg/rat.hpp"

namespace osculum {

using Exponent = std::vector<std::uint16_t>;

int total_degree(const Exponent& e);

// Higher total degree first, then lexicographically larger exponent first.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rat, GradedLexGreater>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly monomial(Exponent e, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const;      // -1 for the zero polynomial
  int min_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  Rat coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rat& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  MPoly operator-() const;

  MPoly pow(unsigned k) const;
  MPoly homogeneous_part(int k) const;
  MPoly truncated(int cap) const;  // drops terms of degree > cap
  MPoly derivative(std::size_t var) const;
  Rat evaluate(const std::vector<Rat>& at) const;

  // p(args[0], ..., args[n-1]); all args share one variable count.
  MPoly substitute(const std::vector<MPoly>& args) const;
  // p(t0 + s) as a polynomial in s.
  MPoly shifted(const std::vector<Rat>& t0) const;

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(MPoly a, const Rat& c);
MPoly operator*(const Rat& c, MPoly a);

// Product with terms of degree > cap discarded.
MPoly mul_truncated(const MPoly& a, const MPoly& b, int cap);

// All exponents of total degree d in n variables, lexicographically descending.
std::vector<Exponent> monomials_of_degree(std::size_t n, int d);

}  // namespace osculum
