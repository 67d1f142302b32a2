#pragma once

#include "osculum/exactalg/mpoly.hpp"

namespace osculum {

// Truncated power series: the polynomial part of degree <= cap is exact,
// everything above cap is unknown.
class Jet {
 public:
  Jet(std::size_t nvars, int cap) : poly_(nvars), cap_(cap) {}
  Jet(const MPoly& p, int cap) : poly_(p.truncated(cap)), cap_(cap) {}

  static Jet constant(std::size_t nvars, int cap, const Rat& c);
  static Jet variable(std::size_t nvars, int cap, std::size_t i);

  int cap() const { return cap_; }
  std::size_t nvars() const { return poly_.nvars(); }
  const MPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  Rat constant_term() const;
  // Lowest degree present, or cap + 1 when the jet vanishes through cap.
  int order() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Rat& c);
  Jet operator-() const;

  Jet with_cap(int cap) const;       // cap must not exceed the current one
  Jet derivative(std::size_t var) const;  // cap drops by one
  Jet inverse() const;                    // needs a nonzero constant term

 private:
  MPoly poly_;
  int cap_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(Jet a, const Rat& c);

// p(args) truncated at cap; cap may not exceed any argument cap.
Jet jet_compose(const MPoly& p, const std::vector<Jet>& args, int cap);

// (1 + s)^q for a jet with constant term 1, by the binomial series.
Jet jet_pow_rational(const Jet& j, const Rat& q);

// Compositional inverse of u = s + h(s) with h of order >= 2, as s = psi(u).
std::vector<Jet> jet_inverse_map(const std::vector<Jet>& u);

}  // namespace osculum
