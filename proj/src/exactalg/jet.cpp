#include "osculum/exactalg/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace osculum {

Jet Jet::constant(std::size_t nvars, int cap, const Rat& c) {
  return Jet(MPoly::constant(nvars, c), cap);
}

Jet Jet::variable(std::size_t nvars, int cap, std::size_t i) {
  return Jet(MPoly::variable(nvars, i), cap);
}

Rat Jet::constant_term() const { return poly_.coefficient(Exponent(nvars(), 0)); }

int Jet::order() const { return poly_.is_zero() ? cap_ + 1 : poly_.min_degree(); }

Jet& Jet::operator+=(const Jet& o) {
  cap_ = std::min(cap_, o.cap_);
  poly_ += o.poly_;
  poly_ = poly_.truncated(cap_);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  cap_ = std::min(cap_, o.cap_);
  poly_ -= o.poly_;
  poly_ = poly_.truncated(cap_);
  return *this;
}

Jet& Jet::operator*=(const Rat& c) {
  poly_ *= c;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  r.poly_ = -poly_;
  return r;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, const Rat& c) { return a *= c; }

Jet operator*(const Jet& a, const Jet& b) {
  int cap = std::min(a.cap(), b.cap());
  return Jet(mul_truncated(a.poly(), b.poly(), cap), cap);
}

Jet Jet::with_cap(int cap) const {
  if (cap > cap_) throw std::invalid_argument("cannot raise a jet cap");
  return Jet(poly_, cap);
}

Jet Jet::derivative(std::size_t var) const {
  return Jet(poly_.derivative(var), cap_ - 1);
}

Jet Jet::inverse() const {
  Rat c = constant_term();
  if (c == 0) throw std::domain_error("jet has no inverse: zero constant term");
  Jet s = *this * Rat(1 / c);
  s -= constant(nvars(), cap_, Rat(1));
  // 1/(1+s) = sum (-s)^k; s has order >= 1 so cap terms suffice.
  Jet acc = constant(nvars(), cap_, Rat(1));
  Jet pw = acc;
  Jet neg = -s;
  for (int k = 1; k <= cap_; ++k) {
    pw = pw * neg;
    if (pw.is_zero()) break;
    acc += pw;
  }
  return acc * Rat(1 / c);
}

Jet jet_compose(const MPoly& p, const std::vector<Jet>& args, int cap) {
  if (args.size() != p.nvars()) throw std::invalid_argument("compose arity");
  std::size_t m = args.empty() ? 0 : args[0].nvars();
  for (const auto& a : args)
    if (a.cap() < cap) throw std::invalid_argument("argument cap below target cap");
  std::vector<std::vector<Jet>> powers(args.size());
  auto power = [&](std::size_t i, unsigned k) -> const Jet& {
    auto& ps = powers[i];
    if (ps.empty()) ps.push_back(Jet::constant(m, cap, Rat(1)));
    while (ps.size() <= k) ps.push_back(ps.back() * args[i].with_cap(cap));
    return ps[k];
  };
  MPoly acc(m);
  for (const auto& [e, c] : p.terms()) {
    Jet term = Jet::constant(m, cap, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      term = term * power(i, e[i]);
      if (term.is_zero()) break;
    }
    acc += term.poly();
  }
  return Jet(acc, cap);
}

Jet jet_pow_rational(const Jet& j, const Rat& q) {
  if (j.constant_term() != 1)
    throw std::domain_error("jet_pow_rational needs constant term 1");
  const int cap = j.cap();
  Jet s = j - Jet::constant(j.nvars(), cap, Rat(1));
  Jet acc = Jet::constant(j.nvars(), cap, Rat(1));
  Jet pw = acc;
  Rat binom = 1;
  for (int k = 1; k <= cap; ++k) {
    pw = pw * s;
    if (pw.is_zero()) break;
    binom = binom * (q - (k - 1)) / k;
    acc += pw * binom;
  }
  return acc;
}

std::vector<Jet> jet_inverse_map(const std::vector<Jet>& u) {
  const std::size_t n = u.size();
  if (n == 0) return {};
  const int cap = u[0].cap();
  std::vector<MPoly> h;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly hi = u[i].poly();
    Exponent e(n, 0);
    e[i] = 1;
    hi.add_term(e, Rat(-1));
    if (hi.min_degree() >= 0 && hi.min_degree() < 2)
      throw std::domain_error("map is not tangent to the identity");
    h.push_back(hi);
  }
  std::vector<Jet> psi;
  for (std::size_t i = 0; i < n; ++i) psi.push_back(Jet::variable(n, cap, i));
  bool trivial = std::all_of(h.begin(), h.end(), [](const MPoly& p) { return p.is_zero(); });
  if (trivial) return psi;
  // psi <- u - h(psi); each pass fixes one more order.
  for (int it = 1; it < cap; ++it) {
    std::vector<Jet> next;
    for (std::size_t i = 0; i < n; ++i)
      next.push_back(Jet::variable(n, cap, i) - jet_compose(h[i], psi, cap));
    psi = std::move(next);
  }
  return psi;
}

}  // namespace osculum
