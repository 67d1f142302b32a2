#include "osculum/exactalg/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace osculum {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(std::move(e), Rat(1));
}

MPoly MPoly::monomial(Exponent e, const Rat& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

int MPoly::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

int MPoly::min_degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

bool MPoly::is_homogeneous() const { return degree() == min_degree(); }

Rat MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
MPoly operator*(const Rat& c, MPoly a) { return a *= c; }

MPoly mul_truncated(const MPoly& a, const MPoly& b, int cap) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("nvars mismatch");
  const std::size_t n = a.nvars();
  MPoly r(n);
  if (a.is_zero() || b.is_zero()) return r;
  struct Ref {
    const Exponent* e;
    const Rat* c;
    int deg;
  };
  std::vector<Ref> bt;
  bt.reserve(b.size());
  for (const auto& kv : b.terms()) bt.push_back({&kv.first, &kv.second, total_degree(kv.first)});
  // b's terms are sorted by descending degree; scan from the low end.
  Exponent e(n);
  Rat prod;
  for (const auto& [ea, ca] : a.terms()) {
    int da = total_degree(ea);
    for (auto it = bt.rbegin(); it != bt.rend(); ++it) {
      if (cap >= 0 && da + it->deg > cap) break;
      const Exponent& eb = *it->e;
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      prod = ca * *it->c;
      r.add_term(e, prod);
    }
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) { return mul_truncated(a, b, -1); }

MPoly MPoly::pow(unsigned k) const {
  MPoly r = constant(nvars_, Rat(1));
  MPoly base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

MPoly MPoly::homogeneous_part(int k) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == k) r.terms_.emplace(e, c);
  return r;
}

MPoly MPoly::truncated(int cap) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= cap) r.terms_.emplace(e, c);
  return r;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

Rat MPoly::evaluate(const std::vector<Rat>& at) const {
  if (at.size() != nvars_) throw std::invalid_argument("evaluation point size");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= at[i];
    total += term;
  }
  return total;
}

MPoly MPoly::substitute(const std::vector<MPoly>& args) const {
  if (args.size() != nvars_) throw std::invalid_argument("substitution arity");
  std::size_t m = args.empty() ? 0 : args[0].nvars();
  MPoly r(m);
  std::vector<std::vector<MPoly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned k) -> const MPoly& {
    auto& ps = powers[i];
    if (ps.empty()) ps.push_back(constant(m, Rat(1)));
    while (ps.size() <= k) ps.push_back(ps.back() * args[i]);
    return ps[k];
  };
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) term = term * power(i, e[i]);
    r += term;
  }
  return r;
}

MPoly MPoly::shifted(const std::vector<Rat>& t0) const {
  std::vector<MPoly> args;
  args.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    args.push_back(variable(nvars_, i) + constant(nvars_, t0.at(i)));
  return substitute(args);
}

std::vector<Exponent> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(n, 0);
  // Recursive fill, first coordinate largest first.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = static_cast<std::uint16_t>(v);
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace osculum
