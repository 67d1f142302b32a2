#include <algorithm>
#include "osculum/exactalg/rat.hpp"

#include <stdexcept>

namespace osculum {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto sp = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && sp(s.back())) s.pop_back();
  s.erase(0, std::find_if_not(s.begin(), s.end(), sp) - s.begin());
  auto bad = [&] { throw std::invalid_argument("bad rational literal: " + s); };
  if (s.empty()) bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) bad();
    for (std::size_t k = from; k < to; ++k)
      if (s[k] < '0' || s[k] > '9') bad();
  };
  if (slash == std::string::npos) {
    digits(i, s.size());
  } else {
    digits(i, slash);
    digits(slash + 1, s.size());
  }
  std::string body = s[0] == '+' ? s.substr(1) : s;
  Rat r;
  if (r.set_str(body, 10) != 0) bad();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::optional<std::uint64_t> rat_mod(const Rat& r, std::uint64_t p) {
  mpz_class pm(static_cast<unsigned long>(p));
  mpz_class d = r.get_den() % pm;
  if (d == 0) return std::nullopt;
  mpz_class n = r.get_num() % pm;
  if (n < 0) n += pm;
  std::uint64_t nv = n.get_ui();
  std::uint64_t dv = d.get_ui();
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(nv) * inv_mod(dv, p) % p);
}

std::optional<Rat> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace osculum
