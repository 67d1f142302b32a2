#include <stdexcept>

#include "osculum/variety/variety.hpp"

namespace osculum {

FundData fundamental_data(const AdaptedChart& c) {
  FundData d;
  d.n = c.n;
  d.a = c.a;
  d.has_r3 = c.cap >= 3;
  d.has_r4 = c.cap >= 4;
  d.has_r5 = c.cap >= 5;
  for (const auto& j : c.f) {
    d.q.push_back(SymForm::from_poly(j.poly().homogeneous_part(2), 2));
    if (d.has_r3) d.r3.push_back(SymForm::from_poly(j.poly().homogeneous_part(3), 3));
    if (d.has_r4) d.r4.push_back(SymForm::from_poly(j.poly().homogeneous_part(4), 4));
    if (d.has_r5) d.r5.push_back(SymForm::from_poly(j.poly().homogeneous_part(5), 5));
  }
  return d;
}

std::vector<SymForm> third_fundamental_form(const AdaptedChart& c) {
  if (c.cap < 3) throw std::invalid_argument("third fundamental form needs cap >= 3");
  FundData d = fundamental_data(c);
  const std::size_t dq = sym_space(c.n, 2).dim(), dc = sym_space(c.n, 3).dim();
  MatQ m(dq, c.a);
  for (std::size_t mu = 0; mu < c.a; ++mu)
    for (std::size_t i = 0; i < dq; ++i) m(i, mu) = d.q[mu].coeffs[i];
  std::vector<SparseVec> cubics;
  for (const auto& lam : kernel(m)) {
    SymForm acc = SymForm::zero(c.n, 3);
    for (std::size_t mu = 0; mu < c.a; ++mu)
      if (lam[mu] != 0) acc += d.r3[mu] * lam[mu];
    if (!acc.is_zero()) cubics.push_back(to_sparse(acc.coeffs));
  }
  std::vector<SymForm> out;
  for (const auto& v : canonical_basis(cubics, dc)) {
    SymForm f = SymForm::zero(c.n, 3);
    for (const auto& [i, x] : v) f.coeffs[i] = x;
    out.push_back(std::move(f));
  }
  return out;
}

FundData frame_action(const FundData& d, const VecQ& g0, const MatQ& g1, const VecQ& g0n) {
  const std::size_t n = d.n, a = d.a;
  if (!d.has_r3) throw std::invalid_argument("frame action needs r3");
  if (g0.size() != n || g1.rows() != n || g1.cols() != a)
    throw std::invalid_argument("frame parameters have the wrong shape");
  if (!g0n.empty() && g0n.size() != a) throw std::invalid_argument("g0n has the wrong length");
  using Idx = std::vector<std::size_t>;
  auto q = [&](std::size_t mu, std::size_t i, std::size_t j) { return d.q[mu].entry({i, j}); };
  auto r3 = [&](std::size_t mu, std::size_t i, std::size_t j, std::size_t k) {
    return d.r3[mu].entry({i, j, k});
  };

  FundData out = d;
  out.r5.clear();
  out.has_r5 = false;
  for (std::size_t mu = 0; mu < a; ++mu) {
    auto delta3 = [&](const Idx& x) {
      Rat s = 0;
      const std::size_t I = x[0], J = x[1], K = x[2];
      s += g0[I] * q(mu, J, K) + g0[J] * q(mu, I, K) + g0[K] * q(mu, I, J);
      for (std::size_t de = 0; de < n; ++de)
        for (std::size_t nu = 0; nu < a; ++nu) {
          if (g1(de, nu) == 0) continue;
          s += g1(de, nu) *
               (q(nu, I, J) * q(mu, K, de) + q(nu, I, K) * q(mu, J, de) + q(nu, J, K) * q(mu, I, de));
        }
      return s;
    };
    out.r3[mu] = d.r3[mu] + form_from_array(n, 3, delta3);
    if (!d.has_r4) continue;
    auto delta4 = [&](const Idx& x) {
      Rat s = 0;
      for (std::size_t sel = 0; sel < 4; ++sel) {
        Idx rest;
        for (std::size_t t = 0; t < 4; ++t)
          if (t != sel) rest.push_back(x[t]);
        s += g0[x[sel]] * r3(mu, rest[0], rest[1], rest[2]);
        for (std::size_t ep = 0; ep < n; ++ep)
          for (std::size_t nu = 0; nu < a; ++nu)
            if (g1(ep, nu) != 0)
              s += g1(ep, nu) * r3(nu, rest[0], rest[1], rest[2]) * q(mu, x[sel], ep);
      }
      // The six ordered splits of the four indices into (pair, other pair).
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
          Idx other;
          for (std::size_t t = 0; t < 4; ++t)
            if (t != i && t != j) other.push_back(x[t]);
          for (std::size_t ep = 0; ep < n; ++ep)
            for (std::size_t nu = 0; nu < a; ++nu)
              if (g1(ep, nu) != 0)
                s += g1(ep, nu) * q(nu, x[i], x[j]) * r3(mu, other[0], other[1], ep);
          if (!g0n.empty())
            for (std::size_t nu = 0; nu < a; ++nu)
              if (g0n[nu] != 0) s += g0n[nu] * q(mu, x[i], x[j]) * q(nu, other[0], other[1]);
        }
      return s;
    };
    out.r4[mu] = d.r4[mu] + form_from_array(n, 4, delta4);
  }
  return out;
}

}  // namespace osculum
