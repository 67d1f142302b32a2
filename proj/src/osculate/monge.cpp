#include "osculum/osculate/monge.hpp"

#include <map>
#include <stdexcept>

#include "osculum/osculate/osculate.hpp"
#include "osculum/quadsys/quadsys.hpp"
#include "osculum/variety/ideal.hpp"

namespace osculum {

const char* to_string(MongeVerdict v) {
  switch (v) {
    case MongeVerdict::MongeHolds: return "MongeHolds";
    case MongeVerdict::HypothesisFails: return "HypothesisFails";
    case MongeVerdict::Order3Fails: return "Order3Fails";
    case MongeVerdict::Order4Fails: return "Order4Fails";
    case MongeVerdict::Order5Fails: return "Order5Fails";
  }
  return "?";
}

namespace {

struct StageSolve {
  MongeStage stage;
  MongeSolution sol;
};

// Unknowns per mu: A(nu, gamma) at nu*n + gamma, then one coefficient per
// monomial y^nu y^tau (nu <= tau). Rows: t-monomials of degree 3..order.
StageSolve solve_stage(const AdaptedChart& c, int order) {
  const std::size_t n = c.n, a = c.a;
  std::vector<MPoly> f;
  for (const auto& j : c.f) f.push_back(j.poly().truncated(order));

  std::vector<MPoly> columns;
  for (std::size_t nu = 0; nu < a; ++nu)
    for (std::size_t g = 0; g < n; ++g)
      columns.push_back((MPoly::variable(n, g) * f[nu].truncated(order - 1)).truncated(order));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t nu = 0; nu < a; ++nu)
    for (std::size_t tau = nu; tau < a; ++tau) {
      pairs.emplace_back(nu, tau);
      columns.push_back(mul_truncated(f[nu], f[tau], order));
    }

  std::map<Exponent, std::size_t> rows;
  auto row_of = [&](const Exponent& e) {
    auto it = rows.find(e);
    if (it != rows.end()) return it->second;
    std::size_t i = rows.size();
    rows.emplace(e, i);
    return i;
  };
  for (int m = 3; m <= order; ++m)
    for (const auto& e : monomials_of_degree(n, m)) row_of(e);

  const std::size_t nc = columns.size();
  MatQ M(rows.size(), nc + 1);
  for (std::size_t j = 0; j < nc; ++j)
    for (const auto& [e, x] : columns[j].terms())
      if (total_degree(e) >= 3) M(rows.at(e), j) = x;

  StageSolve out;
  out.stage.order = order;
  out.stage.solvable = true;
  out.sol.A.assign(a, MatQ(a, n));
  out.sol.B.assign(a, MatQ(a, a));
  for (std::size_t mu = 0; mu < a; ++mu) {
    MatQ aug = M;
    for (std::size_t i = 0; i < aug.rows(); ++i) aug(i, nc) = 0;
    for (const auto& [e, x] : f[mu].terms())
      if (total_degree(e) >= 3) aug(rows.at(e), nc) = x;
    Rref r = rref(aug);
    std::size_t rk = 0;
    bool ok = true;
    for (auto p : r.pivots) {
      if (p == nc) ok = false;
      else ++rk;
    }
    out.stage.solution_dim += nc - rk;
    if (!ok) {
      out.stage.solvable = false;
      continue;
    }
    VecQ x(nc);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, nc);
    for (std::size_t nu = 0; nu < a; ++nu)
      for (std::size_t g = 0; g < n; ++g) out.sol.A[mu](nu, g) = x[nu * n + g];
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [nu, tau] = pairs[p];
      Rat v = x[a * n + p];
      if (nu == tau) {
        out.sol.B[mu](nu, nu) = v;
      } else {
        out.sol.B[mu](nu, tau) = v / 2;
        out.sol.B[mu](tau, nu) = v / 2;
      }
    }
  }
  if (!out.stage.solvable) out.stage.solution_dim = 0;
  return out;
}

std::vector<MPoly> emit_generators(const AdaptedChart& c, const FundData& fd,
                                   const MongeSolution& s) {
  const std::size_t n = c.n, a = c.a, N1 = c.ambient();
  auto y = [&](std::size_t i) { return MPoly::variable(N1, i); };
  std::vector<MPoly> tangent;
  for (std::size_t al = 0; al < n; ++al) tangent.push_back(y(1 + al));
  std::vector<MPoly> out;
  for (std::size_t mu = 0; mu < a; ++mu) {
    MPoly p = y(1 + n + mu) * y(0) - fd.q[mu].to_poly().substitute(tangent);
    for (std::size_t nu = 0; nu < a; ++nu) {
      for (std::size_t g = 0; g < n; ++g)
        if (s.A[mu](nu, g) != 0) p -= y(1 + n + nu) * y(1 + g) * s.A[mu](nu, g);
      for (std::size_t tau = 0; tau < a; ++tau)
        if (s.B[mu](nu, tau) != 0) p -= y(1 + n + nu) * y(1 + n + tau) * s.B[mu](nu, tau);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

MongeReport monge_quadrics(const ParamVariety& v, const AdaptedChart& c) {
  if (c.cap < 5) throw std::invalid_argument("Monge analysis needs chart cap >= 5");
  MongeReport rep;
  rep.n = c.n;
  rep.a = c.a;
  FundData fd = fundamental_data(c);
  QuadricSystem A{c.n, fd.q};
  rep.second_ff_injective = A.a() == c.a;
  rep.third_ff_zero = third_fundamental_form(c).empty();
  rep.linear_syzygies = bracket_part(A).size();

  rep.ker3 = osculating_space(c, 2, 3).vector_dim();
  rep.ker4 = osculating_space(c, 2, 4).vector_dim();
  rep.ker5 = osculating_space(c, 2, 5).vector_dim();
  rep.ker3_bound = c.a + binomial(c.a + 1, 2);
  rep.ker4_bound = c.a;
  rep.ker3_equal = rep.ker3 == rep.ker3_bound;
  rep.ker4_equal = rep.ker4 == rep.ker4_bound;

  if (!rep.second_ff_injective) rep.hypothesis_note = "second fundamental form is not injective";
  else if (!rep.third_ff_zero) rep.hypothesis_note = "third fundamental form is nonzero";
  else if (rep.linear_syzygies > 0) rep.hypothesis_note = "|II| has linear syzygies";
  if (!rep.hypothesis_note.empty()) {
    rep.verdict = MongeVerdict::HypothesisFails;
    return rep;
  }

  const MongeVerdict fails[] = {MongeVerdict::Order3Fails, MongeVerdict::Order4Fails,
                                MongeVerdict::Order5Fails};
  rep.verdict = MongeVerdict::MongeHolds;
  for (int order = 3; order <= 5; ++order) {
    StageSolve s = solve_stage(c, order);
    rep.stages.push_back(s.stage);
    if (!s.stage.solvable && rep.verdict == MongeVerdict::MongeHolds)
      rep.verdict = fails[order - 3];
    if (order == 5 && rep.verdict == MongeVerdict::MongeHolds) rep.solution = std::move(s.sol);
  }
  rep.bounds_consistent = rep.ker3_equal == rep.stages[0].solvable &&
                          rep.ker4_equal == rep.stages[1].solvable;
  if (rep.verdict != MongeVerdict::MongeHolds) return rep;

  rep.generators_adapted = emit_generators(c, fd, rep.solution);
  std::vector<MPoly> orig;
  for (const auto& g : rep.generators_adapted) {
    MPoly o = c.to_original(g);
    if (!in_ideal(v, o)) rep.membership_failed = true;
    orig.push_back(std::move(o));
  }
  if (!rep.membership_failed) rep.generators = std::move(orig);
  return rep;
}

std::vector<SymForm> predict_higher_variations(const FundData& d, const MongeSolution& s, int k) {
  if (k < 3) throw std::invalid_argument("prediction starts at order 3");
  const std::size_t n = d.n, a = d.a;
  if (s.A.size() != a || s.B.size() != a) throw std::invalid_argument("solution has the wrong shape");
  std::vector<std::vector<MPoly>> f(k + 1, std::vector<MPoly>(a, MPoly(n)));
  for (std::size_t mu = 0; mu < a; ++mu) f[2][mu] = d.q[mu].to_poly();
  for (int m = 3; m <= k; ++m)
    for (std::size_t mu = 0; mu < a; ++mu) {
      MPoly acc(n);
      for (std::size_t nu = 0; nu < a; ++nu) {
        for (std::size_t g = 0; g < n; ++g)
          if (s.A[mu](nu, g) != 0) acc += MPoly::variable(n, g) * f[m - 1][nu] * s.A[mu](nu, g);
        for (std::size_t tau = 0; tau < a; ++tau) {
          if (s.B[mu](nu, tau) == 0) continue;
          for (int l = 2; l + 2 <= m; ++l) acc += f[l][nu] * f[m - l][tau] * s.B[mu](nu, tau);
        }
      }
      f[m][mu] = std::move(acc);
    }
  std::vector<SymForm> out;
  for (std::size_t mu = 0; mu < a; ++mu) out.push_back(SymForm::from_poly(f[k][mu], k));
  return out;
}

}  // namespace osculum
