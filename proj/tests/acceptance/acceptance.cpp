// One line per criterion: "PASS <id> <title>: <detail>" or "FAIL ...".
// Usage: acceptance [id ...]   (no ids runs everything)
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "osculum/catalog/catalog.hpp"
#include "osculum/exactalg/parse.hpp"
#include "osculum/osculate/monge.hpp"
#include "osculum/osculate/osculate.hpp"
#include "osculum/quadsys/quadsys.hpp"
#include "osculum/variety/ideal.hpp"

using namespace osculum;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

std::vector<std::string> dimension_fixtures() {
  return {"conic",     "plane-cubic", "twisted-cubic", "veronese-1",   "veronese-2",      "veronese-3",
          "segre-1-1", "segre-1-2",   "segre-2-2",     "grass2-4",     "grass2-5",        "spinor10",
          "severi-1",  "severi-2",    "severi-4",      "severi-8",     "six-quadric",     "quadric-pair",
          "quadric-pair-b0", "ci-2-3"};
}

void c1(Outcome& o) {
  std::size_t checks = 0;
  for (const auto& name : dimension_fixtures()) {
    ParamVariety v = catalog_entry(name).variety;
    AdaptedChart c = adapt_at_point(v, v.marked_point(), 3);
    for (int d = 1; d <= 3; ++d)
      for (int p = 0; p <= d; ++p) {
        DimCheck r = check_316(c, d, p);
        ++checks;
        std::ostringstream s;
        s << name << " d=" << d << " p=" << p << " got " << r.actual << " want " << r.expected;
        o.need(r.pass, s.str());
      }
  }
  if (o.pass) o.detail << checks << " (variety, d, p) cases match the formula";
}

void c2(Outcome& o) {
  std::size_t checks = 0;
  for (const auto& name : dimension_fixtures()) {
    ParamVariety v = catalog_entry(name).variety;
    AdaptedChart c = adapt_at_point(v, v.marked_point(), 5);
    for (int d = 2; d <= 3; ++d) {
      DimCheck r = lower_bound_317(c, d);
      ++checks;
      std::ostringstream s;
      s << name << " d=" << d << " dim " << r.actual << " < " << r.expected;
      o.need(r.pass, s.str());
    }
  }
  if (o.pass) o.detail << checks << " (variety, d) cases meet the bound at order 2d-1";
}

void c3(Outcome& o) {
  MPoly t = MPoly::variable(1, 0);
  Jet y = Jet::constant(1, 8, Rat(1)) - jet_pow_rational(Jet(MPoly::constant(1, Rat(1)) - t * t, 8), Rat(1, 2));
  Jet r = classical_monge_residual(y);
  o.need(r.is_zero() && r.cap() >= 3, "conic branch residual is not zero through order 3");
  Jet r2 = classical_monge_residual(Jet(t * t + t.pow(3), 8));
  o.need(r2.constant_term() != 0, "t^2 + t^3 residual vanishes");
  if (o.pass) o.detail << "conic residual 0 to order " << r.cap() << "; t^2+t^3 constant term " << to_string(r2.constant_term());
}

void c4(Outcome& o) {
  auto run = [&](const std::string& name, bool expect_holds) {
    ParamVariety v = catalog_entry(name).variety;
    MongeReport m = monge_quadrics(v, adapt_at_point(v, v.marked_point(), 5));
    std::ostringstream s;
    s << name << ": " << to_string(m.verdict) << " ker3 " << m.ker3 << "/" << m.ker3_bound << " ker4 " << m.ker4
      << "/" << m.ker4_bound;
    if (!expect_holds) {
      o.need(m.verdict == MongeVerdict::HypothesisFails, s.str() + " (expected HypothesisFails)");
      return s.str();
    }
    o.need(m.verdict == MongeVerdict::MongeHolds, s.str());
    o.need(!m.membership_failed && !m.generators.empty(), name + ": generators not emitted");
    for (const auto& g : m.generators) o.need(in_ideal(v, g), name + ": generator outside the ideal");
    o.need(m.ker3 == m.ker3_bound && m.ker4 == m.ker4_bound && m.ker3_equal && m.ker4_equal,
           s.str() + " (bounds not attained)");
    return s.str();
  };
  std::string a = run("conic", true), b = run("veronese-2", false), c = run("six-quadric", true),
              d = run("quadric-pair", true);
  if (o.pass) o.detail << a << "; " << b << "; " << c << "; " << d;
  else o.detail << " | " << a << "; " << b << "; " << c << "; " << d;
}

void c5(Outcome& o) {
  QuadricSystem A = load_quadric_spec(OSCULUM_TEST_DATA "/six_quadrics.json");
  ParamVariety v = variety_from_quadrics(A);
  const std::size_t i2 = ideal_slice(v, 2).size();
  std::ostringstream s;
  s << "dim I_2 = " << i2;
  const bool dim_ok = i2 == 6;
  GenerationReport g = quadratic_generation_check(v, {}, 3);
  bool cubic_ok = false;
  std::size_t excess = 0;
  if (!g.per_degree.empty()) {
    excess = g.per_degree[0].excess;
    if (excess == 1) {
      const std::size_t dim = sym_space(13, 3).dim();
      std::vector<VecQ> prods;
      for (const auto& p : ideal_times_linear(ideal_slice(v, 2), 13, 2)) prods.push_back(to_dense(p, dim));
      MPoly cubic = parse_poly("x7*x8*x9 - x10*x11*x12", VarNames::ambient(13));
      VecQ cv = to_dense(form_coords(cubic, 3), dim);
      auto with = prods;
      with.push_back(to_dense(form_coords(g.per_degree[0].excess_reps[0], 3), dim));
      cubic_ok = span_contains(with, cv, dim) && !span_contains(prods, cv, dim);
    }
  }
  s << ", degree-3 excess " << excess << (cubic_ok ? " spanned by x7x8x9 - x10x11x12" : "");
  o.need(dim_ok, "dim I_2 = " + std::to_string(i2) + " (want 6)");
  o.need(excess == 1 && cubic_ok, "degree-3 excess wrong");
  o.detail << (o.pass ? "" : " | ") << s.str();
}

void c6(Outcome& o) {
  FundData d;
  d.n = 2;
  d.a = 3;
  MPoly w1 = MPoly::variable(2, 0), w2 = MPoly::variable(2, 1);
  d.q = {SymForm::from_poly(w1 * w1, 2), SymForm::from_poly(w1 * w2, 2), SymForm::from_poly(w2 * w2, 2)};
  d.r3.assign(3, SymForm::zero(2, 3));
  d.has_r3 = true;
  std::vector<VecQ> cols;
  for (std::size_t u = 0; u < 8; ++u) {
    VecQ g0(2);
    MatQ g1(2, 3);
    if (u < 2) g0[u] = 1;
    else g1((u - 2) / 3, (u - 2) % 3) = 1;
    FundData e = frame_action(d, g0, g1);
    VecQ col;
    for (const auto& f : e.r3) col.insert(col.end(), f.coeffs.begin(), f.coeffs.end());
    cols.push_back(col);
  }
  const std::size_t r = rank(MatQ::from_rows(cols, cols[0].size()));
  o.need(r == 6, "rank " + std::to_string(r));
  if (o.pass) o.detail << "rank " << r << " of 12 coefficients";
}

void c7a(Outcome& o) {
  std::size_t bad = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 3 + seed % 4, a = 1 + seed % 3;
    QuadricSystem A = random_quadric_system(n, a, seed);
    const std::size_t lhs = prolongation(A).size() + bracket_part(A).size();
    if (lhs != A.a() * n) {
      if (bad++ == 0)
        first = "seed " + std::to_string(seed) + ": " + std::to_string(lhs) + " != " + std::to_string(A.a() * n);
    }
  }
  o.need(bad == 0, std::to_string(bad) + "/100 systems violate dim A^(1) + dim A^[1] = a n, first " + first);
  if (o.pass) o.detail << "100 systems";
}

void c7b(Outcome& o) {
  std::mt19937_64 rng(46);
  std::uniform_int_distribution<int> c(-3, 3);
  auto lin = [&](std::size_t n) {
    MPoly l(n);
    for (std::size_t i = 0; i < n; ++i) l += MPoly::variable(n, i) * Rat(c(rng));
    return l;
  };
  std::size_t with_rel = 0, certified = 0;
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 2 + it % 4;
    QuadricSystem A;
    A.n = n;
    if (it % 3 == 0) {
      for (std::size_t k = 0; k < 3 + n % 2; ++k) A.gens.push_back(SymForm::from_poly(lin(n) * lin(n), 2));
    } else {
      MPoly l0 = lin(n), l1 = lin(n), l2 = lin(n), l3 = lin(n);
      for (const auto& f : {l0 * l1, l2 * l3, l0 * l2, l1 * l3}) A.gens.push_back(SymForm::from_poly(f, 2));
      if (it % 3 == 2) A.gens.push_back(SymForm::from_poly(lin(n) * lin(n), 2));
    }
    if (A.a() == 0) continue;
    RelationReport r = relations(A, 2);
    if (r.relations.empty()) continue;
    ++with_rel;
    SyzygyCert cert = syzygy_from_relation(A, r.relations[0]);
    MPoly sum(n);
    for (std::size_t mu = 0; mu < cert.quadrics.size(); ++mu)
      sum += SymForm{n, 1, cert.l[mu]}.to_poly() * cert.quadrics[mu].to_poly();
    bool nonzero = false;
    for (const auto& l : cert.l)
      for (const auto& x : l) nonzero |= x != 0;
    if (cert.verified && sum.is_zero() && nonzero && !bracket_part(A).empty()) ++certified;
  }
  o.need(with_rel > 0, "no system with a quadratic relation was generated");
  o.need(certified == with_rel, std::to_string(with_rel - certified) + " relations without a certificate");
  if (o.pass) o.detail << certified << "/" << with_rel << " systems with quadratic relations certified";
}

void c7c(Outcome& o) {
  std::mt19937_64 rng(619);
  std::uniform_int_distribution<int> c(-3, 3);
  auto vec = [&](std::size_t n) {
    VecQ v(n);
    for (auto& x : v) x = c(rng);
    return v;
  };
  auto lin = [](const VecQ& v) { return SymForm{v.size(), 1, v}.to_poly(); };
  std::size_t instances = 0, max_seen = 0;
  std::uint64_t tries = 0;
  while (instances < 200 && tries < 5000) {
    ++tries;
    const std::size_t p = 2 + tries % 3, n = p + 1 + tries % (9 - p - 1);
    if (n > 8) continue;
    std::vector<VecQ> l;
    for (std::size_t i = 0; i < p; ++i) l.push_back(vec(n));
    if (rank(MatQ::from_rows(l, n)) != p) continue;
    std::vector<MPoly> q(p, MPoly(n));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        MPoly m = lin(vec(n));
        q[i] += m * lin(l[j]);
        q[j] -= m * lin(l[i]);
        for (std::size_t k = 0; k < p; ++k) {
          Rat b = c(rng);
          q[i] += lin(l[j]) * lin(l[k]) * b;
          q[j] -= lin(l[i]) * lin(l[k]) * b;
        }
      }
    std::vector<SymForm> Q;
    for (const auto& f : q) Q.push_back(SymForm::from_poly(f, 2));
    if (QuadricSystem{n, Q}.a() != p) continue;
    RankBoundReport r = rank_bound_check(l, Q, 50, tries);
    ++instances;
    o.need(r.pass, "rank " + std::to_string(r.max_rank) + " > " + std::to_string(r.bound));
    max_seen = std::max(max_seen, r.max_rank);
  }
  o.need(instances == 200, "only " + std::to_string(instances) + " valid instances");
  ExtremalSystem e = extremal_syzygy_system(3, 6);
  RankBoundReport er = rank_bound_check(e.l, e.quadrics);
  o.need(er.max_rank == 4, "extremal system rank " + std::to_string(er.max_rank));
  if (o.pass) o.detail << instances << " instances within 2(p-1) (max rank seen " << max_seen << "); extremal p=3 n=6 rank " << er.max_rank;
}

void c8(Outcome& o) {
  o.need(ci_verdict(plane_conic(), {}, 3).complete_intersection, "conic not CI");
  CIVerdict tc = ci_verdict(twisted_cubic(), {Rat(0)}, 3);
  bool witness = tc.per_degree.size() > 1 && tc.per_degree[1].witness.has_value();
  o.need(!tc.complete_intersection && witness, "twisted cubic verdict/witness wrong");
  std::size_t ci_ok = 0, q_ok = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ParamVariety v = ci_random(3, {2, 3}, seed);
    bool ok = ci_verdict(v, {}, 3).complete_intersection;
    ci_ok += ok;
    o.need(ok, "ci_random seed " + std::to_string(seed) + " not CI");
    ParamVariety w = variety_from_quadrics(random_quadric_system(6, 2, seed, true));
    bool okq = ci_verdict(w, {}, 3).complete_intersection;
    q_ok += okq;
    o.need(okq, "quadric graph seed " + std::to_string(seed) + " not CI");
  }
  if (o.pass) o.detail << "conic CI, twisted cubic not CI with witness, " << ci_ok << "/10 quadric+cubic CI, " << q_ok << "/10 quadric graphs CI";
}

void c9(Outcome& o) {
  ParamVariety s = spinor10();
  const std::size_t i2 = ideal_slice(s, 2).size();
  o.need(i2 == 10, "dim I_2 = " + std::to_string(i2));
  for (const auto& f : spinor10_equations()) o.need(f.substitute(s.coords).is_zero(), "an equation does not vanish");
  o.need(quadratic_generation_check(s, {}, 3).generated, "not generated by quadrics in degree 3");
  if (o.pass) o.detail << "dim I_2 = 10, ten equations vanish, I_3 = I_2 V*";
}

void c10(Outcome& o) {
  CompAlgebra O = CompAlgebra::split(8);
  ParamVariety v = severi(O);
  std::size_t count = 0;
  for (const auto& f : severi_equations(O)) {
    o.need(f.substitute(v.coords).is_zero(), "an equation does not vanish");
    ++count;
  }
  if (o.pass) o.detail << count << " equations vanish on the octonionic fixture";
}

void c11(Outcome& o) {
  Thresholds a = thresholds(10, 2, -1), b = thresholds(6, 3, -1), c = thresholds(11, 4, -1);
  o.need(a.prolongation_forced_zero && a.no_linear_syzygies_forced && a.ci_if_quadric_generated, "(10,2,-1)");
  o.need(b.prolongation_forced_zero && !b.no_linear_syzygies_forced, "(6,3,-1)");
  o.need(c.no_linear_syzygies_forced, "(11,4,-1)");
  if (o.pass) o.detail << "(10,2,-1) all true; (6,3,-1) prolongation only; (11,4,-1) no linear syzygies";
}

struct Criterion {
  std::string id, title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"1", "osculation dimension formula", c1},
      {"2", "osculation lower bound", c2},
      {"3", "classical Monge residual", c3},
      {"4", "Monge system for quadrics", c4},
      {"5", "six-quadric ideal from quadrics", c5},
      {"6", "frame action rank", c6},
      {"7a", "prolongation plus bracket equals a n", c7a},
      {"7b", "quadratic relations give linear syzygies", c7b},
      {"7c", "rank bound for linear syzygies", c7c},
      {"8", "complete intersection criterion", c8},
      {"9", "spinor fixture", c9},
      {"10", "octonionic Severi fixture", c10},
      {"11", "codimension thresholds", c11},
  };
  std::vector<std::string> want(argv + 1, argv + argc);
  int failed = 0;
  for (const auto& c : all) {
    if (!want.empty() && std::find(want.begin(), want.end(), c.id) == want.end()) continue;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail.str("");
      o.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << o.detail.str() << " ["
              << static_cast<int>(secs * 1000) << " ms]" << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
