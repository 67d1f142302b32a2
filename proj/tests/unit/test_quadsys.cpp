#include "doctest.h"
#include "helpers.hpp"
#include "osculum/exactalg/parse.hpp"
#include "osculum/osculate/monge.hpp"
#include "osculum/quadsys/quadsys.hpp"
#include "osculum/variety/ideal.hpp"

using namespace osculum;
using namespace testutil;

namespace {

QuadricSystem sys(std::size_t n, std::initializer_list<const char*> qs) {
  QuadricSystem A;
  A.n = n;
  for (const char* s : qs) A.gens.push_back(SymForm::from_poly(parse_poly(s, VarNames::params(n)), 2));
  return A;
}

MPoly lin(const VecQ& l) { return SymForm{l.size(), 1, l}.to_poly(); }

bool syzygy_holds(const std::vector<VecQ>& l, const std::vector<SymForm>& q) {
  MPoly s(q[0].n);
  for (std::size_t i = 0; i < q.size(); ++i) s += lin(l[i]) * q[i].to_poly();
  return s.is_zero();
}

std::size_t scaled_rank(const MatQ& m0) {
  MatQ m = m0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= 2;
  return bareiss_rank(m);
}

VecQ rand_vec(std::mt19937_64& rng, std::size_t n) {
  VecQ v(n);
  std::uniform_int_distribution<int> c(-3, 3);
  for (auto& x : v) x = c(rng);
  return v;
}

}  // namespace

TEST_CASE("spec parsing and basis") {
  QuadricSystem A = parse_quadric_spec(R"({"n": 3, "quadrics": ["t1*t2", "t1*t3", "t1*t2 + t1*t3"]})");
  CHECK(A.n == 3);
  CHECK(A.gens.size() == 3);
  CHECK(A.a() == 2);
  CHECK_THROWS_AS(parse_quadric_spec(R"({"n": 2, "quadrics": ["t1"]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quadric_spec(R"({"n": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quadric_spec("[1,"), std::invalid_argument);
}

TEST_CASE("prolongations") {
  CHECK(prolongation(sys(2, {"t1^2", "t1*t2", "t2^2"})).size() == 4);
  CHECK(prolongation(sys(3, {"t1*t2", "t1*t3"})).empty());
  // partials of c0 t1^3 + c1 t1^2 t2 + c2 t1 t2^2 + c3 t2^3 in span{t1^2, t1 t2} force c2 = c3 = 0
  auto p = prolongation(sys(2, {"t1^2", "t1*t2"}));
  CHECK(p.size() == 2);
  for (const auto& f : p) {
    CHECK(f.to_poly().coefficient(Exponent{1, 2}) == 0);
    CHECK(f.to_poly().coefficient(Exponent{0, 3}) == 0);
  }
}

TEST_CASE("bracket part") {
  CHECK(bracket_part(sys(2, {"t1^2", "t1*t2", "t2^2"})).size() == 2);
  QuadricSystem segre = sys(3, {"t1*t2", "t1*t3"});
  auto b = bracket_part(segre);
  REQUIRE(b.size() == 1);
  CHECK(syzygy_holds(b[0].l, segre.basis()));
  // proportional to t3 q1 - t2 q2
  CHECK(b[0].l[0][0] == 0);
  CHECK(b[0].l[0][1] == 0);
  CHECK(b[0].l[0][2] == -b[0].l[1][1]);
  CHECK(bracket_part(random_quadric_system(4, 2, 7)).empty());
}

TEST_CASE("multiplication rank-nullity and the prolongation inclusion") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 2 + seed % 4, a = 1 + seed % 3;
    QuadricSystem A = random_quadric_system(n, a, seed);
    const std::size_t mr = multiplication_rank(A);
    CHECK(mr + bracket_part(A).size() == A.a() * n);
    CHECK(prolongation(A).size() <= mr);
    for (const auto& s : bracket_part(A)) CHECK(syzygy_holds(s.l, A.basis()));
  }
  // A = {t1^2}: A^(1) = {t1^3}, no syzygies, a n = 2
  QuadricSystem one = sys(2, {"t1^2"});
  CHECK(prolongation(one).size() == 1);
  CHECK(bracket_part(one).empty());
  CHECK(prolongation(one).size() + bracket_part(one).size() != one.a() * one.n);
}

TEST_CASE("relations") {
  QuadricSystem mixed = sys(3, {"t1*t2", "t1*t3", "t2*t3"});
  CHECK(relations(mixed, 2).relations_dim == 0);
  CHECK(relations(mixed, 3).relations_dim == 0);

  QuadricSystem full = sys(2, {"t1^2", "t1*t2", "t2^2"});
  RelationReport r = relations(full, 2);
  CHECK(r.relations_dim == 1);
  REQUIRE(r.relations.size() == 1);
  MPoly rel = r.relations[0];
  MPoly expect = parse_poly("t1*t3 - t2^2", VarNames::params(3));
  CHECK(((rel * expect.coefficient(Exponent{1, 0, 1})) - expect * rel.coefficient(Exponent{1, 0, 1})).is_zero());

  QuadricSystem six = sys(6, {"t1*t4", "t2*t5", "t3*t6", "t1*t5", "t2*t6", "t3*t4"});
  CHECK(relations(six, 2).relations_dim == 0);
  RelationReport r3 = relations(six, 3);
  CHECK(r3.quotient_dim == 1);
  REQUIRE(r3.non_generated.size() == 1);
  MPoly cubic = parse_poly("t1*t2*t3 - t4*t5*t6", VarNames::params(6));
  MPoly got = r3.non_generated[0];
  Rat s = got.coefficient(Exponent{1, 1, 1, 0, 0, 0});
  REQUIRE(s != 0);
  CHECK(got == cubic * s);
  CHECK_THROWS_AS(relations(six, 0), std::invalid_argument);
}

TEST_CASE("bidegree syzygies") {
  QuadricSystem segre = sys(3, {"t1*t2", "t1*t3"});
  BidegreeReport b = syzygy_bidegree(segre, 1, 1);
  CHECK(b.syzygy_dim == 1);
  CHECK(b.excess == 0);
  // Koszul pair q2 q1 - q1 q2 lives in bidegree (1, 2)
  BidegreeReport k = syzygy_bidegree(sys(3, {"t1^2", "t2^2"}), 1, 2);
  CHECK(k.syzygy_dim == 1);
  CHECK(k.excess == 0);
}

TEST_CASE("linear syzygies from quadratic relations") {
  QuadricSystem full = sys(2, {"t1^2", "t1*t2", "t2^2"});
  MPoly rel = parse_poly("t1*t3 - t2^2", VarNames::params(3));
  SyzygyCert c = syzygy_from_relation(full, rel);
  CHECK(c.verified);
  CHECK(syzygy_holds(c.l, c.quadrics));
  bool nonzero = false;
  for (const auto& l : c.l) nonzero |= !is_zero_vec(l);
  CHECK(nonzero);
  CHECK_THROWS_AS(syzygy_from_relation(full, MPoly(3)), std::invalid_argument);
  CHECK_THROWS_AS(syzygy_from_relation(full, parse_poly("t1*t3", VarNames::params(3))), std::invalid_argument);

  // every system carrying a quadratic relation has a linear syzygy
  std::mt19937_64 rng(21);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = 3 + it % 3;
    std::vector<MPoly> l;
    for (int i = 0; i < 4; ++i) l.push_back(lin(rand_vec(rng, n)));
    QuadricSystem A;
    A.n = n;
    for (const auto& f : {l[0] * l[1], l[2] * l[3], l[0] * l[2], l[1] * l[3]}) A.gens.push_back(SymForm::from_poly(f, 2));
    if (it % 2) A.gens.push_back(SymForm::from_poly(lin(rand_vec(rng, n)) * lin(rand_vec(rng, n)), 2));
    RelationReport r = relations(A, 2);
    if (r.relations.empty()) continue;
    CHECK_FALSE(bracket_part(A).empty());
    SyzygyCert cert = syzygy_from_relation(A, r.relations[0]);
    CHECK(cert.verified);
    CHECK(syzygy_holds(cert.l, cert.quadrics));
  }
}

TEST_CASE("rank bound for linear syzygies") {
  QuadricSystem A = sys(3, {"t1*t2", "t1*t3"});
  RankBoundReport two = rank_bound_check({VecQ{Rat(0), Rat(0), Rat(1)}, VecQ{Rat(0), Rat(-1), Rat(0)}}, A.gens);
  CHECK(two.pass);
  CHECK(two.bound == 2);
  CHECK(two.max_rank == 2);
  CHECK_THROWS_AS(rank_bound_check({VecQ{Rat(0), Rat(0), Rat(1)}, VecQ{Rat(0), Rat(1), Rat(0)}}, A.gens),
                  std::invalid_argument);

  ExtremalSystem e = extremal_syzygy_system(3, 6);
  CHECK(syzygy_holds(e.l, e.quadrics));
  RankBoundReport r = rank_bound_check(e.l, e.quadrics);
  CHECK(r.pass);
  CHECK(r.max_rank == 4);
  ExtremalSystem e2 = extremal_syzygy_system(2, 3);
  CHECK(e2.quadrics.size() == 2);
  CHECK(bracket_part(QuadricSystem{3, e2.quadrics}).size() == 1);
  CHECK(rank_bound_check(e2.l, e2.quadrics).max_rank <= 2);
  CHECK_THROWS_AS(extremal_syzygy_system(3, 5), std::invalid_argument);
  ExtremalOptions none;
  none.include_m = false;
  CHECK_THROWS_AS(extremal_syzygy_system(3, 6, none), std::invalid_argument);

  // planted q^i = sum m_ij l^j + sum beta_ijk l^j l^k, m antisymmetric, beta antisymmetric in ij
  std::mt19937_64 rng(99);
  std::size_t checked = 0;
  for (int it = 0; it < 60; ++it) {
    const std::size_t p = 2 + it % 3, n = p + 1 + it % 4;
    std::vector<VecQ> l;
    for (std::size_t i = 0; i < p; ++i) l.push_back(rand_vec(rng, n));
    if (rank(MatQ::from_rows(l, n)) != p) continue;
    std::vector<MPoly> q(p, MPoly(n));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        MPoly m = lin(rand_vec(rng, n));
        q[i] += m * lin(l[j]);
        q[j] -= m * lin(l[i]);
        for (std::size_t k = 0; k < p; ++k) {
          Rat b = rand_vec(rng, 1)[0];
          q[i] += lin(l[j]) * lin(l[k]) * b;
          q[j] -= lin(l[i]) * lin(l[k]) * b;
        }
      }
    std::vector<SymForm> Q;
    for (const auto& f : q) Q.push_back(SymForm::from_poly(f, 2));
    if (QuadricSystem{n, Q}.a() != p) continue;
    RankBoundReport rep = rank_bound_check(l, Q, 20, it);
    CHECK(rep.pass);
    for (const auto& f : Q) CHECK(scaled_rank(quadric_matrix(f)) <= 2 * (p - 1));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("codimension thresholds") {
  Thresholds a = thresholds(10, 2, -1);
  CHECK(a.prolongation_forced_zero);
  CHECK(a.no_linear_syzygies_forced);
  CHECK(a.ci_if_quadric_generated);
  Thresholds b = thresholds(6, 3, -1);
  CHECK(b.prolongation_forced_zero);
  CHECK_FALSE(b.no_linear_syzygies_forced);
  Thresholds c = thresholds(11, 4, -1);
  CHECK(c.no_linear_syzygies_forced);
  CHECK_FALSE(thresholds(12, 5, -1).no_linear_syzygies_forced);
  CHECK_FALSE(thresholds(10, 2, 6).prolongation_forced_zero);
}

TEST_CASE("varieties built from quadric systems") {
  ParamVariety conic = variety_from_quadrics(sys(1, {"t1^2"}));
  CHECK(conic.coords.size() == 3);
  CHECK(conic.coords[2] == MPoly::variable(1, 0).pow(2));
  CHECK(ideal_slice(conic, 2).size() == 1);

  ParamVariety segre = variety_from_quadrics(sys(3, {"t1*t2", "t1*t3"}));
  CHECK(ideal_slice(segre, 2).size() == 3);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    QuadricSystem A = random_quadric_system(4, 2, seed, true);
    ParamVariety v = variety_from_quadrics(A);
    AdaptedChart c = adapt_at_point(v, {}, 5);
    FundData d = fundamental_data(c);
    const std::size_t dim = sym_space(4, 2).dim();
    std::vector<VecQ> qa, qb;
    for (const auto& q : d.q) qa.push_back(q.coeffs);
    for (const auto& q : A.basis()) qb.push_back(q.coeffs);
    CHECK(span_sum(qa, qb, dim).size() == 2);
    for (std::size_t mu = 0; mu < 2; ++mu) {
      CHECK(d.r3[mu].is_zero());
      CHECK(d.r4[mu].is_zero());
      CHECK(d.r5[mu].is_zero());
    }
    MongeReport r = monge_quadrics(v, c);
    CHECK(r.verdict == MongeVerdict::MongeHolds);
    for (const auto& m : r.solution.A) CHECK(m == MatQ(2, 4));
    for (const auto& m : r.solution.B) CHECK(m == MatQ(2, 2));
  }
  CHECK_THROWS_AS(variety_from_quadrics(QuadricSystem{2, {SymForm::zero(2, 2)}}), std::invalid_argument);
}
