#include "doctest.h"
#include "helpers.hpp"
#include "osculum/catalog/catalog.hpp"
#include "osculum/quadsys/quadsys.hpp"
#include "osculum/variety/ideal.hpp"

using namespace osculum;
using namespace testutil;

namespace {

std::vector<Rat> rand_elem(std::mt19937_64& rng, std::size_t d) {
  std::vector<Rat> x(d);
  for (auto& c : x) c = rand_rat(rng, 4);
  return x;
}

}  // namespace

TEST_CASE("split composition algebras") {
  std::mt19937_64 rng(31);
  for (std::size_t d : {1, 2, 4, 8}) {
    CompAlgebra A = CompAlgebra::split(d);
    CHECK(A.dim() == d);
    std::size_t negative = 0;
    for (std::size_t i = 0; i < d; ++i) negative += A.norm_sign(i) < 0;
    CHECK(negative == d / 2);
    std::vector<Rat> one(d);
    one[0] = 1;
    for (int it = 0; it < 30; ++it) {
      auto x = rand_elem(rng, d), y = rand_elem(rng, d);
      CHECK(A.norm(A.mul(x, y)) == A.norm(x) * A.norm(y));
      CHECK(A.conj(A.mul(x, y)) == A.mul(A.conj(y), A.conj(x)));
      CHECK(A.conj(A.conj(x)) == x);
      CHECK(A.mul(one, x) == x);
      CHECK(A.mul(x, one) == x);
      // x conj(x) = N(x) 1
      std::vector<Rat> nx(d);
      nx[0] = A.norm(x);
      CHECK(A.mul(x, A.conj(x)) == nx);
      // alternative laws
      CHECK(A.mul(A.mul(x, x), y) == A.mul(x, A.mul(x, y)));
      CHECK(A.mul(A.mul(y, x), x) == A.mul(y, A.mul(x, x)));
    }
  }
  // octonions are not associative
  CompAlgebra O = CompAlgebra::split(8);
  bool assoc = true;
  for (int it = 0; it < 5 && assoc; ++it) {
    auto x = rand_elem(rng, 8), y = rand_elem(rng, 8), z = rand_elem(rng, 8);
    assoc = O.mul(O.mul(x, y), z) == O.mul(x, O.mul(y, z));
  }
  CHECK_FALSE(assoc);
  CHECK_THROWS_AS(CompAlgebra::split(3), std::invalid_argument);
}

TEST_CASE("polynomial and rational products agree") {
  std::mt19937_64 rng(5);
  CompAlgebra A = CompAlgebra::split(8);
  std::vector<MPoly> X, Y;
  for (std::size_t i = 0; i < 8; ++i) {
    X.push_back(MPoly::variable(16, i));
    Y.push_back(MPoly::variable(16, 8 + i));
  }
  auto XY = A.mul(X, Y);
  MPoly nX = A.norm(X);
  for (int it = 0; it < 5; ++it) {
    auto x = rand_elem(rng, 8), y = rand_elem(rng, 8);
    std::vector<Rat> at(x);
    at.insert(at.end(), y.begin(), y.end());
    auto xy = A.mul(x, y);
    for (std::size_t i = 0; i < 8; ++i) CHECK(XY[i].evaluate(at) == xy[i]);
    CHECK(nX.evaluate(at) == A.norm(x));
  }
}

TEST_CASE("catalog entries carry correct metadata") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    CHECK(e.name == name);
    CHECK_FALSE(e.description.empty());
    const ParamVariety& v = e.variety;
    v.validate();
    if (e.ideal2_dim && v.ambient() <= 16) CHECK_MESSAGE(ideal_slice(v, 2).size() == *e.ideal2_dim, name);
    for (const auto& f : e.known_equations) CHECK_MESSAGE(in_ideal(v, f), name);
    AdaptedChart c = adapt_at_point(v, v.marked_point(), 3);
    if (e.third_ff_zero) CHECK_MESSAGE(third_fundamental_form(c).empty() == *e.third_ff_zero, name);
    if (e.linear_syzygies) {
      FundData d = fundamental_data(c);
      CHECK_MESSAGE(bracket_part(QuadricSystem{v.n, d.q}).size() == *e.linear_syzygies, name);
    }
  }
}

TEST_CASE("parametrized names") {
  CHECK(catalog_entry("veronese-4").variety.n == 4);
  CHECK(catalog_entry("segre-2-3").variety.ambient() == 12);
  CHECK(catalog_entry("grass2-6").variety.n == 8);
  CHECK(catalog_entry("grass2-5").variety.ambient() == 10);
  for (const auto& bad : {"veronese-", "segre-1", "severi-3", "nope", "grass2-x", "veronese-1-2"})
    CHECK_THROWS_AS(catalog_entry(bad), std::invalid_argument);
}

TEST_CASE("Veronese and Segre quadric counts") {
  for (std::size_t n : {1, 2, 3}) {
    const std::size_t m = n + 1;
    const std::size_t expect = binomial(binomial(m + 1, 2) + 1, 2) - binomial(m + 3, 4);
    CHECK(ideal_slice(veronese(n), 2).size() == expect);
  }
  CHECK(ideal_slice(segre(1, 1), 2).size() == 1);
  CHECK(ideal_slice(segre(1, 2), 2).size() == 3);
  CHECK(ideal_slice(segre(2, 2), 2).size() == 9);
  CHECK(ideal_slice(grass2(4), 2).size() == 1);
  CHECK(ideal_slice(grass2(5), 2).size() == 5);
}

TEST_CASE("spinor and Severi equations") {
  auto sp = spinor10_equations();
  CHECK(sp.size() == 10);
  ParamVariety s = spinor10();
  for (const auto& f : sp) CHECK(f.substitute(s.coords).is_zero());
  CHECK(ideal_slice(s, 2).size() == 10);

  const std::size_t dims[] = {6, 9, 15, 27};
  std::size_t i = 0;
  for (std::size_t d : {1, 2, 4, 8}) {
    CompAlgebra A = CompAlgebra::split(d);
    ParamVariety v = severi(A);
    CHECK(v.n == 2 * d);
    CHECK(v.ambient() == 3 * d + 3);
    auto eqs = severi_equations(A);
    CHECK(eqs.size() == 3 * d + 3);
    for (const auto& f : eqs) CHECK(f.substitute(v.coords).is_zero());
    CHECK(span_rank([&] {
            std::vector<SparseVec> out;
            for (const auto& f : eqs) out.push_back(form_coords(f, 2));
            return out;
          }(),
                    sym_space(v.ambient(), 2).dim()) == dims[i]);
    if (d <= 4) CHECK(ideal_slice(v, 2).size() == dims[i]);
    ++i;
  }
}

TEST_CASE("six binomial quadrics") {
  ParamVariety v = six_quadric_fold();
  auto eqs = six_quadric_equations();
  CHECK(eqs.size() == 7);
  for (const auto& f : eqs) CHECK(f.substitute(v.coords).is_zero());
}

TEST_CASE("graph fixtures") {
  ParamVariety a = ci_random(3, {2, 3}, 1), b = ci_random(3, {2, 3}, 1), c = ci_random(3, {2, 3}, 2);
  CHECK(a.graph_rhs == b.graph_rhs);
  CHECK(a.graph_rhs != c.graph_rhs);
  CHECK(a.graph_rhs[0].degree() == 2);
  CHECK(a.graph_rhs[1].degree() == 3);
  CHECK_THROWS_AS(ci_random(3, {1}, 1), std::invalid_argument);
  ParamVariety q = quadric_pair(2, {Rat(1), Rat(2)}, {Rat(1), Rat(2), Rat(-1), Rat(3)});
  CHECK(q.ambient() == 5);
  CHECK(q.graph_equations().size() == 2);
  CHECK_THROWS_AS(quadric_pair(2, {Rat(1)}, {}), std::invalid_argument);
}
