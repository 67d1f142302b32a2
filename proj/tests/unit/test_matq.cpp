#include "doctest.h"
#include "helpers.hpp"

using namespace osculum;
using namespace testutil;

TEST_CASE("kernel trivial cases") {
  CHECK(kernel(MatQ::identity(2)).empty());
  CHECK(kernel(MatQ(3, 3)).size() == 3);
}

TEST_CASE("kernel of a rank-3 4x6 matrix against a fraction-free oracle") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 20; ++it) {
    MatQ m = rand_int_matrix(rng, 4, 6, 3);
    std::size_t r = bareiss_rank(m);
    CHECK(rank(m) == r);
    auto ker = kernel(m);
    CHECK(ker.size() == 6 - r);
    for (const auto& v : ker) CHECK(is_zero_vec(m.apply(v)));
    CHECK(rank(MatQ::from_rows(ker, 6)) == ker.size());
  }
}

TEST_CASE("kernel basis is the canonical RREF basis") {
  MatQ m = MatQ::from_rows({{Rat(1), Rat(2), Rat(0), Rat(1)}, {Rat(2), Rat(4), Rat(1), Rat(3)}}, 4);
  auto ker = kernel(m);
  REQUIRE(ker.size() == 2);
  // free columns 1 and 3
  CHECK(ker[0] == VecQ{Rat(-2), Rat(1), Rat(0), Rat(0)});
  CHECK(ker[1] == VecQ{Rat(-1), Rat(0), Rat(-1), Rat(1)});
}

TEST_CASE("rank-nullity on random rational matrices") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 40; ++it) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    MatQ m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % 3 == 0 ? Rat(0) : rand_rat(rng);
    CHECK(rank(m) + kernel(m).size() == c);
  }
}

TEST_CASE("subspace operations") {
  VecQ e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
  CHECK(span_intersection({e1}, {e2}, 2).empty());
  CHECK(span_sum({e1}, {e2}, 2).size() == 2);
  CHECK(span_intersection({e1, e2}, {e1, e2}, 2).size() == 2);
  CHECK(quotient_dim({e1, e2}, {e1}, 2) == 1);
  CHECK(span_contains({e1}, VecQ{Rat(3), Rat(0)}, 2));
  CHECK_FALSE(span_contains({e1}, e2, 2));

  std::mt19937_64 rng(9);
  for (int it = 0; it < 30; ++it) {
    auto draw = [&](std::size_t k) {
      std::vector<VecQ> b;
      for (std::size_t i = 0; i < k; ++i) {
        VecQ v(5);
        for (auto& x : v) x = rng() % 2 ? Rat(0) : rand_rat(rng);
        b.push_back(v);
      }
      return b;
    };
    auto U = draw(1 + rng() % 4), W = draw(1 + rng() % 4);
    std::size_t du = span_basis(U, 5).size(), dw = span_basis(W, 5).size();
    std::size_t ds = span_sum(U, W, 5).size(), di = span_intersection(U, W, 5).size();
    CHECK(di == du + dw - ds);
    CHECK(quotient_dim(U, W, 5) == ds - dw);
  }
  CHECK_THROWS_AS(span_basis({VecQ{Rat(1)}}, 2), std::invalid_argument);
}

TEST_CASE("inverse") {
  MatQ m = MatQ::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}}, 2);
  CHECK(m * inverse(m) == MatQ::identity(2));
  CHECK_THROWS_AS(inverse(MatQ(2, 2)), std::domain_error);
}
