#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osculum/tensor/sym.hpp"
#include "osculum/variety/variety.hpp"

namespace osculum {

// Span A of quadrics in S^2 T*, dim T* = n.
struct QuadricSystem {
  std::size_t n = 0;
  std::vector<SymForm> gens;

  // Lexicographically first independent subset of gens.
  std::vector<SymForm> basis() const;
  std::size_t a() const { return basis().size(); }
  void validate() const;
};

// {"n": 6, "quadrics": ["t1*t4", ...]}
QuadricSystem parse_quadric_spec(const std::string& json_text);
QuadricSystem load_quadric_spec(const std::string& path);

// Random integer-coefficient system; with syzygy_free, resampled until the
// bracket part vanishes. Deterministic in the seed.
QuadricSystem random_quadric_system(std::size_t n, std::size_t a, std::uint64_t seed,
                                    bool syzygy_free = false);

// A^(1) = {P in S^3 : v -| P in A for all v}.
std::vector<SymForm> prolongation(const QuadricSystem& A);

// A^[1] = kernel of A (x) T* -> S^3 T*. Each element lists one covector per
// basis quadric: sum_mu l[mu] * q^mu = 0.
struct LinearSyzygy {
  std::vector<VecQ> l;
};
std::vector<LinearSyzygy> bracket_part(const QuadricSystem& A);
// dim of the image A . T* in S^3 T*.
std::size_t multiplication_rank(const QuadricSystem& A);

// Kernel of S^k A (x) S^p T* -> S^{2k+p} T* against what linear syzygies,
// quadratic relations and Koszul pairs generate. Elements are polynomials in
// a + n variables: y_1..y_a for the basis quadrics, then w_1..w_n.
struct BidegreeReport {
  int k = 0, p = 0;
  std::size_t syzygy_dim = 0;
  std::size_t generated_dim = 0;
  std::size_t excess = 0;
  std::vector<MPoly> excess_reps;
};
BidegreeReport syzygy_bidegree(const QuadricSystem& A, int k, int p);

// Pure relations among the quadrics in degree e (bidegree (e, 0)).
struct RelationReport {
  int degree = 0;
  std::size_t relations_dim = 0;
  std::size_t generated_dim = 0;  // from quadratic relations times S^{e-2} A
  std::size_t quotient_dim = 0;
  std::vector<MPoly> relations;   // polynomials in y_1..y_a
  std::vector<MPoly> non_generated;
};
RelationReport relations(const QuadricSystem& A, int e);

struct SyzygyCert {
  enum class Kind { Linear, Koszul };
  Kind kind = Kind::Linear;
  std::vector<VecQ> l;         // covector per basis quadric
  std::vector<SymForm> quadrics;
  VecQ direction;              // contraction vector used
  bool verified = false;
};

// From a quadratic relation c(y) (polynomial in y_1..y_a, a = basis size)
// derive a nonzero linear syzygy by contracting with a vector.
SyzygyCert syzygy_from_relation(const QuadricSystem& A, const MPoly& relation);

// Linear syzygy sum l^i Q_i = 0 with independent l^i and independent Q_i.
struct RankBoundReport {
  std::size_t p = 0;
  std::size_t bound = 0;  // 2(p - 1)
  std::size_t max_rank = 0;
  std::size_t checked = 0;
  bool pass = false;
};
RankBoundReport rank_bound_check(const std::vector<VecQ>& l, const std::vector<SymForm>& Q,
                                 std::size_t samples = 50, std::uint64_t seed = 1);

struct ExtremalOptions {
  bool include_m = true;
  bool random_b = false;
  std::uint64_t seed = 1;
};
struct ExtremalSystem {
  std::vector<VecQ> l;
  std::vector<SymForm> quadrics;
};
// q^i = sum_j m_ij l^j + sum_jk beta_ijk l^j l^k with m antisymmetric and
// beta antisymmetric in (i, j); l^i = w_i and m_ij independent coordinates.
ExtremalSystem extremal_syzygy_system(std::size_t p, std::size_t n,
                                      const ExtremalOptions& opts = {});

struct Thresholds {
  bool prolongation_forced_zero = false;
  bool no_linear_syzygies_forced = false;
  bool ci_if_quadric_generated = false;
};
// b is the dimension of the singular locus, -1 for smooth.
Thresholds thresholds(long n, long a, long b);

// X = closure of t -> [1, t, q^1(t), ..., q^a(t)] over a basis of A.
ParamVariety variety_from_quadrics(const QuadricSystem& A, const std::string& label = "");

}  // namespace osculum
