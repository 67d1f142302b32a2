#pragma once

#include <optional>
#include <vector>

#include "osculum/variety/ideal.hpp"
#include "osculum/variety/variety.hpp"

namespace osculum {

// Degree-d forms (adapted coordinates) whose pullback vanishes through order k.
struct OscSpace {
  int d = 0;
  int k = 0;
  std::size_t n = 0, a = 0;
  std::size_t nvars = 0;
  std::vector<SparseVec> basis;  // over sym_space(nvars, d)
  bool stabilized = false;       // k >= d * coord degree: equals I_d

  std::size_t vector_dim() const { return basis.size(); }
  long projective_dim() const { return static_cast<long>(basis.size()) - 1; }
};

// Throws std::invalid_argument when k exceeds the chart cap.
OscSpace osculating_space(const AdaptedChart& c, int d, int k);
// Same space, rewritten in the original coordinates (canonical basis).
std::vector<SparseVec> to_original_basis(const AdaptedChart& c, const std::vector<SparseVec>& b,
                                         int d);
std::vector<SparseVec> to_adapted_basis(const AdaptedChart& c, const std::vector<SparseVec>& b,
                                        int d);

// C(n+a+d, d) - sum_{j<=p} C(n+j-1, j).
std::size_t expected_dim_316(std::size_t n, std::size_t a, int d, int p);

struct DimCheck {
  int d = 0, order = 0;
  std::size_t expected = 0;  // formula value, or the bound for lower_bound_317
  std::size_t actual = 0;
  bool pass = false;
};

DimCheck check_316(const AdaptedChart& c, int d, int p);  // throws when p > d
// dim at order 2d-1 >= C(a+d-1, d).
DimCheck lower_bound_317(const AdaptedChart& c, int d);

// Osculators with zero coefficient on every y^mu y0^(d-1).
OscSpace singular_osculating(const AdaptedChart& c, int d, int k);

struct CI2dResult {
  int d = 0;
  std::size_t singular_dim = 0;  // singular osculators at order 2d
  std::size_t trivial_dim = 0;   // (I_{d-1} o V*) meeting the same subspace
  bool degenerate = false;       // I_1 != 0
  bool pass = false;
  std::optional<MPoly> witness;  // original coordinates
};

CI2dResult ci_2dd_test(const ParamVariety& v, const std::vector<Rat>& t0, int d);

struct ProfileRow {
  int k = 0;
  int order = 0;
  std::size_t conormal_dim = 0;  // dim of {dP_x : P in ker FF^order of v_k}
  std::size_t expected = 0;
  bool ci_pass = false;
  bool pass = false;
};

struct MongeProfile {
  std::vector<ProfileRow> rows;
  std::vector<std::size_t> filtration;  // reconstructed dim N*_{d_j}
  bool pass = false;
};

MongeProfile monge_profile(const ParamVariety& v, const std::vector<Rat>& t0,
                           const std::vector<int>& degrees,
                           const std::vector<std::size_t>& increments);

struct GenerationDegree {
  int e = 0;
  std::size_t ideal_dim = 0;
  std::size_t generated_dim = 0;
  std::size_t excess = 0;
  std::size_t relation_excess = 0;  // non-generated relations of degree e among |II|
  bool accounted = false;           // excess <= relation_excess
  std::vector<MPoly> excess_reps;
};

struct GenerationReport {
  bool conormal_from_quadrics = false;  // {dP_x : P in I_2} = N*
  std::vector<GenerationDegree> per_degree;
  bool generated = false;
};

GenerationReport quadratic_generation_check(const ParamVariety& v, const std::vector<Rat>& t0,
                                            int D);

// Third derivative of (y''/c)^(-2/3), c = y''(0); y is a one-variable jet.
Jet classical_monge_residual(const Jet& y);

}  // namespace osculum
