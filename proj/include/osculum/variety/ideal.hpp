#pragma once

#include <optional>
#include <vector>

#include "osculum/variety/variety.hpp"

namespace osculum {

// Canonical basis of I_d(X) as coordinates over sym_space(n + a + 1, d).
// Parametrized varieties: exact kernel of P -> P(coords(t)). Graph-form
// varieties: degree-d part of the ideal generated by the graph equations.
std::vector<SparseVec> ideal_slice(const ParamVariety& v, int d);

// Spanning set of I_d o V*: every basis form times every coordinate.
std::vector<SparseVec> ideal_times_linear(const std::vector<SparseVec>& ideal_d,
                                          std::size_t nvars, int d);

// Exact membership of a homogeneous form in I(X).
bool in_ideal(const ParamVariety& v, const MPoly& p);

// dP at the chart point, as components along dy_mu (mu = 1..a).
VecQ conormal_part(const AdaptedChart& c, const MPoly& p_original);

struct ConormalFiltration {
  std::vector<std::size_t> dims;  // dims[k-1] = dim N*_k, k = 1..D
  std::vector<int> degrees;       // d_1 < d_2 < ...
  std::vector<std::size_t> increments;
  bool exhausted = false;         // N*_D = N*
};

ConormalFiltration conormal_filtration(const ParamVariety& v, const AdaptedChart& c, int D);
ConormalFiltration conormal_filtration(const ParamVariety& v, const std::vector<Rat>& t0, int D);

struct CIDegree {
  int k = 0;
  std::size_t ideal_dim = 0;          // dim I_k
  std::size_t products_dim = 0;       // dim I_{k-1} o V*
  std::size_t essential = 0;          // dim I_k / (I_{k-1} o V*)
  std::size_t conormal_increment = 0; // dim N*_k / N*_{k-1}
  std::size_t kernel_dim = 0;         // kernel of [d]_k
  std::optional<MPoly> witness;       // element of I_k outside I_{k-1} o V* killed by [d]_k
};

struct CIVerdict {
  bool complete_intersection = false;
  bool exhausted = false;
  std::vector<CIDegree> per_degree;
  std::vector<int> degrees;
  std::vector<std::size_t> increments;
};

CIVerdict ci_verdict(const ParamVariety& v, const std::vector<Rat>& t0, int D);

}  // namespace osculum
