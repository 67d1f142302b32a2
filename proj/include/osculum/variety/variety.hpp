#pragma once

#include <string>
#include <vector>

#include "osculum/exactalg/jet.hpp"
#include "osculum/exactalg/matq.hpp"
#include "osculum/exactalg/sparse_kernel.hpp"
#include "osculum/tensor/sym.hpp"

namespace osculum {

// A variety X^n in P^{n+a}, either through a polynomial parametrization
// t -> [coords(t)] or in graph form around e0 = [1, 0, ..., 0]:
//   x0^(d-1) * x_{n+1+mu} = rhs[mu](x),  rhs of order >= 2 at e0.
struct ParamVariety {
  std::string label;
  std::size_t n = 0;
  std::size_t a = 0;
  std::vector<MPoly> coords;     // n + a + 1 polynomials in t1..tn
  std::vector<MPoly> graph_rhs;  // a homogeneous polynomials in x0..x{n+a}
  std::vector<Rat> point;        // marked parameter point, empty means origin
  std::vector<std::string> coord_labels;

  bool is_implicit() const { return !graph_rhs.empty(); }
  std::size_t ambient() const { return n + a + 1; }
  std::vector<Rat> marked_point() const;
  // Defining equations of the graph form (empty for parametrized varieties).
  std::vector<MPoly> graph_equations() const;
  // Largest coordinate degree, or 0 for graph-form varieties.
  int coord_degree() const;
  void validate() const;  // throws std::invalid_argument
};

// Graph chart at a point: adapted coordinates y = G x put the point at e0 and
// the tangent space at {y_mu = 0}; then y_mu / y0 = f^mu(u), u = y_alpha / y0.
struct AdaptedChart {
  std::size_t n = 0;
  std::size_t a = 0;
  int cap = 0;
  std::vector<Jet> f;           // a jets in n variables, order >= 2
  MatQ change_of_coords;        // G
  MatQ change_inverse;          // G^{-1}
  std::vector<Rat> base_point;  // parameter point
  std::vector<Rat> point;       // projective point in original coordinates
  int coord_degree = 0;         // degree of the parametrization, 0 if not polynomial

  std::size_t ambient() const { return n + a + 1; }
  // [1, u_1..u_n, f^1..f^a] as polynomials (truncated jets).
  std::vector<MPoly> coordinate_series() const;
  // Form in adapted coordinates -> same form in original coordinates.
  MPoly to_original(const MPoly& p_adapted) const;
  MPoly to_adapted(const MPoly& p_original) const;
};

// Throws std::domain_error for singular points or points off the variety.
AdaptedChart adapt_at_point(const ParamVariety& v, const std::vector<Rat>& t0, int cap);

// Taylor data of the chart in symmetric-array convention: f^mu = sum_k r_k^mu,
// with q = r_2.
struct FundData {
  std::size_t n = 0;
  std::size_t a = 0;
  std::vector<SymForm> q, r3, r4, r5;
  bool has_r3 = false, has_r4 = false, has_r5 = false;
};

FundData fundamental_data(const AdaptedChart& c);

// Basis of |III|: cubics sum lambda_mu r3^mu over lambda with sum lambda_mu q^mu = 0.
std::vector<SymForm> third_fundamental_form(const AdaptedChart& c);

// Frame change acting on (q, r3, r4). g0[alpha] = g^0_alpha, g1(alpha, nu) =
// g^alpha_nu, g0n[nu] = g^0_nu (may be empty). q is fixed; r5 is dropped.
FundData frame_action(const FundData& d, const VecQ& g0, const MatQ& g1,
                      const VecQ& g0n = {});

// Substitutes a linear change of variables: result(x) = p(M x).
MPoly linear_substitute(const MPoly& p, const MatQ& m);

// Coordinates of a form over the S^d monomial basis and back.
SparseVec form_coords(const MPoly& p, int d);
MPoly form_from_coords(const SparseVec& v, std::size_t nvars, int d);

// Canonical basis of a span: RREF in reversed column order, so each vector
// has a unit entry at its last nonzero position; sorted by that position.
std::vector<SparseVec> canonical_basis(const std::vector<SparseVec>& vecs, std::size_t dim);

}  // namespace osculum
