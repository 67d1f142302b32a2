#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osculum/catalog/comp_algebra.hpp"
#include "osculum/variety/variety.hpp"

namespace osculum {

// [1, t_alpha, t_alpha t_beta (alpha <= beta)]
ParamVariety veronese(std::size_t n);
// [1, u, v, u_alpha v_j], u-major
ParamVariety segre(std::size_t m, std::size_t n);
// 2x2 minors of [I_2 | t], t a 2 x (m-2) matrix read row-major, minors in
// lexicographic column order.
ParamVariety grass2(std::size_t m);
// [1, x_ij (i<j), x_1..x_5] with x_k = eps_k Pf(complement of k),
// eps = (+,-,+,-,+), Pf(ijkl) = x_ij x_kl - x_ik x_jl + x_il x_jk.
ParamVariety spinor10();
// Rank-one Hermitian 3x3 matrices: [1, u, v, N(u), N(v), conj(u) v].
ParamVariety severi(const CompAlgebra& alg);

// Six binomial quadrics t1t4, t2t5, t3t6, t1t5, t2t6, t3t4 over P^6; the ideal
// has one extra cubic x7x8x9 - x10x11x12.
ParamVariety six_quadric_fold();
// Graph form in P^{n+2}:
//   x0 x_{n+1} = sum x_a^2 + b0 x_{n+1}x_{n+2} + b1 x_{n+2}^2
//   x0 x_{n+2} = sum lambda_a x_a^2 + b2 x_{n+1}^2 + b3 x_{n+1}x_{n+2}
ParamVariety quadric_pair(std::size_t n, const std::vector<Rat>& lambda, const std::vector<Rat>& b);

ParamVariety plane_conic();
ParamVariety plane_cubic();  // marked at t = 1, where y'' != 0
ParamVariety twisted_cubic();
// Graph-form complete intersection of the given degrees (each >= 2) in P^{n+a}:
// x0^(d-1) x_{n+1+mu} = x0^(d-2) sum c_alpha x_alpha^2 + random terms of affine order >= 2.
ParamVariety ci_random(std::size_t n, const std::vector<int>& degrees, std::uint64_t seed);

// Known equations of a fixture, in the ambient coordinates x0..x{n+a}.
std::vector<MPoly> spinor10_equations();
std::vector<MPoly> severi_equations(const CompAlgebra& alg);
std::vector<MPoly> six_quadric_equations();

struct CatalogEntry {
  std::string name;
  std::string description;
  ParamVariety variety;
  std::optional<std::size_t> ideal2_dim;  // oracle-checked dim I_2
  std::optional<bool> third_ff_zero;
  std::optional<std::size_t> linear_syzygies;
  std::vector<MPoly> known_equations;
};

std::vector<std::string> catalog_names();
// Also accepts parametrized names: veronese-N, segre-M-N, grass2-M, severi-D.
// Throws std::invalid_argument for unknown names.
CatalogEntry catalog_entry(const std::string& name);

}  // namespace osculum
