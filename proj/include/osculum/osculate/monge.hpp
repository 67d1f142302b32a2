#pragma once

#include <string>
#include <vector>

#include "osculum/variety/variety.hpp"

namespace osculum {

enum class MongeVerdict { MongeHolds, HypothesisFails, Order3Fails, Order4Fails, Order5Fails };

const char* to_string(MongeVerdict v);

// Generator for mu: y^mu y0 - q^mu(y_alpha) - sum A^mu(nu, gamma) y^nu y_gamma
//                  - sum_{nu,tau} B^mu(nu, tau) y^nu y^tau, B^mu symmetric.
struct MongeSolution {
  std::vector<MatQ> A;  // a x n each
  std::vector<MatQ> B;  // a x a each
};

struct MongeStage {
  int order = 0;
  bool solvable = false;
  std::size_t solution_dim = 0;  // dim of the affine solution set, summed over mu
};

struct MongeReport {
  std::size_t n = 0, a = 0;
  MongeVerdict verdict = MongeVerdict::HypothesisFails;
  bool third_ff_zero = false;
  bool second_ff_injective = false;
  std::size_t linear_syzygies = 0;
  std::string hypothesis_note;

  std::size_t ker3 = 0, ker4 = 0, ker5 = 0;
  std::size_t ker3_bound = 0, ker4_bound = 0;
  bool ker3_equal = false, ker4_equal = false;
  bool bounds_consistent = true;  // equality flags agree with stage solvability

  std::vector<MongeStage> stages;
  MongeSolution solution;
  std::vector<MPoly> generators_adapted;
  std::vector<MPoly> generators;  // original coordinates, only when all verified
  bool membership_failed = false;
};

// Needs cap >= 5.
MongeReport monge_quadrics(const ParamVariety& v, const AdaptedChart& c);

// r_k predicted from q and a solution; k >= 3.
std::vector<SymForm> predict_higher_variations(const FundData& d, const MongeSolution& s, int k);

}  // namespace osculum
