#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "osculum/quadsys/quadsys.hpp"
#include "osculum/variety/variety.hpp"

namespace osculum {

struct AnalysisConfig {
  std::string variety;   // catalog name
  std::string spec;      // variety spec file
  std::string point;     // "a,b,..." rationals, "random", or empty for the marked point
  std::uint64_t seed = 1;
  int max_degree = 3;    // D
  int max_order = 7;     // K
  bool json = false;

  void validate() const;  // throws std::invalid_argument
};

ParamVariety load_variety(const AnalysisConfig& cfg);
// Marked point, explicit list, or seeded random small-height rationals.
std::vector<Rat> resolve_point(const ParamVariety& v, const AnalysisConfig& cfg);

nlohmann::json variety_json(const ParamVariety& v, const std::vector<Rat>& t0,
                            const AnalysisConfig& cfg);
nlohmann::json analyze_report(const ParamVariety& v, const AnalysisConfig& cfg);
nlohmann::json monge_report(const ParamVariety& v, const AnalysisConfig& cfg);
nlohmann::json ci_report(const ParamVariety& v, const AnalysisConfig& cfg);
nlohmann::json quadric_system_json(const QuadricSystem& A);

// Indented key: value rendering of a report; same numbers as the JSON.
std::string render_text(const nlohmann::json& report);

}  // namespace osculum
