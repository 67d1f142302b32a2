#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "osculum/catalog/catalog.hpp"
#include "osculum/cli/report.hpp"
#include "osculum/quadsys/quadsys.hpp"
#include "osculum/variety/spec_io.hpp"

using namespace osculum;

namespace {

void add_common(CLI::App* cmd, AnalysisConfig& cfg, bool needs_source) {
  if (needs_source) {
    cmd->add_option("--variety", cfg.variety, "catalog name (see `catalog list`)");
    cmd->add_option("--spec", cfg.spec, "variety spec file (JSON)");
  }
  cmd->add_option("--point", cfg.point, "parameter point: comma-separated rationals, or `random`");
  cmd->add_option("--seed", cfg.seed, "seed for random points")->capture_default_str();
  cmd->add_option("--max-degree", cfg.max_degree, "largest form degree D")->capture_default_str();
  cmd->add_option("--max-order", cfg.max_order, "largest osculation order K")->capture_default_str();
  cmd->add_flag("--json", cfg.json, "emit JSON instead of text");
}

void emit(const nlohmann::json& r, bool as_json) {
  if (as_json) std::cout << r.dump(2) << "\n";
  else std::cout << render_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"osculum: osculating hypersurfaces, fundamental forms and quadric systems"};
  app.require_subcommand(1);
  AnalysisConfig cfg;

  auto* catalog = app.add_subcommand("catalog", "list fixtures or dump one as a spec file");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list catalog names");
  auto* dump = catalog->add_subcommand("dump", "print a fixture as a variety spec");
  std::string dump_name;
  dump->add_option("name", dump_name, "catalog name")->required();

  auto* analyze = app.add_subcommand("analyze", "full analysis of a variety at a point");
  add_common(analyze, cfg, true);
  auto* monge = app.add_subcommand("monge", "Monge system for the quadrics of |II|");
  add_common(monge, cfg, true);
  auto* ci = app.add_subcommand("ci", "complete-intersection tests up to degree D");
  add_common(ci, cfg, true);
  auto* fromq = app.add_subcommand("from-quadrics", "analyze [1, t, Q(t)] for a quadric system spec");
  std::string qspec;
  fromq->add_option("spec", qspec, "quadric system spec file (JSON with n and quadrics)")->required();
  add_common(fromq, cfg, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) {
      if (catalog->got_subcommand("list")) {
        for (const auto& name : catalog_names())
          std::cout << name << "  " << catalog_entry(name).description << "\n";
      } else {
        std::cout << dump_variety_spec(catalog_entry(dump_name).variety) << "\n";
      }
      return 0;
    }
    if (fromq->parsed()) {
      QuadricSystem A = load_quadric_spec(qspec);
      ParamVariety v = variety_from_quadrics(A, "from-quadrics");
      if (cfg.max_degree < 1 || cfg.max_order < 2) throw std::invalid_argument("bad --max-degree or --max-order");
      auto r = analyze_report(v, cfg);
      r["command"] = "from-quadrics";
      r["input_system"] = quadric_system_json(A);
      emit(r, cfg.json);
      return 0;
    }
    cfg.validate();
    ParamVariety v = load_variety(cfg);
    if (analyze->parsed()) emit(analyze_report(v, cfg), cfg.json);
    else if (monge->parsed()) emit(monge_report(v, cfg), cfg.json);
    else emit(ci_report(v, cfg), cfg.json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
