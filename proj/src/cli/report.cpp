#include "osculum/cli/report.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "osculum/catalog/catalog.hpp"
#include "osculum/exactalg/parse.hpp"
#include "osculum/osculate/monge.hpp"
#include "osculum/osculate/osculate.hpp"
#include "osculum/variety/ideal.hpp"
#include "osculum/variety/spec_io.hpp"

namespace osculum {

using nlohmann::json;

void AnalysisConfig::validate() const {
  if (variety.empty() == spec.empty())
    throw std::invalid_argument("give exactly one of --variety or --spec");
  if (max_degree < 1) throw std::invalid_argument("--max-degree must be at least 1");
  if (max_order < 2) throw std::invalid_argument("--max-order must be at least 2");
}

ParamVariety load_variety(const AnalysisConfig& cfg) {
  if (!cfg.variety.empty()) return catalog_entry(cfg.variety).variety;
  return load_variety_spec(cfg.spec);
}

std::vector<Rat> resolve_point(const ParamVariety& v, const AnalysisConfig& cfg) {
  if (cfg.point.empty()) return v.marked_point();
  if (cfg.point == "random") {
    if (v.is_implicit()) throw std::invalid_argument("graph-form varieties are analyzed at the origin only");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    std::vector<Rat> p;
    for (std::size_t i = 0; i < v.n; ++i) p.push_back(make_rat(num(rng), den(rng)));
    return p;
  }
  std::vector<Rat> p;
  std::stringstream ss(cfg.point);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(parse_rat(item));
  if (p.size() != v.n)
    throw std::invalid_argument("--point needs " + std::to_string(v.n) + " comma-separated rationals");
  return p;
}

namespace {

json rats(const std::vector<Rat>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

std::string poly_x(const MPoly& p) { return format_poly(p, VarNames::ambient(p.nvars())); }
std::string poly_t(const MPoly& p) { return format_poly(p, VarNames::params(p.nvars())); }

json forms(const std::vector<SymForm>& fs) {
  json j = json::array();
  for (const auto& f : fs) j.push_back(poly_t(f.to_poly()));
  return j;
}

json dims(std::size_t vec) {
  return json{{"vector_dim", vec}, {"projective_dim", static_cast<long>(vec) - 1}};
}

json osculation_table(const AdaptedChart& c, int D, int K) {
  json rows = json::array();
  for (int d = 1; d <= D; ++d)
    for (int k = 0; k <= K; ++k) {
      OscSpace o = osculating_space(c, d, k);
      json r = {{"degree", d}, {"order", k}};
      r.update(dims(o.vector_dim()));
      if (k <= d) {
        std::size_t f = expected_dim_316(c.n, c.a, d, k);
        r["formula_dim"] = f;
        r["formula_pass"] = f == o.vector_dim();
      }
      if (k == 2 * d - 1) {
        std::size_t b = binomial(c.a + d - 1, d);
        r["vector_bound"] = b;
        r["projective_bound"] = static_cast<long>(b) - 1;
        r["equality_flag"] = o.vector_dim() == b;
        r["bound_pass"] = o.vector_dim() >= b;
      }
      r["stabilized"] = o.stabilized;
      rows.push_back(std::move(r));
    }
  return rows;
}

json chart_json(const AdaptedChart& c) {
  json f = json::array();
  for (const auto& j : c.f) f.push_back(poly_t(j.poly()));
  return {{"cap", c.cap}, {"point", rats(c.point)}, {"parameter_point", rats(c.base_point)},
          {"graph_series", f}};
}

json fundamental_json(const AdaptedChart& c) {
  FundData d = fundamental_data(c);
  json j = {{"II", forms(d.q)}};
  j["III"] = c.cap >= 3 ? forms(third_fundamental_form(c)) : json::array();
  if (d.has_r3) j["F3"] = forms(d.r3);
  if (d.has_r4) j["F4"] = forms(d.r4);
  if (d.has_r5) j["F5"] = forms(d.r5);
  return j;
}

json monge_json(const ParamVariety& v, const AdaptedChart& c) {
  MongeReport m = monge_quadrics(v, c);
  json j = {{"verdict", to_string(m.verdict)},
            {"second_ff_injective", m.second_ff_injective},
            {"third_ff_zero", m.third_ff_zero},
            {"linear_syzygies", m.linear_syzygies}};
  if (!m.hypothesis_note.empty()) j["hypothesis_note"] = m.hypothesis_note;
  auto ker = [](std::size_t order, std::size_t dim, std::optional<std::size_t> bound) {
    json r = {{"degree", 2}, {"order", order}};
    r.update(dims(dim));
    if (bound) {
      r["vector_bound"] = *bound;
      r["projective_bound"] = static_cast<long>(*bound) - 1;
      r["equality_flag"] = dim == *bound;
    }
    return r;
  };
  j["kernels"] = json::array({ker(3, m.ker3, m.ker3_bound), ker(4, m.ker4, m.ker4_bound),
                              ker(5, m.ker5, std::nullopt)});
  json stages = json::array();
  for (const auto& s : m.stages)
    stages.push_back({{"order", s.order}, {"solvable", s.solvable}, {"solution_dim", s.solution_dim}});
  j["stages"] = stages;
  j["bounds_consistent"] = m.bounds_consistent;
  if (m.verdict == MongeVerdict::MongeHolds) {
    json A = json::array(), B = json::array();
    for (std::size_t mu = 0; mu < m.a; ++mu)
      for (std::size_t nu = 0; nu < m.a; ++nu) {
        for (std::size_t g = 0; g < m.n; ++g)
          if (m.solution.A[mu](nu, g) != 0)
            A.push_back({{"mu", mu + 1}, {"nu", nu + 1}, {"gamma", g + 1},
                         {"value", to_string(m.solution.A[mu](nu, g))}});
        for (std::size_t t = nu; t < m.a; ++t)
          if (m.solution.B[mu](nu, t) != 0)
            B.push_back({{"mu", mu + 1}, {"nu", nu + 1}, {"tau", t + 1},
                         {"value", to_string(m.solution.B[mu](nu, t))}});
      }
    j["a_nonzero"] = A;
    j["b_nonzero"] = B;
    json g = json::array();
    for (const auto& p : m.generators) g.push_back(poly_x(p));
    j["generators"] = g;
    j["membership_verified"] = !m.membership_failed;
  }
  return j;
}

json ci_json(const ParamVariety& v, const std::vector<Rat>& t0, int D) {
  CIVerdict ci = ci_verdict(v, t0, D);
  json per = json::array();
  for (const auto& s : ci.per_degree) {
    json r = {{"degree", s.k},
              {"ideal_dim", s.ideal_dim},
              {"products_dim", s.products_dim},
              {"essential", s.essential},
              {"trivial", s.products_dim},
              {"conormal_increment", s.conormal_increment},
              {"kernel_dim", s.kernel_dim},
              {"injective", s.kernel_dim == 0}};
    if (s.witness) r["witness"] = poly_x(*s.witness);
    per.push_back(std::move(r));
  }
  json inc = json::array();
  for (std::size_t i = 0; i < ci.degrees.size(); ++i)
    inc.push_back({{"degree", ci.degrees[i]}, {"increment", ci.increments[i]}});
  return {{"complete_intersection", ci.complete_intersection},
          {"verified_up_to_degree", D},
          {"filtration_exhausted", ci.exhausted},
          {"filtration", inc},
          {"per_degree", per}};
}

json generation_json(const ParamVariety& v, const std::vector<Rat>& t0, int D) {
  GenerationReport g = quadratic_generation_check(v, t0, D);
  json per = json::array();
  for (const auto& e : g.per_degree) {
    json r = {{"degree", e.e},
              {"ideal_dim", e.ideal_dim},
              {"generated_dim", e.generated_dim},
              {"excess", e.excess}};
    if (e.excess > 0) {
      r["relation_excess"] = e.relation_excess;
      r["accounted_by_relations"] = e.accounted;
      json reps = json::array();
      for (const auto& p : e.excess_reps) reps.push_back(poly_x(p));
      r["excess_generators"] = reps;
    }
    per.push_back(std::move(r));
  }
  return {{"conormal_from_quadrics", g.conormal_from_quadrics},
          {"generated_by_quadrics", g.generated},
          {"verified_up_to_degree", D},
          {"per_degree", per}};
}

}  // namespace

json quadric_system_json(const QuadricSystem& A) {
  const long n = static_cast<long>(A.n), a = static_cast<long>(A.a());
  auto bracket = bracket_part(A);
  json syz = json::array();
  for (const auto& s : bracket) {
    MPoly acc(A.n);
    std::vector<std::string> terms;
    auto basis = A.basis();
    for (std::size_t mu = 0; mu < s.l.size(); ++mu) {
      MPoly l = SymForm{A.n, 1, s.l[mu]}.to_poly();
      if (!l.is_zero()) terms.push_back("(" + poly_t(l) + ")*(" + poly_t(basis[mu].to_poly()) + ")");
    }
    std::string text;
    for (std::size_t i = 0; i < terms.size(); ++i) text += (i ? " + " : "") + terms[i];
    syz.push_back(text);
  }
  Thresholds t = thresholds(n, a, -1);
  return {{"n", n},
          {"a", a},
          {"quadrics", forms(A.basis())},
          {"prolongation_dim", prolongation(A).size()},
          {"linear_syzygies_dim", bracket.size()},
          {"linear_syzygies", syz},
          {"multiplication_rank", multiplication_rank(A)},
          {"quadratic_relations_dim", a > 0 ? relations(A, 2).relations_dim : 0},
          {"thresholds",
           {{"b_sing", -1},
            {"prolongation_forced_zero", t.prolongation_forced_zero},
            {"no_linear_syzygies_forced", t.no_linear_syzygies_forced},
            {"ci_if_quadric_generated", t.ci_if_quadric_generated}}}};
}

json variety_json(const ParamVariety& v, const std::vector<Rat>& t0, const AnalysisConfig& cfg) {
  return {{"label", v.label},
          {"n", v.n},
          {"a", v.a},
          {"ambient_dim", v.ambient()},
          {"form", v.is_implicit() ? "graph" : "parametrized"},
          {"parameter_point", rats(t0)},
          {"seed", cfg.seed},
          {"max_degree", cfg.max_degree},
          {"max_order", cfg.max_order}};
}

json analyze_report(const ParamVariety& v, const AnalysisConfig& cfg) {
  auto t0 = resolve_point(v, cfg);
  const int D = cfg.max_degree, K = cfg.max_order;
  AdaptedChart c = adapt_at_point(v, t0, K);
  json r = {{"command", "analyze"}, {"variety", variety_json(v, t0, cfg)}};
  r["chart"] = chart_json(c);
  r["fundamental_forms"] = fundamental_json(c);
  r["osculation"] = osculation_table(c, D, K);
  r["quadric_system"] = quadric_system_json(QuadricSystem{c.n, fundamental_data(c).q});
  if (K >= 5) r["monge"] = monge_json(v, c);
  else r["monge"] = {{"skipped", "needs --max-order >= 5"}};
  json ideal = json::array();
  for (int d = 1; d <= D; ++d) ideal.push_back({{"degree", d}, {"dim", ideal_slice(v, d).size()}});
  r["ideal"] = ideal;
  r["ci"] = ci_json(v, t0, D);
  if (D >= 3) r["quadratic_generation"] = generation_json(v, t0, D);
  return r;
}

json monge_report(const ParamVariety& v, const AnalysisConfig& cfg) {
  auto t0 = resolve_point(v, cfg);
  if (cfg.max_order < 5) throw std::invalid_argument("monge needs --max-order >= 5");
  AdaptedChart c = adapt_at_point(v, t0, cfg.max_order);
  json r = {{"command", "monge"}, {"variety", variety_json(v, t0, cfg)}};
  r["fundamental_forms"] = fundamental_json(c);
  r["monge"] = monge_json(v, c);
  return r;
}

json ci_report(const ParamVariety& v, const AnalysisConfig& cfg) {
  auto t0 = resolve_point(v, cfg);
  json r = {{"command", "ci"}, {"variety", variety_json(v, t0, cfg)}};
  r["ci"] = ci_json(v, t0, cfg.max_degree);
  json rows = json::array();
  for (int d = 1; d <= cfg.max_degree; ++d) {
    CI2dResult t = ci_2dd_test(v, t0, d);
    json row = {{"degree", d},
                {"order", 2 * d},
                {"singular_osculators", t.singular_dim},
                {"trivial_singular", t.trivial_dim},
                {"degenerate", t.degenerate},
                {"pass", t.pass}};
    if (t.witness) row["witness"] = poly_x(*t.witness);
    rows.push_back(std::move(row));
  }
  r["singular_osculation"] = rows;
  return r;
}

namespace {

bool scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar(v)) {
        out << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.empty()) {
        out << pad << k << ": (none)\n";
      } else {
        out << pad << k << ":\n";
        render(v, indent + 1, out);
      }
    }
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && scalar(v);
    for (const auto& v : j) {
      if (flat) {
        out << pad << "- " << scalar_text(v) << "\n";
      } else {
        out << pad << "-\n";
        render(v, indent + 1, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace osculum
