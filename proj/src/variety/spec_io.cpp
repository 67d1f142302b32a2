#include "osculum/variety/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "osculum/exactalg/parse.hpp"

namespace osculum {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParamVariety parse_variety_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("variety spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("variety spec must be a JSON object");
  auto need = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw std::invalid_argument(std::string("variety spec lacks \"") + key + "\"");
    return j.at(key);
  };
  ParamVariety v;
  try {
    v.label = j.value("label", std::string());
    v.n = need("n").get<std::size_t>();
    v.a = need("a").get<std::size_t>();
    if (j.contains("coords"))
      for (const auto& s : j.at("coords")) v.coords.push_back(parse_poly(s.get<std::string>(), VarNames::params(v.n)));
    if (j.contains("graph"))
      for (const auto& s : j.at("graph"))
        v.graph_rhs.push_back(parse_poly(s.get<std::string>(), VarNames::ambient(v.n + v.a + 1)));
    if (j.contains("point"))
      for (const auto& s : j.at("point"))
        v.point.push_back(s.is_string() ? parse_rat(s.get<std::string>()) : Rat(s.get<long>()));
    if (j.contains("coord_labels"))
      for (const auto& s : j.at("coord_labels")) v.coord_labels.push_back(s.get<std::string>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("variety spec has a field of the wrong type: ") + e.what());
  }
  if (v.coords.empty() && v.graph_rhs.empty())
    throw std::invalid_argument("variety spec needs \"coords\" or \"graph\"");
  v.validate();
  return v;
}

ParamVariety load_variety_spec(const std::string& path) {
  return parse_variety_spec(read_text_file(path));
}

std::string dump_variety_spec(const ParamVariety& v) {
  json j;
  j["label"] = v.label;
  j["n"] = v.n;
  j["a"] = v.a;
  if (v.is_implicit()) {
    json g = json::array();
    for (const auto& r : v.graph_rhs) g.push_back(format_poly(r, VarNames::ambient(v.ambient())));
    j["graph"] = g;
  } else {
    json c = json::array();
    for (const auto& p : v.coords) c.push_back(format_poly(p, VarNames::params(v.n)));
    j["coords"] = c;
  }
  if (!v.point.empty()) {
    json p = json::array();
    for (const auto& x : v.point) p.push_back(to_string(x));
    j["point"] = p;
  }
  if (!v.coord_labels.empty()) j["coord_labels"] = v.coord_labels;
  return j.dump(2);
}

}  // namespace osculum
