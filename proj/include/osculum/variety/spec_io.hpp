#pragma once

#include <string>

#include "osculum/variety/variety.hpp"

namespace osculum {

// JSON variety spec:
//   {"label": "...", "n": 2, "a": 3, "coords": ["1", "t1", ...],
//    "point": ["0", "1/2"], "coord_labels": [...]}
// or, for graph form, "graph": ["x1^2 + x2^2", ...] instead of "coords".
// Throws std::invalid_argument on malformed input.
ParamVariety parse_variety_spec(const std::string& json_text);
ParamVariety load_variety_spec(const std::string& path);
std::string dump_variety_spec(const ParamVariety& v);

std::string read_text_file(const std::string& path);

}  // namespace osculum
