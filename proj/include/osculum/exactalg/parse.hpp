#pragma once

#include <string>
#include <string_view>

#include "osculum/exactalg/mpoly.hpp"

namespace osculum {

// Variable family: prefix letter followed by an index in [base, base + count).
struct VarNames {
  char prefix = 't';
  std::size_t count = 0;
  std::size_t base = 1;

  static VarNames params(std::size_t n) { return {'t', n, 1}; }
  static VarNames ambient(std::size_t dim) { return {'x', dim, 0}; }
};

// Grammar: integers, p/q literals, variables, + - * ^ and parentheses.
// Throws std::invalid_argument with the offending position.
MPoly parse_poly(std::string_view text, const VarNames& vars);

// Canonical text; parse_poly(format_poly(p, v), v) == p.
std::string format_poly(const MPoly& p, const VarNames& vars);

}  // namespace osculum
