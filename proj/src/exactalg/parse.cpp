#include "osculum/exactalg/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace osculum {
namespace {

class Parser {
 public:
  Parser(std::string_view s, const VarNames& v) : s_(s), v_(v) {}

  MPoly run() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  std::string_view s_;
  const VarNames& v_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) +
                                ": " + what + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (eat('^')) {
      std::string d = digits();
      if (d.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string text = num;
      if (eat('/')) text += "/" + digits();
      return MPoly::constant(v_.count, parse_rat(text));
    }
    if (c == v_.prefix) {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected variable index");
      std::string idx = digits();
      std::size_t k = std::stoul(idx);
      if (k < v_.base || k >= v_.base + v_.count) fail("variable out of range");
      return MPoly::variable(v_.count, k - v_.base);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

MPoly parse_poly(std::string_view text, const VarNames& vars) {
  return Parser(text, vars).run();
}

std::string format_poly(const MPoly& p, const VarNames& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rat mag = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.prefix + std::to_string(i + vars.base);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace osculum
