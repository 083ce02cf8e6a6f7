#include "minram/text.hpp"

#include <cctype>
#include <string>

#include "minram/errors.hpp"

namespace minram {
namespace {

// Recursive-descent evaluator over bivariate polynomials (XPoly).
class Parser {
 public:
  Parser(std::string_view s, const PrimeField& field, bool allow_x)
      : s_(s), field_(field), allow_x_(allow_x) {}

  XPoly parse() {
    XPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'x' || c == '(';
  }

  XPoly expr() {
    XPoly acc(field_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      XPoly t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  XPoly term() {
    XPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  XPoly factor() {
    XPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      unsigned long long e = number();
      if (e > 100000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long long number() {
    unsigned long long v = 0;
    bool any = false;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (v > (1ULL << 62)) fail("integer literal too large");
      ++pos_;
      any = true;
    }
    if (!any) fail("expected number");
    return v;
  }

  XPoly atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto v = number();
      return XPoly::constant(FpPoly::constant(field_, field_.element(v % field_.characteristic())));
    }
    if (c == 't') {
      ++pos_;
      return XPoly::constant(FpPoly::variable(field_));
    }
    if (c == 'x') {
      if (!allow_x_) fail("unexpected variable x");
      ++pos_;
      return XPoly::x(field_);
    }
    if (c == '(') {
      ++pos_;
      XPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  PrimeField field_;
  bool allow_x_;
};

bool looks_like_json(std::string_view s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '[';
  }
  return false;
}

}  // namespace

std::string to_string(const FpPoly& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    auto c = f.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::string to_string(const XPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const FpPoly& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    const bool unit = c.is_one() && i > 0;
    if (!unit) out += '(' + to_string(c) + ')';
    if (i >= 1) {
      if (!unit) out += '*';
      out += 'x';
      if (i >= 2) out += '^' + std::to_string(i);
    }
  }
  return out;
}

FpPoly parse_poly(std::string_view text, const PrimeField& field) {
  if (looks_like_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed JSON polynomial: ") + e.what());
    }
    return poly_from_json(j, field);
  }
  XPoly x = Parser(text, field, false).parse();
  return x.is_zero() ? FpPoly(field) : x.coeff(0);
}

XPoly parse_xpoly(std::string_view text, const PrimeField& field) { return Parser(text, field, true).parse(); }

FpPoly parse_univariate(std::string_view text, const PrimeField& field, char var) {
  if (var == 't') return parse_poly(text, field);
  if (var != 'x') throw ParseError("unsupported variable name");
  XPoly f = Parser(text, field, true).parse();
  std::vector<PrimeField::Elem> v;
  for (const auto& c : f.coeffs()) {
    if (c.degree() > 0) throw ParseError("expected a polynomial in x with constant coefficients");
    v.push_back(c.coeff(0));
  }
  return FpPoly(field, std::move(v));
}

nlohmann::json to_json(const FpPoly& f) {
  nlohmann::json j = nlohmann::json::array();
  for (auto c : f.coeffs()) j.push_back(c);
  return j;
}

FpPoly poly_from_json(const nlohmann::json& j, const PrimeField& field) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an integer array");
  std::vector<PrimeField::Elem> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("polynomial JSON must be an integer array");
    v.push_back(field.from_int(e.get<long long>()));
  }
  return FpPoly(field, std::move(v));
}

}  // namespace minram
