#include "syzcurve/parse.hpp"

#include <array>
#include <cctype>
#include <map>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace {

using Exp4 = std::array<int, 4>;  // x, y, z, generator
using Poly4 = std::map<Exp4, Rational>;

constexpr int kMaxExponent = 256;

void add_into(Poly4& acc, const Exp4& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Poly4 mul(const Poly4& a, const Poly4& b) {
  Poly4 r;
  for (const auto& [e, c] : a)
    for (const auto& [f, d] : b) add_into(r, {e[0] + f[0], e[1] + f[1], e[2] + f[2], e[3] + f[3]}, c * d);
  return r;
}

class Parser {
 public:
  Parser(std::string_view text, std::map<std::string, int> symbols) : s_(text), symbols_(std::move(symbols)) {}

  Poly4 parse_all() {
    skip_ws();
    if (pos_ >= s_.size()) fail(ErrorCode::SyntaxError, "empty expression");
    Poly4 p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(ErrorCode::SyntaxError, std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::string, int> symbols_;

  [[noreturn]] void fail(ErrorCode code, const std::string& msg, std::size_t at) { throw ParseError(code, msg, at); }
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) { fail(code, msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly4 expr() {
    Poly4 acc = term();
    for (;;) {
      if (accept('+')) {
        for (const auto& [e, c] : term()) add_into(acc, e, c);
      } else if (accept('-')) {
        for (const auto& [e, c] : term()) add_into(acc, e, -c);
      } else {
        return acc;
      }
    }
  }

  Poly4 term() {
    Poly4 acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, factor());
      } else if (accept('/')) {
        // only integer divisors
        skip_ws();
        std::size_t at = pos_;
        Integer den = uint_literal();
        if (den == 0) fail(ErrorCode::SyntaxError, "zero denominator", at);
        for (auto& [e, c] : acc) c /= den;
      } else {
        return acc;
      }
    }
  }

  Poly4 factor() {
    bool negate = false;
    for (;;) {
      if (accept('-')) negate = !negate;
      else if (accept('+')) continue;
      else break;
    }
    Poly4 b = base();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      Integer e = uint_literal();
      if (e > kMaxExponent) fail(ErrorCode::SyntaxError, "exponent too large", at);
      Poly4 r;
      r.emplace(Exp4{0, 0, 0, 0}, Rational(1));
      for (long i = 0; i < e.get_si(); ++i) r = mul(r, b);
      b = std::move(r);
    }
    if (negate)
      for (auto& [e, c] : b) c = -c;
    return b;
  }

  Integer uint_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(ErrorCode::SyntaxError, "expected unsigned integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Poly4 base() {
    skip_ws();
    if (pos_ >= s_.size()) fail(ErrorCode::SyntaxError, "unexpected end of input");
    const char ch = s_[pos_];
    Poly4 r;
    if (ch == '(') {
      ++pos_;
      r = expr();
      if (!accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = uint_literal();
      Integer den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = uint_literal();
        if (den == 0) fail(ErrorCode::SyntaxError, "zero denominator", at);
      }
      Rational q(num, den);
      q.canonicalize();
      add_into(r, {0, 0, 0, 0}, q);
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = symbols_.find(name);
      if (it == symbols_.end()) fail(ErrorCode::UnknownSymbol, "unknown symbol '" + name + "'", start);
      Exp4 e{0, 0, 0, 0};
      e[static_cast<std::size_t>(it->second)] = 1;
      r.emplace(e, Rational(1));
      return r;
    }
    fail(ErrorCode::SyntaxError, std::string("unexpected character '") + ch + "'");
  }
};

FieldElement generator_combination(const NumberField& field, const std::map<int, Rational>& by_power) {
  int top = by_power.empty() ? 0 : by_power.rbegin()->first;
  std::vector<Rational> v(static_cast<std::size_t>(top) + 1);
  for (const auto& [k, q] : by_power) v[static_cast<std::size_t>(k)] = q;
  if (field.degree() == 1 && top > 0) {
    // Q with a named generator equal to a rational root.
    FieldElement g = field.generator();
    FieldElement s = field.zero();
    for (const auto& [k, q] : by_power) s += field.from_rational(q) * g.pow(static_cast<unsigned>(k));
    return s;
  }
  return FieldElement(field, std::move(v));
}

std::map<std::string, int> symbols_for(const NumberField& field, bool with_coordinates) {
  std::map<std::string, int> sym;
  if (with_coordinates) {
    sym["x"] = 0;
    sym["y"] = 1;
    sym["z"] = 2;
  }
  if (!field.generator_name().empty()) sym[field.generator_name()] = 3;
  return sym;
}

}  // namespace

HomogPoly parse_poly(std::string_view text, const NumberField& field) {
  Poly4 p = Parser(text, symbols_for(field, true)).parse_all();
  int degree = -1;
  std::map<Monomial, std::map<int, Rational>> grouped;
  for (const auto& [e, c] : p) {
    int d = e[0] + e[1] + e[2];
    if (degree < 0) degree = d;
    else if (d != degree) throw ParseError(ErrorCode::NotHomogeneous, "polynomial is not homogeneous (degrees " + std::to_string(degree) + " and " + std::to_string(d) + ")", 0);
    grouped[{e[0], e[1], e[2]}][e[3]] = c;
  }
  HomogPoly out(field, degree < 0 ? 0 : degree);
  for (const auto& [m, by_power] : grouped) out += HomogPoly::monomial(generator_combination(field, by_power), m);
  return out;
}

FieldElement parse_field_element(std::string_view text, const NumberField& field) {
  Poly4 p = Parser(text, symbols_for(field, false)).parse_all();
  std::map<int, Rational> by_power;
  for (const auto& [e, c] : p) by_power[e[3]] = c;
  return generator_combination(field, by_power);
}

std::vector<Rational> parse_univariate(std::string_view text, const std::string& var) {
  if (var.empty() || var == "x" || var == "y" || var == "z")
    throw Error(ErrorCode::InvalidArgument, "invalid generator name '" + var + "'");
  Poly4 p = Parser(text, {{var, 3}}).parse_all();
  int top = 0;
  for (const auto& [e, c] : p) top = std::max(top, e[3]);
  std::vector<Rational> v(static_cast<std::size_t>(top) + 1);
  for (const auto& [e, c] : p) v[static_cast<std::size_t>(e[3])] = c;
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace syzcurve
