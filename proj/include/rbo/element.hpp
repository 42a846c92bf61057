#ifndef RBO_ELEMENT_HPP
#define RBO_ELEMENT_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rbo/error.hpp"
#include "rbo/rational.hpp"

namespace rbo {

/// Finite Laurent polynomial: exponent -> nonzero coefficient.
struct LaurentForm {
  std::map<std::int64_t, Rational> terms;

  friend bool operator==(const LaurentForm&, const LaurentForm&) = default;
};

/// Coordinates over the fixed basis e_1..e_n of a finite-dimensional algebra.
struct VectorForm {
  std::string algebra;
  std::vector<Rational> coords;

  friend bool operator==(const VectorForm&, const VectorForm&) = default;
};

/// Member of an algebra. Representations are canonical, so equality is
/// structural: Laurent forms never store zero coefficients.
class Element {
 public:
  Element() = default;
  explicit Element(LaurentForm f) : data_(std::move(f)) { prune(); }
  explicit Element(VectorForm f) : data_(std::move(f)) {}

  static Element monomial(std::int64_t exponent, Rational coeff = 1) {
    LaurentForm f;
    if (!coeff.is_zero()) f.terms.emplace(exponent, std::move(coeff));
    return Element(std::move(f));
  }

  static Element vector(std::string algebra, std::vector<Rational> coords) {
    return Element(VectorForm{std::move(algebra), std::move(coords)});
  }

  static Element basis_vector(std::string algebra, std::size_t dim, std::size_t index) {
    std::vector<Rational> coords(dim);
    coords.at(index) = 1;
    return vector(std::move(algebra), std::move(coords));
  }

  bool is_laurent() const { return std::holds_alternative<LaurentForm>(data_); }
  bool is_vector() const { return std::holds_alternative<VectorForm>(data_); }
  const LaurentForm& laurent() const { return std::get<LaurentForm>(data_); }
  const VectorForm& vec() const { return std::get<VectorForm>(data_); }

  bool is_zero() const {
    if (is_laurent()) return laurent().terms.empty();
    for (const auto& c : vec().coords)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Zero of the same algebra as this element.
  Element zero_like() const {
    if (is_laurent()) return Element(LaurentForm{});
    return vector(vec().algebra, std::vector<Rational>(vec().coords.size()));
  }

  /// Coefficient of z^exponent (Laurent form only).
  Rational coeff(std::int64_t exponent) const {
    auto it = laurent().terms.find(exponent);
    return it == laurent().terms.end() ? Rational() : it->second;
  }

  friend bool operator==(const Element&, const Element&) = default;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Rational& c, const Element& a);
  Element operator-() const { return Rational(-1) * *this; }
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }

 private:
  void prune() {
    if (!is_laurent()) return;
    auto& terms = std::get<LaurentForm>(data_).terms;
    std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  }

  std::variant<LaurentForm, VectorForm> data_{LaurentForm{}};
};

namespace detail {

inline void require_same_algebra(const Element& a, const Element& b) {
  if (a.is_laurent() != b.is_laurent())
    throw Error(ErrorKind::algebra_mismatch, "Laurent element combined with a coordinate vector");
  if (a.is_vector()) {
    if (a.vec().algebra != b.vec().algebra)
      throw Error(ErrorKind::algebra_mismatch, "elements of '" + a.vec().algebra + "' and '" + b.vec().algebra + "'");
    if (a.vec().coords.size() != b.vec().coords.size())
      throw Error(ErrorKind::algebra_mismatch, "coordinate vectors of different length");
  }
}

}  // namespace detail

/// Canonical form of c1*a + c2*b.
inline Element linear_combine(const Rational& c1, const Element& a, const Rational& c2, const Element& b) {
  detail::require_same_algebra(a, b);
  if (a.is_laurent()) {
    LaurentForm out;
    if (!c1.is_zero())
      for (const auto& [e, c] : a.laurent().terms) out.terms[e] += c1 * c;
    if (!c2.is_zero())
      for (const auto& [e, c] : b.laurent().terms) out.terms[e] += c2 * c;
    return Element(std::move(out));
  }
  VectorForm out{a.vec().algebra, std::vector<Rational>(a.vec().coords.size())};
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = c1 * a.vec().coords[i] + c2 * b.vec().coords[i];
  return Element(std::move(out));
}

inline Element operator+(const Element& a, const Element& b) { return linear_combine(1, a, 1, b); }
inline Element operator-(const Element& a, const Element& b) { return linear_combine(1, a, -1, b); }
inline Element operator*(const Rational& c, const Element& a) {
  if (a.is_laurent()) {
    LaurentForm out;
    if (!c.is_zero())
      for (const auto& [e, v] : a.laurent().terms) out.terms.emplace(e, c * v);
    return Element(std::move(out));
  }
  VectorForm out = a.vec();
  for (auto& v : out.coords) v *= c;
  return Element(std::move(out));
}

// ---------------------------------------------------------------------------
// Literal syntax: "3/2 z^-2 + z^0 - z^3" and "[1/2, 0, -3]".

inline std::string format_laurent(const LaurentForm& f, char variable = 'z') {
  if (f.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.str() + " ";
    out += variable;
    out += "^" + std::to_string(e);
    first = false;
  }
  return out;
}

inline std::string format_vector(const VectorForm& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.coords.size(); ++i) {
    if (i) out += ", ";
    out += f.coords[i].str();
  }
  return out + "]";
}

inline std::string format_element(const Element& x, char variable = 'z') {
  return x.is_laurent() ? format_laurent(x.laurent(), variable) : format_vector(x.vec());
}

namespace detail {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentForm parse() {
    LaurentForm out;
    skip_ws();
    if (at_end()) fail("empty literal");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [exponent, coeff] = term();
      if (sign < 0) coeff = -coeff;
      out.terms[exponent] += coeff;
      first = false;
      skip_ws();
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

 private:
  std::pair<std::int64_t, Rational> term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coeff = Rational::parse(text_.substr(start, pos_ - start));
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    if (!at_end() && is_variable(peek())) {
      ++pos_;
      skip_ws();
      std::int64_t exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        exponent = integer();
      }
      return {exponent, coeff};
    }
    if (!have_coeff) fail("expected a coefficient or variable");
    return {0, coeff};
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  static bool is_variable(char c) { return c == 'z' || c == 't'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::format, "bad Laurent literal '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Element parse_laurent(std::string_view text) { return Element(detail::LaurentParser(text).parse()); }

inline Element parse_vector(std::string_view text, std::string algebra) {
  std::string_view s = detail::trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorKind::format, "vector literal must be bracketed: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<Rational> coords;
  if (!detail::trim(s).empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      coords.push_back(Rational::parse(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Element::vector(std::move(algebra), std::move(coords));
}

}  // namespace rbo

#endif
