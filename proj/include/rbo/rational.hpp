#ifndef RBO_RATIONAL_HPP
#define RBO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "rbo/error.hpp"

namespace rbo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of the coefficient field Q.
///
/// The representation is always reduced: the denominator is positive, the
/// numerator and denominator are coprime, and zero is stored as 0/1. Equality
/// is therefore plain member-wise comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit from integers is intended
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize_in_place(); }

  /// Reduced representative of num/den. Throws on den == 0.
  static Rational normalize(BigInt num, BigInt den) { return Rational(std::move(num), std::move(den)); }

  /// Parses "p/q" or "p". Only the numerator may carry a sign.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
      reduce_after_op();
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
      reduce_after_op();
    }
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce_after_op();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::zero_denominator, "division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize_in_place();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p/q", or "p" when the value is an integer.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize_in_place() {
    if (den_.is_zero()) throw Error(ErrorKind::zero_denominator, "denominator is zero");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce_after_op();
  }

  void reduce_after_op() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::string_view s = detail::trim(text);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::string_view num_part = s;
  std::string_view den_part = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num_part = s.substr(0, slash);
    den_part = s.substr(slash + 1);
  }
  if (!detail::all_digits(num_part) || !detail::all_digits(den_part))
    throw Error(ErrorKind::format, "malformed rational '" + std::string(text) + "'");
  auto digits = [](std::string_view d) {
    while (d.size() > 1 && d.front() == '0') d.remove_prefix(1);
    return BigInt{std::string(d)};
  };
  BigInt num = digits(num_part);
  BigInt den = digits(den_part);
  if (den == 0) throw Error(ErrorKind::zero_denominator, "rational '" + std::string(text) + "' has zero denominator");
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

}  // namespace rbo

#endif
