#ifndef RBO_TESTS_ORACLE_HPP
#define RBO_TESTS_ORACLE_HPP

// Reference computations used to cross-check the library. Nothing here
// calls into the library's arithmetic; conversions at the boundary only.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rbo/rbo.hpp"

namespace oracle {

/// Integer Laurent polynomial: exponent -> coefficient, zeros removed.
using Poly = std::map<long, long long>;

inline Poly clean(Poly p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}
inline Poly mono(long e, long long c = 1) { return clean({{e, c}}); }
inline Poly add(const Poly& a, const Poly& b, long long cb = 1) {
  Poly out = a;
  for (const auto& [e, c] : b) out[e] += cb * c;
  return clean(out);
}
inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  return clean(out);
}
inline Poly keep_le(const Poly& a, long cutoff) {
  Poly out;
  for (const auto& [e, c] : a)
    if (e <= cutoff) out[e] = c;
  return out;
}
inline Poly keep_ge(const Poly& a, long cutoff) {
  Poly out;
  for (const auto& [e, c] : a)
    if (e >= cutoff) out[e] = c;
  return out;
}

inline rbo::Element to_element(const Poly& p) {
  rbo::LaurentForm f;
  for (const auto& [e, c] : p) f.terms[e] = rbo::Rational(static_cast<std::int64_t>(c));
  return rbo::Element(f);
}

/// R(x)R(y) + lambda R(xy) - R(R(x)y + xR(y)) for a truncation R that keeps
/// exponents <= cutoff.
inline Poly truncation_rbr_defect(long cutoff, long long lambda, const Poly& x, const Poly& y) {
  auto R = [&](const Poly& p) { return keep_le(p, cutoff); };
  Poly lhs = add(mul(R(x), R(y)), R(mul(x, y)), lambda);
  Poly rhs = R(add(mul(R(x), y), mul(x, R(y))));
  return add(lhs, rhs, -1);
}

/// Exact fraction over __int128 for small-operand cross checks.
struct Frac {
  __int128 n = 0, d = 1;
  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Frac make(__int128 n, __int128 d) {
    if (d < 0) n = -n, d = -d;
    __int128 g = gcd(n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
  }
  friend Frac operator+(Frac a, Frac b) { return make(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Frac operator-(Frac a, Frac b) { return make(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Frac operator*(Frac a, Frac b) { return make(a.n * b.n, a.d * b.d); }
  friend Frac operator/(Frac a, Frac b) { return make(a.n * b.d, a.d * b.n); }
  bool less(Frac b) const { return n * b.d < b.n * d; }

  std::string str() const {
    auto s = [](__int128 v) {
      if (v == 0) return std::string("0");
      bool neg = v < 0;
      std::string out;
      if (neg) v = -v;
      while (v > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
      }
      return neg ? "-" + out : out;
    };
    return d == 1 ? s(n) : s(n) + "/" + s(d);
  }
};

/// Product of matrix units in M_n by the rule E_pq E_rs = delta_qr E_ps.
/// Basis index of E_pq is p*n + q.
inline std::vector<long long> matrix_unit_product(std::size_t n, const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(n * n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s) out[p * n + s] += a[p * n + q] * b[q * n + s];
  return out;
}

}  // namespace oracle

#endif
