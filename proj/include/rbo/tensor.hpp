#ifndef RBO_TENSOR_HPP
#define RBO_TENSOR_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "rbo/algebra.hpp"
#include "rbo/error.hpp"
#include "rbo/linalg.hpp"
#include "rbo/operators.hpp"
#include "rbo/rational.hpp"

namespace rbo {

/// Element of A^{(x)N} for a finite-dimensional algebra A, stored sparsely
/// over tensor products of basis vectors. No zero coefficients are stored.
template <std::size_t N>
class Tensor {
 public:
  using Index = std::array<std::size_t, N>;

  explicit Tensor(AlgebraDescriptor alg) : alg_(std::move(alg)) {
    if (!alg_.is_finite()) throw Error(ErrorKind::unsupported, "tensors need a finite-dimensional algebra, got " + alg_.name());
  }

  const AlgebraDescriptor& algebra() const { return alg_; }
  const std::map<Index, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Tensor& add(const Index& idx, const Rational& c) {
    for (std::size_t i : idx)
      if (i >= alg_.dim()) throw Error(ErrorKind::invalid_dimension, "tensor basis index " + std::to_string(i) + " out of range");
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  Rational coeff(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rational() : it->second;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) {
    require_same(a, b);
    for (const auto& [idx, c] : b.terms_) a.add(idx, c);
    return a;
  }
  friend Tensor operator-(Tensor a, const Tensor& b) {
    require_same(a, b);
    for (const auto& [idx, c] : b.terms_) a.add(idx, -c);
    return a;
  }
  friend Tensor operator*(const Rational& c, const Tensor& a) {
    Tensor out(a.alg_);
    for (const auto& [idx, v] : a.terms_) out.add(idx, c * v);
    return out;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.alg_.name() == b.alg_.name() && a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
      if (!first) out += " + ";
      out += c.str() + " ";
      for (std::size_t k = 0; k < N; ++k) out += (k ? "(x)e" : "e") + std::to_string(idx[k] + 1);
      first = false;
    }
    return out;
  }

  static void require_same(const Tensor& a, const Tensor& b) {
    if (a.alg_.name() != b.alg_.name())
      throw Error(ErrorKind::algebra_mismatch, "tensors over " + a.alg_.name() + " and " + b.alg_.name());
  }

 private:
  AlgebraDescriptor alg_;
  std::map<Index, Rational> terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

enum class Slots { s12, s13, s23 };

/// r_12, r_13 or r_23: the unit of A goes into the omitted slot.
inline Tensor3 embed(const Tensor2& r, Slots slots) {
  const AlgebraDescriptor& alg = r.algebra();
  if (!alg.unital()) throw Error(ErrorKind::unsupported, "embedding needs a unital algebra; " + alg.name() + " has no unit");
  const Vec unit = alg.unit().vec().coords;
  Tensor3 out(alg);
  for (const auto& [idx, c] : r.terms())
    for (std::size_t u = 0; u < unit.size(); ++u) {
      if (unit[u].is_zero()) continue;
      Tensor3::Index at{};
      switch (slots) {
        case Slots::s12: at = {idx[0], idx[1], u}; break;
        case Slots::s13: at = {idx[0], u, idx[1]}; break;
        case Slots::s23: at = {u, idx[0], idx[1]}; break;
      }
      out.add(at, c * unit[u]);
    }
  return out;
}

/// Slot-wise product in A (x) A (x) A.
inline Tensor3 mul3(const Tensor3& s, const Tensor3& t) {
  Tensor3::require_same(s, t);
  const StructureConstants& sc = s.algebra().structure_constants();
  const std::size_t n = sc.dim();
  Tensor3 out(s.algebra());
  for (const auto& [a, ca] : s.terms())
    for (const auto& [b, cb] : t.terms()) {
      Rational c = ca * cb;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& c0 = sc.at(a[0], b[0], i);
        if (c0.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const Rational& c1 = sc.at(a[1], b[1], j);
          if (c1.is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k) {
            const Rational& c2 = sc.at(a[2], b[2], k);
            if (!c2.is_zero()) out.add({i, j, k}, c * c0 * c1 * c2);
          }
        }
      }
    }
  return out;
}

/// r_13 r_12 - r_12 r_23 + r_23 r_13. Zero exactly when r solves the
/// associative classical Yang-Baxter equation.
inline Tensor3 acybe_residual(const Tensor2& r) {
  const Tensor3 r12 = embed(r, Slots::s12);
  const Tensor3 r13 = embed(r, Slots::s13);
  const Tensor3 r23 = embed(r, Slots::s23);
  return mul3(r13, r12) - mul3(r12, r23) + mul3(r23, r13);
}

/// x -> sum_i u_i x v_i for r = sum_i u_i (x) v_i, declared weight 0.
inline WeightedOperator induced_operator(const Tensor2& r) {
  const AlgebraDescriptor& alg = r.algebra();
  if (!alg.unital()) throw Error(ErrorKind::unsupported, "induced operator needs a unital algebra");
  const std::size_t n = alg.dim();
  Matrix m(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    Element image = alg.zero();
    for (const auto& [idx, c] : r.terms())
      image += c * multiply(alg, multiply(alg, alg.basis(idx[0]), alg.basis(col)), alg.basis(idx[1]));
    for (std::size_t row = 0; row < n; ++row) m(row, col) = image.vec().coords[row];
  }
  WeightedOperator op = matrix_operator(std::move(m), "induced[" + r.str() + "]", 0, alg.name());
  op.provenance = "two-sided multiplication by r";
  return op;
}

}  // namespace rbo

#endif
