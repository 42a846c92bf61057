#ifndef RBO_OPERATORS_HPP
#define RBO_OPERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rbo/algebra.hpp"
#include "rbo/error.hpp"
#include "rbo/linalg.hpp"
#include "rbo/operator_expr.hpp"
#include "rbo/rational.hpp"

namespace rbo {

/// An operator together with the weight it is claimed to have. The weight is
/// metadata only; the checkers decide whether it is true.
struct WeightedOperator {
  OperatorExpr expr;
  Rational declared_weight;
  std::string acts_on;  ///< algebra name or family ("laurent", "componentwise:4", "any", ...)
  std::string provenance;

  std::string describe() const { return expr.describe(); }
  Element operator()(const AlgebraDescriptor& alg, const Element& x) const { return expr.apply(alg, x); }
};

namespace detail {

/// a*id + b*R with vanishing parts dropped.
inline OperatorExpr affine(const Rational& a, const Rational& b, const OperatorExpr& r) {
  if (a.is_zero()) return OperatorExpr::scale(b, r);
  if (b.is_zero()) return OperatorExpr::scale(a, OperatorExpr::identity());
  return OperatorExpr::sum(OperatorExpr::scale(a, OperatorExpr::identity()), OperatorExpr::scale(b, r));
}

}  // namespace detail

/// Minimal subtraction: keeps the strictly negative powers. Weight 1.
inline WeightedOperator make_rms() {
  return {OperatorExpr::primitive(Primitive::pole_part(-1, "R_ms")), 1, "laurent", "minimal subtraction projector"};
}

/// 1 - R_ms: keeps the powers >= 0. Weight 1.
inline WeightedOperator make_rms_opposite() {
  return {OperatorExpr::primitive(Primitive::regular_part(0, "R_ms^-")), 1, "laurent", "opposite of R_ms"};
}

/// Integration from 0 on polynomials: t^n -> t^(n+1)/(n+1). Weight 0.
inline WeightedOperator make_integration() {
  return {OperatorExpr::primitive(Primitive::integration()), 0, "polynomial", "integration operator"};
}

/// R_r keeps the powers <= r. Declared weight 1; true only for r in {-1, 0}.
inline WeightedOperator make_shift_truncation(std::int64_t r) {
  std::string name = "R_" + std::to_string(r);
  return {OperatorExpr::primitive(Primitive::pole_part(r, name)), 1, "laurent", "truncation at exponent " + std::to_string(r)};
}

/// Block-diagonal diag(S_s, T_t) on the componentwise algebra of dimension
/// s+t. S_s is upper triangular with all ones, T_t strictly lower triangular
/// with all entries -1. Weight 1.
inline WeightedOperator make_miller(std::size_t s, std::size_t t) {
  if (s == 0 || t == 0) throw Error(ErrorKind::invalid_dimension, "miller operator needs s, t >= 1");
  const std::size_t n = s + t;
  Matrix m(n, n);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) m(i, j) = 1;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < i; ++j) m(s + i, s + j) = -1;
  std::string name = "miller(" + std::to_string(s) + "," + std::to_string(t) + ")";
  return {OperatorExpr::primitive(Primitive::from_matrix(std::move(m), name)), 1, "componentwise:" + std::to_string(n),
          "Miller block operator"};
}

/// Operator given by a matrix in the basis of a finite-dimensional algebra.
inline WeightedOperator matrix_operator(Matrix m, std::string name, Rational weight, std::string acts_on = "any") {
  return {OperatorExpr::primitive(Primitive::from_matrix(std::move(m), std::move(name))), std::move(weight),
          std::move(acts_on), "matrix operator"};
}

/// Diagonal 0/1 projector keeping the listed coordinates.
inline WeightedOperator coordinate_projector(std::size_t dim, const std::vector<std::size_t>& keep, std::string name,
                                             Rational weight) {
  Matrix m(dim, dim);
  for (std::size_t i : keep) {
    if (i >= dim) throw Error(ErrorKind::invalid_dimension, "projector coordinate out of range");
    m(i, i) = 1;
  }
  return matrix_operator(std::move(m), std::move(name), std::move(weight));
}

/// R_ms on laurent-window:k, the projector onto the pole block z^-k..z^-1.
/// With `opposite` set it keeps z^0..z^k instead.
inline WeightedOperator window_rms(std::size_t k, bool opposite = false) {
  std::vector<std::size_t> keep;
  for (std::size_t i = opposite ? k : 0; i < (opposite ? 2 * k + 1 : k); ++i) keep.push_back(i);
  WeightedOperator op = coordinate_projector(2 * k + 1, keep, std::string(opposite ? "R_ms-opp" : "R_ms") + "|window" + std::to_string(k), 1);
  op.acts_on = "laurent-window:" + std::to_string(k);
  return op;
}

/// B = lambda*id - 2R with lambda the declared weight of R.
inline WeightedOperator modified_of(const WeightedOperator& r) {
  return {detail::affine(r.declared_weight, -2, r.expr), r.declared_weight, r.acts_on, "modified(" + r.describe() + ")"};
}

/// R^- = lambda*id - R, same declared weight.
inline WeightedOperator opposite_of(const WeightedOperator& r) {
  return {detail::affine(r.declared_weight, -1, r.expr), r.declared_weight, r.acts_on, "opposite(" + r.describe() + ")"};
}

/// N_alpha = R - alpha*(1 - R) = (1+alpha)R - alpha*id; declared Nijenhuis
/// weight 1. Meaningful for idempotent weight-1 R, which is not checked here.
inline WeightedOperator nijenhuis_family(const WeightedOperator& r, const Rational& alpha) {
  return {detail::affine(-alpha, Rational(1) + alpha, r.expr), 1, r.acts_on,
          "nijenhuis(" + alpha.str() + ", " + r.describe() + ")"};
}

/// mu*R with weight mu*lambda.
inline WeightedOperator scaled(const WeightedOperator& r, const Rational& mu) {
  return {OperatorExpr::scale(mu, r.expr), mu * r.declared_weight, r.acts_on, "scaled(" + mu.str() + ", " + r.describe() + ")"};
}

/// lambda^-1 R, weight 1.
inline WeightedOperator normalize_weight(const WeightedOperator& r) {
  if (r.declared_weight.is_zero()) throw Error(ErrorKind::cannot_normalize, "weight-0 operator " + r.describe() + " cannot be normalized");
  WeightedOperator out = scaled(r, r.declared_weight.inverse());
  out.provenance = "normalized(" + r.describe() + ")";
  return out;
}

/// The same operator with a different claimed weight.
inline WeightedOperator with_weight(WeightedOperator r, Rational weight) {
  r.declared_weight = std::move(weight);
  return r;
}

}  // namespace rbo

#endif
