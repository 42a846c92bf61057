#ifndef RBO_OPERATOR_EXPR_HPP
#define RBO_OPERATOR_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "rbo/algebra.hpp"
#include "rbo/element.hpp"
#include "rbo/error.hpp"
#include "rbo/linalg.hpp"
#include "rbo/rational.hpp"

namespace rbo {

/// Built-in linear maps that expression trees are assembled from.
struct Primitive {
  enum class Kind {
    pole_part,     ///< keep exponents <= cutoff (Laurent / polynomial)
    regular_part,  ///< keep exponents >= cutoff (Laurent / polynomial)
    integration,   ///< t^n -> t^(n+1)/(n+1), n >= 0
    matrix,        ///< finite-dimensional: R(e_j) = sum_i M(i,j) e_i
  };

  Kind kind;
  std::string name;
  std::int64_t cutoff = 0;
  std::shared_ptr<const Matrix> matrix;

  static Primitive pole_part(std::int64_t cutoff, std::string name) {
    return Primitive{Kind::pole_part, std::move(name), cutoff, nullptr};
  }
  static Primitive regular_part(std::int64_t cutoff, std::string name) {
    return Primitive{Kind::regular_part, std::move(name), cutoff, nullptr};
  }
  static Primitive integration() { return Primitive{Kind::integration, "int", 0, nullptr}; }
  static Primitive from_matrix(Matrix m, std::string name) {
    if (m.rows() != m.cols() || m.rows() == 0)
      throw Error(ErrorKind::invalid_dimension, "operator matrix must be square and non-empty");
    return Primitive{Kind::matrix, std::move(name), 0, std::make_shared<const Matrix>(std::move(m))};
  }

  Element apply(const AlgebraDescriptor& alg, const Element& x) const;
};

class OperatorExpr;

namespace expr {

struct Identity {};
struct Scale;
struct Sum;
struct Compose;

}  // namespace expr

/// Formal linear operator: identity, primitives, scaling, sums and
/// compositions. Compose(f, g) applies g first. Nodes are immutable and
/// shared, so copies are cheap.
class OperatorExpr {
 public:
  struct Node;

  OperatorExpr();

  static OperatorExpr identity() { return OperatorExpr(); }
  static OperatorExpr primitive(Primitive p);

  /// c*e, with Scale(c, Scale(d, e)) folded to Scale(cd, e) and 1*e to e.
  static OperatorExpr scale(const Rational& c, const OperatorExpr& e);
  static OperatorExpr sum(const OperatorExpr& a, const OperatorExpr& b);
  static OperatorExpr compose(const OperatorExpr& outer, const OperatorExpr& inner);

  const Node& node() const { return *node_; }

  Element apply(const AlgebraDescriptor& alg, const Element& x) const;
  std::string describe() const;

 private:
  explicit OperatorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

namespace expr {

struct Scale {
  Rational factor;
  OperatorExpr inner;
};
struct Sum {
  OperatorExpr left;
  OperatorExpr right;
};
struct Compose {
  OperatorExpr outer;
  OperatorExpr inner;
};

}  // namespace expr

struct OperatorExpr::Node {
  std::variant<expr::Identity, Primitive, expr::Scale, expr::Sum, expr::Compose> value;
};

inline OperatorExpr::OperatorExpr() : node_(std::make_shared<const Node>(Node{expr::Identity{}})) {}

inline OperatorExpr OperatorExpr::primitive(Primitive p) {
  return OperatorExpr(std::make_shared<const Node>(Node{std::move(p)}));
}

inline OperatorExpr OperatorExpr::scale(const Rational& c, const OperatorExpr& e) {
  if (const auto* s = std::get_if<expr::Scale>(&e.node().value)) return scale(c * s->factor, s->inner);
  if (c.is_one()) return e;
  return OperatorExpr(std::make_shared<const Node>(Node{expr::Scale{c, e}}));
}

inline OperatorExpr OperatorExpr::sum(const OperatorExpr& a, const OperatorExpr& b) {
  return OperatorExpr(std::make_shared<const Node>(Node{expr::Sum{a, b}}));
}

inline OperatorExpr OperatorExpr::compose(const OperatorExpr& outer, const OperatorExpr& inner) {
  return OperatorExpr(std::make_shared<const Node>(Node{expr::Compose{outer, inner}}));
}

inline Element OperatorExpr::apply(const AlgebraDescriptor& alg, const Element& x) const {
  return std::visit(
      [&](const auto& n) -> Element {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Identity>) {
          alg.require_member(x);
          return x;
        } else if constexpr (std::is_same_v<T, Primitive>) {
          return n.apply(alg, x);
        } else if constexpr (std::is_same_v<T, expr::Scale>) {
          return n.factor * n.inner.apply(alg, x);
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          return n.left.apply(alg, x) + n.right.apply(alg, x);
        } else {
          return n.outer.apply(alg, n.inner.apply(alg, x));
        }
      },
      node().value);
}

inline std::string OperatorExpr::describe() const {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Identity>) {
          return "id";
        } else if constexpr (std::is_same_v<T, Primitive>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, expr::Scale>) {
          return n.factor.str() + "*" + n.inner.describe();
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          return "(" + n.left.describe() + " + " + n.right.describe() + ")";
        } else {
          return n.outer.describe() + " o " + n.inner.describe();
        }
      },
      node().value);
}

inline OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) { return OperatorExpr::sum(a, b); }
inline OperatorExpr operator*(const Rational& c, const OperatorExpr& e) { return OperatorExpr::scale(c, e); }

inline Element apply_operator(const AlgebraDescriptor& alg, const OperatorExpr& op, const Element& x) {
  return op.apply(alg, x);
}

inline Element Primitive::apply(const AlgebraDescriptor& alg, const Element& x) const {
  alg.require_member(x);
  switch (kind) {
    case Kind::pole_part:
    case Kind::regular_part: {
      if (alg.is_finite()) throw Error(ErrorKind::operator_domain, name + " is defined on Laurent/polynomial algebras only");
      LaurentForm out;
      for (const auto& [e, c] : x.laurent().terms) {
        bool keep = kind == Kind::pole_part ? e <= cutoff : e >= cutoff;
        if (keep) out.terms.emplace(e, c);
      }
      return Element(std::move(out));
    }
    case Kind::integration: {
      if (alg.is_finite()) throw Error(ErrorKind::operator_domain, "integration is defined on polynomials only");
      LaurentForm out;
      for (const auto& [e, c] : x.laurent().terms) {
        if (e < 0)
          throw Error(ErrorKind::operator_domain,
                      "integration of negative power t^" + std::to_string(e) + " is not a polynomial");
        out.terms.emplace(e + 1, c / Rational(e + 1));
      }
      return Element(std::move(out));
    }
    case Kind::matrix: {
      if (!alg.is_finite()) throw Error(ErrorKind::operator_domain, name + " needs a finite-dimensional algebra");
      if (matrix->rows() != alg.dim())
        throw Error(ErrorKind::operator_domain, name + " is " + std::to_string(matrix->rows()) + "x" +
                                                    std::to_string(matrix->cols()) + " but " + alg.name() +
                                                    " has dimension " + std::to_string(alg.dim()));
      return Element::vector(alg.name(), matrix->apply(x.vec().coords));
    }
  }
  throw Error(ErrorKind::operator_domain, "unknown primitive");
}

/// Matrix of op in the basis of a finite-dimensional algebra (column j = op(e_j)).
inline Matrix matrix_of(const AlgebraDescriptor& alg, const OperatorExpr& op) {
  if (!alg.is_finite()) throw Error(ErrorKind::unsupported, "matrix_of needs a finite-dimensional algebra");
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) cols.push_back(op.apply(alg, alg.basis(j)).vec().coords);
  return Matrix::from_columns(cols, alg.dim());
}

}  // namespace rbo

#endif
