#ifndef RBO_ALGEBRA_HPP
#define RBO_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbo/element.hpp"
#include "rbo/error.hpp"
#include "rbo/rational.hpp"

namespace rbo {

/// Multiplication table e_i * e_j = sum_k c[i][j][k] e_k, indices 0-based.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim * dim) {
    if (dim == 0) throw Error(ErrorKind::invalid_dimension, "structure constants need dimension >= 1");
  }

  std::size_t dim() const { return dim_; }

  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim_ + j) * dim_ + k]; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return table_[(i * dim_ + j) * dim_ + k]; }

  const std::optional<std::vector<Rational>>& unit() const { return unit_; }
  void set_unit(std::vector<Rational> coords) {
    if (coords.size() != dim_) throw Error(ErrorKind::invalid_dimension, "unit has wrong number of coordinates");
    unit_ = std::move(coords);
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> table_;
  std::optional<std::vector<Rational>> unit_;
};

enum class AlgebraKind { laurent, polynomial, componentwise, structure_constants };

/// An associative algebra over Q together with its product rule.
///
/// Laurent and polynomial algebras are infinite-dimensional and hold
/// LaurentForm elements (the polynomial algebra rejects negative exponents).
/// Finite kinds hold VectorForm elements tagged with `name()` and multiply
/// through a structure-constant table.
class AlgebraDescriptor {
 public:
  static AlgebraDescriptor laurent() { return AlgebraDescriptor(AlgebraKind::laurent, "laurent", 'z'); }
  static AlgebraDescriptor polynomial() { return AlgebraDescriptor(AlgebraKind::polynomial, "polynomial", 't'); }
  static AlgebraDescriptor finite(AlgebraKind kind, std::string name, StructureConstants sc) {
    AlgebraDescriptor a(kind, std::move(name), 'e');
    a.sc_ = std::make_shared<const StructureConstants>(std::move(sc));
    return a;
  }

  AlgebraKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  char variable() const { return variable_; }
  bool is_finite() const { return sc_ != nullptr; }
  std::size_t dim() const { return sc_ ? sc_->dim() : 0; }
  bool unital() const { return sc_ ? sc_->unit().has_value() : true; }
  const StructureConstants& structure_constants() const {
    if (!sc_) throw Error(ErrorKind::unsupported, name_ + " has no structure constants");
    return *sc_;
  }

  Element zero() const {
    if (!is_finite()) return Element::monomial(0, 0);
    return Element::vector(name_, std::vector<Rational>(dim()));
  }

  Element unit() const {
    if (!is_finite()) return Element::monomial(0);
    if (!sc_->unit()) throw Error(ErrorKind::unsupported, name_ + " is not unital");
    return Element::vector(name_, *sc_->unit());
  }

  Element basis(std::size_t i) const { return Element::basis_vector(name_, dim(), i); }
  Element monomial(std::int64_t e, Rational c = 1) const { return Element::monomial(e, std::move(c)); }

  /// Throws algebra-mismatch unless x is a member of this algebra.
  void require_member(const Element& x) const {
    if (is_finite()) {
      if (!x.is_vector() || x.vec().algebra != name_ || x.vec().coords.size() != dim())
        throw Error(ErrorKind::algebra_mismatch, "element " + format_element(x) + " is not in " + name_);
      return;
    }
    if (!x.is_laurent()) throw Error(ErrorKind::algebra_mismatch, "coordinate vector passed to " + name_);
    if (kind_ == AlgebraKind::polynomial && !x.laurent().terms.empty() && x.laurent().terms.begin()->first < 0)
      throw Error(ErrorKind::algebra_mismatch, "negative exponent in polynomial algebra element " + format(x));
  }

  std::string format(const Element& x) const { return format_element(x, variable_); }

  Element parse(std::string_view text) const {
    Element x = is_finite() ? parse_vector(text, name_) : parse_laurent(text);
    require_member(x);
    return x;
  }

  friend bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
    if (a.kind_ != b.kind_ || a.name_ != b.name_) return false;
    if (!a.sc_ || !b.sc_) return a.sc_ == b.sc_;
    return *a.sc_ == *b.sc_;
  }

 private:
  AlgebraDescriptor(AlgebraKind kind, std::string name, char variable)
      : kind_(kind), name_(std::move(name)), variable_(variable) {}

  AlgebraKind kind_;
  std::string name_;
  char variable_;
  std::shared_ptr<const StructureConstants> sc_;
};

/// Product of two coordinate vectors through a structure-constant table.
inline std::vector<Rational> multiply_coords(const StructureConstants& sc, const std::vector<Rational>& a,
                                             const std::vector<Rational>& b) {
  const std::size_t n = sc.dim();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = sc.at(i, j, k);
        if (!c.is_zero()) out[k] += ab * c;
      }
    }
  }
  return out;
}

inline Element multiply(const AlgebraDescriptor& alg, const Element& a, const Element& b) {
  alg.require_member(a);
  alg.require_member(b);
  if (alg.is_finite())
    return Element::vector(alg.name(), multiply_coords(alg.structure_constants(), a.vec().coords, b.vec().coords));
  LaurentForm out;
  for (const auto& [ea, ca] : a.laurent().terms)
    for (const auto& [eb, cb] : b.laurent().terms) out.terms[ea + eb] += ca * cb;
  return Element(std::move(out));
}

/// a*b - b*a.
inline Element lie_bracket(const AlgebraDescriptor& alg, const Element& a, const Element& b) {
  return multiply(alg, a, b) - multiply(alg, b, a);
}

}  // namespace rbo

#endif
