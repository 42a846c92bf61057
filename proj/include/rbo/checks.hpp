#ifndef RBO_CHECKS_HPP
#define RBO_CHECKS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbo/algebra.hpp"
#include "rbo/domain.hpp"
#include "rbo/element.hpp"
#include "rbo/error.hpp"
#include "rbo/linalg.hpp"
#include "rbo/operators.hpp"
#include "rbo/report.hpp"

namespace rbo {

/// Both sides of an identity evaluated on one input tuple.
struct Sides {
  Element lhs;
  Element rhs;
};

using IdentityFn = std::function<Sides(std::span<const Element>)>;

/// Evaluates `sides` on every tuple of `dom` and stops at the first tuple
/// where the two sides differ. Tuples are visited in the fixed order of
/// for_each_tuple, so the witness is reproducible.
inline CheckReport run_identity(std::string check, const AlgebraDescriptor& alg, std::string op, Rational weight,
                                const DomainSpec& dom, std::size_t arity, const IdentityFn& sides) {
  CheckReport report;
  report.check = std::move(check);
  report.algebra = alg.name();
  report.op = std::move(op);
  report.weight = std::move(weight);
  report.domain = domain_json(alg, dom);
  report.tuples = for_each_tuple(alg, dom, arity, [&](std::span<const Element> t) {
    Sides s = sides(t);
    if (s.lhs == s.rhs) return true;
    report.fail_with(Witness::make(alg, std::vector<Element>(t.begin(), t.end()), std::move(s.lhs), std::move(s.rhs)));
    return false;
  });
  return report;
}

// ---------------------------------------------------------------------------
// The identities. The Rota-Baxter relation of weight lambda is
//   R(x)R(y) + lambda R(xy) = R(R(x)y + xR(y)),
// and every other relation here is written against that sign convention.

enum class IdentityId { rbr, modified, nijenhuis, lie_modified, idempotent };

inline const char* check_name(IdentityId id) {
  switch (id) {
    case IdentityId::rbr: return "rbr";
    case IdentityId::modified: return "modified.rbr";
    case IdentityId::nijenhuis: return "nijenhuis";
    case IdentityId::lie_modified: return "lie.modified";
    case IdentityId::idempotent: return "idempotent";
  }
  return "unknown";
}

inline std::size_t identity_arity(IdentityId id) { return id == IdentityId::idempotent ? 1 : 2; }

inline Sides rbr_sides(const AlgebraDescriptor& alg, const OperatorExpr& r, const Rational& lambda, const Element& x,
                       const Element& y) {
  Element rx = r.apply(alg, x);
  Element ry = r.apply(alg, y);
  Element lhs = multiply(alg, rx, ry) + lambda * r.apply(alg, multiply(alg, x, y));
  Element rhs = r.apply(alg, multiply(alg, rx, y) + multiply(alg, x, ry));
  return {std::move(lhs), std::move(rhs)};
}

/// B(x)B(y) = B(B(x)y + xB(y)) - lambda^2 xy
inline Sides modified_sides(const AlgebraDescriptor& alg, const OperatorExpr& b, const Rational& lambda,
                            const Element& x, const Element& y) {
  Element bx = b.apply(alg, x);
  Element by = b.apply(alg, y);
  Element lhs = multiply(alg, bx, by);
  Element rhs = b.apply(alg, multiply(alg, bx, y) + multiply(alg, x, by)) - (lambda * lambda) * multiply(alg, x, y);
  return {std::move(lhs), std::move(rhs)};
}

/// N(x)N(y) + lambda N^2(xy) = N(N(x)y + xN(y))
inline Sides nijenhuis_sides(const AlgebraDescriptor& alg, const OperatorExpr& n, const Rational& lambda,
                             const Element& x, const Element& y) {
  Element nx = n.apply(alg, x);
  Element ny = n.apply(alg, y);
  Element lhs = multiply(alg, nx, ny) + lambda * n.apply(alg, n.apply(alg, multiply(alg, x, y)));
  Element rhs = n.apply(alg, multiply(alg, nx, y) + multiply(alg, x, ny));
  return {std::move(lhs), std::move(rhs)};
}

/// [B(x),B(y)] = B([B(x),y] + [x,B(y)]) - lambda^2 [x,y]
inline Sides lie_modified_sides(const AlgebraDescriptor& alg, const OperatorExpr& b, const Rational& lambda,
                                const Element& x, const Element& y) {
  Element bx = b.apply(alg, x);
  Element by = b.apply(alg, y);
  Element lhs = lie_bracket(alg, bx, by);
  Element rhs = b.apply(alg, lie_bracket(alg, bx, y) + lie_bracket(alg, x, by)) - (lambda * lambda) * lie_bracket(alg, x, y);
  return {std::move(lhs), std::move(rhs)};
}

/// R(R(x)) = R(x)
inline Sides idempotent_sides(const AlgebraDescriptor& alg, const OperatorExpr& r, const Element& x) {
  Element rx = r.apply(alg, x);
  return {r.apply(alg, rx), rx};
}

inline Sides identity_sides(IdentityId id, const AlgebraDescriptor& alg, const OperatorExpr& op, const Rational& lambda,
                            std::span<const Element> t) {
  switch (id) {
    case IdentityId::rbr: return rbr_sides(alg, op, lambda, t[0], t[1]);
    case IdentityId::modified: return modified_sides(alg, op, lambda, t[0], t[1]);
    case IdentityId::nijenhuis: return nijenhuis_sides(alg, op, lambda, t[0], t[1]);
    case IdentityId::lie_modified: return lie_modified_sides(alg, op, lambda, t[0], t[1]);
    case IdentityId::idempotent: return idempotent_sides(alg, op, t[0]);
  }
  throw Error(ErrorKind::unsupported, "unknown identity");
}

inline CheckReport check_identity(IdentityId id, const AlgebraDescriptor& alg, const WeightedOperator& op,
                                  const Rational& lambda, const DomainSpec& dom) {
  return run_identity(check_name(id), alg, op.describe(), lambda, dom, identity_arity(id),
                      [&](std::span<const Element> t) { return identity_sides(id, alg, op.expr, lambda, t); });
}

inline CheckReport check_rbr(const AlgebraDescriptor& alg, const WeightedOperator& r, const Rational& lambda,
                             const DomainSpec& dom) {
  return check_identity(IdentityId::rbr, alg, r, lambda, dom);
}

inline CheckReport check_modified_rbr(const AlgebraDescriptor& alg, const WeightedOperator& b, const Rational& lambda,
                                      const DomainSpec& dom) {
  return check_identity(IdentityId::modified, alg, b, lambda, dom);
}

inline CheckReport check_nijenhuis(const AlgebraDescriptor& alg, const WeightedOperator& n, const Rational& lambda,
                                   const DomainSpec& dom) {
  return check_identity(IdentityId::nijenhuis, alg, n, lambda, dom);
}

inline CheckReport check_lie_modified(const AlgebraDescriptor& alg, const WeightedOperator& b, const Rational& lambda,
                                      const DomainSpec& dom) {
  return check_identity(IdentityId::lie_modified, alg, b, lambda, dom);
}

inline CheckReport check_idempotent(const AlgebraDescriptor& alg, const WeightedOperator& r, const DomainSpec& dom) {
  return check_identity(IdentityId::idempotent, alg, r, 1, dom);
}

// ---------------------------------------------------------------------------
// Image closure: im(R) and im(lambda - R) must both be subalgebras.

namespace detail {

/// Splits v into (part in span, remainder) against a reduced echelon basis.
inline std::pair<Vec, Vec> split_against(const std::vector<Vec>& rref, const std::vector<std::size_t>& pivots, const Vec& v) {
  Vec rem = v;
  for (std::size_t r = 0; r < rref.size(); ++r) {
    Rational f = rem[pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < rem.size(); ++k)
      if (!rref[r][k].is_zero()) rem[k] -= f * rref[r][k];
  }
  Vec in(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) in[k] = v[k] - rem[k];
  return {std::move(in), std::move(rem)};
}

inline bool image_closed(const AlgebraDescriptor& alg, const Matrix& m, std::string_view label, CheckReport& report) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  auto [basis, pivots] = row_reduce(cols);
  report.notes.push_back(std::string(label) + " has dimension " + std::to_string(basis.size()));
  for (const auto& u : basis)
    for (const auto& v : basis) {
      ++report.tuples;
      Element eu = Element::vector(alg.name(), u);
      Element ev = Element::vector(alg.name(), v);
      Element prod = multiply(alg, eu, ev);
      auto [in, rem] = split_against(basis, pivots, prod.vec().coords);
      bool outside = false;
      for (const auto& c : rem) outside = outside || !c.is_zero();
      if (outside) {
        report.fail_with(Witness::make(alg, {eu, ev}, prod, Element::vector(alg.name(), in)));
        report.notes.push_back(std::string(label) + " is not closed under multiplication");
        return false;
      }
    }
  return true;
}

}  // namespace detail

/// Computes bases of im(R) and im(opposite_of(R)) by column reduction and
/// checks that products of basis pairs stay in the span. A witness holds the
/// product (lhs), its projection onto the image along the echelon pivots
/// (rhs), and the part outside the image (diff).
inline CheckReport check_image_closure(const AlgebraDescriptor& alg, const WeightedOperator& r) {
  if (!alg.is_finite()) throw Error(ErrorKind::unsupported, "image closure needs a finite-dimensional algebra, got " + alg.name());
  CheckReport report;
  report.check = "image.closure";
  report.algebra = alg.name();
  report.op = r.describe();
  report.weight = r.declared_weight;
  report.domain = Json{{"mode", "exhaustive-basis"}, {"basis", "image bases"}};
  const Matrix m = matrix_of(alg, r.expr);
  if (!detail::image_closed(alg, m, "im(R)", report)) return report;
  detail::image_closed(alg, matrix_of(alg, opposite_of(r).expr), "im(R^-)", report);
  return report;
}

// ---------------------------------------------------------------------------
// Counterexample search.

struct SearchBudget {
  std::int64_t max_radius = 4;  ///< basis sweep over [-r, r] for r = 0..max_radius ([0, r] for polynomials)
  std::size_t random_samples = 1000;
  std::uint64_t seed = 1;
  std::int64_t coeff_bound = 5;
  std::size_t support_bound = 3;
};

/// Deterministic search for inputs violating an identity: basis tuples over
/// expanding exponent ranges first (each tuple visited once, lexicographic
/// within a range), then seeded random elements over the widest range.
inline std::optional<Witness> find_violation(const AlgebraDescriptor& alg, IdentityId id, const WeightedOperator& op,
                                             const Rational& lambda, const SearchBudget& budget) {
  const std::size_t arity = identity_arity(id);
  std::optional<Witness> found;
  auto probe = [&](std::span<const Element> t) {
    Sides s = identity_sides(id, alg, op.expr, lambda, t);
    if (s.lhs == s.rhs) return true;
    found = Witness::make(alg, std::vector<Element>(t.begin(), t.end()), std::move(s.lhs), std::move(s.rhs));
    return false;
  };
  auto range_for = [&](std::int64_t r) {
    return alg.kind() == AlgebraKind::polynomial ? DomainSpec::exhaustive(0, r) : DomainSpec::exhaustive(-r, r);
  };

  if (alg.is_finite()) {
    for_each_tuple(alg, DomainSpec::finite_basis(), arity, probe);
  } else {
    for (std::int64_t r = 0; r <= budget.max_radius && !found; ++r) {
      const DomainSpec inner = range_for(r - 1);
      auto inside = [&](const Element& x) {
        std::int64_t e = x.laurent().terms.begin()->first;
        return r > 0 && e >= inner.lo && e <= inner.hi;
      };
      for_each_tuple(alg, range_for(r), arity, [&](std::span<const Element> t) {
        bool seen = true;
        for (const auto& x : t) seen = seen && inside(x);
        return seen ? true : probe(t);
      });
    }
  }
  if (found) return found;

  DomainSpec random = alg.is_finite() ? DomainSpec::finite_basis() : range_for(budget.max_radius);
  random = random.as_random(budget.random_samples, budget.seed);
  random.coeff_bound = budget.coeff_bound;
  random.support_bound = budget.support_bound;
  for_each_tuple(alg, random, arity, probe);
  return found;
}

}  // namespace rbo

#endif
