#ifndef RBO_DENDRIFORM_HPP
#define RBO_DENDRIFORM_HPP

#include <array>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbo/algebra.hpp"
#include "rbo/checks.hpp"
#include "rbo/domain.hpp"
#include "rbo/element.hpp"
#include "rbo/operators.hpp"
#include "rbo/report.hpp"

namespace rbo {

using BinaryProduct = std::function<Element(const Element&, const Element&)>;

struct Provenance {
  std::string construction;
  std::string source_operator;
  Rational weight;
  std::vector<std::string> notes;
};

/// Two or three bilinear products derived from an operator. An empty
/// `middle` means the structure is a dialgebra candidate.
struct DendriformStructure {
  AlgebraDescriptor algebra;
  BinaryProduct prec;
  BinaryProduct succ;
  BinaryProduct middle;
  Provenance provenance;

  bool has_middle() const { return static_cast<bool>(middle); }

  /// a*b = a<b + a>b (+ a.b when the middle product exists).
  Element star(const Element& a, const Element& b) const {
    Element s = prec(a, b) + succ(a, b);
    if (has_middle()) s += middle(a, b);
    return s;
  }
};

namespace detail {

inline void note_weight(Provenance& p, const WeightedOperator& r, const Rational& expected) {
  if (r.declared_weight != expected)
    p.notes.push_back("operator declares weight " + r.declared_weight.str() + ", construction expects " + expected.str());
}

}  // namespace detail

/// a<b = aR(b), a>b = R(a)b, for R of weight 0.
inline DendriformStructure build_weight0_pair(const AlgebraDescriptor& alg, const WeightedOperator& r) {
  DendriformStructure ds{alg, {}, {}, {}, {"weight0", r.describe(), 0, {}}};
  ds.prec = [alg, op = r.expr](const Element& a, const Element& b) { return multiply(alg, a, op.apply(alg, b)); };
  ds.succ = [alg, op = r.expr](const Element& a, const Element& b) { return multiply(alg, op.apply(alg, a), b); };
  detail::note_weight(ds.provenance, r, 0);
  return ds;
}

/// a<b = aB(b) - lambda ab, a>b = B(a)b + lambda ab, for B = lambda - 2R.
inline DendriformStructure build_modified_pair(const AlgebraDescriptor& alg, const WeightedOperator& b,
                                               const Rational& lambda) {
  DendriformStructure ds{alg, {}, {}, {}, {"modified", b.describe(), lambda, {}}};
  ds.prec = [alg, op = b.expr, lambda](const Element& x, const Element& y) {
    return multiply(alg, x, op.apply(alg, y)) - lambda * multiply(alg, x, y);
  };
  ds.succ = [alg, op = b.expr, lambda](const Element& x, const Element& y) {
    return multiply(alg, op.apply(alg, x), y) + lambda * multiply(alg, x, y);
  };
  detail::note_weight(ds.provenance, b, lambda);
  return ds;
}

/// Trialgebra with a<b = aR(b), a>b = R(a)b and a.b = c*ab.
inline DendriformStructure build_tri_with_middle(const AlgebraDescriptor& alg, const WeightedOperator& r,
                                                 const Rational& lambda, const Rational& middle_factor) {
  DendriformStructure ds{alg, {}, {}, {}, {"tri", r.describe(), lambda, {}}};
  ds.prec = [alg, op = r.expr](const Element& a, const Element& b) { return multiply(alg, a, op.apply(alg, b)); };
  ds.succ = [alg, op = r.expr](const Element& a, const Element& b) { return multiply(alg, op.apply(alg, a), b); };
  ds.middle = [alg, middle_factor](const Element& a, const Element& b) { return middle_factor * multiply(alg, a, b); };
  ds.provenance.notes.push_back("left product taken as a.R(b)");
  ds.provenance.notes.push_back("middle product " + middle_factor.str() + "*ab");
  detail::note_weight(ds.provenance, r, lambda);
  return ds;
}

/// Trialgebra from a weight-lambda Rota-Baxter operator. The middle product
/// is -lambda times the algebra product, the algebra product itself at lambda = -1.
inline DendriformStructure build_tri_from_rbo(const AlgebraDescriptor& alg, const WeightedOperator& r, const Rational& lambda) {
  return build_tri_with_middle(alg, r, lambda, -lambda);
}

/// a<b = aN(b), a>b = N(a)b, a.b = -N(ab), so that a*b = aN(b) + N(a)b - N(ab).
inline DendriformStructure build_from_nijenhuis(const AlgebraDescriptor& alg, const WeightedOperator& n) {
  DendriformStructure ds{alg, {}, {}, {}, {"nijenhuis", n.describe(), 1, {}}};
  ds.prec = [alg, op = n.expr](const Element& a, const Element& b) { return multiply(alg, a, op.apply(alg, b)); };
  ds.succ = [alg, op = n.expr](const Element& a, const Element& b) { return multiply(alg, op.apply(alg, a), b); };
  ds.middle = [alg, op = n.expr](const Element& a, const Element& b) { return -op.apply(alg, multiply(alg, a, b)); };
  ds.provenance.notes.push_back("middle product -N(ab)");
  return ds;
}

// ---------------------------------------------------------------------------
// Axiom checks.

namespace detail {

using TernarySides = std::function<Sides(const Element&, const Element&, const Element&)>;

inline CheckReport run_ternary(const DendriformStructure& ds, const DomainSpec& dom, std::string id,
                               const TernarySides& axiom) {
  CheckReport r = run_identity(std::move(id), ds.algebra, ds.provenance.construction + "(" + ds.provenance.source_operator + ")",
                               ds.provenance.weight, dom, 3,
                               [&](std::span<const Element> t) { return axiom(t[0], t[1], t[2]); });
  r.notes = ds.provenance.notes;
  return r;
}

inline BinaryProduct middle_or_zero(const DendriformStructure& ds) {
  if (ds.has_middle()) return ds.middle;
  return [](const Element& a, const Element&) { return a.zero_like(); };
}

}  // namespace detail

/// (a<b)<c = a<(b<c + b>c); a>(b<c) = (a>b)<c; a>(b>c) = (a<b + a>b)>c.
/// Only < and > take part; a middle product, if present, is ignored.
inline std::vector<CheckReport> check_dialgebra(const DendriformStructure& ds, const DomainSpec& dom) {
  const auto& L = ds.prec;
  const auto& G = ds.succ;
  std::vector<CheckReport> out;
  out.push_back(detail::run_ternary(ds, dom, "ddi.1", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{L(L(a, b), c), L(a, L(b, c) + G(b, c))};
  }));
  out.push_back(detail::run_ternary(ds, dom, "ddi.2", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{G(a, L(b, c)), L(G(a, b), c)};
  }));
  out.push_back(detail::run_ternary(ds, dom, "ddi.3", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{G(a, G(b, c)), G(L(a, b) + G(a, b), c)};
  }));
  return out;
}

/// The seven trialgebra axioms tri.1..tri.7. A missing middle product is
/// treated as the zero product.
inline std::vector<CheckReport> check_trialgebra(const DendriformStructure& ds, const DomainSpec& dom) {
  const auto& L = ds.prec;
  const auto& G = ds.succ;
  const BinaryProduct M = detail::middle_or_zero(ds);
  std::vector<CheckReport> out;
  out.push_back(detail::run_ternary(ds, dom, "tri.1", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{L(L(a, b), c), L(a, L(b, c) + G(b, c) + M(b, c))};
  }));
  out.push_back(detail::run_ternary(ds, dom, "tri.2", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{L(G(a, b), c), G(a, L(b, c))};
  }));
  out.push_back(detail::run_ternary(ds, dom, "tri.3", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{G(a, G(b, c)), G(L(a, b) + G(a, b) + M(a, b), c)};
  }));
  out.push_back(detail::run_ternary(ds, dom, "tri.4", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{M(L(a, b), c), M(a, G(b, c))};
  }));
  out.push_back(detail::run_ternary(ds, dom, "tri.5", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{M(G(a, b), c), G(a, M(b, c))};
  }));
  out.push_back(detail::run_ternary(ds, dom, "tri.6", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{L(M(a, b), c), M(a, L(b, c))};
  }));
  out.push_back(detail::run_ternary(ds, dom, "tri.7", [&](const Element& a, const Element& b, const Element& c) {
    return Sides{M(M(a, b), c), M(a, M(b, c))};
  }));
  if (!ds.has_middle())
    for (auto& r : out) r.notes.push_back("middle product absent, treated as zero");
  return out;
}

/// (a*b)*c = a*(b*c) for the sum of all products.
inline CheckReport check_star_associative(const DendriformStructure& ds, const DomainSpec& dom) {
  const std::string id = ds.provenance.construction == "nijenhuis" ? "nij.star.assoc" : "star.assoc";
  return detail::run_ternary(ds, dom, id, [&](const Element& a, const Element& b, const Element& c) {
    return Sides{ds.star(ds.star(a, b), c), ds.star(a, ds.star(b, c))};
  });
}

/// R(x)<R(y) + R(x<y) = R(R(x)<y + x<R(y)), and the same for >: the weight-1
/// Rota-Baxter relation with the algebra product replaced by each
/// composition. Expected for idempotent R; when R is not idempotent on the
/// domain the reports are still produced and flagged.
inline std::vector<CheckReport> check_rbr_on_compositions(const DendriformStructure& ds, const WeightedOperator& r,
                                                          const DomainSpec& dom) {
  const AlgebraDescriptor& alg = ds.algebra;
  const CheckReport idem = check_idempotent(alg, r, dom);
  std::vector<CheckReport> out;
  const std::array<std::pair<const char*, const BinaryProduct*>, 2> comps{{{"rbr.on.prec", &ds.prec}, {"rbr.on.succ", &ds.succ}}};
  for (const auto& [id, prod] : comps) {
    const BinaryProduct& P = *prod;
    CheckReport rep = run_identity(id, alg, r.describe(), 1, dom, 2, [&](std::span<const Element> t) {
      Element rx = r(alg, t[0]);
      Element ry = r(alg, t[1]);
      return Sides{P(rx, ry) + r(alg, P(t[0], t[1])), r(alg, P(rx, t[1]) + P(t[0], ry))};
    });
    rep.notes = ds.provenance.notes;
    if (!idem.pass) rep.notes.push_back("precondition-unmet: operator is not idempotent on the domain");
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace rbo

#endif
