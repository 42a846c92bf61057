#ifndef RBO_DOMAIN_HPP
#define RBO_DOMAIN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rbo/algebra.hpp"
#include "rbo/element.hpp"
#include "rbo/error.hpp"
#include "rbo/rational.hpp"

namespace rbo {

enum class DomainMode { exhaustive_basis, random };

/// Which inputs an identity check is evaluated on.
///
/// Exhaustive mode walks every tuple of basis elements: monomials z^lo..z^hi
/// for Laurent/polynomial algebras, e_1..e_n for finite ones (the range is
/// ignored there). All identities checked here are multilinear, so passing on
/// the basis tuples is equivalent to passing on every element supported in
/// the range. Random mode draws `samples` tuples from a generator seeded by
/// `seed`.
struct DomainSpec {
  DomainMode mode = DomainMode::exhaustive_basis;
  std::int64_t lo = -4;
  std::int64_t hi = 4;
  std::size_t samples = 1000;
  std::int64_t coeff_bound = 5;
  std::size_t support_bound = 3;
  std::uint64_t seed = 1;

  static DomainSpec exhaustive(std::int64_t lo, std::int64_t hi) {
    DomainSpec d;
    d.lo = lo;
    d.hi = hi;
    return d;
  }
  static DomainSpec finite_basis() { return exhaustive(0, 0); }
  static DomainSpec random(std::int64_t lo, std::int64_t hi, std::size_t samples, std::uint64_t seed,
                           std::int64_t coeff_bound = 5, std::size_t support_bound = 3) {
    DomainSpec d;
    d.mode = DomainMode::random;
    d.lo = lo;
    d.hi = hi;
    d.samples = samples;
    d.seed = seed;
    d.coeff_bound = coeff_bound;
    d.support_bound = support_bound;
    return d;
  }

  /// Same range and bounds, other mode.
  DomainSpec as_random(std::size_t n, std::uint64_t s) const {
    DomainSpec d = *this;
    d.mode = DomainMode::random;
    d.samples = n;
    d.seed = s;
    return d;
  }

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

inline void validate_domain(const AlgebraDescriptor& alg, const DomainSpec& dom) {
  if (alg.is_finite()) return;
  if (dom.lo > dom.hi)
    throw Error(ErrorKind::invalid_domain, "empty exponent range [" + std::to_string(dom.lo) + ", " + std::to_string(dom.hi) + "]");
  if (alg.kind() == AlgebraKind::polynomial && dom.lo < 0)
    throw Error(ErrorKind::invalid_domain, "polynomial algebra range must start at exponent >= 0");
  if (dom.mode == DomainMode::random && dom.coeff_bound < 0)
    throw Error(ErrorKind::invalid_domain, "negative coefficient bound");
}

/// Basis elements covered by the domain, in increasing order.
inline std::vector<Element> basis_elements(const AlgebraDescriptor& alg, const DomainSpec& dom) {
  validate_domain(alg, dom);
  std::vector<Element> out;
  if (alg.is_finite()) {
    for (std::size_t i = 0; i < alg.dim(); ++i) out.push_back(alg.basis(i));
  } else {
    for (std::int64_t e = dom.lo; e <= dom.hi; ++e) out.push_back(alg.monomial(e));
  }
  return out;
}

/// Deterministic sampler. Bounded draws use rejection on the raw 64-bit
/// output of mt19937_64, so sequences are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  Rational coefficient(std::int64_t bound) {
    if (bound == 0) return Rational();
    std::int64_t num = uniform(-bound, bound);
    std::int64_t den = uniform(1, bound);
    return Rational(BigInt(num), BigInt(den));
  }

  /// Element with at most `support_bound` nonzero terms/coordinates inside
  /// the domain, coefficients |p| <= bound, 1 <= q <= bound.
  Element element(const AlgebraDescriptor& alg, const DomainSpec& dom) {
    if (alg.is_finite()) {
      std::vector<Rational> coords(alg.dim());
      for (std::size_t k = 0; k < dom.support_bound; ++k) {
        auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(alg.dim()) - 1));
        coords[i] = coefficient(dom.coeff_bound);
      }
      return Element::vector(alg.name(), std::move(coords));
    }
    LaurentForm f;
    for (std::size_t k = 0; k < dom.support_bound; ++k) {
      std::int64_t e = uniform(dom.lo, dom.hi);
      f.terms[e] = coefficient(dom.coeff_bound);
    }
    return Element(std::move(f));
  }

 private:
  std::mt19937_64 engine_;
};

/// One random element drawn from a fresh sampler seeded with dom.seed.
inline Element random_element(const AlgebraDescriptor& alg, const DomainSpec& dom) {
  if (dom.mode != DomainMode::random) throw Error(ErrorKind::invalid_domain, "random_element needs a random-mode domain");
  validate_domain(alg, dom);
  Sampler s(dom.seed);
  return s.element(alg, dom);
}

/// Calls visit(tuple) for every tuple of the domain, in a fixed order, until
/// visit returns false. Returns the number of tuples visited.
inline std::size_t for_each_tuple(const AlgebraDescriptor& alg, const DomainSpec& dom, std::size_t arity,
                                  const std::function<bool(std::span<const Element>)>& visit) {
  validate_domain(alg, dom);
  std::size_t count = 0;
  std::vector<Element> tuple(arity);
  if (dom.mode == DomainMode::random) {
    Sampler sampler(dom.seed);
    for (std::size_t n = 0; n < dom.samples; ++n) {
      for (auto& x : tuple) x = sampler.element(alg, dom);
      ++count;
      if (!visit(tuple)) break;
    }
    return count;
  }
  const std::vector<Element> basis = basis_elements(alg, dom);
  if (basis.empty() || arity == 0) return 0;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    for (std::size_t k = 0; k < arity; ++k) tuple[k] = basis[idx[k]];
    ++count;
    if (!visit(tuple)) break;
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++idx[k] < basis.size()) break;
      idx[k] = 0;
      if (k == 0) return count;
    }
  }
  return count;
}

}  // namespace rbo

#endif
