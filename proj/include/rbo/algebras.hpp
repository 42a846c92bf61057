#ifndef RBO_ALGEBRAS_HPP
#define RBO_ALGEBRAS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rbo/algebra.hpp"
#include "rbo/error.hpp"
#include "rbo/report.hpp"

namespace rbo {

inline AlgebraDescriptor make_laurent() { return AlgebraDescriptor::laurent(); }
inline AlgebraDescriptor make_polynomial() { return AlgebraDescriptor::polynomial(); }

/// K^n with e_i e_j = delta_ij e_i; the unit is e_1 + ... + e_n.
inline AlgebraDescriptor make_componentwise(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_dimension, "componentwise algebra needs n >= 1");
  StructureConstants sc(n);
  for (std::size_t i = 0; i < n; ++i) sc.at(i, i, i) = 1;
  sc.set_unit(std::vector<Rational>(n, Rational(1)));
  return AlgebraDescriptor::finite(AlgebraKind::componentwise, "componentwise:" + std::to_string(n), std::move(sc));
}

/// Index of the matrix unit E_pq (0-based p, q) in the basis of M_n.
inline std::size_t matrix_unit_index(std::size_t n, std::size_t p, std::size_t q) { return p * n + q; }

/// Full matrix algebra M_n over the matrix units, ordered row-major:
/// E_11, E_12, ..., E_1n, E_21, ...
inline AlgebraDescriptor make_matrix_algebra(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_dimension, "matrix algebra needs n >= 1");
  StructureConstants sc(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s)
        sc.at(matrix_unit_index(n, p, q), matrix_unit_index(n, q, s), matrix_unit_index(n, p, s)) = 1;
  std::vector<Rational> unit(n * n);
  for (std::size_t p = 0; p < n; ++p) unit[matrix_unit_index(n, p, p)] = 1;
  sc.set_unit(std::move(unit));
  return AlgebraDescriptor::finite(AlgebraKind::structure_constants, "matrix:" + std::to_string(n), std::move(sc));
}

/// Finite model of the Laurent exponent window [-k, k].
///
/// Basis z^-k..z^-1, z^0..z^k (in that order). The pole block is
/// z^-1 K[z^-1] / (z^(-k-1)) and the regular block is K[z] / (z^(k+1)); the
/// algebra is their direct product, so pole times regular products vanish.
/// The pole block is nilpotent, so the algebra has no unit.
inline AlgebraDescriptor make_window_algebra(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::invalid_dimension, "window algebra needs k >= 1");
  const std::size_t n = 2 * k + 1;
  auto index = [k](std::int64_t e) { return static_cast<std::size_t>(e + static_cast<std::int64_t>(k)); };
  const auto kk = static_cast<std::int64_t>(k);
  StructureConstants sc(n);
  for (std::int64_t a = -kk; a <= kk; ++a)
    for (std::int64_t b = -kk; b <= kk; ++b) {
      if ((a < 0) != (b < 0)) continue;
      std::int64_t e = a + b;
      if (e < -kk || e > kk) continue;
      sc.at(index(a), index(b), index(e)) = 1;
    }
  return AlgebraDescriptor::finite(AlgebraKind::structure_constants, "laurent-window:" + std::to_string(k), std::move(sc));
}

/// Checks sum_m c[i][j][m] c[m][k][l] = sum_m c[j][k][m] c[i][m][l] for all
/// index quadruples, i.e. (e_i e_j) e_k = e_i (e_j e_k) for all basis
/// triples, then the unit law if a unit is declared. The first violating
/// triple (lexicographic order) becomes the witness.
inline CheckReport verify_associativity(const StructureConstants& sc, const std::string& name = "structure-constants") {
  const std::size_t n = sc.dim();
  StructureConstants bare(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) bare.at(i, j, k) = sc.at(i, j, k);
  const AlgebraDescriptor alg = AlgebraDescriptor::finite(AlgebraKind::structure_constants, name, bare);

  CheckReport report;
  report.check = "assoc";
  report.algebra = name;
  report.op = "none";
  report.domain = Json{{"mode", "exhaustive-basis"}, {"basis", "e_1..e_" + std::to_string(n)}};

  for (std::size_t i = 0; i < n && report.pass; ++i)
    for (std::size_t j = 0; j < n && report.pass; ++j)
      for (std::size_t k = 0; k < n && report.pass; ++k) {
        ++report.tuples;
        Element ei = alg.basis(i), ej = alg.basis(j), ek = alg.basis(k);
        Element lhs = multiply(alg, multiply(alg, ei, ej), ek);
        Element rhs = multiply(alg, ei, multiply(alg, ej, ek));
        if (lhs != rhs) {
          report.fail_with(Witness::make(alg, {ei, ej, ek}, lhs, rhs));
          report.notes.push_back("non-associative at (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
                                 std::to_string(k + 1) + ")");
        }
      }
  if (!report.pass || !sc.unit()) return report;

  report.check = "assoc+unit";
  const Element unit = Element::vector(name, *sc.unit());
  for (std::size_t i = 0; i < n && report.pass; ++i) {
    ++report.tuples;
    Element ei = alg.basis(i);
    Element left = multiply(alg, unit, ei);
    Element right = multiply(alg, ei, unit);
    if (left != ei) {
      report.fail_with(Witness::make(alg, {unit, ei}, left, ei));
      report.notes.push_back("unit fails on the left at e_" + std::to_string(i + 1));
    } else if (right != ei) {
      report.fail_with(Witness::make(alg, {ei, unit}, right, ei));
      report.notes.push_back("unit fails on the right at e_" + std::to_string(i + 1));
    }
  }
  return report;
}

inline CheckReport verify_associativity(const AlgebraDescriptor& alg) {
  return verify_associativity(alg.structure_constants(), alg.name());
}

}  // namespace rbo

#endif
