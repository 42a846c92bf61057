#ifndef RBO_IO_HPP
#define RBO_IO_HPP

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbo/algebra.hpp"
#include "rbo/algebras.hpp"
#include "rbo/error.hpp"
#include "rbo/linalg.hpp"
#include "rbo/operators.hpp"
#include "rbo/rational.hpp"
#include "rbo/report.hpp"
#include "rbo/tensor.hpp"

namespace rbo {

// File formats (UTF-8 JSON, rationals as "p/q" strings, 0-based indices):
//   structure constants  {"dim": n, "unit": [..] (optional), "c": [i][j][k]}
//   operator matrix      {"dim": n, "matrix": row-major n x n}, column j = R(e_j)
//   tensor               {"algebra": "matrix:2" | "file:...", "terms": [{"i", "j", "coeff"}]}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::format, "cannot read file '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::format, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::format, "cannot write file '" + path.string() + "'");
  out << text;
}

namespace detail {

inline Rational rational_field(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what());
  }
  throw Error(ErrorKind::format, where + ": expected a rational string \"p/q\", got " + j.dump());
}

inline std::size_t dim_field(const Json& doc, const std::string& file) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
    throw Error(ErrorKind::format, file + ": field \"dim\" must be a positive integer");
  return doc["dim"].get<std::size_t>();
}

inline const Json& array_field(const Json& j, std::size_t expected, const std::string& where) {
  if (!j.is_array() || j.size() != expected)
    throw Error(ErrorKind::invalid_dimension, where + ": expected an array of length " + std::to_string(expected));
  return j;
}

}  // namespace detail

inline StructureConstants structure_constants_from_json(const Json& doc, const std::string& file = "structure constants") {
  const std::size_t n = detail::dim_field(doc, file);
  if (!doc.contains("c")) throw Error(ErrorKind::format, file + ": missing field \"c\"");
  StructureConstants sc(n);
  const Json& c = detail::array_field(doc["c"], n, file + ": \"c\"");
  for (std::size_t i = 0; i < n; ++i) {
    const Json& ci = detail::array_field(c[i], n, file + ": \"c\"[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = file + ": \"c\"[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      const Json& cij = detail::array_field(ci[j], n, where);
      for (std::size_t k = 0; k < n; ++k) sc.at(i, j, k) = detail::rational_field(cij[k], where + "[" + std::to_string(k) + "]");
    }
  }
  if (doc.contains("unit")) {
    const Json& u = detail::array_field(doc["unit"], n, file + ": \"unit\"");
    std::vector<Rational> unit;
    for (std::size_t k = 0; k < n; ++k) unit.push_back(detail::rational_field(u[k], file + ": \"unit\"[" + std::to_string(k) + "]"));
    sc.set_unit(std::move(unit));
  }
  return sc;
}

inline Json to_json(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  Json c = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json ci = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json cij = Json::array();
      for (std::size_t k = 0; k < n; ++k) cij.push_back(sc.at(i, j, k).str());
      ci.push_back(cij);
    }
    c.push_back(ci);
  }
  Json doc;
  doc["dim"] = n;
  if (sc.unit()) {
    Json u = Json::array();
    for (const auto& v : *sc.unit()) u.push_back(v.str());
    doc["unit"] = u;
  }
  doc["c"] = c;
  return doc;
}

/// Parses and certifies a structure-constants file. Non-associative tables
/// are rejected with the violating basis triple in the message.
inline AlgebraDescriptor load_structure_constants(const std::filesystem::path& path) {
  StructureConstants sc = structure_constants_from_json(read_json_file(path), path.string());
  const std::string name = "file:" + path.string();
  CheckReport assoc = verify_associativity(sc, name);
  if (!assoc.pass) {
    std::string detail = assoc.notes.empty() ? "" : assoc.notes.front();
    throw Error(ErrorKind::not_associative, path.string() + ": " + detail + "; (" + assoc.witness->inputs_text[0] + ", " +
                                                 assoc.witness->inputs_text[1] +
                                                 (assoc.witness->inputs_text.size() > 2 ? ", " + assoc.witness->inputs_text[2] : "") +
                                                 ") gives " + assoc.witness->lhs_text + " vs " + assoc.witness->rhs_text);
  }
  return AlgebraDescriptor::finite(AlgebraKind::structure_constants, name, std::move(sc));
}

inline Matrix matrix_from_json(const Json& doc, const std::string& file = "operator matrix") {
  const std::size_t n = detail::dim_field(doc, file);
  if (!doc.contains("matrix")) throw Error(ErrorKind::format, file + ": missing field \"matrix\"");
  const Json& rows = detail::array_field(doc["matrix"], n, file + ": \"matrix\"");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = detail::array_field(rows[i], n, file + ": \"matrix\"[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = detail::rational_field(row[j], file + ": \"matrix\"[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  Json doc;
  doc["dim"] = m.rows();
  doc["matrix"] = rows;
  return doc;
}

/// Operator from a matrix file; the weight always comes from the caller.
inline WeightedOperator load_operator_matrix(const std::filesystem::path& path, const AlgebraDescriptor& alg, const Rational& weight) {
  if (!alg.is_finite()) throw Error(ErrorKind::unsupported, "operator matrices need a finite-dimensional algebra, got " + alg.name());
  Matrix m = matrix_from_json(read_json_file(path), path.string());
  if (m.rows() != alg.dim())
    throw Error(ErrorKind::invalid_dimension, path.string() + ": \"dim\" is " + std::to_string(m.rows()) + " but " + alg.name() +
                                                   " has dimension " + std::to_string(alg.dim()));
  WeightedOperator op = matrix_operator(std::move(m), "matrix[" + path.filename().string() + "]", weight, alg.name());
  op.provenance = "loaded from " + path.string();
  return op;
}

/// Algebra selectors: laurent, polynomial, componentwise:n, miller:s,t
/// (componentwise of dimension s+t), matrix:n, laurent-window:k, file:path.
/// Relative file paths resolve against `base`.
inline AlgebraDescriptor parse_algebra(const std::string& selector, const std::filesystem::path& base = {}) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (!detail::all_digits(s)) throw Error(ErrorKind::format, "bad number '" + s + "' in algebra selector '" + selector + "'");
    return std::stoul(s);
  };
  const auto colon = selector.find(':');
  const std::string head = selector.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : selector.substr(colon + 1);
  if (selector == "laurent") return make_laurent();
  if (selector == "polynomial") return make_polynomial();
  if (head == "componentwise") return make_componentwise(number(arg));
  if (head == "matrix") return make_matrix_algebra(number(arg));
  if (head == "laurent-window") return make_window_algebra(number(arg));
  if (head == "miller") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::format, "miller selector needs s,t: '" + selector + "'");
    std::size_t s = number(arg.substr(0, comma));
    std::size_t t = number(arg.substr(comma + 1));
    if (s == 0 || t == 0) throw Error(ErrorKind::invalid_dimension, "miller selector needs s, t >= 1");
    return make_componentwise(s + t);
  }
  if (head == "file") {
    std::filesystem::path p(arg);
    if (p.is_relative() && !base.empty()) p = base / p;
    return load_structure_constants(p);
  }
  throw Error(ErrorKind::format, "unknown algebra selector '" + selector + "'");
}

inline Tensor2 tensor_from_json(const Json& doc, const std::filesystem::path& base = {}, const std::string& file = "tensor") {
  if (!doc.is_object() || !doc.contains("algebra") || !doc["algebra"].is_string())
    throw Error(ErrorKind::format, file + ": field \"algebra\" must be a string");
  Tensor2 r(parse_algebra(doc["algebra"].get<std::string>(), base));
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw Error(ErrorKind::format, file + ": field \"terms\" must be an array");
  std::size_t n = 0;
  for (const auto& t : doc["terms"]) {
    const std::string where = file + ": \"terms\"[" + std::to_string(n++) + "]";
    if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("coeff") || !t["i"].is_number_unsigned() ||
        !t["j"].is_number_unsigned())
      throw Error(ErrorKind::format, where + ": expected {\"i\", \"j\", \"coeff\"}");
    r.add({t["i"].get<std::size_t>(), t["j"].get<std::size_t>()}, detail::rational_field(t["coeff"], where + ".coeff"));
  }
  return r;
}

inline Tensor2 load_tensor(const std::filesystem::path& path) {
  return tensor_from_json(read_json_file(path), path.parent_path(), path.string());
}

template <std::size_t N>
Json to_json(const Tensor<N>& t) {
  static const char* keys[] = {"i", "j", "k"};
  Json terms = Json::array();
  for (const auto& [idx, c] : t.terms()) {
    Json term;
    for (std::size_t k = 0; k < N; ++k) term[keys[k]] = idx[k];
    term["coeff"] = c.str();
    terms.push_back(term);
  }
  Json doc;
  doc["algebra"] = t.algebra().name();
  doc["terms"] = terms;
  return doc;
}

}  // namespace rbo

#endif
