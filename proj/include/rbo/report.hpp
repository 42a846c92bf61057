#ifndef RBO_REPORT_HPP
#define RBO_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbo/algebra.hpp"
#include "rbo/domain.hpp"
#include "rbo/element.hpp"
#include "rbo/rational.hpp"

namespace rbo {

using Json = nlohmann::ordered_json;

/// Concrete inputs on which the two sides of an identity differ.
struct Witness {
  std::vector<Element> inputs;
  Element lhs;
  Element rhs;
  Element diff;  ///< lhs - rhs, never zero
  std::vector<std::string> inputs_text;
  std::string lhs_text;
  std::string rhs_text;
  std::string diff_text;

  static Witness make(const AlgebraDescriptor& alg, std::vector<Element> inputs, Element lhs, Element rhs) {
    Witness w;
    w.diff = lhs - rhs;
    for (const auto& x : inputs) w.inputs_text.push_back(alg.format(x));
    w.lhs_text = alg.format(lhs);
    w.rhs_text = alg.format(rhs);
    w.diff_text = alg.format(w.diff);
    w.inputs = std::move(inputs);
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
    return w;
  }
};

/// Outcome of one identity check. `pass` is false exactly when a witness is
/// present.
struct CheckReport {
  std::string check;
  std::string algebra;
  std::string op;
  Rational weight;
  Json domain;
  bool pass = true;
  std::optional<Witness> witness;
  std::size_t tuples = 0;
  std::vector<std::string> notes;

  void fail_with(Witness w) {
    pass = false;
    witness = std::move(w);
  }
};

inline bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

inline const CheckReport* find_report(const std::vector<CheckReport>& reports, const std::string& check) {
  for (const auto& r : reports)
    if (r.check == check) return &r;
  return nullptr;
}

inline Json domain_json(const AlgebraDescriptor& alg, const DomainSpec& dom) {
  Json j;
  j["mode"] = dom.mode == DomainMode::exhaustive_basis ? "exhaustive-basis" : "random";
  if (alg.is_finite())
    j["basis"] = "e_1..e_" + std::to_string(alg.dim());
  else
    j["range"] = Json::array({dom.lo, dom.hi});
  if (dom.mode == DomainMode::random) {
    j["samples"] = dom.samples;
    j["coeff_bound"] = dom.coeff_bound;
    j["support_bound"] = dom.support_bound;
    j["seed"] = dom.seed;
  }
  return j;
}

inline Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = r.pass ? "pass" : "fail";
  j["algebra"] = r.algebra;
  j["operator"] = r.op;
  j["weight"] = r.weight.str();
  j["domain"] = r.domain;
  j["tuples"] = r.tuples;
  if (r.witness) {
    Json w;
    w["inputs"] = r.witness->inputs_text;
    w["lhs"] = r.witness->lhs_text;
    w["rhs"] = r.witness->rhs_text;
    w["diff"] = r.witness->diff_text;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline Json to_json(const std::vector<CheckReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

}  // namespace rbo

#endif
