#ifndef RBO_SUITE_HPP
#define RBO_SUITE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbo/algebras.hpp"
#include "rbo/checks.hpp"
#include "rbo/dendriform.hpp"
#include "rbo/error.hpp"
#include "rbo/operators.hpp"
#include "rbo/report.hpp"
#include "rbo/tensor.hpp"

namespace rbo {

enum class Expectation { pass, fail, report_only };

inline const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::pass: return "pass";
    case Expectation::fail: return "expected-fail";
    case Expectation::report_only: return "report";
  }
  return "?";
}

/// One row of a regression suite: the reports from the exhaustive run and,
/// where the check has a sampling domain, the same checks in random mode.
struct SuiteEntry {
  std::string id;
  int criterion = 0;
  std::string description;
  Expectation expect = Expectation::pass;
  std::vector<CheckReport> reports;
  std::optional<std::vector<CheckReport>> random_reports;

  bool verdict() const { return all_pass(reports); }

  bool ok() const {
    switch (expect) {
      case Expectation::pass: return verdict();
      case Expectation::fail: return !verdict();
      case Expectation::report_only: return true;
    }
    return false;
  }

  /// Per-report verdicts agree between exhaustive and random mode.
  std::optional<bool> modes_agree() const {
    if (!random_reports) return std::nullopt;
    if (random_reports->size() != reports.size()) return false;
    for (std::size_t i = 0; i < reports.size(); ++i)
      if (reports[i].pass != (*random_reports)[i].pass) return false;
    return true;
  }
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<SuiteEntry> entries;

  bool all_ok() const {
    for (const auto& e : entries)
      if (!e.ok()) return false;
    return true;
  }
  bool all_modes_agree() const {
    for (const auto& e : entries)
      if (e.modes_agree() == false) return false;
    return true;
  }
  const SuiteEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

inline Json to_json(const SuiteEntry& e) {
  Json j;
  j["id"] = e.id;
  j["criterion"] = e.criterion;
  j["description"] = e.description;
  j["expect"] = to_string(e.expect);
  j["verdict"] = e.verdict() ? "pass" : "fail";
  j["ok"] = e.ok();
  if (auto agree = e.modes_agree())
    j["modes_agree"] = *agree;
  else
    j["modes_agree"] = nullptr;
  j["reports"] = to_json(e.reports);
  if (e.random_reports) j["random_reports"] = to_json(*e.random_reports);
  return j;
}

inline Json to_json(const SuiteReport& s) {
  Json j;
  j["suite"] = s.name;
  j["seed"] = s.seed;
  Json entries = Json::array();
  std::size_t ok = 0;
  for (const auto& e : s.entries) {
    entries.push_back(to_json(e));
    ok += e.ok() ? 1 : 0;
  }
  j["entries"] = entries;
  j["summary"] = Json{{"entries", s.entries.size()}, {"ok", ok}, {"all_ok", s.all_ok()}, {"modes_agree", s.all_modes_agree()}};
  return j;
}

/// Named aCYBE test tensors over M_2 (basis E11, E12, E21, E22).
struct CorpusTensor {
  std::string name;
  Tensor2 tensor;
};

inline std::vector<CorpusTensor> tensor_corpus() {
  const AlgebraDescriptor m2 = make_matrix_algebra(2);
  const std::size_t e11 = 0, e12 = 1, e21 = 2, e22 = 3;
  auto single = [&](std::size_t i, std::size_t j, Rational c = 1) {
    Tensor2 r(m2);
    r.add({i, j}, c);
    return r;
  };
  std::vector<CorpusTensor> out;
  out.push_back({"zero", Tensor2(m2)});
  out.push_back({"E12xE12", single(e12, e12)});
  out.push_back({"E11xE11", single(e11, e11)});
  out.push_back({"3/2 E12xE12", single(e12, e12, Rational(BigInt(3), BigInt(2)))});
  out.push_back({"E11xE12", single(e11, e12)});
  out.push_back({"E12xE22", single(e12, e22)});
  out.push_back({"E21xE12", single(e21, e12)});
  Tensor2 mixed(m2);
  mixed.add({e11, e12}, 1).add({e12, e22}, 1);
  out.push_back({"E11xE12 + E12xE22", std::move(mixed)});
  return out;
}

namespace detail {

struct SuiteBuilder {
  std::uint64_t seed;
  std::size_t samples;
  std::vector<SuiteEntry> entries;

  using Run = std::function<std::vector<CheckReport>(const DomainSpec&)>;

  void add(std::string id, int criterion, std::string description, Expectation expect, const DomainSpec& dom, const Run& run) {
    SuiteEntry e{std::move(id), criterion, std::move(description), expect, run(dom), std::nullopt};
    e.random_reports = run(dom.as_random(samples, seed));
    entries.push_back(std::move(e));
  }

  void add_fixed(std::string id, int criterion, std::string description, Expectation expect, std::vector<CheckReport> reports) {
    entries.push_back(SuiteEntry{std::move(id), criterion, std::move(description), expect, std::move(reports), std::nullopt});
  }
};

inline std::vector<CheckReport> one(CheckReport r) { return {std::move(r)}; }

inline std::vector<CheckReport> concat(std::vector<CheckReport> a, std::vector<CheckReport> b) {
  for (auto& r : b) a.push_back(std::move(r));
  return a;
}

inline CheckReport violation_report(const AlgebraDescriptor& alg, const WeightedOperator& r, const Rational& lambda,
                                    const SearchBudget& budget) {
  CheckReport rep;
  rep.check = "violation.rbr";
  rep.algebra = alg.name();
  rep.op = r.describe();
  rep.weight = lambda;
  rep.domain = Json{{"mode", "search"}, {"radius", budget.max_radius}, {"random_samples", budget.random_samples}, {"seed", budget.seed}};
  if (auto w = find_violation(alg, IdentityId::rbr, r, lambda, budget)) rep.fail_with(std::move(*w));
  return rep;
}

inline CheckReport residual_report(const std::string& name, const Tensor2& r, const Tensor3& expected) {
  CheckReport rep;
  rep.check = "acybe.residual";
  rep.algebra = r.algebra().name();
  rep.op = name;
  rep.weight = 0;
  rep.domain = Json{{"mode", "exact"}};
  rep.tuples = 1;
  Tensor3 res = acybe_residual(r);
  rep.notes.push_back("residual = " + res.str());
  if (!(res == expected)) {
    Witness w;
    w.inputs_text = {r.str()};
    w.lhs_text = res.str();
    w.rhs_text = expected.str();
    w.diff_text = (res - expected).str();
    rep.pass = false;
    rep.witness = std::move(w);
  }
  return rep;
}

}  // namespace detail

/// Parameters of the suite's randomized re-runs.
struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t random_samples = 1000;
};

/// Runs a named suite. "paper-all" is the full regression matrix for the
/// Rota-Baxter identities and the dendriform constructions; negative
/// entries are marked expected-fail.
inline SuiteReport run_suite(const std::string& preset, const SuiteOptions& opts = {}) {
  if (preset != "paper-all") throw Error(ErrorKind::format, "unknown suite preset '" + preset + "'");

  detail::SuiteBuilder b{opts.seed, opts.random_samples, {}};
  using detail::concat;
  using detail::one;
  const AlgebraDescriptor laurent = make_laurent();
  const AlgebraDescriptor poly = make_polynomial();
  const WeightedOperator rms = make_rms();
  const WeightedOperator neg_rms = scaled(rms, -1);
  const WeightedOperator rms_opp = make_rms_opposite();
  const WeightedOperator integ = make_integration();
  const DomainSpec wide = DomainSpec::exhaustive(-8, 8);
  const DomainSpec window4 = DomainSpec::exhaustive(-4, 4);
  const DomainSpec basis = DomainSpec::finite_basis();

  struct Positive {
    std::string id;
    AlgebraDescriptor alg;
    WeightedOperator op;
    Rational lambda;
    DomainSpec dom;
  };
  std::vector<Positive> positives{
      {"rms", laurent, rms, 1, wide},
      {"neg-rms", laurent, neg_rms, -1, wide},
      {"rms-opp", laurent, rms_opp, 1, wide},
      {"integration", poly, integ, 0, DomainSpec::exhaustive(0, 10)},
  };
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t t = 1; t <= 4; ++t)
      positives.push_back({"miller-" + std::to_string(s) + "-" + std::to_string(t), make_componentwise(s + t), make_miller(s, t), 1, basis});

  // 1. Rota-Baxter relation, positives.
  for (const auto& p : positives)
    b.add("c1." + p.id, 1, "RBR of weight " + p.lambda.str() + " for " + p.op.describe(), Expectation::pass, p.dom,
          [&](const DomainSpec& d) { return one(check_rbr(p.alg, p.op, p.lambda, d)); });

  // 2. Truncations R_r.
  for (std::int64_t r : {1, 2, -2, 3, -1, 0}) {
    const WeightedOperator op = make_shift_truncation(r);
    const bool holds = r == -1 || r == 0;
    SearchBudget budget;
    budget.seed = opts.seed;
    budget.random_samples = opts.random_samples;
    b.add("c2.shift." + std::to_string(r), 2, "RBR of weight 1 for R_" + std::to_string(r), holds ? Expectation::pass : Expectation::fail,
          window4, [&](const DomainSpec& d) {
            auto reps = one(check_rbr(laurent, op, 1, d));
            if (d.mode == DomainMode::exhaustive_basis) reps.push_back(detail::violation_report(laurent, op, 1, budget));
            else reps.push_back(reps.front());
            return reps;
          });
  }

  // 3. Modified relation B = lambda - 2R, and its bracket form on M_2.
  for (const auto& p : positives) {
    const WeightedOperator bop = modified_of(with_weight(p.op, p.lambda));
    b.add("c3." + p.id, 3, "modified relation for " + bop.describe(), Expectation::pass, p.dom,
          [&](const DomainSpec& d) { return one(check_modified_rbr(p.alg, bop, p.lambda, d)); });
  }
  {
    const AlgebraDescriptor m2 = make_matrix_algebra(2);
    const WeightedOperator proj = coordinate_projector(4, {0, 1}, "P[E11,E12]", 1);
    const WeightedOperator bop = modified_of(proj);
    b.add("c3.m2-projector", 3, "M_2 projector onto span(E11,E12): RBR, modified and bracket forms", Expectation::pass, basis,
          [&](const DomainSpec& d) {
            return std::vector<CheckReport>{check_rbr(m2, proj, 1, d), check_modified_rbr(m2, bop, 1, d), check_lie_modified(m2, bop, 1, d)};
          });
  }

  // 4. Dendriform dialgebras.
  b.add("c4.weight0-integration", 4, "dialgebra from integration (weight 0)", Expectation::pass, DomainSpec::exhaustive(0, 6),
        [&](const DomainSpec& d) { return check_dialgebra(build_weight0_pair(poly, integ), d); });
  {
    const WeightedOperator bop = modified_of(rms);
    b.add("c4.modified-rms", 4, "dialgebra from B = 1 - 2R_ms", Expectation::pass, window4,
          [&](const DomainSpec& d) { return check_dialgebra(build_modified_pair(laurent, bop, 1), d); });
  }

  // 5. Dendriform trialgebras.
  struct TriCase {
    std::string id;
    AlgebraDescriptor alg;
    WeightedOperator op;
    Rational lambda;
    DomainSpec dom;
  };
  const std::vector<TriCase> tri{
      {"rms", laurent, rms, 1, window4},
      {"neg-rms", laurent, neg_rms, -1, window4},
      {"rms-opp", laurent, rms_opp, 1, window4},
      {"miller-2-2", make_componentwise(4), make_miller(2, 2), 1, basis},
  };
  for (const auto& c : tri)
    b.add("c5." + c.id, 5, "trialgebra axioms and star associativity for " + c.op.describe(), Expectation::pass, c.dom,
          [&](const DomainSpec& d) {
            DendriformStructure ds = build_tri_from_rbo(c.alg, c.op, c.lambda);
            return concat(check_trialgebra(ds, d), one(check_star_associative(ds, d)));
          });
  b.add("c5.wrong-sign", 5, "middle product +lambda*ab breaks tri.1", Expectation::fail, window4, [&](const DomainSpec& d) {
    return one(check_trialgebra(build_tri_with_middle(laurent, rms, 1, 1), d).front());
  });

  // 6. Idempotent operator on both compositions.
  b.add("c6.rms-compositions", 6, "RBR on < and > for idempotent R_ms", Expectation::pass, window4,
        [&](const DomainSpec& d) { return check_rbr_on_compositions(build_tri_from_rbo(laurent, rms, 1), rms, d); });

  // 7. Nijenhuis family.
  const std::vector<Rational> alphas{-1, 0, Rational(BigInt(1), BigInt(2)), 1, 2, 5};
  for (const auto& alpha : alphas) {
    const WeightedOperator n = nijenhuis_family(rms, alpha);
    const std::string tag = "alpha=" + alpha.str();
    b.add("c7.nijenhuis." + alpha.str(), 7, "Nijenhuis relation for N_" + alpha.str(), Expectation::pass, DomainSpec::exhaustive(-5, 5),
          [&](const DomainSpec& d) { return one(check_nijenhuis(laurent, n, 1, d)); });
    b.add("c7.star." + alpha.str(), 7, "associativity of aN(b) + N(a)b - N(ab), " + tag, Expectation::pass, DomainSpec::exhaustive(-3, 3),
          [&](const DomainSpec& d) { return one(check_star_associative(build_from_nijenhuis(laurent, n), d)); });
    b.add("c7.trialgebra." + alpha.str(), 7, "trialgebra axioms for the Nijenhuis products (reported only), " + tag,
          Expectation::report_only, DomainSpec::exhaustive(-3, 3),
          [&](const DomainSpec& d) { return check_trialgebra(build_from_nijenhuis(laurent, n), d); });
  }

  // 8. Associative classical Yang-Baxter equation.
  {
    const AlgebraDescriptor m2 = make_matrix_algebra(2);
    const auto corpus = tensor_corpus();
    auto get = [&](const std::string& name) -> const Tensor2& {
      for (const auto& c : corpus)
        if (c.name == name) return c.tensor;
      throw Error(ErrorKind::format, "missing corpus tensor " + name);
    };
    Tensor3 e111(m2);
    e111.add({0, 0, 0}, 1);
    b.add_fixed("c8.residual", 8, "aCYBE residuals of 0, E12xE12, E11xE11", Expectation::pass,
                {detail::residual_report("0", get("zero"), Tensor3(m2)), detail::residual_report("E12xE12", get("E12xE12"), Tensor3(m2)),
                 detail::residual_report("E11xE11", get("E11xE11"), e111)});
    const WeightedOperator induced = induced_operator(get("E12xE12"));
    b.add("c8.induced", 8, "induced operator of E12xE12 is weight-0 Rota-Baxter", Expectation::pass, basis,
          [&](const DomainSpec& d) { return one(check_rbr(m2, induced, 0, d)); });
  }

  // 9. Image closure.
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t t = 1; t <= 3; ++t)
      b.add_fixed("c9.miller-" + std::to_string(s) + "-" + std::to_string(t), 9, "im(R) and im(1-R) are subalgebras", Expectation::pass,
                  one(check_image_closure(make_componentwise(s + t), make_miller(s, t))));
  for (std::size_t k : {4, 8}) {
    const AlgebraDescriptor win = make_window_algebra(k);
    const WeightedOperator proj = window_rms(k);
    b.add("c9.window-" + std::to_string(k), 9, "R_ms on the exponent window [-" + std::to_string(k) + "," + std::to_string(k) + "]",
          Expectation::pass, basis, [&, proj, win](const DomainSpec& d) {
            return std::vector<CheckReport>{check_rbr(win, proj, 1, d), check_image_closure(win, proj)};
          });
  }

  // Deliberately non-associative structure constants.
  {
    StructureConstants bad(2);
    bad.at(0, 0, 1) = 1;  // e1 e1 = e2
    bad.at(0, 1, 0) = 1;  // e1 e2 = e1
    b.add_fixed("c10.nonassociative-fixture", 10, "non-associative table is rejected", Expectation::fail,
                one(verify_associativity(bad, "fixture:nonassociative")));
  }

  return SuiteReport{preset, opts.seed, std::move(b.entries)};
}

}  // namespace rbo

#endif
