#ifndef RBO_TOOLS_CLI_HPP
#define RBO_TOOLS_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbo/rbo.hpp"

namespace rbo::cli {

/// Everything a single invocation needs. Filled from the command line.
struct RunConfig {
  std::string command;
  std::string algebra = "laurent";
  std::string op;
  std::string operator_file;
  std::string weight;
  std::vector<std::int64_t> range;
  std::string mode = "exhaustive";
  std::size_t samples = 1000;
  std::int64_t coeff_bound = 5;
  std::size_t support_bound = 3;
  std::optional<std::uint64_t> seed;
  std::string output;
  bool json = false;
  std::string construct = "tri";
  std::string axioms = "tri";
  std::string tensor;
  std::string identity = "rbr";
  std::int64_t radius = 4;
  std::string preset = "paper-all";
};

// ---------------------------------------------------------------------------
// Operator expressions.
//
//   ms | ms-opp | integration | id | shift:r | miller | miller:s,t
//   proj:i,j,...  (1-based coordinates of a finite algebra, weight 1)
//   file:path     (operator-matrix file)    induced:path  (tensor file)
//   scale(q,E) neg(E) sum(E,E,...) compose(E,E) normalize(E)
//   modified(E) opposite(E)   (use the run weight as lambda)
//   nijenhuis(q,E)

struct OperatorContext {
  const AlgebraDescriptor* alg = nullptr;
  std::string algebra_selector;
  std::optional<Rational> weight;
  std::filesystem::path base;
};

namespace detail {

inline std::string trim(const std::string& s) { return std::string(rbo::detail::trim(s)); }

inline std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

inline std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || !rbo::detail::all_digits(s)) throw Error(ErrorKind::format, "bad " + what + " '" + s + "'");
  return std::stoul(s);
}

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::string body = s;
  bool neg = !body.empty() && body.front() == '-';
  if (neg) body.erase(0, 1);
  std::int64_t v = static_cast<std::int64_t>(parse_count(body, what));
  return neg ? -v : v;
}

inline const Rational& need_weight(const OperatorContext& ctx, const std::string& who) {
  if (!ctx.weight) throw Error(ErrorKind::format, who + " needs an explicit --weight");
  return *ctx.weight;
}

inline const AlgebraDescriptor& need_algebra(const OperatorContext& ctx) {
  if (!ctx.alg) throw Error(ErrorKind::format, "operator needs an algebra");
  return *ctx.alg;
}

}  // namespace detail

inline WeightedOperator parse_operator(const std::string& text, const OperatorContext& ctx) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw Error(ErrorKind::format, "empty operator expression");
  const auto open = s.find('(');
  const auto colon = s.find(':');
  if (open != std::string::npos && (colon == std::string::npos || open < colon)) {
    if (s.back() != ')') throw Error(ErrorKind::format, "unbalanced parentheses in operator '" + s + "'");
    const std::string fn = detail::trim(s.substr(0, open));
    const auto args = detail::split_top_level(s.substr(open + 1, s.size() - open - 2));
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        throw Error(ErrorKind::format, fn + "(...) takes " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()));
    };
    auto sub = [&](std::size_t i) { return parse_operator(args[i], ctx); };
    if (fn == "scale") {
      arity(2);
      return scaled(sub(1), Rational::parse(args[0]));
    }
    if (fn == "neg") {
      arity(1);
      return scaled(sub(0), -1);
    }
    if (fn == "sum") {
      if (args.size() < 2) throw Error(ErrorKind::format, "sum(...) takes at least two operators");
      WeightedOperator acc = sub(0);
      for (std::size_t i = 1; i < args.size(); ++i) {
        WeightedOperator next = sub(i);
        acc = {acc.expr + next.expr, 0, acc.acts_on, "sum"};
      }
      return acc;
    }
    if (fn == "compose") {
      arity(2);
      WeightedOperator outer = sub(0);
      WeightedOperator inner = sub(1);
      return {OperatorExpr::compose(outer.expr, inner.expr), 0, outer.acts_on, "composition"};
    }
    if (fn == "normalize") {
      arity(1);
      return normalize_weight(sub(0));
    }
    if (fn == "modified") {
      arity(1);
      return modified_of(with_weight(sub(0), detail::need_weight(ctx, "modified(...)")));
    }
    if (fn == "opposite") {
      arity(1);
      return opposite_of(with_weight(sub(0), detail::need_weight(ctx, "opposite(...)")));
    }
    if (fn == "nijenhuis") {
      arity(2);
      return nijenhuis_family(sub(1), Rational::parse(args[0]));
    }
    throw Error(ErrorKind::format, "unknown operator function '" + fn + "'");
  }

  const std::string head = s.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (s == "ms" || s == "ms-opp") {
    const std::string window = "laurent-window:";
    if (ctx.alg && ctx.alg->name().rfind(window, 0) == 0) return window_rms(ctx.alg->dim() / 2, s == "ms-opp");
    return s == "ms" ? make_rms() : make_rms_opposite();
  }
  if (s == "integration") return make_integration();
  if (s == "id") return {OperatorExpr::identity(), 1, "any", "identity"};
  if (head == "shift") return make_shift_truncation(detail::parse_int(arg, "shift exponent"));
  if (head == "miller") {
    std::string st = arg;
    if (colon == std::string::npos) {
      if (ctx.algebra_selector.rfind("miller:", 0) != 0)
        throw Error(ErrorKind::format, "operator 'miller' needs s,t (use miller:s,t or --algebra miller:s,t)");
      st = ctx.algebra_selector.substr(7);
    }
    const auto parts = detail::split_top_level(st);
    if (parts.size() != 2) throw Error(ErrorKind::format, "miller operator needs s,t");
    return make_miller(detail::parse_count(parts[0], "miller s"), detail::parse_count(parts[1], "miller t"));
  }
  if (head == "proj") {
    const AlgebraDescriptor& alg = detail::need_algebra(ctx);
    if (!alg.is_finite()) throw Error(ErrorKind::unsupported, "proj needs a finite-dimensional algebra");
    std::vector<std::size_t> keep;
    for (const auto& p : detail::split_top_level(arg)) {
      std::size_t i = detail::parse_count(p, "proj coordinate");
      if (i == 0 || i > alg.dim()) throw Error(ErrorKind::invalid_dimension, "proj coordinate " + p + " outside 1.." + std::to_string(alg.dim()));
      keep.push_back(i - 1);
    }
    return coordinate_projector(alg.dim(), keep, "proj[" + arg + "]", 1);
  }
  if (head == "file") {
    std::filesystem::path p(arg);
    if (p.is_relative() && !ctx.base.empty()) p = ctx.base / p;
    return load_operator_matrix(p, detail::need_algebra(ctx), ctx.weight.value_or(Rational(0)));
  }
  if (head == "induced") {
    std::filesystem::path p(arg);
    if (p.is_relative() && !ctx.base.empty()) p = ctx.base / p;
    return induced_operator(load_tensor(p));
  }
  throw Error(ErrorKind::format, "unknown operator '" + s + "'");
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::optional<std::uint64_t> seed_from_env() {
  const char* v = std::getenv("RBO_SEED");
  if (!v || !*v) return std::nullopt;
  std::string s(v);
  if (!rbo::detail::all_digits(s)) throw Error(ErrorKind::format, "RBO_SEED must be a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}

inline DomainSpec make_domain(const RunConfig& cfg, const AlgebraDescriptor& alg, std::uint64_t seed) {
  DomainSpec d;
  if (cfg.range.empty()) {
    d.lo = alg.kind() == AlgebraKind::polynomial ? 0 : -4;
    d.hi = alg.kind() == AlgebraKind::polynomial ? 6 : 4;
  } else {
    d.lo = cfg.range[0];
    d.hi = cfg.range[1];
  }
  if (cfg.mode == "random") {
    d.mode = DomainMode::random;
  } else if (cfg.mode != "exhaustive") {
    throw Error(ErrorKind::format, "--mode must be exhaustive or random, got '" + cfg.mode + "'");
  }
  d.samples = cfg.samples;
  d.coeff_bound = cfg.coeff_bound;
  d.support_bound = cfg.support_bound;
  d.seed = seed;
  validate_domain(alg, d);
  return d;
}

inline void print_report(std::ostream& out, const CheckReport& r) {
  out << r.check << " [" << r.algebra << "] " << r.op << " weight " << r.weight.str() << ": " << (r.pass ? "PASS" : "FAIL") << " ("
      << r.tuples << " tuples)\n";
  if (r.witness) {
    out << "  witness inputs: ";
    for (std::size_t i = 0; i < r.witness->inputs_text.size(); ++i) out << (i ? ", " : "") << r.witness->inputs_text[i];
    out << "\n  lhs:  " << r.witness->lhs_text << "\n  rhs:  " << r.witness->rhs_text << "\n  diff: " << r.witness->diff_text << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

}  // namespace detail

/// Runs one command. Returns 0 when every check passes, 1 when at least one
/// fails, 2 on configuration or input errors.
inline int execute(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = cfg.seed ? *cfg.seed : detail::seed_from_env().value_or(1);
  std::optional<Rational> weight;
  if (!cfg.weight.empty()) weight = Rational::parse(cfg.weight);
  auto need_weight = [&]() -> const Rational& {
    if (!weight) throw Error(ErrorKind::format, "--weight is required for " + cfg.command);
    return *weight;
  };

  auto emit = [&](const Json& doc, const std::vector<CheckReport>& reports) {
    const std::string text = doc.dump(2) + "\n";
    if (!cfg.output.empty()) write_text_file(cfg.output, text);
    if (cfg.json)
      out << text;
    else
      for (const auto& r : reports) detail::print_report(out, r);
    return all_pass(reports) ? 0 : 1;
  };

  if (cfg.command == "suite") {
    SuiteOptions opts;
    opts.seed = seed;
    opts.random_samples = cfg.samples;
    SuiteReport rep = run_suite(cfg.preset, opts);
    const std::string text = to_json(rep).dump(2) + "\n";
    if (!cfg.output.empty()) write_text_file(cfg.output, text);
    if (cfg.json) {
      out << text;
    } else {
      for (const auto& e : rep.entries) {
        auto agree = e.modes_agree();
        out << (e.ok() ? "ok   " : "BAD  ") << e.id << " expect=" << to_string(e.expect) << " verdict=" << (e.verdict() ? "pass" : "fail")
            << " modes=" << (agree ? (*agree ? "agree" : "DISAGREE") : "n/a") << "\n";
      }
      out << "suite " << rep.name << ": " << (rep.all_ok() && rep.all_modes_agree() ? "OK" : "FAILED") << "\n";
    }
    return rep.all_ok() && rep.all_modes_agree() ? 0 : 1;
  }

  const AlgebraDescriptor alg = parse_algebra(cfg.algebra, std::filesystem::current_path());

  if (cfg.command == "acybe") {
    if (cfg.tensor.empty()) throw Error(ErrorKind::format, "acybe needs --tensor");
    Tensor2 r = load_tensor(cfg.tensor);
    Tensor3 res = acybe_residual(r);
    CheckReport rep;
    rep.check = "acybe";
    rep.algebra = r.algebra().name();
    rep.op = r.str();
    rep.weight = 0;
    rep.domain = Json{{"mode", "exact"}};
    rep.tuples = 1;
    if (!res.is_zero()) {
      Witness w;
      w.inputs_text = {r.str()};
      w.lhs_text = res.str();
      w.rhs_text = "0";
      w.diff_text = res.str();
      rep.fail_with(std::move(w));
    }
    Json doc = to_json(rep);
    doc["residual"] = to_json(res);
    return emit(doc, {rep});
  }

  OperatorContext ctx{&alg, cfg.algebra, weight, std::filesystem::current_path()};
  auto load_op = [&]() {
    if (!cfg.operator_file.empty()) {
      if (!cfg.op.empty()) throw Error(ErrorKind::format, "give either --operator or --operator-file, not both");
      return load_operator_matrix(cfg.operator_file, alg, weight.value_or(Rational(0)));
    }
    if (cfg.command == "induce") {
      if (cfg.tensor.empty()) throw Error(ErrorKind::format, "induce needs --tensor");
      return induced_operator(load_tensor(cfg.tensor));
    }
    if (cfg.op.empty()) throw Error(ErrorKind::format, "--operator is required for " + cfg.command);
    return parse_operator(cfg.op, ctx);
  };

  if (cfg.command == "check-image-closure") {
    WeightedOperator op = with_weight(load_op(), need_weight());
    CheckReport rep = check_image_closure(alg, op);
    return emit(to_json(rep), {rep});
  }

  if (cfg.command == "induce") {
    WeightedOperator op = load_op();
    const AlgebraDescriptor target = load_tensor(cfg.tensor).algebra();
    DomainSpec dom = detail::make_domain(cfg, target, seed);
    CheckReport rep = check_rbr(target, op, need_weight(), dom);
    return emit(to_json(rep), {rep});
  }

  const DomainSpec dom = detail::make_domain(cfg, alg, seed);

  if (cfg.command == "check-idempotent") {
    CheckReport rep = check_idempotent(alg, load_op(), dom);
    return emit(to_json(rep), {rep});
  }

  if (cfg.command == "check-rbr" || cfg.command == "check-modified" || cfg.command == "check-nijenhuis" || cfg.command == "check-lie-modified") {
    WeightedOperator op = load_op();
    const Rational& lambda = need_weight();
    CheckReport rep = cfg.command == "check-rbr"        ? check_rbr(alg, op, lambda, dom)
                      : cfg.command == "check-modified" ? check_modified_rbr(alg, op, lambda, dom)
                      : cfg.command == "check-nijenhuis" ? check_nijenhuis(alg, op, lambda, dom)
                                                         : check_lie_modified(alg, op, lambda, dom);
    return emit(to_json(rep), {rep});
  }

  if (cfg.command == "violate") {
    IdentityId id;
    if (cfg.identity == "rbr") id = IdentityId::rbr;
    else if (cfg.identity == "modified") id = IdentityId::modified;
    else if (cfg.identity == "nijenhuis") id = IdentityId::nijenhuis;
    else if (cfg.identity == "lie-modified") id = IdentityId::lie_modified;
    else if (cfg.identity == "idempotent") id = IdentityId::idempotent;
    else throw Error(ErrorKind::format, "--identity must be rbr, modified, nijenhuis, lie-modified or idempotent");
    WeightedOperator op = load_op();
    const Rational lambda = id == IdentityId::idempotent ? weight.value_or(Rational(0)) : need_weight();
    SearchBudget budget{cfg.radius, cfg.samples, seed, cfg.coeff_bound, cfg.support_bound};
    CheckReport rep;
    rep.check = std::string("violation.") + check_name(id);
    rep.algebra = alg.name();
    rep.op = op.describe();
    rep.weight = lambda;
    rep.domain = Json{{"mode", "search"}, {"radius", budget.max_radius}, {"random_samples", budget.random_samples}, {"seed", budget.seed}};
    if (auto w = find_violation(alg, id, op, lambda, budget)) rep.fail_with(std::move(*w));
    return emit(to_json(rep), {rep});
  }

  if (cfg.command == "dendriform") {
    WeightedOperator op = load_op();
    auto build = [&]() -> DendriformStructure {
      if (cfg.construct == "weight0") return build_weight0_pair(alg, op);
      if (cfg.construct == "modified") {
        const Rational& lambda = need_weight();
        return build_modified_pair(alg, modified_of(with_weight(op, lambda)), lambda);
      }
      if (cfg.construct == "tri") return build_tri_from_rbo(alg, op, need_weight());
      if (cfg.construct == "nijenhuis") return build_from_nijenhuis(alg, op);
      throw Error(ErrorKind::format, "--construct must be weight0, modified, tri or nijenhuis");
    };
    const DendriformStructure ds = build();
    std::vector<CheckReport> reps;
    if (cfg.axioms == "ddi") reps = check_dialgebra(ds, dom);
    else if (cfg.axioms == "tri") reps = check_trialgebra(ds, dom);
    else if (cfg.axioms == "star") reps = {check_star_associative(ds, dom)};
    else if (cfg.axioms == "rbr-compositions") reps = check_rbr_on_compositions(ds, op, dom);
    else throw Error(ErrorKind::format, "--axioms must be ddi, tri, star or rbr-compositions");
    Json doc;
    doc["command"] = "dendriform";
    doc["construction"] = cfg.construct;
    doc["status"] = all_pass(reps) ? "pass" : "fail";
    doc["reports"] = to_json(reps);
    return emit(doc, reps);
  }

  throw Error(ErrorKind::format, "unknown command '" + cfg.command + "'");
}

/// Parses `args` (without the program name) and runs the command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact checker for Rota-Baxter, Nijenhuis and dendriform identities", "rbo"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool with_operator, bool with_domain) {
    sub->add_option("--algebra", cfg.algebra, "laurent | polynomial | componentwise:n | matrix:n | laurent-window:k | miller:s,t | file:path");
    if (with_operator) {
      sub->add_option("--operator", cfg.op, "operator expression");
      sub->add_option("--operator-file", cfg.operator_file, "operator-matrix JSON file");
    }
    sub->add_option("--weight", cfg.weight, "weight lambda as p/q");
    if (with_domain) {
      sub->add_option("--range", cfg.range, "exponent range lo hi")->expected(2);
      sub->add_option("--mode", cfg.mode, "exhaustive | random");
      sub->add_option("--samples", cfg.samples, "random tuples");
      sub->add_option("--coeff-bound", cfg.coeff_bound, "random coefficient bound");
      sub->add_option("--support-bound", cfg.support_bound, "random support size");
    }
    sub->add_option("--seed", cfg.seed, "random seed (default: $RBO_SEED, else 1)");
    sub->add_option("--output", cfg.output, "write the JSON report here");
    sub->add_flag("--json", cfg.json, "print the JSON report instead of the summary");
  };

  for (const char* name : {"check-rbr", "check-modified", "check-nijenhuis", "check-lie-modified", "check-idempotent"})
    common(app.add_subcommand(name, std::string("run the ") + name + " identity check"), true, true);
  common(app.add_subcommand("check-image-closure", "check that im(R) and im(lambda - R) are subalgebras"), true, false);
  {
    auto* sub = app.add_subcommand("dendriform", "build a dendriform structure and check its axioms");
    common(sub, true, true);
    sub->add_option("--construct", cfg.construct, "weight0 | modified | tri | nijenhuis");
    sub->add_option("--axioms", cfg.axioms, "ddi | tri | star | rbr-compositions");
  }
  {
    auto* sub = app.add_subcommand("acybe", "associative classical Yang-Baxter residual of a tensor");
    common(sub, false, false);
    sub->add_option("--tensor", cfg.tensor, "tensor JSON file")->required();
  }
  {
    auto* sub = app.add_subcommand("induce", "check the operator x -> sum u_i x v_i induced by a tensor");
    common(sub, false, true);
    sub->add_option("--tensor", cfg.tensor, "tensor JSON file")->required();
  }
  {
    auto* sub = app.add_subcommand("violate", "search for a counterexample");
    common(sub, true, false);
    sub->add_option("--identity", cfg.identity, "rbr | modified | nijenhuis | lie-modified | idempotent");
    sub->add_option("--radius", cfg.radius, "largest exponent radius of the basis sweep");
    sub->add_option("--samples", cfg.samples, "random tuples after the sweep");
    sub->add_option("--coeff-bound", cfg.coeff_bound, "random coefficient bound");
    sub->add_option("--support-bound", cfg.support_bound, "random support size");
  }
  {
    auto* sub = app.add_subcommand("suite", "run a regression suite");
    sub->add_option("--preset", cfg.preset, "suite name");
    sub->add_option("--samples", cfg.samples, "random tuples per entry");
    sub->add_option("--seed", cfg.seed, "random seed (default: $RBO_SEED, else 1)");
    sub->add_option("--output", cfg.output, "write the JSON report here");
    sub->add_flag("--json", cfg.json, "print the JSON report instead of the summary");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "rbo: " << e.what() << "\n";
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return execute(cfg, out);
  } catch (const Error& e) {
    err << "rbo: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "rbo: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rbo::cli

#endif
