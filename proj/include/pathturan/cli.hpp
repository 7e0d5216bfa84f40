// Copyright 2026 The pathturan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success or pass, 1 property
// violated, 2 usage error, 3 capability limit hit where a verdict was
// required. Results go to `out`; diagnostics and progress go to `err`.

#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathturan/constructions.hpp"
#include "pathturan/crossover.hpp"
#include "pathturan/errors.hpp"
#include "pathturan/exhaustive.hpp"
#include "pathturan/falsify.hpp"
#include "pathturan/forest.hpp"
#include "pathturan/formulas.hpp"
#include "pathturan/io.hpp"
#include "pathturan/lemma_checks.hpp"
#include "pathturan/local_search.hpp"
#include "pathturan/p3_adjudication.hpp"
#include "pathturan/report.hpp"

namespace pathturan::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2, kCapability = 3 };

namespace detail {

struct Args {
  std::string format = "json";
  std::uint64_t seed = 42;
  int workers = 1;

  std::int64_t n = -1, k = -1, a = -1, s = -1, t = -1, m = -1, l = -1, r = -1;
  std::int64_t k1 = -1, k2 = -1, e = -1;
  std::string forest;
  std::string interpretation = "doubled";
  std::int64_t n_lo = -1, n_hi = -1;
  std::int64_t n_max = -1, k_max = -1;
  std::int64_t samples = 1000;
  std::int64_t iterations = -1;
  bool verify_upper = false;
};

inline std::int64_t need(std::int64_t v, const char* flag) {
  require(v >= 0, std::string("missing or negative --") + flag);
  return v;
}

inline PathForest need_forest(const Args& a) {
  require(!a.forest.empty(), "missing --forest");
  return PathForest::parse(a.forest);
}

class Printer {
 public:
  Printer(std::ostream& out, const std::string& format) : out_(out), format_(format) {}

  void json(const Json& j) { out_ << j.dump(2) << '\n'; }

  /// Formula-style result: JSON object, or the bare value as text.
  void value(const Json& j) {
    if (format_ == "text") {
      out_ << j.at("value").dump() << '\n';
    } else {
      json(j);
    }
  }

  int report(const CheckReport& rep) {
    if (format_ == "text") {
      out_ << rep.suite << ": " << verdict_name(rep.verdict) << " (" << rep.samples << " checked)\n";
      for (const auto& note : rep.notes) out_ << "  note: " << note << '\n';
      if (rep.counterexample) out_ << "  counterexample: " << rep.counterexample->dump() << '\n';
    } else {
      json(rep.to_json());
    }
    switch (rep.verdict) {
      case Verdict::kPass: return kOk;
      case Verdict::kViolated: return kViolated;
      case Verdict::kSkipped: return kCapability;
    }
    return kOk;
  }

  std::ostream& raw() { return out_; }
  const std::string& format() const { return format_; }

 private:
  std::ostream& out_;
  std::string format_;
};

inline Json roles_json(const ConstructionSpec& spec) {
  Json roles = Json::object();
  for (const auto& label : spec.labels) roles[label] = spec.members(label);
  return roles;
}

inline int emit_construction(Printer& p, const Construction& c) {
  if (p.format() == "graph6") {
    p.raw() << graph6_encode(c.graph) << '\n';
  } else if (p.format() == "dot") {
    p.raw() << to_dot(c.graph, &c.spec);
  } else {
    const Json j{{"construction", c.spec.describe()},
                 {"family", family_name(c.spec.family)},
                 {"params", c.spec.params},
                 {"order", c.graph.order()},
                 {"edges", c.graph.edge_count()},
                 {"graph6", graph6_encode(c.graph)},
                 {"roles", roles_json(c.spec)}};
    if (p.format() == "text") {
      p.raw() << c.spec.describe() << ": " << c.graph.order() << " vertices, " << c.graph.edge_count()
              << " edges\n";
    } else {
      p.json(j);
    }
  }
  return kOk;
}

inline int run_formula(const std::string& name, const Args& a, Printer& p) {
  Json j{{"formula", name}};
  if (name == "c-def") {
    j["params"] = Json{{"n", a.n}, {"m", a.m}, {"l", a.l}};
    j["value"] = c_def(need(a.n, "n"), need(a.m, "m"), need(a.l, "l"));
  } else if (name == "c-small") {
    j["params"] = Json{{"n", a.n}, {"m", a.m}};
    j["value"] = c_small(need(a.n, "n"), need(a.m, "m"));
  } else if (name == "h") {
    j["params"] = Json{{"n", a.n}, {"k", a.k}, {"a", a.a}};
    j["value"] = h_formula(need(a.n, "n"), need(a.k, "k"), need(a.a, "a"));
  } else if (name == "ex-path") {
    j["params"] = Json{{"n", a.n}, {"k", a.k}};
    j["value"] = ex_path(need(a.n, "n"), need(a.k, "k"));
  } else if (name == "ex-matching") {
    j["params"] = Json{{"n", a.n}, {"t", a.t}};
    j["value"] = ex_matching(need(a.n, "n"), need(a.t, "t"));
  } else if (name == "two-paths") {
    const PathForest f = need_forest(a);
    require(f.size() == 2, "two-paths needs a forest of exactly two paths");
    const ExtremalResult r = two_paths_value(need(a.n, "n"), f.orders()[0], f.orders()[1]);
    j["params"] = Json{{"n", a.n}, {"forest", f.to_string()}};
    j["value"] = r.value;
    j["branch"] = branch_name(r.branch);
    j["branch_values"] = r.branch_values;
    j["witness"] = r.witness.describe();
  } else if (name == "conjecture") {
    const PathForest f = need_forest(a);
    require(a.interpretation == "literal" || a.interpretation == "doubled",
            "--interpretation must be literal or doubled");
    const auto interp = a.interpretation == "literal" ? Interpretation::kLiteral : Interpretation::kDoubled;
    const ConjectureValue v = conjecture_value(need(a.n, "n"), f, interp);
    j["params"] = Json{{"n", a.n}, {"forest", f.to_string()}, {"interpretation", a.interpretation}};
    j["value"] = v.value;
    j["branches"] = v.branches;
    j["last_branch_defined"] = v.last_branch_defined;
    j["argmax"] = v.argmax;
  } else if (name == "f-conn" || name == "g") {
    j["params"] = Json{{"n", a.n}, {"k1", a.k1}, {"k2", a.k2}};
    const auto n = need(a.n, "n"), k1 = need(a.k1, "k1"), k2 = need(a.k2, "k2");
    j["value"] = name == "f-conn" ? f_conn(n, k1, k2) : g_value(n, k1, k2);
  } else if (name == "thresholds") {
    const auto n = need(a.n, "n"), k = need(a.k, "k");
    j["params"] = Json{{"n", n}, {"k", k}};
    Json v = Json::object();
    if (k >= 5 && n >= k) v["kopylov"] = kopylov_threshold(n, k);
    if (k >= 5 && n >= 2 * k + 1) v["stability"] = stability_threshold(n, k);
    require(!v.empty(), "thresholds need k >= 5 and n >= k");
    if (p.format() == "text") {
      for (auto it = v.begin(); it != v.end(); ++it) p.raw() << it.key() << ' ' << it.value().dump() << '\n';
      return kOk;
    }
    j["value"] = v;
  } else {
    throw UsageError("unknown formula: " + name);
  }
  p.value(j);
  return kOk;
}

inline int run_construct(const std::string& name, const Args& a, Printer& p) {
  Construction c;
  if (name == "hnka") {
    c = build_H(need(a.n, "n"), need(a.k, "k"), need(a.a, "a"));
  } else if (name == "znkt") {
    c = build_Z(need(a.n, "n"), need(a.k, "k"), need(a.t, "t"));
  } else if (name == "hks") {
    c = build_Hks(need(a.k, "k"), need(a.s, "s"));
  } else if (name == "hkm2") {
    c = build_HkM2(need(a.k, "k"));
  } else if (name == "hkp3") {
    c = build_HkP3(need(a.k, "k"));
  } else if (name == "fkt") {
    c = build_Fkt(need(a.k, "k"), need(a.t, "t"));
  } else if (name == "path-extremal") {
    c = build_path_extremal(need(a.n, "n"), need(a.k, "k"));
  } else if (name == "pair-witness") {
    c = build_pair_witness(need(a.n, "n"), need(a.s, "s"), need(a.t, "t"));
  } else if (name == "turan") {
    c = build_turan(need(a.n, "n"), need(a.r, "r"));
  } else {
    throw UsageError("unknown construction: " + name);
  }
  return emit_construction(p, c);
}

inline int run_check(const std::string& name, const Args& a, Printer& p) {
  if (name == "lemma31" || name == "lemma32") {
    const bool first = name == "lemma31";
    if (a.k1 >= 0 || a.k2 >= 0) {
      return p.report(first ? check_lemma31(need(a.k1, "k1"), need(a.k2, "k2"))
                            : check_lemma32(need(a.k1, "k1"), need(a.k2, "k2")));
    }
    CheckReport all;
    all.suite = name;
    all.params = Json{{"k_max", kLemmaMaxK}};
    Json parts = Json::array();
    for (std::int64_t k1 = 2; k1 + 2 <= kLemmaMaxK; ++k1) {
      for (std::int64_t k2 = first ? 1 : 2; k2 <= k1 && k1 + k2 + 1 <= kLemmaMaxK; ++k2) {
        const CheckReport r = first ? check_lemma31(k1, k2) : check_lemma32(k1, k2);
        all.merge(r);
        parts.push_back(Json{{"k1", k1}, {"k2", k2}, {"verdict", verdict_name(r.verdict)}, {"checked", r.samples}});
      }
    }
    all.details["pairs"] = parts;
    return p.report(all);
  }
  if (name == "remark-hnka") {
    return p.report(check_remark_hnka(a.n_max >= 0 ? a.n_max : 14, a.k_max >= 0 ? a.k_max : 9));
  }
  if (name == "prop33" || name == "prop34" || name == "prop35" || name == "identities") {
    GridRanges g;
    if (a.k_max >= 0) g.k_max = a.k_max;
    if (a.n_max >= 0) g.n_max = a.n_max;
    if (name == "prop33") return p.report(prop_grid_33(g));
    if (name == "prop34") return p.report(prop_grid_34(g));
    if (name == "prop35") return p.report(prop_grid_35(g));
    return p.report(identity_grid(g));
  }
  if (name == "p3-branch") return p.report(adjudicate_p3(need(a.n, "n"), need(a.l, "l")));
  throw UsageError("unknown check: " + name);
}

inline int run_oracle(const std::string& name, const Args& a, Printer& p, std::ostream& err) {
  if (name == "brute-ex") {
    const PathForest f = need_forest(a);
    const auto n = need(a.n, "n");
    require_capability(n <= kBruteCap, "brute-ex: n exceeds the enumeration cap of 7");
    err << "brute-ex: enumerating graphs on " << n << " vertices\n";
    const BruteResult r = brute_ex(static_cast<int>(n), f);
    Json graphs = Json::array();
    for (const auto& g : r.extremal) graphs.push_back(graph6_encode(g));
    const Json j{{"oracle", name},
                 {"params", Json{{"n", n}, {"forest", f.to_string()}}},
                 {"value", r.ex},
                 {"extremal", graphs},
                 {"graphs_checked", r.graphs_checked}};
    p.value(j);
    return kOk;
  }
  if (name == "verify-upper") {
    const PathForest f = need_forest(a);
    err << "verify-upper: searching complements\n";
    VerifyOptions opt;
    opt.workers = a.workers;
    return p.report(verify_upper_at(static_cast<int>(need(a.n, "n")), f, need(a.e, "e"), opt));
  }
  if (name == "crossover") {
    const PathForest f = need_forest(a);
    require(f.size() == 2, "crossover needs a forest of exactly two paths");
    CrossoverOptions opt;
    opt.seed = a.seed;
    opt.workers = a.workers;
    opt.local_search_iterations = a.iterations >= 0 ? a.iterations : 0;
    opt.verify_upper = a.verify_upper;
    const std::int64_t lo = a.n_lo >= 0 ? a.n_lo : f.total_order();
    const std::int64_t hi = a.n_hi >= 0 ? a.n_hi : lo + 20;
    err << "crossover: n = " << lo << ".." << hi << '\n';
    return p.report(crossover(lo, hi, f.orders()[0], f.orders()[1], opt));
  }
  if (name == "local-search") {
    const PathForest f = need_forest(a);
    LocalSearchBudget budget;
    budget.seed = a.seed;
    if (a.iterations >= 0) budget.iterations = a.iterations;
    const auto n = need(a.n, "n");
    err << "local-search: " << budget.iterations << " iterations\n";
    const LocalSearchResult r = local_search_max(static_cast<int>(n), f, budget);
    const Json j{{"oracle", name},
                 {"params", Json{{"n", n}, {"forest", f.to_string()}, {"iterations", budget.iterations},
                                 {"seed", budget.seed}}},
                 {"value", r.best},
                 {"graph6", graph6_encode(r.witness)},
                 {"forest_free", !contains_forest(r.witness, f).found},
                 {"restarts", r.restarts}};
    p.value(j);
    return kOk;
  }
  throw UsageError("unknown oracle: " + name);
}

inline int run_falsify(const std::string& name, const Args& a, Printer& p, std::ostream& err) {
  FalsifyOptions opt;
  opt.samples = a.samples;
  opt.seed = a.seed;
  opt.workers = a.workers;
  if (a.n_max >= 0) opt.n_max = a.n_max;
  err << "falsify " << name << ": " << opt.samples << " samples, seed " << opt.seed << '\n';
  return p.report(falsify(name, opt));
}

}  // namespace detail

/// Parses argv and runs one command.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Args a;
  CLI::App app{"Turan numbers of path forests: formulas, constructions, exact checks and oracles", "pathturan"};
  app.require_subcommand(1);
  app.add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "graph6", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", a.seed, "Seed for randomised commands")->capture_default_str();
  app.add_option("--workers", a.workers, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string command, target;
  auto group = [&](const std::string& name, const std::string& help, const std::vector<std::string>& targets) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("target", target, "One of: " + CLI::detail::join(targets, ", "))
        ->required()
        ->check(CLI::IsMember(targets));
    sub->callback([&command, name] { command = name; });
    return sub;
  };

  CLI::App* formula = group("formula", "Evaluate a closed form",
                            {"c-def", "c-small", "h", "ex-path", "ex-matching", "two-paths", "conjecture",
                             "f-conn", "g", "thresholds"});
  CLI::App* construct = group("construct", "Build a named graph",
                              {"hnka", "znkt", "hks", "hkm2", "hkp3", "fkt", "path-extremal", "pair-witness",
                               "turan"});
  CLI::App* check = group("check", "Run an exact check",
                          {"lemma31", "lemma32", "remark-hnka", "prop33", "prop34", "prop35", "identities",
                           "p3-branch"});
  CLI::App* oracle = group("oracle", "Run a ground-truth engine",
                           {"brute-ex", "verify-upper", "crossover", "local-search"});
  CLI::App* falsify_cmd = group("falsify", "Run a randomised property suite", falsify_suites());

  for (CLI::App* sub : {formula, construct, check, oracle}) {
    sub->add_option("--n", a.n);
    sub->add_option("--k", a.k);
    sub->add_option("--forest", a.forest, "Path orders, e.g. 5,5");
  }
  formula->add_option("--a", a.a);
  formula->add_option("--m", a.m);
  formula->add_option("--l", a.l);
  formula->add_option("--t", a.t);
  formula->add_option("--k1", a.k1);
  formula->add_option("--k2", a.k2);
  formula->add_option("--interpretation", a.interpretation, "literal or doubled");
  construct->add_option("--a", a.a);
  construct->add_option("--s", a.s);
  construct->add_option("--t", a.t);
  construct->add_option("--r", a.r);
  check->add_option("--k1", a.k1);
  check->add_option("--k2", a.k2);
  check->add_option("--l", a.l);
  check->add_option("--n-max", a.n_max);
  check->add_option("--k-max", a.k_max);
  oracle->add_option("--e", a.e, "Edge count to certify as an upper bound");
  oracle->add_option("--n-lo", a.n_lo);
  oracle->add_option("--n-hi", a.n_hi);
  oracle->add_option("--iterations", a.iterations, "Local-search iterations");
  oracle->add_flag("--verify-upper", a.verify_upper, "Also run the exact upper check where feasible");
  falsify_cmd->add_option("--samples", a.samples)->capture_default_str();
  falsify_cmd->add_option("--n-max", a.n_max, "Largest sampled order (default 14)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  detail::Printer printer(out, a.format);
  try {
    if (command == "formula") return detail::run_formula(target, a, printer);
    if (command == "construct") return detail::run_construct(target, a, printer);
    if (command == "check") return detail::run_check(target, a, printer);
    if (command == "oracle") return detail::run_oracle(target, a, printer, err);
    if (command == "falsify") return detail::run_falsify(target, a, printer, err);
    err << "error: no command\n";
    return kUsage;
  } catch (const CapabilityError& e) {
    err << "capability: " << e.what() << '\n';
    return kCapability;
  } catch (const OverflowError& e) {
    err << "capability: " << e.what() << '\n';
    return kCapability;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace pathturan::cli
