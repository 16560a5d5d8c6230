// mslh: satisfiability, finite models and tree automata for monadic shallow
// linear Horn clause sets.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mslh/clause_ops.hpp"
#include "mslh/modelbuild.hpp"
#include "mslh/pipeline.hpp"
#include "mslh/problem.hpp"
#include "mslh/transform.hpp"
#include "mslh/treeauto.hpp"

using json = nlohmann::ordered_json;

namespace mslh {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json to_json(const FiniteStructure& a) {
  json out;
  json domain = json::array();
  for (std::size_t i = 0; i < a.domain.size(); ++i)
    domain.push_back({{"element", i}, {"color", a.domain[i]}, {"witness", a.witnesses[i].to_string()}});
  out["domain"] = domain;
  json rel = json::object();
  for (const auto& [p, ext] : a.relations) rel[p] = ext;
  out["relations"] = rel;
  json fun = json::object();
  for (const auto& [f, t] : a.functions) fun[f] = {{"arity", t.arity}, {"table", t.values}};
  out["functions"] = fun;
  if (a.added_constant) out["added_constant"] = *a.added_constant;
  return out;
}

json to_json(const ClauseSet& n) {
  json out = json::array();
  for (const auto& c : n) out.push_back(print_clause(c));
  return out;
}

json to_json(const TransformLedger& l) {
  json out;
  json split = json::object();
  for (const auto& [r, parts] : l.split_map) split[r] = {parts.first, parts.second};
  out["split"] = split;
  out["lossy"] = l.lossy;
  json steps = json::array();
  for (const auto& s : l.applied_steps) steps.push_back({{"rule", s.rule}, {"detail", s.detail}});
  out["steps"] = steps;
  if (!l.split_map.empty()) out["rrs"] = {{"steps", l.rrs_steps}, {"bound", l.rrs_step_bound}};
  return out;
}

json to_json(const SaturationStats& s) {
  return {{"iterations", s.iterations},         {"generated", s.generated},
          {"tautologies", s.tautologies},       {"forward_subsumed", s.forward_subsumed},
          {"backward_subsumed", s.backward_subsumed}, {"condensed", s.condensed},
          {"active", s.active}};
}

Signature parse_ops(const std::string& text) {
  Signature sig;
  std::stringstream in(text);
  for (std::string w; in >> w;) {
    auto slash = w.find('/');
    if (slash == std::string::npos) throw UsageError("expected name/arity in --ops, got '" + w + "'");
    try {
      sig.add_function(w.substr(0, slash), std::stoul(w.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("bad arity in --ops entry '" + w + "'");
    }
  }
  return sig;
}

struct Options {
  std::string file;
  bool no_split = false;
  bool no_approx = false;
  std::string limits;
  bool json = false;
  bool model = false;
  bool trace = false;
  std::string query;

  PipelineOptions pipeline() const {
    PipelineOptions o;
    o.split = !no_split;
    o.approximate = !no_approx;
    o.limits = limits.empty() ? SaturationLimits::from_env() : SaturationLimits::parse(limits);
    return o;
  }
};

void add_pipeline_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.file, "problem file")->required();
  cmd->add_flag("--no-split", o.no_split, "ignore #split directives");
  cmd->add_flag("--no-approx", o.no_approx, "saturate the input without approximating it");
  cmd->add_option("--limits", o.limits, "max_clauses=N,max_iterations=M (overrides MSLH_LIMITS)");
  cmd->add_flag("--json", o.json, "machine-readable output");
}

int run_sat(const Options& o, std::ostream& out) {
  auto r = run_pipeline(parse_problem_file(o.file), o.pipeline());
  if (o.json) {
    json j;
    j["verdict"] = to_string(r.verdict);
    j["exit_code"] = exit_code_of(r.verdict);
    j["transform"] = to_json(r.ledger);
    j["status"] = to_string(r.saturation.status);
    j["stats"] = to_json(r.saturation.stats);
    if (o.trace) {
      json proof = json::array();
      for (const auto& rec : r.saturation.proof) proof.push_back(rec.to_string());
      j["proof"] = proof;
    }
    if (o.model && r.model) j["model"] = to_json(*r.model);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(r.verdict) << "\n";
    if (o.trace && !r.saturation.proof.empty()) out << r.saturation.trace();
    if (o.model && r.model) out << r.model->to_string();
  }
  return exit_code_of(r.verdict);
}

int run_model(const Options& o, std::ostream& out) {
  auto r = run_pipeline(parse_problem_file(o.file), o.pipeline());
  if (!r.model) {
    std::cerr << "no model: " << to_string(r.verdict) << "\n";
    return r.verdict == Verdict::Satisfiable ? exit_code::input_error : exit_code_of(r.verdict);
  }
  if (o.json) out << to_json(*r.model).dump(2) << "\n";
  else out << r.model->to_string();
  return exit_code::satisfiable;
}

int run_member(const Options& o, std::ostream& out) {
  Atom q = parse_atom(o.query);
  auto r = run_pipeline(parse_problem_file(o.file), o.pipeline());
  if (r.verdict != Verdict::Satisfiable) {
    std::cerr << "cannot answer membership queries: " << to_string(r.verdict) << "\n";
    return exit_code::input_error;
  }
  bool in = r.member(q);
  if (o.json) out << json{{"query", q.to_string()}, {"member", in}}.dump(2) << "\n";
  else out << (in ? "true" : "false") << "\n";
  return in ? 0 : 1;
}

int run_rrs(const Options& o, const std::vector<std::string>& preds, bool cleanup, std::ostream& out) {
  ProblemFile p = parse_problem_file(o.file);
  auto [n, ledger] = rrs(p.clauses, preds.empty() ? p.split_predicates : preds);
  if (cleanup) n = redundancy_cleanup(n);
  if (o.json) out << json{{"clauses", to_json(n)}, {"transform", to_json(ledger)}}.dump(2) << "\n";
  else out << print_clauses(n);
  return 0;
}

int run_approx(const Options& o, std::ostream& out) {
  auto opts = o.pipeline();
  ProblemFile p = parse_problem_file(o.file);
  ClauseSet n = p.clauses;
  TransformLedger ledger;
  if (opts.split && !p.split_predicates.empty()) {
    auto [split, l] = rrs(n, p.split_predicates);
    n = redundancy_cleanup(split);
    ledger = std::move(l);
  }
  auto approx = approximate(n, ledger);
  if (o.json) {
    out << json{{"clauses", to_json(approx.clauses)}, {"transform", to_json(approx.ledger)}}.dump(2) << "\n";
  } else {
    if (approx.ledger.lossy) out << "% lossy approximation\n";
    out << print_clauses(approx.clauses);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct TaOptions {
  std::string file;
  std::string other;
  std::string atom;
  std::string term;
  std::string ops;
  std::vector<std::string> blocking;
  std::vector<std::string> constraints;
  std::string var;
  std::string constraint;
  std::string pred;
};

TreeAutomaton load(const std::string& path) { return TreeAutomaton::from_text(read_file(path)); }

Signature ta_signature(const TaOptions& t) { return parse_ops(t.ops); }

int run_ta(const std::string& which, const TaOptions& t, std::ostream& out) {
  if (which == "atom") {
    out << from_linear_atom(parse_atom(t.atom), ta_signature(t)).to_text();
  } else if (which == "complement") {
    out << complement(load(t.file)).to_text();
  } else if (which == "intersect") {
    out << intersect(load(t.file), load(t.other)).to_text();
  } else if (which == "union") {
    out << union_of(load(t.file), load(t.other)).to_text();
  } else if (which == "accepts") {
    bool yes = load(t.file).accepts(parse_term(t.term));
    out << (yes ? "true" : "false") << "\n";
    return yes ? 0 : 1;
  } else if (which == "empty") {
    bool empty = load(t.file).is_empty();
    out << (empty ? "empty" : "nonempty") << "\n";
    return empty ? 0 : 1;
  } else if (which == "mslh") {
    out << print_clauses(ta_to_mslh(load(t.file)));
  } else if (which == "ig") {
    Ig g{parse_atom(t.atom), {}};
    for (const auto& b : t.blocking) g.blocking.push_back(parse_atom(b));
    out << ig_to_ta(g, ta_signature(t)).to_text();
  } else if (which == "adc") {
    Adc d{parse_atom(t.atom), {}};
    for (const auto& c : t.constraints) {
      auto eq = c.find("!=");
      if (eq == std::string::npos) throw UsageError("expected X!=term, got '" + c + "'");
      d.constraints.emplace_back(c.substr(0, eq), parse_term(c.substr(eq + 2)));
    }
    Ig g = adc_to_ig(d);
    out << "% " << g.atom.to_string() << " / {";
    for (std::size_t i = 0; i < g.blocking.size(); ++i) out << (i ? ", " : "") << g.blocking[i].to_string();
    out << "}\n" << ig_to_ta(g, ta_signature(t)).to_text();
  } else if (which == "amc") {
    out << amc_to_ta({parse_atom(t.atom), t.var, load(t.constraint)}, ta_signature(t)).to_text();
  } else if (which == "herbrand") {
    ProblemFile p = parse_problem_file(t.file);
    if (!is_mslh(p.clauses)) throw UsageError("herbrand automata need an MSLH clause set");
    auto res = saturate(p.clauses, SaturationLimits::from_env());
    if (res.status != SaturationStatus::Saturated) {
      std::cerr << "not saturated: " << to_string(res.status) << "\n";
      return res.status == SaturationStatus::Refutation ? exit_code::unsatisfiable : exit_code::resource_limit;
    }
    out << herbrand_automaton(res.clauses, t.pred, p.signature).to_text();
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Satisfiability and finite models for monadic shallow linear Horn clause sets"};
  app.require_subcommand(1);
  Options o;

  auto* sat = app.add_subcommand("sat", "decide satisfiability (split, approximate, saturate)");
  add_pipeline_flags(sat, o);
  sat->add_flag("--model", o.model, "print the finite model when satisfiable");
  sat->add_flag("--trace", o.trace, "print the refutation");

  auto* model = app.add_subcommand("model", "print the finite model");
  add_pipeline_flags(model, o);

  auto* member = app.add_subcommand("member", "ground membership in the minimal model");
  add_pipeline_flags(member, o);
  member->add_option("atom", o.query, "ground atom over the original signature")->required();

  std::vector<std::string> rrs_preds;
  bool cleanup = false;
  auto* rrs_cmd = app.add_subcommand("rrs", "reflexive relation splitting");
  rrs_cmd->add_option("file", o.file, "problem file")->required();
  rrs_cmd->add_option("--pred", rrs_preds, "predicates to split (default: #split directives)");
  rrs_cmd->add_flag("--cleanup", cleanup, "remove redundant clauses afterwards");
  rrs_cmd->add_flag("--json", o.json, "machine-readable output");

  auto* approx = app.add_subcommand("approx", "monadic shallow linear approximation");
  approx->add_option("file", o.file, "problem file")->required();
  approx->add_flag("--no-split", o.no_split, "ignore #split directives");
  approx->add_flag("--json", o.json, "machine-readable output");

  TaOptions t;
  auto* ta = app.add_subcommand("ta", "tree automata");
  ta->require_subcommand(1);
  std::string which;
  auto ta_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = ta->add_subcommand(name, help);
    c->callback([&which, name] { which = name; });
    return c;
  };
  auto* ta_atom = ta_cmd("atom", "automaton for the ground instances of a linear atom");
  ta_atom->add_option("atom", t.atom)->required();
  ta_atom->add_option("--ops", t.ops, "function symbols, e.g. \"g/2 a/0 b/0\"");
  ta_cmd("complement", "complement of an automaton")->add_option("file", t.file)->required();
  for (const char* name : {"intersect", "union"}) {
    auto* c = ta_cmd(name, std::string(name) == "union" ? "disjoint union" : "product automaton");
    c->add_option("first", t.file)->required();
    c->add_option("second", t.other)->required();
  }
  auto* acc = ta_cmd("accepts", "run an automaton on a ground term");
  acc->add_option("file", t.file)->required();
  acc->add_option("term", t.term)->required();
  ta_cmd("empty", "emptiness check")->add_option("file", t.file)->required();
  ta_cmd("mslh", "equivalent MSLH clause set")->add_option("file", t.file)->required();
  auto* ig = ta_cmd("ig", "implicit generalization A/{B1,...}");
  ig->add_option("atom", t.atom)->required();
  ig->add_option("--block", t.blocking, "blocking atom");
  ig->add_option("--ops", t.ops, "function symbols");
  auto* adc = ta_cmd("adc", "atom with disequality constraints");
  adc->add_option("atom", t.atom)->required();
  adc->add_option("--neq", t.constraints, "constraint X!=term");
  adc->add_option("--ops", t.ops, "function symbols");
  auto* amc = ta_cmd("amc", "atom with a membership constraint");
  amc->add_option("atom", t.atom)->required();
  amc->add_option("--var", t.var)->required();
  amc->add_option("--in", t.constraint, "constraint automaton file")->required();
  amc->add_option("--ops", t.ops, "function symbols");
  auto* herb = ta_cmd("herbrand", "automaton of a predicate in the minimal model of an MSLH set");
  herb->add_option("file", t.file)->required();
  herb->add_option("pred", t.pred)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::input_error;
  }

  try {
    if (*sat) return run_sat(o, std::cout);
    if (*model) return run_model(o, std::cout);
    if (*member) return run_member(o, std::cout);
    if (*rrs_cmd) return run_rrs(o, rrs_preds, cleanup, std::cout);
    if (*approx) return run_approx(o, std::cout);
    if (*ta) return run_ta(which, t, std::cout);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code::internal_error;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::input_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code::internal_error;
  }
  return exit_code::input_error;
}

}  // namespace
}  // namespace mslh

int main(int argc, char** argv) { return mslh::run(argc, argv); }
