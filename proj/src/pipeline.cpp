#include "mslh/pipeline.hpp"

#include "mslh/clause_ops.hpp"

namespace mslh {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfiable:
      return "Satisfiable";
    case Verdict::Unsatisfiable:
      return "Unsatisfiable";
    case Verdict::Unknown:
      return "Unknown (approximation refuted)";
    case Verdict::ResourceOut:
      return "Unknown (resource limit reached)";
  }
  return "?";
}

int exit_code_of(Verdict v) {
  switch (v) {
    case Verdict::Satisfiable:
      return exit_code::satisfiable;
    case Verdict::Unsatisfiable:
      return exit_code::unsatisfiable;
    case Verdict::Unknown:
      return exit_code::unknown;
    case Verdict::ResourceOut:
      return exit_code::resource_limit;
  }
  return exit_code::internal_error;
}

PipelineResult run_pipeline(const ProblemFile& problem, const PipelineOptions& options) {
  PipelineResult r;
  r.input = problem.clauses;
  ClauseSet current = problem.clauses;
  if (options.split && !problem.split_predicates.empty()) {
    auto [split, ledger] = rrs(current, problem.split_predicates);
    current = redundancy_cleanup(split);
    r.ledger = std::move(ledger);
  }
  r.split = current;
  if (options.approximate) {
    auto approx = approximate(current, r.ledger);
    current = std::move(approx.clauses);
    r.ledger = std::move(approx.ledger);
  }
  r.saturated_input = current;

  Signature sig = Signature::of(current);
  r.saturation = saturate(current, Precedence(sig), options.limits);
  switch (r.saturation.status) {
    case SaturationStatus::ResourceOut:
      r.verdict = Verdict::ResourceOut;
      return r;
    case SaturationStatus::Refutation:
      r.verdict = r.ledger.lossy ? Verdict::Unknown : Verdict::Unsatisfiable;
      return r;
    case SaturationStatus::Saturated:
      r.verdict = Verdict::Satisfiable;
      break;
  }
  if (is_mslh(current)) {
    FiniteStructure m = build_finite_model(r.saturation.clauses, sig);
    ClauseSet both = current;
    both.insert(both.end(), r.saturation.clauses.begin(), r.saturation.clauses.end());
    if (!verify_model(m, both)) throw InternalError("constructed model does not satisfy the saturated set");
    r.model = std::move(m);
  }
  return r;
}

bool PipelineResult::member(const Atom& query) const {
  if (verdict != Verdict::Satisfiable) throw Error("membership queries need a satisfiable verdict");
  if (!query.is_ground()) throw Error("query " + query.to_string() + " is not ground");
  return back_translate_query(ledger, query, [&](const Atom& a) {
    if (a.args.size() != 1) throw Error("query " + a.to_string() + " is not over a monadic predicate; approximate first");
    return ground_membership(saturation.clauses, a);
  });
}

}  // namespace mslh
