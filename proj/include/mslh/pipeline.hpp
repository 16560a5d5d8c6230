#pragma once

#include <optional>
#include <string>

#include "mslh/modelbuild.hpp"
#include "mslh/problem.hpp"
#include "mslh/saturate.hpp"
#include "mslh/transform.hpp"

namespace mslh {

enum class Verdict { Satisfiable, Unsatisfiable, Unknown, ResourceOut };

/// "Satisfiable", "Unsatisfiable", "Unknown (approximation refuted)", ...
std::string to_string(Verdict v);

/// Process exit codes: 0 satisfiable, 1 unsatisfiable, 2 unknown, 10 input
/// errors, 11 resource limits, 12 internal errors.
namespace exit_code {
constexpr int satisfiable = 0;
constexpr int unsatisfiable = 1;
constexpr int unknown = 2;
constexpr int input_error = 10;
constexpr int resource_limit = 11;
constexpr int internal_error = 12;
}  // namespace exit_code

int exit_code_of(Verdict v);

/// Raised when a constructed model fails verification.
class InternalError : public Error {
 public:
  using Error::Error;
};

struct PipelineOptions {
  bool split = true;
  bool approximate = true;
  SaturationLimits limits;
};

struct PipelineResult {
  Verdict verdict = Verdict::Unknown;
  ClauseSet input;
  /// After splitting and cleanup.
  ClauseSet split;
  /// The set handed to saturation.
  ClauseSet saturated_input;
  TransformLedger ledger;
  SaturationResult saturation;
  /// Built whenever saturation succeeded on an MSLH set.
  std::optional<FiniteStructure> model;

  /// Minimal-model answer for a ground query over the original signature.
  /// Requires a satisfiable verdict.
  bool member(const Atom& query) const;
};

/**
 * split (for the `#split` predicates) -> cleanup -> approximate -> saturate.
 * A refutation counts as unsatisfiable only when no lossy approximation
 * step fired. Models are verified against the saturated input and N*.
 */
PipelineResult run_pipeline(const ProblemFile& problem, const PipelineOptions& options = {});

}  // namespace mslh
