#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mslh/ordering.hpp"
#include "mslh/signature.hpp"
#include "mslh/substitution.hpp"
#include "mslh/term.hpp"

namespace mslh {

/**
 * Selection strategy for MSLH saturation. In clause order, picks the first
 * antecedent atom with a non-variable argument; otherwise the first one with
 * a variable that does not occur in the succedent; otherwise, when the
 * succedent argument is a variable, the first antecedent atom.
 */
std::optional<std::size_t> selected_index(const Clause& c);
std::optional<Atom> select(const Clause& c);

/**
 * Ordered resolution between the succedent atom of c1 and antecedent atom
 * `index` of c2. The clauses must be variable-disjoint. Incomparable atoms
 * never block an inference.
 */
std::optional<Clause> ordered_resolve(const Clause& c1, const Clause& c2, std::size_t index,
                                      const Precedence& prec, Substitution* mgu = nullptr);

/// Ordered factoring of two succedent atoms; only non-Horn clauses have any.
std::optional<Clause> ordered_factor(const Clause& c, const Precedence& prec);

/**
 * Drops antecedent atoms P(x) of a variable x that occurs nowhere else when
 * another variable y carries every predicate x carries. The result subsumes
 * and is implied by the input.
 */
Clause condense(const Clause& c);

/// P1(x1),...,Pn(xn) -> S(f(y1,...,ym)) with distinct y's covering the x's.
bool has_productive_shape(const Clause& c);

struct SaturationLimits {
  std::size_t max_clauses = 100000;
  std::size_t max_iterations = 100000;
  /// Reads `max_clauses=N,max_iterations=M` (either part optional) from
  /// MSLH_LIMITS; unset means defaults.
  static SaturationLimits from_env();
  static SaturationLimits parse(const std::string& spec);
};

struct InferenceRecord {
  std::size_t id = 0;
  Clause clause;
  /// input, resolution, factoring or condense
  std::string rule;
  std::vector<std::size_t> parents;
  /// Antecedent index resolved upon in the second parent.
  std::optional<std::size_t> literal;
  Substitution mgu;

  std::string to_string() const;
};

struct SaturationStats {
  std::size_t iterations = 0;
  std::size_t generated = 0;
  std::size_t tautologies = 0;
  std::size_t forward_subsumed = 0;
  std::size_t backward_subsumed = 0;
  std::size_t condensed = 0;
  std::size_t active = 0;
};

enum class SaturationStatus { Refutation, Saturated, ResourceOut };

std::string to_string(SaturationStatus s);

struct SaturationResult {
  SaturationStatus status = SaturationStatus::Saturated;
  /// The final active set when saturated.
  ClauseSet clauses;
  /// For a refutation: the inferences leading to the empty clause,
  /// parents before children.
  std::vector<InferenceRecord> proof;
  SaturationStats stats;

  /// One line per proof record: `id. clause [rule, parents, mgu]`.
  std::string trace() const;
};

/// Given-clause saturation with tautology deletion, forward and backward
/// subsumption and condensation. Clause picks alternate by weight and age
/// in the ratio 4:1.
SaturationResult saturate(const ClauseSet& n, const Precedence& prec, const SaturationLimits& limits = {});
/// Uses the precedence of the clause set's own signature.
SaturationResult saturate(const ClauseSet& n, const SaturationLimits& limits = {});

/// Re-derives a resolution or factoring record from its premises.
bool replay(const InferenceRecord& record, const std::vector<InferenceRecord>& proof, const Precedence& prec);

}  // namespace mslh
