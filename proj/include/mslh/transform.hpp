#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mslh/signature.hpp"
#include "mslh/term.hpp"

namespace mslh {

class TransformError : public Error {
 public:
  using Error::Error;
};

struct TransformStep {
  std::string rule;
  std::string detail;
};

/**
 * Records every symbol introduced by splitting and approximation so that
 * queries over the original signature can be mapped onto the transformed
 * clause set.
 */
struct TransformLedger {
  /// R -> (R_rfl, R_irr)
  std::map<std::string, std::pair<std::string, std::string>> split_map;
  /// Shared monadic predicate standing for all projected relations.
  std::string shared_predicate;
  /// Non-monadic predicate -> function symbol replacing it under the shared predicate.
  std::map<std::string, std::string> monadic_map;
  /// Guard predicate -> subterm it was introduced for.
  std::map<std::string, Term> guard_map;
  std::vector<TransformStep> applied_steps;
  /// A step that may weaken the clause set (extraction or linearization) fired.
  bool lossy = false;
  std::size_t rrs_steps = 0;
  std::size_t rrs_step_bound = 0;
  std::size_t rrs_peak_clauses = 0;
};

// ---------------------------------------------------------------------------
// Reflexive relation splitting

/// One applicable rewrite: Delete removes clause `clause`; otherwise the
/// R-atom at literal index `literal` of `clause` is split.
struct RrsRedex {
  enum class Kind { Delete, Split } kind;
  std::size_t clause;
  std::size_t literal;
};

/// Picks one of the `n` applicable redexes; used to explore rewrite orders.
using RrsChooser = std::function<std::size_t(const std::vector<RrsRedex>&)>;

/// Names of the reflexive and irreflexive part of `r`.
std::pair<std::string, std::string> split_names(const std::string& r);

/// All redexes of N for predicate r. Delete redexes come first and, when
/// present, are the only ones returned.
std::vector<RrsRedex> rrs_redexes(const ClauseSet& n, const std::string& r);

/**
 * Applies a single rewrite step for r. Without a chooser, the leftmost
 * redex of the first clause containing one is rewritten. Returns nullopt
 * when N is in normal form.
 */
std::optional<ClauseSet> rrs_step(const ClauseSet& n, const std::string& r,
                                  const RrsChooser& choose = nullptr);

/// Exhaustive splitting of every listed predicate, in order.
std::pair<ClauseSet, TransformLedger> rrs(const ClauseSet& n, const std::vector<std::string>& predicates,
                                          const RrsChooser& choose = nullptr);

/// Step bound used by rrs: each clause with k occurrences of R yields at most
/// 2^(k+1) rewrite steps.
std::size_t rrs_step_bound(const ClauseSet& n, const std::string& r);

/// Removes duplicate literals, tautologies and subsumed clauses. The first of
/// several variants is kept.
ClauseSet redundancy_cleanup(const ClauseSet& n);

// ---------------------------------------------------------------------------
// Monadic / shallow / linear approximation

struct ApproxResult {
  ClauseSet clauses;
  TransformLedger ledger;
  /// Index of the input clause each output clause descends from.
  std::vector<std::size_t> origin;
};

/**
 * Turns a Horn clause set into an MSLH clause set with the property that
 * every model of the output yields a model of the input:
 *  1. every non-monadic atom R(t1..tn) becomes T(f_R(t1..tn));
 *  2. a complex argument s below the succedent's top symbol is moved into a
 *     guard clause Γ -> q(s), the original becoming Γ, q(x) -> S(t[x]);
 *  3. repeated succedent variables are renamed apart, copying the
 *     antecedent atoms that mention them;
 *  4. an antecedent atom P(f(..x..s[x]..)) with x both a direct argument
 *     and inside a complex argument s gets s replaced by a guarded variable.
 * `ledger` may carry a previous splitting ledger; its entries are kept.
 */
ApproxResult approximate(const ClauseSet& n, TransformLedger ledger = {});

/**
 * Answers a ground query over the original signature against the model of
 * the transformed set described by `oracle`.
 */
bool back_translate_query(const TransformLedger& ledger, const Atom& query,
                          const std::function<bool(const Atom&)>& oracle);

/// The transformed atom a ground query is mapped to.
Atom translate_query(const TransformLedger& ledger, const Atom& query);

}  // namespace mslh
