#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mslh/signature.hpp"
#include "mslh/term.hpp"
#include "mslh/treeauto.hpp"

namespace mslh {

/// The monadic predicates true of a ground term in the minimal model.
using Color = std::set<std::string>;

std::string color_string(const Color& c);

/**
 * P_1(x_1),...,P_n(x_n) -> S(f(y_1,...,y_m)): the term f(t_1,...,t_m) gets
 * S when t_j carries every predicate in requirements[j].
 */
struct ProductionRule {
  std::string function;
  std::size_t arity = 0;
  std::string predicate;
  std::vector<Color> requirements;

  bool fires(const std::vector<Color>& args) const;
  std::string to_string() const;
};

/**
 * Productive clauses of a saturated MSLH set. A unit S(x) is expanded into
 * one rule per function of `sig`; everything else (selected antecedents,
 * goals, variable succedents with antecedents) is skipped.
 */
std::vector<ProductionRule> production_rules(const ClauseSet& saturated, const Signature& sig);

struct FunctionTable {
  std::size_t arity = 0;
  /// Indexed by the mixed-radix number of the argument tuple, first
  /// argument most significant.
  std::vector<std::size_t> values;
};

/// Finite structure whose elements are colors.
struct FiniteStructure {
  std::vector<Color> domain;
  std::map<std::string, FunctionTable> functions;
  /// Monadic predicate -> elements in its extension.
  std::map<std::string, std::set<std::size_t>> relations;
  /// One ground term of minimal depth per element.
  std::vector<Term> witnesses;
  /// Set when the signature had no constant and one had to be invented.
  std::optional<std::string> added_constant;

  std::optional<std::size_t> index_of(const Color& c) const;
  std::size_t apply(const std::string& f, const std::vector<std::size_t>& args) const;
  /// Value of a ground term; throws on unknown symbols.
  std::size_t value(const Term& t) const;
  bool holds(const std::string& pred, std::size_t element) const;
  /// Truth of a ground monadic atom.
  bool holds(const Atom& a) const;

  /// Human-readable domain, relation and function tables.
  std::string to_string() const;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

/**
 * Least fixpoint of the colors reachable from the constants under the
 * production rules. `sig` defaults to the signature of the set and may add
 * symbols that saturation removed.
 */
FiniteStructure build_finite_model(const ClauseSet& saturated);
FiniteStructure build_finite_model(const ClauseSet& saturated, const Signature& sig);

/// Truth of c under all assignments of its variables to domain elements.
bool evaluate(const FiniteStructure& a, const Clause& c);
bool verify_model(const FiniteStructure& a, const ClauseSet& n);

/// Membership of a ground monadic atom in the minimal Herbrand model.
bool ground_membership(const ClauseSet& saturated, const Atom& atom);
Color color_of(const std::vector<ProductionRule>& rules, const Term& t);

/// Automaton over the functions of the set accepting {t | P(t) is in the
/// minimal Herbrand model}; states are the colors.
TreeAutomaton herbrand_automaton(const ClauseSet& saturated, const std::string& pred);
TreeAutomaton herbrand_automaton(const ClauseSet& saturated, const std::string& pred, const Signature& sig);

}  // namespace mslh
