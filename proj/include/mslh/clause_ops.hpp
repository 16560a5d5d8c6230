#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mslh/substitution.hpp"
#include "mslh/term.hpp"

namespace mslh {

/// Hands out variable names `<prefix><n>` from a private counter.
class VariableRenamer {
 public:
  explicit VariableRenamer(std::string prefix = "V") : prefix_(std::move(prefix)) {}

  std::string fresh();
  /// Copy of `c` with every variable replaced by a fresh one.
  Clause rename(const Clause& c);
  /// Like rename, also returning the renaming used.
  Clause rename(const Clause& c, Substitution& renaming);

 private:
  std::string prefix_;
  std::size_t next_ = 0;
};

/// Renames variables to X0, X1, ... in first-occurrence order.
Clause normalize_variables(const Clause& c);

/// Removes repeated copies of the same atom in antecedent and succedent.
Clause remove_duplicate_literals(const Clause& c);

/// Some atom occurs in both antecedent and succedent.
bool is_tautology(const Clause& c);

/**
 * C subsumes D if C·sigma maps the literals of C injectively onto literals
 * of D with the same polarity.
 */
bool subsumes(const Clause& c, const Clause& d);

/// Equal up to a bijective variable renaming and literal permutation.
bool is_variant(const Clause& c, const Clause& d);

/// Both sets contain the same clauses up to variants (duplicates ignored).
bool equal_modulo_renaming(const ClauseSet& a, const ClauseSet& b);

/// Clause-wise variant membership.
bool contains_variant(const ClauseSet& set, const Clause& c);

struct ShapeInfo {
  bool is_horn = false;
  bool is_mslh = false;
  bool is_ground = false;
  std::set<std::string> vars;
};

/// Horn: at most one succedent atom. MSLH: Horn, every predicate monadic,
/// the succedent argument shallow and linear.
ShapeInfo shape_checks(const Clause& c);

bool is_mslh(const ClauseSet& cs);

/// Clause in implication notation, e.g. `p(X), q(X) -> r(f(X))`.
std::string implication_string(const Clause& c);

}  // namespace mslh
