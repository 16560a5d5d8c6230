#pragma once

#include <map>
#include <optional>
#include <string>

#include "mslh/term.hpp"

namespace mslh {

/**
 * Finite mapping from variables to terms, kept idempotent: no variable in
 * the domain occurs in any image, so application is a single pass.
 */
class Substitution {
 public:
  Substitution() = default;

  /// Builds a substitution from arbitrary (triangular) bindings and
  /// normalizes it. Returns nullopt if the bindings are cyclic.
  static std::optional<Substitution> from_bindings(const std::map<std::string, Term>& bindings);

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Term>& bindings() const { return map_; }
  const Term* lookup(const std::string& var) const;

  /// Adds x -> t (t must not contain x after applying the current bindings)
  /// and rewrites existing images so the result stays idempotent.
  /// Returns false on an occurs-check failure.
  bool bind(const std::string& var, const Term& t);

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;

  bool operator==(const Substitution& o) const { return map_ == o.map_; }

  std::string to_string() const;

 private:
  std::map<std::string, Term> map_;
};

/// Most general unifier with occurs check.
std::optional<Substitution> unify(const Term& s, const Term& t);
std::optional<Substitution> unify(const Atom& a, const Atom& b);
/// Extends `sigma` so that it also unifies s and t.
bool unify_into(const Term& s, const Term& t, Substitution& sigma);

/// One-sided matching: sigma with pattern·sigma == target. Variables of the
/// target are treated as rigid. Pattern and target should be
/// variable-disjoint; a matcher that only exists as a simultaneous variable
/// swap is not representable and yields nullopt.
std::optional<Substitution> match(const Term& pattern, const Term& target);
std::optional<Substitution> match(const Atom& pattern, const Atom& target);
/// Extends an existing matcher; leaves `sigma` unspecified on failure.
bool match_into(const Term& pattern, const Term& target, std::map<std::string, Term>& sigma);
bool match_into(const Atom& pattern, const Atom& target, std::map<std::string, Term>& sigma);

}  // namespace mslh
