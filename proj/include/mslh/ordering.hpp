#pragma once

#include <map>
#include <string>

#include "mslh/signature.hpp"
#include "mslh/term.hpp"

namespace mslh {

enum class Order { Less, Equal, Greater, Incomparable };

const char* to_string(Order o);

/**
 * Total symbol precedence. Symbols declared later are greater. Symbols
 * unknown to the precedence rank above every known symbol, ordered by name.
 */
class Precedence {
 public:
  Precedence() = default;
  explicit Precedence(const Signature& sig);

  /// Appends a symbol above all current ones (no-op if already ranked).
  void append(const std::string& symbol);
  /// Negative, zero or positive like a three-way comparison.
  int compare(const std::string& f, const std::string& g) const;

 private:
  std::map<std::string, int> rank_;
};

/**
 * Knuth-Bendix ordering with weight 1 for every function symbol, predicate
 * symbol and variable. Atoms are compared with the predicate as top symbol.
 * On non-ground input this is the usual syntactic approximation: Greater
 * implies greater under every grounding substitution, but some pairs that
 * are ordered on all ground instances are reported Incomparable.
 */
Order kbo_compare(const Term& s, const Term& t, const Precedence& prec);
Order kbo_compare(const Atom& a, const Atom& b, const Precedence& prec);

}  // namespace mslh
