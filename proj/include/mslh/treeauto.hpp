#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mslh/signature.hpp"
#include "mslh/term.hpp"

namespace mslh {

class AutomatonError : public Error {
 public:
  using Error::Error;
};

/// f(q1,...,qn) -> q
struct TaRule {
  std::string op;
  std::vector<std::string> args;
  std::string target;

  bool operator==(const TaRule& o) const { return op == o.op && args == o.args && target == o.target; }
  bool operator<(const TaRule& o) const;
  std::string to_string() const;
};

/**
 * Nondeterministic bottom-up tree automaton over a ranked alphabet. The
 * alphabet may contain predicate symbols, which then only occur at the root
 * of accepted atoms.
 */
class TreeAutomaton {
 public:
  void add_op(const std::string& op, std::size_t arity, bool is_predicate = false);
  void add_state(const std::string& q);
  /// Declares missing states; throws on an unknown operator or arity mismatch.
  void add_rule(TaRule r);
  void add_final(const std::string& q);

  const std::vector<std::pair<std::string, std::size_t>>& ops() const { return ops_; }
  std::optional<std::size_t> arity(const std::string& op) const;
  bool is_predicate_op(const std::string& op) const { return predicate_ops_.count(op) > 0; }
  const std::set<std::string>& predicate_ops() const { return predicate_ops_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<TaRule>& rules() const { return rules_; }
  const std::set<std::string>& finals() const { return finals_; }

  /// States reachable at the root of t.
  std::set<std::string> run(const Term& t) const;
  bool accepts(const Term& t) const;
  bool accepts(const Atom& a) const { return accepts(a.as_term()); }

  std::set<std::string> reachable_states() const;
  bool is_empty() const;

  bool same_alphabet(const TreeAutomaton& o) const;

  /**
   * Text form:
   *   ops: r/2 g/2 a/0 b/0
   *   preds: r            (optional)
   *   final: q4
   *   g(q1,q1) -> q1      (one rule per line; constants as `a -> q1`)
   */
  std::string to_text() const;
  static TreeAutomaton from_text(const std::string& text);

 private:
  std::vector<std::pair<std::string, std::size_t>> ops_;
  std::set<std::string> predicate_ops_;
  std::vector<std::string> states_;
  std::set<std::string> state_set_;
  std::vector<TaRule> rules_;
  std::set<std::string> finals_;
};

/// Alphabet of Σ: its functions, then its predicates as root-only operators.
TreeAutomaton alphabet_of(const Signature& sig);

/**
 * Automaton for the ground instances of a linear atom. State q1 accepts
 * every ground term over the functions of Σ; the non-variable positions of
 * the atom get q2, q3, ... in post-order, the atom itself the final state.
 */
TreeAutomaton from_linear_atom(const Atom& a, const Signature& sig);

TreeAutomaton intersect(const TreeAutomaton& a, const TreeAutomaton& b);
/// Disjoint union; states are prefixed with `1.` and `2.`.
TreeAutomaton union_of(const TreeAutomaton& a, const TreeAutomaton& b);
/// Subset construction restricted to reachable subsets (including the empty
/// sink), with final states inverted.
TreeAutomaton complement(const TreeAutomaton& a);

/// Atom with disequality constraints x_i != t_i.
struct Adc {
  Atom atom;
  std::vector<std::pair<std::string, Term>> constraints;
};

/// Implicit generalization A / {B_1..B_n}.
struct Ig {
  Atom atom;
  std::vector<Atom> blocking;
};

/// Atom with membership constraint x in L(S).
struct Amc {
  Atom atom;
  std::string var;
  TreeAutomaton constraint;
};

/// Checks the ADC side conditions; throws AutomatonError on violation.
void validate(const Adc& d);

Ig adc_to_ig(const Adc& d);
TreeAutomaton ig_to_ta(const Ig& g, const Signature& sig);
TreeAutomaton amc_to_ta(const Amc& m, const Signature& sig);

/**
 * One monadic predicate per state and one clause
 * Q_q1(x1),...,Q_qn(xn) -> Q_q(f(x1,...,xn)) per rule. Predicate operators
 * become functions f_<op>. States that are not usable as predicate names
 * are called st<index>. The state -> predicate map is returned through
 * `names` when given.
 */
ClauseSet ta_to_mslh(const TreeAutomaton& a, std::map<std::string, std::string>* names = nullptr);

}  // namespace mslh
