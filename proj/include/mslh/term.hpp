#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mslh {

/**
 * First-order term: either a variable or a function symbol applied to
 * argument terms. Constants are applications with no arguments.
 * Terms are immutable values.
 */
class Term {
 public:
  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const { return is_var_; }
  bool is_constant() const { return !is_var_ && args_.empty(); }
  /// Symbol name for applications, variable name for variables.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  bool is_ground() const;
  /// Constant, variable, or f(x1,...,xn) over variables only.
  bool is_shallow() const;
  /// No variable occurs twice.
  bool is_linear() const;
  bool occurs(const std::string& var) const;
  std::size_t depth() const;
  /// Number of symbol and variable occurrences.
  std::size_t size() const;

  /// Variables in left-to-right first-occurrence order, with repetitions.
  void collect_vars(std::vector<std::string>& out) const;
  std::vector<std::string> vars() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const;

  std::string to_string() const;

 private:
  Term(bool is_var, std::string name, std::vector<Term> args)
      : is_var_(is_var), name_(std::move(name)), args_(std::move(args)) {}

  bool is_var_ = true;
  std::string name_;
  std::vector<Term> args_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

/// Predicate symbol applied to argument terms.
struct Atom {
  std::string predicate;
  std::vector<Term> args;

  Atom() = default;
  Atom(std::string pred, std::vector<Term> arguments = {})
      : predicate(std::move(pred)), args(std::move(arguments)) {}

  bool is_ground() const;
  bool is_linear() const;
  std::vector<std::string> vars() const;
  void collect_vars(std::vector<std::string>& out) const;

  /// The atom read as a term whose top operator is the predicate.
  Term as_term() const;
  static Atom from_term(const Term& t);

  bool operator==(const Atom& o) const {
    return predicate == o.predicate && args == o.args;
  }
  bool operator!=(const Atom& o) const { return !(*this == o); }
  bool operator<(const Atom& o) const;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Atom& a);

struct Literal {
  Atom atom;
  bool positive = true;

  bool operator==(const Literal& o) const {
    return positive == o.positive && atom == o.atom;
  }
  std::string to_string() const;
};

/**
 * Clause written as an implication antecedent => succedent. The antecedent
 * holds the atoms of the negative literals, the succedent those of the
 * positive literals. Literal order is antecedent first, then succedent.
 */
struct Clause {
  std::vector<Atom> antecedent;
  std::vector<Atom> succedent;
  std::optional<std::size_t> id;
  std::string provenance;

  Clause() = default;
  Clause(std::vector<Atom> ante, std::vector<Atom> succ)
      : antecedent(std::move(ante)), succedent(std::move(succ)) {}

  static Clause fact(Atom a) { return Clause({}, {std::move(a)}); }
  static Clause goal(std::vector<Atom> ante) { return Clause(std::move(ante), {}); }

  bool is_empty() const { return antecedent.empty() && succedent.empty(); }
  bool is_horn() const { return succedent.size() <= 1; }
  bool is_ground() const;
  std::size_t size() const { return antecedent.size() + succedent.size(); }

  /// Distinct variables in first-occurrence order.
  std::vector<std::string> vars() const;
  std::vector<Literal> literals() const;

  /// Structural equality of the literal lists (ignores id and provenance).
  bool same_literals(const Clause& o) const {
    return antecedent == o.antecedent && succedent == o.succedent;
  }

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Clause& c);

using ClauseSet = std::vector<Clause>;

std::set<std::string> distinct_vars(const std::vector<std::string>& vs);

}  // namespace mslh
