#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mslh/signature.hpp"
#include "mslh/term.hpp"

namespace mslh {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// A parsed input file: directives, clauses and the signature they induce.
struct ProblemFile {
  /// Predicates named by `#split` directives, in file order.
  std::vector<std::string> split_predicates;
  ClauseSet clauses;
  /// Symbols in order of first occurrence.
  Signature signature;
};

/**
 * Grammar:
 *   `%` starts a comment running to end of line;
 *   `#split r` requests reflexive relation splitting of r;
 *   a clause is a list of literals separated by `|` and terminated by `.`;
 *   `~` negates an atom; `false.` is the empty clause;
 *   variables start with an uppercase letter or `_`, symbols with a
 *   lowercase letter.
 * Non-Horn clauses are rejected unless `allow_non_horn` is set.
 */
ProblemFile parse_problem(const std::string& text, bool allow_non_horn = false);
ProblemFile parse_problem_file(const std::string& path, bool allow_non_horn = false);

Term parse_term(const std::string& text);
Atom parse_atom(const std::string& text);
/// A single clause; the trailing `.` is optional. Non-Horn clauses allowed.
Clause parse_clause(const std::string& text);
/// Clauses separated by `.`.
ClauseSet parse_clauses(const std::string& text);

std::string print_clause(const Clause& c);
std::string print_clauses(const ClauseSet& cs);
std::string print_problem(const ProblemFile& p);

}  // namespace mslh
