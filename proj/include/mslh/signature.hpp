#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mslh/term.hpp"

namespace mslh {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

/**
 * Function and predicate symbols with their arities. The two name sets are
 * disjoint. Symbols remember the order in which they were declared, which
 * fixes the symbol precedence of the term ordering.
 */
class Signature {
 public:
  using Entry = std::pair<std::string, std::size_t>;

  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);

  std::optional<std::size_t> function_arity(const std::string& name) const;
  std::optional<std::size_t> predicate_arity(const std::string& name) const;
  bool has_function(const std::string& name) const { return function_arity(name).has_value(); }
  bool has_predicate(const std::string& name) const { return predicate_arity(name).has_value(); }
  bool contains(const std::string& name) const { return has_function(name) || has_predicate(name); }

  const std::vector<Entry>& functions() const { return functions_; }
  const std::vector<Entry>& predicates() const { return predicates_; }
  std::vector<std::string> constants() const;
  std::vector<std::string> monadic_predicates() const;
  /// Every symbol, functions and predicates interleaved, in declaration order.
  const std::vector<std::string>& declaration_order() const { return order_; }

  /// Declares every symbol of the object, checking arity consistency.
  void absorb(const Term& t);
  void absorb(const Atom& a);
  void absorb(const Clause& c);
  void absorb(const ClauseSet& cs);

  /// `base` if unused, otherwise `base_1`, `base_2`, ...
  std::string fresh_name(const std::string& base) const;

  static Signature of(const ClauseSet& cs);

 private:
  std::vector<Entry> functions_;
  std::vector<Entry> predicates_;
  std::map<std::string, std::size_t> function_index_;
  std::map<std::string, std::size_t> predicate_index_;
  std::vector<std::string> order_;
};

}  // namespace mslh
