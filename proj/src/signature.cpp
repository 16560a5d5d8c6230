#include "mslh/signature.hpp"

namespace mslh {

void Signature::add_function(const std::string& name, std::size_t arity) {
  if (predicate_index_.count(name))
    throw SignatureError("symbol '" + name + "' used both as predicate and function");
  auto it = function_index_.find(name);
  if (it != function_index_.end()) {
    if (functions_[it->second].second != arity)
      throw SignatureError("function '" + name + "' used with arities " +
                           std::to_string(functions_[it->second].second) + " and " +
                           std::to_string(arity));
    return;
  }
  function_index_[name] = functions_.size();
  functions_.emplace_back(name, arity);
  order_.push_back(name);
}

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  if (function_index_.count(name))
    throw SignatureError("symbol '" + name + "' used both as function and predicate");
  auto it = predicate_index_.find(name);
  if (it != predicate_index_.end()) {
    if (predicates_[it->second].second != arity)
      throw SignatureError("predicate '" + name + "' used with arities " +
                           std::to_string(predicates_[it->second].second) + " and " +
                           std::to_string(arity));
    return;
  }
  predicate_index_[name] = predicates_.size();
  predicates_.emplace_back(name, arity);
  order_.push_back(name);
}

std::optional<std::size_t> Signature::function_arity(const std::string& name) const {
  auto it = function_index_.find(name);
  if (it == function_index_.end()) return std::nullopt;
  return functions_[it->second].second;
}

std::optional<std::size_t> Signature::predicate_arity(const std::string& name) const {
  auto it = predicate_index_.find(name);
  if (it == predicate_index_.end()) return std::nullopt;
  return predicates_[it->second].second;
}

std::vector<std::string> Signature::constants() const {
  std::vector<std::string> out;
  for (const auto& [n, a] : functions_)
    if (a == 0) out.push_back(n);
  return out;
}

std::vector<std::string> Signature::monadic_predicates() const {
  std::vector<std::string> out;
  for (const auto& [n, a] : predicates_)
    if (a == 1) out.push_back(n);
  return out;
}

void Signature::absorb(const Term& t) {
  if (t.is_var()) return;
  add_function(t.name(), t.arity());
  for (const auto& a : t.args()) absorb(a);
}

void Signature::absorb(const Atom& a) {
  add_predicate(a.predicate, a.args.size());
  for (const auto& t : a.args) absorb(t);
}

void Signature::absorb(const Clause& c) {
  for (const auto& a : c.antecedent) absorb(a);
  for (const auto& a : c.succedent) absorb(a);
}

void Signature::absorb(const ClauseSet& cs) {
  for (const auto& c : cs) absorb(c);
}

std::string Signature::fresh_name(const std::string& base) const {
  if (!contains(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!contains(candidate)) return candidate;
  }
}

Signature Signature::of(const ClauseSet& cs) {
  Signature s;
  s.absorb(cs);
  return s;
}

}  // namespace mslh
