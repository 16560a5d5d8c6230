#include "mslh/substitution.hpp"

#include <vector>

namespace mslh {

std::optional<Substitution> Substitution::from_bindings(const std::map<std::string, Term>& bindings) {
  Substitution s;
  for (const auto& [v, t] : bindings)
    if (!s.bind(v, s.apply(t))) return std::nullopt;
  return s;
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

bool Substitution::bind(const std::string& var, const Term& t) {
  Term image = apply(t);
  if (const Term* existing = lookup(var)) return *existing == image;
  if (image.is_var() && image.name() == var) return true;
  if (image.occurs(var)) return false;
  Substitution single;
  single.map_.emplace(var, image);
  for (auto& [v, img] : map_) img = single.apply(img);
  map_.emplace(var, std::move(image));
  return true;
}

Term Substitution::apply(const Term& t) const {
  if (map_.empty()) return t;
  if (t.is_var()) {
    const Term* img = lookup(t.name());
    return img ? *img : t;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(apply(a));
  return Term::app(t.name(), std::move(args));
}

Atom Substitution::apply(const Atom& a) const {
  Atom out(a.predicate);
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(apply(t));
  return out;
}

Literal Substitution::apply(const Literal& l) const { return {apply(l.atom), l.positive}; }

Clause Substitution::apply(const Clause& c) const {
  Clause out;
  out.antecedent.reserve(c.antecedent.size());
  out.succedent.reserve(c.succedent.size());
  for (const auto& a : c.antecedent) out.antecedent.push_back(apply(a));
  for (const auto& a : c.succedent) out.succedent.push_back(apply(a));
  out.id = c.id;
  out.provenance = c.provenance;
  return out;
}

std::string Substitution::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [v, t] : map_) {
    if (!first) s += ", ";
    first = false;
    s += v + " -> " + t.to_string();
  }
  return s + "}";
}

bool unify_into(const Term& s, const Term& t, Substitution& sigma) {
  Term a = sigma.apply(s);
  Term b = sigma.apply(t);
  if (a == b) return true;
  if (a.is_var()) return sigma.bind(a.name(), b);
  if (b.is_var()) return sigma.bind(b.name(), a);
  if (a.name() != b.name() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!unify_into(a.args()[i], b.args()[i], sigma)) return false;
  return true;
}

std::optional<Substitution> unify(const Term& s, const Term& t) {
  Substitution sigma;
  if (!unify_into(s, t, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) return std::nullopt;
  Substitution sigma;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!unify_into(a.args[i], b.args[i], sigma)) return std::nullopt;
  return sigma;
}

bool match_into(const Term& pattern, const Term& target, std::map<std::string, Term>& sigma) {
  if (pattern.is_var()) {
    auto [it, inserted] = sigma.emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (target.is_var() || pattern.name() != target.name() || pattern.arity() != target.arity())
    return false;
  for (std::size_t i = 0; i < pattern.arity(); ++i)
    if (!match_into(pattern.args()[i], target.args()[i], sigma)) return false;
  return true;
}

bool match_into(const Atom& pattern, const Atom& target, std::map<std::string, Term>& sigma) {
  if (pattern.predicate != target.predicate || pattern.args.size() != target.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_into(pattern.args[i], target.args[i], sigma)) return false;
  return true;
}

namespace {

// A matcher maps pattern variables to target terms; it is idempotent as
// long as pattern and target are variable-disjoint. Shared variables are
// resolved through from_bindings, which may reject the cyclic case.
std::optional<Substitution> to_substitution(const std::map<std::string, Term>& m) {
  std::map<std::string, Term> pruned;
  for (const auto& [v, t] : m)
    if (!(t.is_var() && t.name() == v)) pruned.emplace(v, t);
  return Substitution::from_bindings(pruned);
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  std::map<std::string, Term> m;
  if (!match_into(pattern, target, m)) return std::nullopt;
  auto s = to_substitution(m);
  if (!s || s->apply(pattern) != target) return std::nullopt;
  return s;
}

std::optional<Substitution> match(const Atom& pattern, const Atom& target) {
  std::map<std::string, Term> m;
  if (!match_into(pattern, target, m)) return std::nullopt;
  auto s = to_substitution(m);
  if (!s || s->apply(pattern) != target) return std::nullopt;
  return s;
}

}  // namespace mslh
