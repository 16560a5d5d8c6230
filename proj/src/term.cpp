#include "mslh/term.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mslh {

Term Term::var(std::string name) { return Term(true, std::move(name), {}); }

Term Term::app(std::string symbol, std::vector<Term> args) {
  return Term(false, std::move(symbol), std::move(args));
}

bool Term::is_ground() const {
  if (is_var_) return false;
  return std::all_of(args_.begin(), args_.end(),
                     [](const Term& a) { return a.is_ground(); });
}

bool Term::is_shallow() const {
  if (is_var_) return true;
  return std::all_of(args_.begin(), args_.end(),
                     [](const Term& a) { return a.is_var(); });
}

bool Term::is_linear() const {
  std::vector<std::string> vs;
  collect_vars(vs);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool Term::occurs(const std::string& v) const {
  if (is_var_) return name_ == v;
  return std::any_of(args_.begin(), args_.end(),
                     [&](const Term& a) { return a.occurs(v); });
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth() + 1);
  return d;
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& a : args_) n += a.size();
  return n;
}

void Term::collect_vars(std::vector<std::string>& out) const {
  if (is_var_) {
    out.push_back(name_);
    return;
  }
  for (const auto& a : args_) a.collect_vars(out);
}

std::vector<std::string> Term::vars() const {
  std::vector<std::string> vs;
  collect_vars(vs);
  return vs;
}

bool Term::operator==(const Term& o) const {
  return is_var_ == o.is_var_ && name_ == o.name_ && args_ == o.args_;
}

bool Term::operator<(const Term& o) const {
  if (is_var_ != o.is_var_) return is_var_;
  if (name_ != o.name_) return name_ < o.name_;
  return std::lexicographical_compare(args_.begin(), args_.end(), o.args_.begin(),
                                      o.args_.end());
}

std::string Term::to_string() const {
  if (is_var_ || args_.empty()) return name_;
  std::string s = name_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) s += ",";
    s += args_[i].to_string();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.to_string(); }

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

bool Atom::is_linear() const { return as_term().is_linear(); }

void Atom::collect_vars(std::vector<std::string>& out) const {
  for (const auto& a : args) a.collect_vars(out);
}

std::vector<std::string> Atom::vars() const {
  std::vector<std::string> vs;
  collect_vars(vs);
  return vs;
}

Term Atom::as_term() const { return Term::app(predicate, args); }

Atom Atom::from_term(const Term& t) { return Atom(t.name(), t.args()); }

bool Atom::operator<(const Atom& o) const {
  if (predicate != o.predicate) return predicate < o.predicate;
  return std::lexicographical_compare(args.begin(), args.end(), o.args.begin(), o.args.end());
}

std::string Atom::to_string() const { return as_term().to_string(); }

std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.to_string(); }

std::string Literal::to_string() const {
  return (positive ? "" : "~") + atom.to_string();
}

bool Clause::is_ground() const {
  return std::all_of(antecedent.begin(), antecedent.end(),
                     [](const Atom& a) { return a.is_ground(); }) &&
         std::all_of(succedent.begin(), succedent.end(),
                     [](const Atom& a) { return a.is_ground(); });
}

std::vector<std::string> Clause::vars() const {
  std::vector<std::string> all;
  for (const auto& a : antecedent) a.collect_vars(all);
  for (const auto& a : succedent) a.collect_vars(all);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto& v : all)
    if (seen.insert(v).second) out.push_back(v);
  return out;
}

std::vector<Literal> Clause::literals() const {
  std::vector<Literal> out;
  for (const auto& a : antecedent) out.push_back({a, false});
  for (const auto& a : succedent) out.push_back({a, true});
  return out;
}

std::string Clause::to_string() const {
  if (is_empty()) return "false";
  std::string s;
  for (const auto& l : literals()) {
    if (!s.empty()) s += " | ";
    s += l.to_string();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Clause& c) { return os << c.to_string(); }

std::set<std::string> distinct_vars(const std::vector<std::string>& vs) {
  return {vs.begin(), vs.end()};
}

}  // namespace mslh
