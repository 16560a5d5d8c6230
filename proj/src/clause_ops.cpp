#include "mslh/clause_ops.hpp"

#include <algorithm>
#include <map>

namespace mslh {

std::string VariableRenamer::fresh() { return prefix_ + std::to_string(next_++); }

Clause VariableRenamer::rename(const Clause& c) {
  Substitution ignored;
  return rename(c, ignored);
}

Clause VariableRenamer::rename(const Clause& c, Substitution& renaming) {
  std::map<std::string, Term> m;
  for (const auto& v : c.vars()) m.emplace(v, Term::var(fresh()));
  renaming = *Substitution::from_bindings(m);
  return renaming.apply(c);
}

Clause normalize_variables(const Clause& c) {
  std::map<std::string, Term> m;
  std::size_t i = 0;
  for (const auto& v : c.vars()) m.emplace(v, Term::var("X" + std::to_string(i++)));
  // Old and new names may overlap, so apply the map simultaneously.
  auto rename_term = [&](auto&& self, const Term& t) -> Term {
    if (t.is_var()) return m.at(t.name());
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(self(self, a));
    return Term::app(t.name(), std::move(args));
  };
  auto rename_atom = [&](const Atom& a) {
    Atom out(a.predicate);
    for (const auto& t : a.args) out.args.push_back(rename_term(rename_term, t));
    return out;
  };
  Clause out = c;
  for (auto& a : out.antecedent) a = rename_atom(a);
  for (auto& a : out.succedent) a = rename_atom(a);
  return out;
}

namespace {

std::vector<Atom> dedupe(const std::vector<Atom>& atoms) {
  std::vector<Atom> out;
  for (const auto& a : atoms)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

bool subsume_rec(const std::vector<Literal>& cl, std::size_t i, const std::vector<Literal>& dl,
                 std::vector<bool>& used, std::map<std::string, Term>& sigma) {
  if (i == cl.size()) return true;
  for (std::size_t j = 0; j < dl.size(); ++j) {
    if (used[j] || dl[j].positive != cl[i].positive) continue;
    auto saved = sigma;
    if (match_into(cl[i].atom, dl[j].atom, sigma)) {
      used[j] = true;
      if (subsume_rec(cl, i + 1, dl, used, sigma)) return true;
      used[j] = false;
    }
    sigma = std::move(saved);
  }
  return false;
}

struct Renaming {
  std::map<std::string, std::string> fwd, bwd;
};

bool rename_match(const Term& p, const Term& t, Renaming& r) {
  if (p.is_var() != t.is_var()) return false;
  if (p.is_var()) {
    auto f = r.fwd.find(p.name());
    auto b = r.bwd.find(t.name());
    if (f == r.fwd.end() && b == r.bwd.end()) {
      r.fwd.emplace(p.name(), t.name());
      r.bwd.emplace(t.name(), p.name());
      return true;
    }
    return f != r.fwd.end() && f->second == t.name() && b != r.bwd.end() && b->second == p.name();
  }
  if (p.name() != t.name() || p.arity() != t.arity()) return false;
  for (std::size_t i = 0; i < p.arity(); ++i)
    if (!rename_match(p.args()[i], t.args()[i], r)) return false;
  return true;
}

bool rename_match(const Atom& p, const Atom& t, Renaming& r) {
  if (p.predicate != t.predicate || p.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < p.args.size(); ++i)
    if (!rename_match(p.args[i], t.args[i], r)) return false;
  return true;
}

bool variant_rec(const std::vector<Literal>& cl, std::size_t i, const std::vector<Literal>& dl,
                 std::vector<bool>& used, Renaming& r) {
  if (i == cl.size()) return true;
  for (std::size_t j = 0; j < dl.size(); ++j) {
    if (used[j] || dl[j].positive != cl[i].positive) continue;
    auto saved = r;
    if (rename_match(cl[i].atom, dl[j].atom, r)) {
      used[j] = true;
      if (variant_rec(cl, i + 1, dl, used, r)) return true;
      used[j] = false;
    }
    r = std::move(saved);
  }
  return false;
}

}  // namespace

Clause remove_duplicate_literals(const Clause& c) {
  Clause out = c;
  out.antecedent = dedupe(c.antecedent);
  out.succedent = dedupe(c.succedent);
  return out;
}

bool is_tautology(const Clause& c) {
  for (const auto& a : c.antecedent)
    if (std::find(c.succedent.begin(), c.succedent.end(), a) != c.succedent.end()) return true;
  return false;
}

bool subsumes(const Clause& c, const Clause& d) {
  if (c.antecedent.size() > d.antecedent.size() || c.succedent.size() > d.succedent.size())
    return false;
  auto cl = c.literals(), dl = d.literals();
  std::vector<bool> used(dl.size(), false);
  std::map<std::string, Term> sigma;
  return subsume_rec(cl, 0, dl, used, sigma);
}

bool is_variant(const Clause& c, const Clause& d) {
  if (c.antecedent.size() != d.antecedent.size() || c.succedent.size() != d.succedent.size())
    return false;
  auto cl = c.literals(), dl = d.literals();
  std::vector<bool> used(dl.size(), false);
  Renaming r;
  return variant_rec(cl, 0, dl, used, r);
}

bool contains_variant(const ClauseSet& set, const Clause& c) {
  return std::any_of(set.begin(), set.end(), [&](const Clause& d) { return is_variant(c, d); });
}

bool equal_modulo_renaming(const ClauseSet& a, const ClauseSet& b) {
  auto covered = [](const ClauseSet& x, const ClauseSet& y) {
    return std::all_of(x.begin(), x.end(), [&](const Clause& c) { return contains_variant(y, c); });
  };
  return covered(a, b) && covered(b, a);
}

ShapeInfo shape_checks(const Clause& c) {
  ShapeInfo info;
  info.is_horn = c.is_horn();
  info.is_ground = c.is_ground();
  auto vs = c.vars();
  info.vars = {vs.begin(), vs.end()};
  bool monadic = true;
  for (const auto& a : c.antecedent) monadic = monadic && a.args.size() == 1;
  for (const auto& a : c.succedent) monadic = monadic && a.args.size() == 1;
  bool succedent_ok = true;
  for (const auto& a : c.succedent)
    if (a.args.size() == 1) succedent_ok = succedent_ok && a.args[0].is_shallow() && a.args[0].is_linear();
  info.is_mslh = info.is_horn && monadic && succedent_ok;
  return info;
}

bool is_mslh(const ClauseSet& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Clause& c) { return shape_checks(c).is_mslh; });
}

std::string implication_string(const Clause& c) {
  if (c.is_empty()) return "false";
  std::string s;
  for (std::size_t i = 0; i < c.antecedent.size(); ++i) {
    if (i) s += ", ";
    s += c.antecedent[i].to_string();
  }
  s += s.empty() ? "-> " : " -> ";
  for (std::size_t i = 0; i < c.succedent.size(); ++i) {
    if (i) s += ", ";
    s += c.succedent[i].to_string();
  }
  if (c.succedent.empty()) s.pop_back();
  return s;
}

}  // namespace mslh
