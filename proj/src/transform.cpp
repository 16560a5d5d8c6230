#include "mslh/transform.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "mslh/clause_ops.hpp"
#include "mslh/substitution.hpp"

namespace mslh {

namespace {

Atom& literal_atom(Clause& c, std::size_t l) {
  return l < c.antecedent.size() ? c.antecedent[l] : c.succedent[l - c.antecedent.size()];
}

const Atom& literal_atom(const Clause& c, std::size_t l) {
  return l < c.antecedent.size() ? c.antecedent[l] : c.succedent[l - c.antecedent.size()];
}

bool has_diagonal_atom(const Clause& c, const std::string& irr) {
  for (std::size_t l = 0; l < c.size(); ++l) {
    const Atom& a = literal_atom(c, l);
    if (a.predicate == irr && a.args.size() == 2 && a.args[0] == a.args[1]) return true;
  }
  return false;
}

ClauseSet apply_redex(const ClauseSet& n, const std::string& r, const RrsRedex& x) {
  auto [rfl, irr] = split_names(r);
  ClauseSet out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i != x.clause) {
      out.push_back(n[i]);
      continue;
    }
    if (x.kind == RrsRedex::Kind::Delete) continue;
    const Atom& a = literal_atom(n[i], x.literal);
    if (a.args.size() != 2) throw TransformError("split predicate '" + r + "' must be binary");
    Clause irr_clause = n[i];
    literal_atom(irr_clause, x.literal).predicate = irr;
    out.push_back(irr_clause);
    if (auto sigma = unify(a.args[0], a.args[1])) {
      Clause rfl_clause = sigma->apply(n[i]);
      literal_atom(rfl_clause, x.literal).predicate = rfl;
      out.push_back(rfl_clause);
    }
  }
  return out;
}

std::size_t occurrences(const Clause& c, const std::string& r) {
  std::size_t k = 0;
  for (std::size_t l = 0; l < c.size(); ++l) k += literal_atom(c, l).predicate == r;
  return k;
}

}  // namespace

std::pair<std::string, std::string> split_names(const std::string& r) {
  return {r + "_rfl", r + "_irr"};
}

std::vector<RrsRedex> rrs_redexes(const ClauseSet& n, const std::string& r) {
  std::string irr = split_names(r).second;
  std::vector<RrsRedex> deletes, splits;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (has_diagonal_atom(n[i], irr)) {
      deletes.push_back({RrsRedex::Kind::Delete, i, 0});
      continue;
    }
    for (std::size_t l = 0; l < n[i].size(); ++l)
      if (literal_atom(n[i], l).predicate == r) splits.push_back({RrsRedex::Kind::Split, i, l});
  }
  return deletes.empty() ? splits : deletes;
}

std::optional<ClauseSet> rrs_step(const ClauseSet& n, const std::string& r, const RrsChooser& choose) {
  auto redexes = rrs_redexes(n, r);
  if (redexes.empty()) return std::nullopt;
  std::size_t k = choose ? choose(redexes) : 0;
  return apply_redex(n, r, redexes.at(k));
}

std::size_t rrs_step_bound(const ClauseSet& n, const std::string& r) {
  std::size_t bound = 0;
  for (const auto& c : n) bound += std::size_t{2} << occurrences(c, r);
  return bound;
}

std::pair<ClauseSet, TransformLedger> rrs(const ClauseSet& n, const std::vector<std::string>& predicates,
                                          const RrsChooser& choose) {
  TransformLedger ledger;
  ClauseSet cur = n;
  ledger.rrs_peak_clauses = cur.size();
  for (const auto& r : predicates) {
    Signature sig = Signature::of(cur);
    auto [rfl, irr] = split_names(r);
    if (sig.contains(rfl) || sig.contains(irr))
      throw TransformError("cannot split '" + r + "': '" + rfl + "' or '" + irr + "' already in use");
    if (!sig.has_predicate(r)) continue;
    if (*sig.predicate_arity(r) != 2) throw TransformError("split predicate '" + r + "' must be binary");
    std::size_t bound = rrs_step_bound(cur, r), steps = 0;
    while (auto next = rrs_step(cur, r, choose)) {
      cur = std::move(*next);
      ledger.rrs_peak_clauses = std::max(ledger.rrs_peak_clauses, cur.size());
      if (++steps > bound) throw std::logic_error("splitting exceeded its step bound");
    }
    ledger.split_map[r] = {rfl, irr};
    ledger.rrs_steps += steps;
    ledger.rrs_step_bound += bound;
    ledger.applied_steps.push_back({"split", r + " -> " + rfl + ", " + irr + " (" + std::to_string(steps) + " steps)"});
  }
  return {cur, ledger};
}

ClauseSet redundancy_cleanup(const ClauseSet& n) {
  ClauseSet pre;
  for (const auto& c : n) {
    Clause d = remove_duplicate_literals(c);
    if (!is_tautology(d)) pre.push_back(std::move(d));
  }
  ClauseSet out;
  for (std::size_t i = 0; i < pre.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < pre.size() && !redundant; ++j) {
      if (i == j || !subsumes(pre[j], pre[i])) continue;
      // Mutual subsumption: keep the earlier clause.
      redundant = j < i || !subsumes(pre[i], pre[j]);
    }
    if (!redundant) out.push_back(pre[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Approximator {
 public:
  Approximator(const ClauseSet& n, TransformLedger ledger) : ledger_(std::move(ledger)) {
    sig_ = Signature::of(n);
    for (const auto& [f, a] : sig_.functions()) used_.insert(f);
    for (const auto& [p, a] : sig_.predicates()) used_.insert(p);
    for (const auto& [p, a] : sig_.predicates())
      if (a != 1) {
        if (ledger_.shared_predicate.empty()) ledger_.shared_predicate = fresh("t");
        ledger_.monadic_map[p] = fresh("f_" + p);
      }
    // Split parts that no longer occur still need a target for queries.
    for (const auto& [r, parts] : ledger_.split_map)
      for (const auto& part : {parts.first, parts.second})
        if (!ledger_.monadic_map.count(part)) {
          if (ledger_.shared_predicate.empty()) ledger_.shared_predicate = fresh("t");
          ledger_.monadic_map[part] = fresh("f_" + part);
        }
  }

  ApproxResult run(const ClauseSet& n) {
    ApproxResult out;
    std::deque<std::pair<Clause, std::size_t>> work;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (!n[i].is_horn()) throw TransformError("approximation needs Horn clauses: " + n[i].to_string());
      Clause c = project(n[i]);
      if (c.antecedent != n[i].antecedent || c.succedent != n[i].succedent)
        ledger_.applied_steps.push_back({"project", implication_string(c)});
      work.emplace_back(std::move(c), i);
    }
    while (!work.empty()) {
      auto [c, origin] = std::move(work.front());
      work.pop_front();
      while (true) {
        if (auto g = extract_succedent(c)) {
          work.emplace_back(std::move(*g), origin);
          continue;
        }
        if (linearize(c)) continue;
        if (auto g = extract_antecedent(c)) {
          work.emplace_back(std::move(*g), origin);
          continue;
        }
        break;
      }
      out.clauses.push_back(std::move(c));
      out.origin.push_back(origin);
    }
    out.ledger = std::move(ledger_);
    return out;
  }

 private:
  std::string fresh(const std::string& base) {
    std::string name = base;
    for (std::size_t i = 1; used_.count(name); ++i) name = base + "_" + std::to_string(i);
    used_.insert(name);
    return name;
  }

  std::string fresh_guard() {
    std::string name;
    do name = "q" + std::to_string(guard_counter_++);
    while (used_.count(name));
    used_.insert(name);
    return name;
  }

  static std::string fresh_var(const Clause& c, const std::string& base) {
    auto vs = c.vars();
    std::string name = base;
    for (std::size_t i = 2; std::find(vs.begin(), vs.end(), name) != vs.end(); ++i)
      name = base + "_" + std::to_string(i);
    return name;
  }

  Atom project(const Atom& a) const {
    auto it = ledger_.monadic_map.find(a.predicate);
    if (it == ledger_.monadic_map.end()) return a;
    return Atom(ledger_.shared_predicate, {Term::app(it->second, a.args)});
  }

  Clause project(const Clause& c) const {
    Clause out = c;
    for (auto& a : out.antecedent) a = project(a);
    for (auto& a : out.succedent) a = project(a);
    return out;
  }

  static bool shares_vars(const Term& s, const std::vector<std::string>& others) {
    for (const auto& v : s.vars())
      if (std::find(others.begin(), others.end(), v) != others.end()) return true;
    return false;
  }

  static Term replace_arg(const Term& t, std::size_t i, Term by) {
    std::vector<Term> args = t.args();
    args[i] = std::move(by);
    return Term::app(t.name(), std::move(args));
  }

  // Γ -> S(f(..s..)) becomes Γ, q(z) -> S(f(..z..)) plus Γ -> q(s).
  std::optional<Clause> extract_succedent(Clause& c) {
    if (c.succedent.empty()) return std::nullopt;
    Atom& head = c.succedent[0];
    const Term& t = head.args[0];
    if (t.is_var()) return std::nullopt;
    for (std::size_t i = 0; i < t.arity(); ++i) {
      const Term& s = t.args()[i];
      if (s.is_var()) continue;
      std::vector<std::string> others;
      for (const auto& a : c.antecedent) a.collect_vars(others);
      for (std::size_t j = 0; j < t.arity(); ++j)
        if (j != i) t.args()[j].collect_vars(others);
      std::string q = fresh_guard();
      ledger_.guard_map.emplace(q, s);
      if (shares_vars(s, others)) ledger_.lossy = true;
      Clause guard(c.antecedent, {Atom(q, {s})});
      std::string z = fresh_var(c, "Z");
      head = Atom(head.predicate, {replace_arg(t, i, Term::var(z))});
      c.antecedent.push_back(Atom(q, {Term::var(z)}));
      ledger_.applied_steps.push_back({"extract", implication_string(guard) + " ; " + implication_string(c)});
      return guard;
    }
    return std::nullopt;
  }

  // S(f(..x..x..)) gets its repeated x renamed apart.
  bool linearize(Clause& c) {
    if (c.succedent.empty()) return false;
    Atom& head = c.succedent[0];
    const Term& t = head.args[0];
    if (t.is_var() || t.is_linear()) return false;
    auto vs = t.vars();
    std::string x;
    for (std::size_t i = 0; i < vs.size() && x.empty(); ++i)
      if (std::count(vs.begin(), vs.end(), vs[i]) > 1) x = vs[i];
    std::vector<Term> args = t.args();
    std::vector<Atom> copies;
    bool first = true;
    for (auto& a : args) {
      if (!(a.is_var() && a.name() == x)) continue;
      if (first) {
        first = false;
        continue;
      }
      Clause probe = c;
      probe.antecedent.insert(probe.antecedent.end(), copies.begin(), copies.end());
      probe.succedent[0] = Atom(head.predicate, {Term::app(t.name(), args)});
      std::string xi = fresh_var(probe, x);
      a = Term::var(xi);
      Substitution ren;
      ren.bind(x, Term::var(xi));
      for (const auto& g : c.antecedent) {
        auto gv = g.vars();
        if (std::find(gv.begin(), gv.end(), x) != gv.end()) copies.push_back(ren.apply(g));
      }
    }
    head = Atom(head.predicate, {Term::app(t.name(), std::move(args))});
    c.antecedent.insert(c.antecedent.end(), copies.begin(), copies.end());
    ledger_.lossy = true;
    ledger_.applied_steps.push_back({"linearize", implication_string(c)});
    return true;
  }

  // P(f(..x..s[x]..)) in the antecedent becomes P(f(..x..z..)), q(z) with Γ' -> q(s).
  std::optional<Clause> extract_antecedent(Clause& c) {
    for (std::size_t k = 0; k < c.antecedent.size(); ++k) {
      const Atom& a = c.antecedent[k];
      if (a.args.size() != 1 || a.args[0].is_var()) continue;
      const Term& t = a.args[0];
      std::vector<std::string> direct;
      for (const auto& u : t.args())
        if (u.is_var()) direct.push_back(u.name());
      for (std::size_t i = 0; i < t.arity(); ++i) {
        const Term& s = t.args()[i];
        if (s.is_var() || s.is_constant() || !shares_vars(s, direct)) continue;
        std::string q = fresh_guard();
        ledger_.guard_map.emplace(q, s);
        ledger_.lossy = true;
        Clause guard;
        for (std::size_t j = 0; j < c.antecedent.size(); ++j)
          if (j != k) guard.antecedent.push_back(c.antecedent[j]);
        guard.succedent.push_back(Atom(q, {s}));
        std::string z = fresh_var(c, "Z");
        c.antecedent[k] = Atom(a.predicate, {replace_arg(t, i, Term::var(z))});
        c.antecedent.push_back(Atom(q, {Term::var(z)}));
        ledger_.applied_steps.push_back({"guard", implication_string(guard) + " ; " + implication_string(c)});
        return guard;
      }
    }
    return std::nullopt;
  }

  TransformLedger ledger_;
  Signature sig_;
  std::set<std::string> used_;
  std::size_t guard_counter_ = 0;
};

}  // namespace

ApproxResult approximate(const ClauseSet& n, TransformLedger ledger) {
  Approximator a(n, std::move(ledger));
  return a.run(n);
}

Atom translate_query(const TransformLedger& ledger, const Atom& query) {
  if (!query.is_ground()) throw TransformError("query must be ground: " + query.to_string());
  Atom a = query;
  if (auto it = ledger.split_map.find(a.predicate); it != ledger.split_map.end()) {
    if (a.args.size() != 2) throw TransformError("split predicate '" + a.predicate + "' is binary");
    a.predicate = a.args[0] == a.args[1] ? it->second.first : it->second.second;
  }
  if (auto it = ledger.monadic_map.find(a.predicate); it != ledger.monadic_map.end())
    return Atom(ledger.shared_predicate, {Term::app(it->second, a.args)});
  return a;
}

bool back_translate_query(const TransformLedger& ledger, const Atom& query,
                          const std::function<bool(const Atom&)>& oracle) {
  return oracle(translate_query(ledger, query));
}

}  // namespace mslh
