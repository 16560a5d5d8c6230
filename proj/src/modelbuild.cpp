#include "mslh/modelbuild.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mslh/saturate.hpp"

namespace mslh {

std::string color_string(const Color& c) {
  std::string s = "{";
  bool first = true;
  for (const auto& p : c) {
    s += (first ? "" : ",") + p;
    first = false;
  }
  return s + "}";
}

bool ProductionRule::fires(const std::vector<Color>& args) const {
  for (std::size_t j = 0; j < requirements.size(); ++j)
    for (const auto& p : requirements[j])
      if (!args[j].count(p)) return false;
  return true;
}

std::string ProductionRule::to_string() const {
  std::string s = function + "(";
  for (std::size_t j = 0; j < requirements.size(); ++j) s += (j ? "," : "") + color_string(requirements[j]);
  return s + ") -> " + predicate;
}

std::vector<ProductionRule> production_rules(const ClauseSet& saturated, const Signature& sig) {
  std::vector<ProductionRule> out;
  for (const auto& c : saturated) {
    if (c.succedent.size() != 1 || c.succedent[0].args.size() != 1) continue;
    const Atom& head = c.succedent[0];
    const Term& t = head.args[0];
    if (t.is_var()) {
      // Only the unconditional S(x) is productive; with antecedents the
      // first one is selected.
      if (!c.antecedent.empty()) continue;
      for (const auto& [f, n] : sig.functions()) out.push_back({f, n, head.predicate, std::vector<Color>(n)});
      continue;
    }
    if (!has_productive_shape(c)) continue;
    ProductionRule r{t.name(), t.arity(), head.predicate, std::vector<Color>(t.arity())};
    for (const auto& a : c.antecedent)
      for (std::size_t j = 0; j < t.arity(); ++j)
        if (t.args()[j].name() == a.args[0].name()) r.requirements[j].insert(a.predicate);
    out.push_back(std::move(r));
  }
  return out;
}

Color color_of(const std::vector<ProductionRule>& rules, const Term& t) {
  if (t.is_var()) throw ModelError("term " + t.to_string() + " is not ground");
  std::vector<Color> args;
  for (const auto& s : t.args()) args.push_back(color_of(rules, s));
  Color out;
  for (const auto& r : rules)
    if (r.function == t.name() && r.arity == t.arity() && r.fires(args)) out.insert(r.predicate);
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> FiniteStructure::index_of(const Color& c) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), c);
  if (it == domain.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - domain.begin());
}

std::size_t FiniteStructure::apply(const std::string& f, const std::vector<std::size_t>& args) const {
  auto it = functions.find(f);
  if (it == functions.end()) throw ModelError("function '" + f + "' is not interpreted");
  if (it->second.arity != args.size()) throw ModelError("function '" + f + "' applied with wrong arity");
  std::size_t k = 0;
  for (auto a : args) k = k * domain.size() + a;
  return it->second.values[k];
}

std::size_t FiniteStructure::value(const Term& t) const {
  if (t.is_var()) throw ModelError("term " + t.to_string() + " is not ground");
  std::vector<std::size_t> args;
  for (const auto& s : t.args()) args.push_back(value(s));
  return apply(t.name(), args);
}

bool FiniteStructure::holds(const std::string& pred, std::size_t element) const {
  auto it = relations.find(pred);
  if (it == relations.end()) throw ModelError("predicate '" + pred + "' is not interpreted");
  return it->second.count(element) > 0;
}

bool FiniteStructure::holds(const Atom& a) const {
  if (a.args.size() != 1) throw ModelError("predicate '" + a.predicate + "' is not monadic");
  return holds(a.predicate, value(a.args[0]));
}

std::string FiniteStructure::to_string() const {
  std::ostringstream out;
  out << "domain (" << domain.size() << " elements):\n";
  for (std::size_t i = 0; i < domain.size(); ++i)
    out << "  e" << i << " = " << color_string(domain[i]) << "  e.g. " << witnesses[i] << "\n";
  if (added_constant) out << "added constant: " << *added_constant << "\n";
  out << "relations:\n";
  for (const auto& [p, ext] : relations) {
    out << "  " << p << " = {";
    bool first = true;
    for (auto e : ext) {
      out << (first ? "" : ",") << "e" << e;
      first = false;
    }
    out << "}\n";
  }
  out << "functions:\n";
  for (const auto& [f, table] : functions) {
    std::vector<std::size_t> idx(table.arity, 0);
    for (auto v : table.values) {
      out << "  " << f;
      if (table.arity) {
        out << "(";
        for (std::size_t j = 0; j < idx.size(); ++j) out << (j ? "," : "") << "e" << idx[j];
        out << ")";
      }
      out << " = e" << v << "\n";
      for (std::size_t j = idx.size(); j-- > 0;) {
        if (++idx[j] < domain.size()) break;
        idx[j] = 0;
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

void for_each_tuple(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (n > 0 && k == 0) return;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    f(idx);
    std::size_t j = n;
    while (j > 0 && ++idx[j - 1] == k) idx[--j] = 0;
    if (j == 0) return;
  }
}

}  // namespace

FiniteStructure build_finite_model(const ClauseSet& saturated) {
  return build_finite_model(saturated, Signature::of(saturated));
}

FiniteStructure build_finite_model(const ClauseSet& saturated, const Signature& signature) {
  for (const auto& c : saturated)
    if (c.is_empty()) throw ModelError("the clause set contains the empty clause");
  Signature sig = signature;
  sig.absorb(saturated);
  FiniteStructure a;
  if (sig.constants().empty()) {
    a.added_constant = sig.fresh_name("c");
    sig.add_function(*a.added_constant, 0);
  }
  auto rules = production_rules(saturated, sig);
  auto result = [&](const std::string& f, const std::vector<Color>& args) {
    Color out;
    for (const auto& r : rules)
      if (r.function == f && r.fires(args)) out.insert(r.predicate);
    return out;
  };

  // Reachable colors in discovery order, one round per term depth.
  std::vector<Color> found;
  std::vector<Term> witness;
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t k = found.size();
    for (const auto& [f, n] : sig.functions()) {
      for_each_tuple(n, k, [&](const std::vector<std::size_t>& idx) {
        std::vector<Color> args;
        std::vector<Term> wargs;
        for (auto i : idx) {
          args.push_back(found[i]);
          wargs.push_back(witness[i]);
        }
        Color c = result(f, args);
        if (std::find(found.begin(), found.end(), c) == found.end()) {
          found.push_back(c);
          witness.push_back(Term::app(f, wargs));
          changed = true;
        }
      });
    }
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return found[x] < found[y]; });
  for (auto i : order) {
    a.domain.push_back(found[i]);
    a.witnesses.push_back(witness[i]);
  }

  for (const auto& [f, n] : sig.functions()) {
    FunctionTable table{n, {}};
    for_each_tuple(n, a.domain.size(), [&](const std::vector<std::size_t>& idx) {
      std::vector<Color> args;
      for (auto i : idx) args.push_back(a.domain[i]);
      table.values.push_back(*a.index_of(result(f, args)));
    });
    a.functions[f] = std::move(table);
  }
  for (const auto& p : sig.monadic_predicates()) {
    auto& ext = a.relations[p];
    for (std::size_t i = 0; i < a.domain.size(); ++i)
      if (a.domain[i].count(p)) ext.insert(i);
  }
  return a;
}

bool evaluate(const FiniteStructure& a, const Clause& c) {
  auto vars = c.vars();
  std::vector<std::string> xs(vars.begin(), vars.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::map<std::string, std::size_t> env;
  std::function<std::size_t(const Term&)> eval = [&](const Term& t) -> std::size_t {
    if (t.is_var()) return env.at(t.name());
    std::vector<std::size_t> args;
    for (const auto& s : t.args()) args.push_back(eval(s));
    return a.apply(t.name(), args);
  };
  auto truth = [&](const Atom& at) {
    if (at.args.size() != 1) throw ModelError("predicate '" + at.predicate + "' is not monadic");
    return a.holds(at.predicate, eval(at.args[0]));
  };
  bool ok = true;
  for_each_tuple(xs.size(), a.domain.size(), [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    for (std::size_t i = 0; i < xs.size(); ++i) env[xs[i]] = idx[i];
    bool sat = false;
    for (const auto& at : c.antecedent) sat = sat || !truth(at);
    for (const auto& at : c.succedent) sat = sat || truth(at);
    ok = sat;
  });
  return ok;
}

bool verify_model(const FiniteStructure& a, const ClauseSet& n) {
  return std::all_of(n.begin(), n.end(), [&](const Clause& c) { return evaluate(a, c); });
}

bool ground_membership(const ClauseSet& saturated, const Atom& atom) {
  if (!atom.is_ground()) throw ModelError("query " + atom.to_string() + " is not ground");
  if (atom.args.size() != 1) throw ModelError("predicate '" + atom.predicate + "' is not monadic");
  for (const auto& c : saturated)
    if (c.is_empty()) throw ModelError("the clause set contains the empty clause");
  Signature sig = Signature::of(saturated);
  sig.absorb(atom);
  return color_of(production_rules(saturated, sig), atom.args[0]).count(atom.predicate) > 0;
}

TreeAutomaton herbrand_automaton(const ClauseSet& saturated, const std::string& pred) {
  return herbrand_automaton(saturated, pred, Signature::of(saturated));
}

TreeAutomaton herbrand_automaton(const ClauseSet& saturated, const std::string& pred, const Signature& sig) {
  FiniteStructure m = build_finite_model(saturated, sig);
  TreeAutomaton out;
  auto name = [&](std::size_t i) {
    std::string s = "{";
    bool first = true;
    for (const auto& p : m.domain[i]) {
      s += (first ? "" : "|") + p;
      first = false;
    }
    return s + "}";
  };
  for (const auto& [f, table] : m.functions) out.add_op(f, table.arity);
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    if (m.domain[i].count(pred)) out.add_final(name(i));
    else out.add_state(name(i));
  }
  for (const auto& [f, table] : m.functions) {
    std::size_t k = 0;
    for_each_tuple(table.arity, m.domain.size(), [&](const std::vector<std::size_t>& idx) {
      TaRule r{f, {}, name(table.values[k++])};
      for (auto i : idx) r.args.push_back(name(i));
      out.add_rule(std::move(r));
    });
  }
  return out;
}

}  // namespace mslh
