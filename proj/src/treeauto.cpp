#include "mslh/treeauto.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "mslh/substitution.hpp"

namespace mslh {

bool TaRule::operator<(const TaRule& o) const {
  return std::tie(op, args, target) < std::tie(o.op, o.args, o.target);
}

std::string TaRule::to_string() const {
  std::string s = op;
  if (!args.empty()) {
    s += "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i];
    s += ")";
  }
  return s + " -> " + target;
}

// ---------------------------------------------------------------------------

void TreeAutomaton::add_op(const std::string& op, std::size_t arity, bool is_predicate) {
  if (auto a = this->arity(op)) {
    if (*a != arity) throw AutomatonError("operator '" + op + "' used with arities " + std::to_string(*a) +
                                          " and " + std::to_string(arity));
  } else {
    ops_.emplace_back(op, arity);
  }
  if (is_predicate) predicate_ops_.insert(op);
}

void TreeAutomaton::add_state(const std::string& q) {
  if (state_set_.insert(q).second) states_.push_back(q);
}

void TreeAutomaton::add_rule(TaRule r) {
  auto a = arity(r.op);
  if (!a) throw AutomatonError("rule uses unknown operator '" + r.op + "'");
  if (*a != r.args.size()) throw AutomatonError("rule " + r.to_string() + " does not match arity " + std::to_string(*a));
  for (const auto& q : r.args) add_state(q);
  add_state(r.target);
  if (std::find(rules_.begin(), rules_.end(), r) == rules_.end()) rules_.push_back(std::move(r));
}

void TreeAutomaton::add_final(const std::string& q) {
  add_state(q);
  finals_.insert(q);
}

std::optional<std::size_t> TreeAutomaton::arity(const std::string& op) const {
  for (const auto& [o, a] : ops_)
    if (o == op) return a;
  return std::nullopt;
}

std::set<std::string> TreeAutomaton::run(const Term& t) const {
  if (t.is_var()) throw AutomatonError("cannot run an automaton on non-ground term " + t.to_string());
  auto a = arity(t.name());
  if (!a || *a != t.arity()) throw AutomatonError("symbol '" + t.name() + "' is not in the automaton's alphabet");
  std::vector<std::set<std::string>> below;
  for (const auto& s : t.args()) below.push_back(run(s));
  std::set<std::string> out;
  for (const auto& r : rules_) {
    if (r.op != t.name()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < r.args.size() && ok; ++i) ok = below[i].count(r.args[i]) > 0;
    if (ok) out.insert(r.target);
  }
  return out;
}

bool TreeAutomaton::accepts(const Term& t) const {
  for (const auto& q : run(t))
    if (finals_.count(q)) return true;
  return false;
}

std::set<std::string> TreeAutomaton::reachable_states() const {
  std::set<std::string> reach;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules_) {
      if (reach.count(r.target)) continue;
      if (std::all_of(r.args.begin(), r.args.end(), [&](const std::string& q) { return reach.count(q) > 0; })) {
        reach.insert(r.target);
        changed = true;
      }
    }
  }
  return reach;
}

bool TreeAutomaton::is_empty() const {
  for (const auto& q : reachable_states())
    if (finals_.count(q)) return false;
  return true;
}

bool TreeAutomaton::same_alphabet(const TreeAutomaton& o) const {
  auto a = ops_, b = o.ops_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && predicate_ops_ == o.predicate_ops_;
}

std::string TreeAutomaton::to_text() const {
  std::string s = "ops:";
  for (const auto& [o, a] : ops_) s += " " + o + "/" + std::to_string(a);
  s += "\n";
  if (!predicate_ops_.empty()) {
    s += "preds:";
    for (const auto& [o, a] : ops_)
      if (predicate_ops_.count(o)) s += " " + o;
    s += "\n";
  }
  s += "final:";
  for (const auto& q : states_)
    if (finals_.count(q)) s += " " + q;
  s += "\n";
  for (const auto& r : rules_) s += r.to_string() + "\n";
  return s;
}

namespace {

std::vector<std::string> words(const std::string& s) {
  std::stringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

TreeAutomaton TreeAutomaton::from_text(const std::string& text) {
  TreeAutomaton a;
  std::stringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> AutomatonError {
    return AutomatonError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find('%'); c != std::string::npos) line.erase(c);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (line.rfind("ops:", 0) == 0) {
        for (const auto& w : words(line.substr(4))) {
          auto slash = w.find('/');
          if (slash == std::string::npos || slash == 0) throw fail("expected name/arity, got '" + w + "'");
          std::size_t used = 0;
          std::size_t n = std::stoul(w.substr(slash + 1), &used);
          if (used != w.size() - slash - 1) throw fail("bad arity in '" + w + "'");
          a.add_op(w.substr(0, slash), n);
        }
      } else if (line.rfind("preds:", 0) == 0) {
        for (const auto& w : words(line.substr(6))) {
          auto n = a.arity(w);
          if (!n) throw fail("unknown operator '" + w + "'");
          a.add_op(w, *n, true);
        }
      } else if (line.rfind("final:", 0) == 0) {
        for (const auto& w : words(line.substr(6))) a.add_final(w);
      } else {
        auto arrow = line.find("->");
        if (arrow == std::string::npos) throw fail("expected a rule 'f(q1,...) -> q'");
        std::string lhs = trim(line.substr(0, arrow)), target = trim(line.substr(arrow + 2));
        if (target.empty() || words(target).size() != 1) throw fail("expected one target state");
        TaRule r;
        r.target = target;
        auto open = lhs.find('(');
        if (open == std::string::npos) {
          r.op = lhs;
        } else {
          if (lhs.back() != ')') throw fail("missing ')'");
          r.op = trim(lhs.substr(0, open));
          std::string inner = lhs.substr(open + 1, lhs.size() - open - 2);
          std::stringstream parts(inner);
          for (std::string q; std::getline(parts, q, ',');) {
            q = trim(q);
            if (q.empty()) throw fail("empty state in rule");
            r.args.push_back(q);
          }
        }
        if (r.op.empty() || words(r.op).size() != 1) throw fail("bad operator in rule");
        a.add_rule(std::move(r));
      }
    } catch (const AutomatonError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      throw fail(e.what());
    } catch (const std::logic_error&) {
      throw fail("bad number");
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// constructions

TreeAutomaton alphabet_of(const Signature& sig) {
  TreeAutomaton a;
  for (const auto& [f, n] : sig.functions()) a.add_op(f, n);
  for (const auto& [p, n] : sig.predicates()) a.add_op(p, n, true);
  return a;
}

TreeAutomaton from_linear_atom(const Atom& atom, const Signature& sig) {
  if (!atom.is_linear()) throw AutomatonError("atom " + atom.to_string() + " is not linear");
  Signature s = sig;
  s.absorb(atom);
  TreeAutomaton a = alphabet_of(s);
  a.add_state("q1");
  for (const auto& [f, n] : s.functions()) a.add_rule({f, std::vector<std::string>(n, "q1"), "q1"});
  std::size_t next = 2;
  std::function<std::string(const Term&)> build = [&](const Term& t) -> std::string {
    if (t.is_var()) return "q1";
    TaRule r{t.name(), {}, ""};
    for (const auto& c : t.args()) r.args.push_back(build(c));
    r.target = "q" + std::to_string(next++);
    std::string q = r.target;
    a.add_rule(std::move(r));
    return q;
  };
  a.add_final(build(atom.as_term()));
  return a;
}

namespace {

void require_same_alphabet(const TreeAutomaton& a, const TreeAutomaton& b) {
  if (!a.same_alphabet(b)) throw AutomatonError("automata have different alphabets");
}

TreeAutomaton copy_alphabet(const TreeAutomaton& a) {
  TreeAutomaton out;
  for (const auto& [o, n] : a.ops()) out.add_op(o, n, a.is_predicate_op(o));
  return out;
}

std::string pair_name(const std::string& p, const std::string& q) { return "[" + p + "|" + q + "]"; }

std::string set_name(const std::set<std::string>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& q : s) {
    out += (first ? "" : "|") + q;
    first = false;
  }
  return out + "}";
}

// Calls f with every tuple of n indices below k.
void for_each_tuple(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (n > 0 && k == 0) return;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    f(idx);
    std::size_t i = 0;
    while (i < n && ++idx[i] == k) idx[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

TreeAutomaton intersect(const TreeAutomaton& a, const TreeAutomaton& b) {
  require_same_alphabet(a, b);
  TreeAutomaton out = copy_alphabet(a);
  std::set<std::pair<std::string, std::string>> reach;
  std::vector<TaRule> rules;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& ra : a.rules())
      for (const auto& rb : b.rules()) {
        if (ra.op != rb.op) continue;
        bool ok = true;
        for (std::size_t i = 0; i < ra.args.size() && ok; ++i) ok = reach.count({ra.args[i], rb.args[i]}) > 0;
        if (!ok) continue;
        TaRule r{ra.op, {}, pair_name(ra.target, rb.target)};
        for (std::size_t i = 0; i < ra.args.size(); ++i) r.args.push_back(pair_name(ra.args[i], rb.args[i]));
        if (std::find(rules.begin(), rules.end(), r) == rules.end()) rules.push_back(r);
        if (reach.insert({ra.target, rb.target}).second) changed = true;
      }
  }
  for (auto& r : rules) out.add_rule(std::move(r));
  for (const auto& [p, q] : reach)
    if (a.finals().count(p) && b.finals().count(q)) out.add_final(pair_name(p, q));
  return out;
}

TreeAutomaton union_of(const TreeAutomaton& a, const TreeAutomaton& b) {
  require_same_alphabet(a, b);
  TreeAutomaton out = copy_alphabet(a);
  auto take = [&](const TreeAutomaton& x, const std::string& prefix) {
    for (const auto& q : x.states()) out.add_state(prefix + q);
    for (const auto& r : x.rules()) {
      TaRule c{r.op, {}, prefix + r.target};
      for (const auto& q : r.args) c.args.push_back(prefix + q);
      out.add_rule(std::move(c));
    }
    for (const auto& q : x.finals()) out.add_final(prefix + q);
  };
  take(a, "1.");
  take(b, "2.");
  return out;
}

TreeAutomaton complement(const TreeAutomaton& a) {
  TreeAutomaton out = copy_alphabet(a);
  std::vector<std::set<std::string>> subsets;
  auto target = [&](const std::string& op, const std::vector<std::size_t>& idx) {
    std::set<std::string> t;
    for (const auto& r : a.rules()) {
      if (r.op != op) continue;
      bool ok = true;
      for (std::size_t i = 0; i < idx.size() && ok; ++i) ok = subsets[idx[i]].count(r.args[i]) > 0;
      if (ok) t.insert(r.target);
    }
    return t;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [op, n] : a.ops()) {
      std::vector<std::set<std::string>> found;
      for_each_tuple(n, subsets.size(), [&](const std::vector<std::size_t>& idx) { found.push_back(target(op, idx)); });
      for (auto& s : found)
        if (std::find(subsets.begin(), subsets.end(), s) == subsets.end()) {
          subsets.push_back(std::move(s));
          changed = true;
        }
    }
  }
  for (const auto& [op, n] : a.ops())
    for_each_tuple(n, subsets.size(), [&](const std::vector<std::size_t>& idx) {
      TaRule r{op, {}, set_name(target(op, idx))};
      for (auto i : idx) r.args.push_back(set_name(subsets[i]));
      out.add_rule(std::move(r));
    });
  for (const auto& s : subsets) {
    bool accepting = std::none_of(s.begin(), s.end(), [&](const std::string& q) { return a.finals().count(q) > 0; });
    if (accepting) out.add_final(set_name(s));
    else out.add_state(set_name(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// model representation formalisms

void validate(const Adc& d) {
  if (!d.atom.is_linear()) throw AutomatonError("ADC atom " + d.atom.to_string() + " is not linear");
  auto avars = d.atom.vars();
  std::set<std::string> seen;
  for (const auto& [x, t] : d.constraints) {
    if (std::find(avars.begin(), avars.end(), x) == avars.end())
      throw AutomatonError("constrained variable " + x + " does not occur in " + d.atom.to_string());
    if (!seen.insert(x).second) throw AutomatonError("variable " + x + " is constrained twice");
    if (!t.is_linear()) throw AutomatonError("constraint term " + t.to_string() + " is not linear");
    for (const auto& v : t.vars())
      if (std::find(avars.begin(), avars.end(), v) != avars.end())
        throw AutomatonError("constraint term " + t.to_string() + " shares variable " + v + " with the atom");
  }
}

Ig adc_to_ig(const Adc& d) {
  validate(d);
  Ig g{d.atom, {}};
  for (const auto& [x, t] : d.constraints) {
    Substitution s;
    s.bind(x, t);
    g.blocking.push_back(s.apply(d.atom));
  }
  return g;
}

TreeAutomaton ig_to_ta(const Ig& g, const Signature& sig) {
  Signature s = sig;
  s.absorb(g.atom);
  for (const auto& b : g.blocking) s.absorb(b);
  TreeAutomaton out = from_linear_atom(g.atom, s);
  for (const auto& b : g.blocking) out = intersect(out, complement(from_linear_atom(b, s)));
  return out;
}

TreeAutomaton amc_to_ta(const Amc& m, const Signature& sig) {
  if (!m.atom.is_linear()) throw AutomatonError("atom " + m.atom.to_string() + " is not linear");
  auto avars = m.atom.vars();
  if (std::find(avars.begin(), avars.end(), m.var) == avars.end())
    throw AutomatonError("variable " + m.var + " does not occur in " + m.atom.to_string());
  Signature s = sig;
  s.absorb(m.atom);
  for (const auto& [op, n] : m.constraint.ops()) {
    auto fa = s.function_arity(op);
    if (!fa || *fa != n || m.constraint.is_predicate_op(op))
      throw AutomatonError("constraint operator '" + op + "' is not a function of the signature");
  }
  TreeAutomaton a = alphabet_of(s);
  a.add_state("q1");
  for (const auto& [f, n] : s.functions()) a.add_rule({f, std::vector<std::string>(n, "q1"), "q1"});
  for (const auto& q : m.constraint.states()) a.add_state("s." + q);
  for (const auto& r : m.constraint.rules()) {
    TaRule c{r.op, {}, "s." + r.target};
    for (const auto& q : r.args) c.args.push_back("s." + q);
    a.add_rule(std::move(c));
  }
  std::vector<std::string> at_x;
  for (const auto& q : m.constraint.states())
    if (m.constraint.finals().count(q)) at_x.push_back("s." + q);
  std::size_t next = 2;
  // Returns the states a subterm may be labelled with.
  std::function<std::vector<std::string>(const Term&)> build = [&](const Term& t) -> std::vector<std::string> {
    if (t.is_var()) return t.name() == m.var ? at_x : std::vector<std::string>{"q1"};
    std::vector<std::vector<std::string>> choices;
    for (const auto& c : t.args()) choices.push_back(build(c));
    std::string q = "q" + std::to_string(next++);
    a.add_state(q);
    std::vector<std::string> args(choices.size());
    std::function<void(std::size_t)> emit = [&](std::size_t i) {
      if (i == choices.size()) {
        a.add_rule({t.name(), args, q});
        return;
      }
      for (const auto& c : choices[i]) {
        args[i] = c;
        emit(i + 1);
      }
    };
    emit(0);
    return {q};
  };
  a.add_final(build(m.atom.as_term()).front());
  return a;
}

ClauseSet ta_to_mslh(const TreeAutomaton& a, std::map<std::string, std::string>* names) {
  std::set<std::string> taken;
  for (const auto& [o, n] : a.ops()) taken.insert(a.is_predicate_op(o) ? "f_" + o : o);
  auto usable = [&](const std::string& q) {
    if (q.empty() || !std::islower(static_cast<unsigned char>(q[0]))) return false;
    for (char ch : q)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return !taken.count(q);
  };
  std::map<std::string, std::string> pred;
  for (std::size_t i = 0; i < a.states().size(); ++i) {
    const auto& q = a.states()[i];
    std::string name = usable(q) ? q : "st" + std::to_string(i);
    while (taken.count(name)) name += "_";
    taken.insert(name);
    pred[q] = name;
  }
  ClauseSet out;
  for (const auto& r : a.rules()) {
    Clause c;
    std::vector<Term> xs;
    for (std::size_t i = 0; i < r.args.size(); ++i) {
      xs.push_back(Term::var("X" + std::to_string(i + 1)));
      c.antecedent.push_back(Atom(pred.at(r.args[i]), {xs.back()}));
    }
    std::string f = a.is_predicate_op(r.op) ? "f_" + r.op : r.op;
    c.succedent.push_back(Atom(pred.at(r.target), {Term::app(f, xs)}));
    out.push_back(std::move(c));
  }
  if (names) *names = std::move(pred);
  return out;
}

}  // namespace mslh
