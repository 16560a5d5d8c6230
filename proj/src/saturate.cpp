#include "mslh/saturate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "mslh/clause_ops.hpp"

namespace mslh {

// ---------------------------------------------------------------------------
// selection and inference rules

std::optional<std::size_t> selected_index(const Clause& c) {
  for (std::size_t i = 0; i < c.antecedent.size(); ++i)
    for (const auto& t : c.antecedent[i].args)
      if (!t.is_var()) return i;
  std::vector<std::string> succ;
  for (const auto& a : c.succedent) a.collect_vars(succ);
  for (std::size_t i = 0; i < c.antecedent.size(); ++i)
    for (const auto& t : c.antecedent[i].args)
      if (std::find(succ.begin(), succ.end(), t.name()) == succ.end()) return i;
  if (!c.antecedent.empty() && c.succedent.size() == 1 && c.succedent[0].args.size() == 1 &&
      c.succedent[0].args[0].is_var())
    return 0;
  return std::nullopt;
}

std::optional<Atom> select(const Clause& c) {
  if (auto i = selected_index(c)) return c.antecedent[*i];
  return std::nullopt;
}

std::optional<Clause> ordered_resolve(const Clause& c1, const Clause& c2, std::size_t index,
                                      const Precedence& prec, Substitution* mgu) {
  if (c1.succedent.size() != 1 || index >= c2.antecedent.size()) return std::nullopt;
  if (selected_index(c1)) return std::nullopt;
  auto sel2 = selected_index(c2);
  if (sel2 && *sel2 != index) return std::nullopt;
  auto sigma = unify(c1.succedent[0], c2.antecedent[index]);
  if (!sigma) return std::nullopt;

  Atom a = sigma->apply(c1.succedent[0]);
  for (const auto& l : c1.antecedent) {
    Order o = kbo_compare(a, sigma->apply(l), prec);
    if (o == Order::Less || o == Order::Equal) return std::nullopt;
  }
  if (!sel2) {
    for (std::size_t k = 0; k < c2.antecedent.size(); ++k)
      if (k != index && kbo_compare(a, sigma->apply(c2.antecedent[k]), prec) == Order::Less) return std::nullopt;
    for (const auto& l : c2.succedent)
      if (kbo_compare(a, sigma->apply(l), prec) == Order::Less) return std::nullopt;
  }

  Clause out;
  for (std::size_t k = 0; k < c2.antecedent.size(); ++k) {
    if (k == index) {
      for (const auto& l : c1.antecedent) out.antecedent.push_back(sigma->apply(l));
    } else {
      out.antecedent.push_back(sigma->apply(c2.antecedent[k]));
    }
  }
  for (const auto& l : c2.succedent) out.succedent.push_back(sigma->apply(l));
  if (mgu) *mgu = *sigma;
  return out;
}

std::optional<Clause> ordered_factor(const Clause& c, const Precedence& prec) {
  if (c.succedent.size() < 2 || selected_index(c)) return std::nullopt;
  for (std::size_t i = 0; i < c.succedent.size(); ++i)
    for (std::size_t j = i + 1; j < c.succedent.size(); ++j) {
      auto sigma = unify(c.succedent[i], c.succedent[j]);
      if (!sigma) continue;
      Clause out = sigma->apply(c);
      out.succedent.erase(out.succedent.begin() + static_cast<std::ptrdiff_t>(j));
      const Atom& a = out.succedent[i];
      bool maximal = true;
      for (const auto& l : out.antecedent) {
        Order o = kbo_compare(a, l, prec);
        maximal = maximal && o != Order::Less && o != Order::Equal;
      }
      for (std::size_t k = 0; k < out.succedent.size(); ++k)
        maximal = maximal && (k == i || kbo_compare(a, out.succedent[k], prec) != Order::Less);
      if (maximal) return out;
    }
  return std::nullopt;
}

Clause condense(const Clause& c) {
  Clause out = remove_duplicate_literals(c);
  bool changed = true;
  while (changed) {
    changed = false;
    // Count occurrences of each variable and those as a monadic antecedent argument.
    std::map<std::string, std::size_t> total, direct;
    std::map<std::string, std::set<std::string>> preds;
    std::vector<std::string> all;
    for (const auto& a : out.antecedent) {
      a.collect_vars(all);
      if (a.args.size() == 1 && a.args[0].is_var()) {
        ++direct[a.args[0].name()];
        preds[a.args[0].name()].insert(a.predicate);
      }
    }
    for (const auto& a : out.succedent) a.collect_vars(all);
    for (const auto& v : all) ++total[v];
    for (const auto& v : out.vars()) {
      if (!direct.count(v) || direct[v] != total[v]) continue;
      const auto& px = preds[v];
      bool covered = false;
      for (const auto& [y, py] : preds)
        if (y != v && std::includes(py.begin(), py.end(), px.begin(), px.end())) covered = true;
      if (!covered) continue;
      std::vector<Atom> kept;
      for (const auto& a : out.antecedent)
        if (!(a.args.size() == 1 && a.args[0].is_var() && a.args[0].name() == v)) kept.push_back(a);
      out.antecedent = std::move(kept);
      changed = true;
      break;
    }
  }
  return out;
}

bool has_productive_shape(const Clause& c) {
  if (c.succedent.size() != 1 || c.succedent[0].args.size() != 1) return false;
  const Term& t = c.succedent[0].args[0];
  if (t.is_var() || !t.is_shallow() || !t.is_linear()) return false;
  auto ys = t.vars();
  for (const auto& a : c.antecedent) {
    if (a.args.size() != 1 || !a.args[0].is_var()) return false;
    if (std::find(ys.begin(), ys.end(), a.args[0].name()) == ys.end()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// limits, records

SaturationLimits SaturationLimits::parse(const std::string& spec) {
  SaturationLimits out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("bad limit '" + item + "', expected key=value");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error("bad limit value '" + value + "'");
    }
    if (key == "max_clauses") out.max_clauses = n;
    else if (key == "max_iterations") out.max_iterations = n;
    else throw Error("unknown limit '" + key + "'");
  }
  return out;
}

SaturationLimits SaturationLimits::from_env() {
  const char* env = std::getenv("MSLH_LIMITS");
  return env ? parse(env) : SaturationLimits{};
}

std::string InferenceRecord::to_string() const {
  std::string s = std::to_string(id) + ". " + clause.to_string() + " [" + rule;
  if (!parents.empty()) {
    s += ",";
    for (auto p : parents) s += " " + std::to_string(p);
  }
  if (rule == "resolution" || rule == "factoring") s += ", " + mgu.to_string();
  return s + "]";
}

std::string to_string(SaturationStatus s) {
  switch (s) {
    case SaturationStatus::Refutation: return "refutation";
    case SaturationStatus::Saturated: return "saturated";
    case SaturationStatus::ResourceOut: return "resource-out";
  }
  return "?";
}

std::string SaturationResult::trace() const {
  std::string out;
  for (const auto& r : proof) out += r.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// given-clause loop

namespace {

std::size_t weight(const Clause& c) {
  std::size_t w = 0;
  for (const auto& a : c.antecedent) w += a.as_term().size();
  for (const auto& a : c.succedent) w += a.as_term().size();
  return w;
}

class Saturator {
 public:
  Saturator(const Precedence& prec, const SaturationLimits& limits) : prec_(prec), limits_(limits) {}

  SaturationResult run(const ClauseSet& n) {
    for (const auto& c : n) {
      std::size_t id = record(normalize_variables(c), "input", {});
      if (c.is_empty()) return refutation(id);
      enqueue(id);
    }
    std::size_t picks = 0;
    while (!by_age_.empty()) {
      if (result_.stats.iterations >= limits_.max_iterations) return resource_out();
      ++result_.stats.iterations;
      std::size_t id = pick(picks++);
      Clause given = records_[id - 1].clause;

      Clause condensed = condense(given);
      if (condensed.size() != given.size()) {
        ++result_.stats.condensed;
        id = record(normalize_variables(condensed), "condense", {id});
        given = records_[id - 1].clause;
      }
      if (is_tautology(given)) {
        ++result_.stats.tautologies;
        continue;
      }
      if (std::any_of(active_.begin(), active_.end(),
                      [&](std::size_t a) { return subsumes(records_[a - 1].clause, given); })) {
        ++result_.stats.forward_subsumed;
        continue;
      }
      std::vector<std::size_t> kept;
      for (auto a : active_) {
        if (subsumes(given, records_[a - 1].clause)) ++result_.stats.backward_subsumed;
        else kept.push_back(a);
      }
      active_ = std::move(kept);
      active_.push_back(id);

      if (auto empty = generate(id)) return refutation(*empty);
      if (records_.size() > limits_.max_clauses) return resource_out();
    }
    result_.status = SaturationStatus::Saturated;
    for (auto a : active_) result_.clauses.push_back(records_[a - 1].clause);
    result_.stats.active = active_.size();
    return std::move(result_);
  }

 private:
  std::size_t record(Clause c, std::string rule, std::vector<std::size_t> parents,
                     std::optional<std::size_t> literal = std::nullopt, Substitution mgu = {}) {
    InferenceRecord r;
    r.id = records_.size() + 1;
    c.id = r.id;
    c.provenance = rule;
    r.clause = std::move(c);
    r.rule = std::move(rule);
    r.parents = std::move(parents);
    r.literal = literal;
    r.mgu = std::move(mgu);
    records_.push_back(std::move(r));
    return records_.back().id;
  }

  void enqueue(std::size_t id) {
    by_weight_.emplace(weight(records_[id - 1].clause), id);
    by_age_.insert(id);
  }

  std::size_t pick(std::size_t count) {
    std::size_t id;
    if (count % 5 == 4) {
      id = *by_age_.begin();
    } else {
      id = by_weight_.begin()->second;
    }
    by_age_.erase(id);
    by_weight_.erase({weight(records_[id - 1].clause), id});
    return id;
  }

  // Returns the id of an empty clause if one was derived.
  std::optional<std::size_t> generate(std::size_t given) {
    const Clause g = records_[given - 1].clause;
    auto conclude = [&](Clause c, std::string rule, std::vector<std::size_t> parents,
                        std::optional<std::size_t> literal, Substitution mgu) -> std::optional<std::size_t> {
      ++result_.stats.generated;
      std::size_t id = record(normalize_variables(c), std::move(rule), std::move(parents), literal, std::move(mgu));
      if (records_[id - 1].clause.is_empty()) return id;
      if (is_tautology(records_[id - 1].clause)) {
        ++result_.stats.tautologies;
        return std::nullopt;
      }
      enqueue(id);
      return std::nullopt;
    };
    std::vector<std::size_t> partners = active_;
    for (auto other : partners) {
      const Clause o = records_[other - 1].clause;
      // given as the positive premise
      Clause renamed = renamer_.rename(o);
      for (std::size_t j = 0; j < renamed.antecedent.size(); ++j) {
        Substitution mgu;
        if (auto r = ordered_resolve(g, renamed, j, prec_, &mgu))
          if (auto e = conclude(*r, "resolution", {given, other}, j, mgu)) return e;
      }
      if (other == given) continue;
      // given as the negative premise
      Clause renamed_given = renamer_.rename(g);
      for (std::size_t j = 0; j < renamed_given.antecedent.size(); ++j) {
        Substitution mgu;
        if (auto r = ordered_resolve(o, renamed_given, j, prec_, &mgu))
          if (auto e = conclude(*r, "resolution", {other, given}, j, mgu)) return e;
      }
    }
    if (auto f = ordered_factor(g, prec_))
      if (auto e = conclude(*f, "factoring", {given}, std::nullopt, {})) return e;
    return std::nullopt;
  }

  SaturationResult refutation(std::size_t empty) {
    result_.status = SaturationStatus::Refutation;
    std::set<std::size_t> needed;
    std::vector<std::size_t> stack{empty};
    while (!stack.empty()) {
      std::size_t id = stack.back();
      stack.pop_back();
      if (!needed.insert(id).second) continue;
      for (auto p : records_[id - 1].parents) stack.push_back(p);
    }
    for (auto id : needed) result_.proof.push_back(records_[id - 1]);
    result_.stats.active = active_.size();
    return std::move(result_);
  }

  SaturationResult resource_out() {
    result_.status = SaturationStatus::ResourceOut;
    result_.stats.active = active_.size();
    for (auto a : active_) result_.clauses.push_back(records_[a - 1].clause);
    return std::move(result_);
  }

  const Precedence& prec_;
  SaturationLimits limits_;
  SaturationResult result_;
  std::vector<InferenceRecord> records_;
  std::set<std::pair<std::size_t, std::size_t>> by_weight_;
  std::set<std::size_t> by_age_;
  std::vector<std::size_t> active_;
  VariableRenamer renamer_{"V"};
};

}  // namespace

SaturationResult saturate(const ClauseSet& n, const Precedence& prec, const SaturationLimits& limits) {
  return Saturator(prec, limits).run(n);
}

SaturationResult saturate(const ClauseSet& n, const SaturationLimits& limits) {
  return saturate(n, Precedence(Signature::of(n)), limits);
}

bool replay(const InferenceRecord& record, const std::vector<InferenceRecord>& proof, const Precedence& prec) {
  auto premise = [&](std::size_t id) -> const Clause* {
    for (const auto& r : proof)
      if (r.id == id) return &r.clause;
    return nullptr;
  };
  std::optional<Clause> again;
  if (record.rule == "input") return true;
  if (record.rule == "resolution") {
    if (record.parents.size() != 2 || !record.literal) return false;
    const Clause* a = premise(record.parents[0]);
    const Clause* b = premise(record.parents[1]);
    if (!a || !b) return false;
    VariableRenamer renamer("R");
    again = ordered_resolve(*a, renamer.rename(*b), *record.literal, prec);
  } else if (record.rule == "factoring" || record.rule == "condense") {
    if (record.parents.size() != 1) return false;
    const Clause* a = premise(record.parents[0]);
    if (!a) return false;
    again = record.rule == "factoring" ? ordered_factor(*a, prec) : std::optional<Clause>(condense(*a));
  }
  return again && is_variant(*again, record.clause);
}

}  // namespace mslh
