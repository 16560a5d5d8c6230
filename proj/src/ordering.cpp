#include "mslh/ordering.hpp"

#include <vector>

namespace mslh {

const char* to_string(Order o) {
  switch (o) {
    case Order::Less: return "Less";
    case Order::Equal: return "Equal";
    case Order::Greater: return "Greater";
    case Order::Incomparable: return "Incomparable";
  }
  return "?";
}

Precedence::Precedence(const Signature& sig) {
  for (const auto& s : sig.declaration_order()) append(s);
}

void Precedence::append(const std::string& symbol) {
  rank_.emplace(symbol, static_cast<int>(rank_.size()));
}

int Precedence::compare(const std::string& f, const std::string& g) const {
  if (f == g) return 0;
  auto i = rank_.find(f), j = rank_.find(g);
  bool fk = i != rank_.end(), gk = j != rank_.end();
  if (fk && gk) return i->second < j->second ? -1 : 1;
  if (fk != gk) return fk ? -1 : 1;
  return f < g ? -1 : 1;
}

namespace {

void count_vars(const Term& t, std::map<std::string, int>& counts, int sign) {
  if (t.is_var()) {
    counts[t.name()] += sign;
    return;
  }
  for (const auto& a : t.args()) count_vars(a, counts, sign);
}

// Sign of #x(s) - #x(t) over all variables: s dominates if no entry is
// negative, t dominates if no entry is positive.
struct VarBalance {
  bool s_covers = true;
  bool t_covers = true;
};

VarBalance var_balance(const Term& s, const Term& t) {
  std::map<std::string, int> diff;
  count_vars(s, diff, +1);
  count_vars(t, diff, -1);
  VarBalance b;
  for (const auto& [v, d] : diff) {
    if (d < 0) b.s_covers = false;
    if (d > 0) b.t_covers = false;
  }
  return b;
}

Order kbo(const Term& s, const Term& t, const Precedence& prec) {
  if (s == t) return Order::Equal;
  const VarBalance vb = var_balance(s, t);
  const auto ws = s.size(), wt = t.size();
  auto greater = [&] { return vb.s_covers ? Order::Greater : Order::Incomparable; };
  auto less = [&] { return vb.t_covers ? Order::Less : Order::Incomparable; };
  if (ws > wt) return greater();
  if (ws < wt) return less();
  // Equal weight. A variable then only faces a constant or another variable.
  if (s.is_var() || t.is_var()) return Order::Incomparable;
  int c = prec.compare(s.name(), t.name());
  if (c > 0) return greater();
  if (c < 0) return less();
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (s.args()[i] == t.args()[i]) continue;
    switch (kbo(s.args()[i], t.args()[i], prec)) {
      case Order::Greater: return greater();
      case Order::Less: return less();
      default: return Order::Incomparable;
    }
  }
  return Order::Equal;
}

}  // namespace

Order kbo_compare(const Term& s, const Term& t, const Precedence& prec) { return kbo(s, t, prec); }

Order kbo_compare(const Atom& a, const Atom& b, const Precedence& prec) {
  return kbo(a.as_term(), b.as_term(), prec);
}

}  // namespace mslh
