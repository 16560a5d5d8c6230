#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <random>
#include <set>

#include "mslh/clause_ops.hpp"
#include "mslh/problem.hpp"
#include "mslh/saturate.hpp"
#include "test_support.hpp"

namespace mslh {
namespace {

using namespace mslh::testing;

const char* kIntroApprox =
    "t(f_r_rfl(X,Y)).\n"
    "~t(f_r_irr(g(X),g(Y))) | t(f_r_irr(X,Y)).\n"
    "~t(f_r_irr(g(X),c)).\n";

Precedence precedence_of(const ClauseSet& n) { return Precedence(Signature::of(n)); }

TEST(Select, Examples) {
  EXPECT_EQ(select(parse_clause("~t(f_irr(g(X),g(Y))) | t(f_irr(X,Y))")), parse_atom("t(f_irr(g(X),g(Y)))"));
  EXPECT_FALSE(select(parse_clause("~p(X) | s(f(X,Y))")));
  EXPECT_EQ(select(parse_clause("~p(X) | ~q(X) | s(X)")), parse_atom("p(X)"));
  EXPECT_EQ(select(parse_clause("~p(X) | ~q(Z) | s(f(X,Y))")), parse_atom("q(Z)"));
  EXPECT_FALSE(select(parse_clause("p(a)")));
}

TEST(Resolve, IntroductionRefutationStep) {
  Substitution mgu;
  auto r = ordered_resolve(parse_clause("t(f_r(X,Y))"), parse_clause("~t(f_r(g(V),c))"), 0,
                           precedence_of(parse_clauses(kIntroApprox)), &mgu);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->is_empty());
  EXPECT_EQ(*mgu.lookup("X"), parse_term("g(V)"));
  EXPECT_EQ(*mgu.lookup("Y"), parse_term("c"));
}

TEST(Resolve, DistinctRelationFunctionsDoNotResolve) {
  EXPECT_FALSE(ordered_resolve(parse_clause("t(f_r_rfl(X,Y))"), parse_clause("~t(f_r_irr(g(V),c))"), 0,
                               precedence_of(parse_clauses(kIntroApprox))));
}

TEST(Resolve, GroundUnit) {
  auto r = ordered_resolve(parse_clause("p(a)"), parse_clause("~p(X)"), 0, precedence_of(parse_clauses("p(a).")));
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->is_empty());
}

TEST(Resolve, RespectsMaximality) {
  ClauseSet n = parse_clauses("p(a). ~p(X) | r(f(X,Y)).");
  Precedence prec = precedence_of(n);
  // p(X) is below r(f(X,Y)), so it is not eligible.
  EXPECT_FALSE(ordered_resolve(n[0], parse_clause("~p(V) | r(f(V,W))"), 0, prec));
  // The positive premise must be strictly maximal.
  EXPECT_FALSE(ordered_resolve(parse_clause("~p(f(X,X)) | p(X)"), parse_clause("~p(V)"), 0, prec));
}

TEST(Factor, Examples) {
  Precedence prec = precedence_of(parse_clauses("p(a). q(a)."));
  EXPECT_FALSE(ordered_factor(parse_clause("~p(X) | p(f(X,X))"), prec));
  auto f = ordered_factor(parse_clause("p(X) | p(a)"), prec);
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->same_literals(parse_clause("p(a)")));
  EXPECT_FALSE(ordered_factor(parse_clause("p(X) | q(a)"), prec));
}

TEST(Condense, DropsCoveredVariables) {
  EXPECT_TRUE(condense(parse_clause("~p(X) | ~p(Y) | ~q(Y)")).same_literals(parse_clause("~p(Y) | ~q(Y)")));
  EXPECT_TRUE(condense(parse_clause("~p(X) | ~p(Y) | s(f(X,Y))")).same_literals(parse_clause("~p(X) | ~p(Y) | s(f(X,Y))")));
  EXPECT_EQ(condense(parse_clause("~p(X) | ~p(Y)")).antecedent.size(), 1u);
}

TEST(Saturate, IntroApproxIsAlreadySaturated) {
  ClauseSet n = parse_clauses(kIntroApprox);
  auto res = saturate(n);
  EXPECT_EQ(res.status, SaturationStatus::Saturated);
  EXPECT_EQ(res.stats.generated, 0u);
  EXPECT_TRUE(equal_modulo_renaming(res.clauses, n));
}

TEST(Saturate, IntroductionApproximationIsRefuted) {
  auto res = saturate(parse_clauses("t(f_r(X,Y)). ~t(f_r(g(X),g(Y))) | t(f_r(X,Y)). ~t(f_r(g(X),c))."));
  EXPECT_EQ(res.status, SaturationStatus::Refutation);
  ASSERT_FALSE(res.proof.empty());
  EXPECT_TRUE(res.proof.back().clause.is_empty());
}

TEST(Saturate, UnitRefutation) {
  auto res = saturate(parse_clauses("p(a). ~p(X)."));
  EXPECT_EQ(res.status, SaturationStatus::Refutation);
  EXPECT_EQ(res.stats.generated, 1u);
  EXPECT_EQ(res.proof.size(), 3u);
  EXPECT_NE(res.trace().find("3. false [resolution, 1 2, {"), std::string::npos) << res.trace();
}

TEST(Saturate, EmptyInputClause) {
  EXPECT_EQ(saturate(parse_clauses("p(a). false.")).status, SaturationStatus::Refutation);
}

TEST(Saturate, ResourceLimit) {
  ClauseSet n = parse_clauses("p(a). ~p(X).");
  SaturationLimits tiny;
  tiny.max_iterations = 1;
  EXPECT_EQ(saturate(n, tiny).status, SaturationStatus::ResourceOut);
}

TEST(Limits, ParseAndEnvironment) {
  auto l = SaturationLimits::parse("max_clauses=10,max_iterations=20");
  EXPECT_EQ(l.max_clauses, 10u);
  EXPECT_EQ(l.max_iterations, 20u);
  EXPECT_EQ(SaturationLimits::parse("max_iterations=5").max_clauses, SaturationLimits{}.max_clauses);
  EXPECT_THROW(SaturationLimits::parse("steps=3"), Error);
  EXPECT_THROW(SaturationLimits::parse("max_clauses=x"), Error);
  setenv("MSLH_LIMITS", "max_clauses=7", 1);
  EXPECT_EQ(SaturationLimits::from_env().max_clauses, 7u);
  unsetenv("MSLH_LIMITS");
  EXPECT_EQ(SaturationLimits::from_env().max_clauses, SaturationLimits{}.max_clauses);
}

// ---------------------------------------------------------------------------
// properties

// Truth-table satisfiability of a ground Horn set.
bool ground_satisfiable(const ClauseSet& n) {
  std::vector<Atom> atoms;
  for (const auto& c : n)
    for (const auto& l : c.literals())
      if (std::find(atoms.begin(), atoms.end(), l.atom) == atoms.end()) atoms.push_back(l.atom);
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    auto val = [&](const Atom& a) {
      return (mask >> (std::find(atoms.begin(), atoms.end(), a) - atoms.begin())) & 1;
    };
    bool all = true;
    for (const auto& c : n) {
      bool sat = false;
      for (const auto& a : c.antecedent) sat = sat || !val(a);
      for (const auto& a : c.succedent) sat = sat || val(a);
      all = all && sat;
    }
    if (all) return true;
  }
  return false;
}

TEST(SaturateProperty, GroundHornSoundAndComplete) {
  std::mt19937 rng(31);
  std::vector<Atom> pool{parse_atom("p(a)"), parse_atom("p(b)"), parse_atom("q(a)"), parse_atom("q(f(a))"),
                         parse_atom("r(a,b)"), parse_atom("r(b,b)")};
  std::size_t unsat = 0;
  for (int round = 0; round < 100; ++round) {
    ClauseSet n;
    for (std::size_t k = 2 + pick(rng, 6); k > 0; --k) {
      Clause c;
      for (std::size_t l = pick(rng, 3); l > 0; --l) c.antecedent.push_back(pool[pick(rng, pool.size())]);
      if (c.antecedent.empty() || pick(rng, 3)) c.succedent.push_back(pool[pick(rng, pool.size())]);
      n.push_back(c);
    }
    auto res = saturate(n);
    ASSERT_NE(res.status, SaturationStatus::ResourceOut);
    bool sat = ground_satisfiable(n);
    unsat += !sat;
    EXPECT_EQ(res.status == SaturationStatus::Refutation, !sat) << print_clauses(n);
  }
  EXPECT_GT(unsat, 10u);
}

TEST(SaturateProperty, MslhTerminatesWithShapedProductiveClauses) {
  std::mt19937 rng(37);
  SymbolList funcs{{"a", 0}, {"g", 1}, {"f", 2}};
  std::vector<std::string> preds{"p", "q", "s"};
  std::size_t refuted = 0, saturated = 0;
  for (int round = 0; round < 150; ++round) {
    ClauseSet n;
    for (std::size_t k = 2 + pick(rng, 5); k > 0; --k) n.push_back(random_mslh_clause(rng, preds, funcs));
    auto res = saturate(n);
    ASSERT_NE(res.status, SaturationStatus::ResourceOut) << print_clauses(n);
    Precedence prec = precedence_of(n);
    if (res.status == SaturationStatus::Refutation) {
      ++refuted;
      for (const auto& r : res.proof) EXPECT_TRUE(replay(r, res.proof, prec)) << r.to_string();
      continue;
    }
    ++saturated;
    for (const auto& c : res.clauses) {
      if (selected_index(c) || c.succedent.empty() || c.succedent[0].args[0].is_var()) continue;
      EXPECT_TRUE(has_productive_shape(c)) << c << " in saturation of\n" << print_clauses(n);
    }
  }
  EXPECT_GT(refuted, 10u);
  EXPECT_GT(saturated, 10u);
}

}  // namespace
}  // namespace mslh
