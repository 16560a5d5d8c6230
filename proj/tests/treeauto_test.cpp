#include <gtest/gtest.h>

#include <random>

#include "automata_support.hpp"
#include "mslh/clause_ops.hpp"
#include "mslh/modelbuild.hpp"
#include "mslh/problem.hpp"
#include "mslh/substitution.hpp"
#include "mslh/treeauto.hpp"
#include "test_support.hpp"

namespace mslh {
namespace {

using namespace mslh::testing;

Signature linear_signature() {
  Signature s;
  s.add_function("g", 2);
  s.add_function("a", 0);
  s.add_function("b", 0);
  s.add_predicate("r", 2);
  return s;
}

const SymbolList kLinearOps{{"g", 2}, {"a", 0}, {"b", 0}};

std::vector<Atom> linear_atoms() { return ground_atoms("r", 2, ground_terms(kLinearOps, 2)); }

TEST(FromLinearAtom, LinearAtomAutomaton) {
  auto a = from_linear_atom(parse_atom("r(X,g(a,Y))"), linear_signature());
  std::set<TaRule> rules(a.rules().begin(), a.rules().end());
  std::set<TaRule> expected{{"a", {}, "q1"},           {"b", {}, "q1"},           {"g", {"q1", "q1"}, "q1"},
                            {"a", {}, "q2"},           {"g", {"q2", "q1"}, "q3"}, {"r", {"q1", "q3"}, "q4"}};
  EXPECT_EQ(rules, expected);
  EXPECT_EQ(a.finals(), std::set<std::string>{"q4"});
  EXPECT_TRUE(a.is_predicate_op("r"));
  EXPECT_TRUE(a.accepts(parse_atom("r(b,g(a,a))")));
  EXPECT_FALSE(a.accepts(parse_atom("r(a,g(b,a))")));
}

TEST(FromLinearAtom, LanguageIsGroundInstances) {
  Atom pattern = parse_atom("r(X,g(a,Y))");
  auto a = from_linear_atom(pattern, linear_signature());
  std::size_t hits = 0;
  for (const auto& atom : linear_atoms()) {
    bool inst = match(pattern, atom).has_value();
    hits += inst;
    EXPECT_EQ(a.accepts(atom), inst) << atom;
  }
  EXPECT_GT(hits, 0u);
}

TEST(FromLinearAtom, GroundAtomAndErrors) {
  Signature s;
  s.add_function("a", 0);
  s.add_function("b", 0);
  auto a = from_linear_atom(parse_atom("p(a)"), s);
  EXPECT_TRUE(a.accepts(parse_atom("p(a)")));
  EXPECT_FALSE(a.accepts(parse_atom("p(b)")));
  EXPECT_FALSE(a.accepts(parse_term("a")));
  EXPECT_THROW(from_linear_atom(parse_atom("r(X,X)"), s), AutomatonError);
  EXPECT_THROW(a.accepts(parse_term("h(a)")), AutomatonError);
  EXPECT_THROW(a.accepts(parse_atom("p(X)")), AutomatonError);
}

TEST(Boolean, IntersectWithComplement) {
  Signature s;
  s.add_function("a", 0);
  s.add_function("b", 0);
  s.add_predicate("p", 1);
  auto a = intersect(from_linear_atom(parse_atom("p(X)"), s), complement(from_linear_atom(parse_atom("p(a)"), s)));
  EXPECT_TRUE(a.accepts(parse_atom("p(b)")));
  EXPECT_FALSE(a.accepts(parse_atom("p(a)")));
  EXPECT_FALSE(a.accepts(parse_term("a")));
}

TEST(Boolean, DoubleComplementAndIdempotence) {
  auto a = from_linear_atom(parse_atom("r(X,g(a,Y))"), linear_signature());
  auto cc = complement(complement(a));
  auto aa = intersect(a, a);
  for (const auto& atom : linear_atoms()) {
    EXPECT_EQ(cc.accepts(atom), a.accepts(atom)) << atom;
    EXPECT_EQ(aa.accepts(atom), a.accepts(atom)) << atom;
  }
  for (const auto& t : ground_terms(kLinearOps, 3)) EXPECT_EQ(cc.accepts(t), a.accepts(t));
}

TEST(Boolean, AlphabetMismatch) {
  Signature s;
  s.add_function("a", 0);
  auto a = from_linear_atom(parse_atom("p(X)"), s);
  auto b = from_linear_atom(parse_atom("q(X)"), s);
  EXPECT_THROW(intersect(a, b), AutomatonError);
  EXPECT_THROW(union_of(a, b), AutomatonError);
}

TEST(Emptiness, Examples) {
  TreeAutomaton a;
  a.add_op("a", 0);
  a.add_rule({"a", {}, "q"});
  EXPECT_TRUE(a.is_empty());
  a.add_final("q");
  EXPECT_FALSE(a.is_empty());
  a.add_op("g", 1);
  a.add_final("unreached");
  a.add_rule({"g", {"never"}, "unreached"});
  EXPECT_EQ(a.reachable_states(), std::set<std::string>{"q"});
}

TEST(Rules, RejectUnknownOperatorsAndArity) {
  TreeAutomaton a;
  a.add_op("g", 1);
  EXPECT_THROW(a.add_rule({"h", {}, "q"}), AutomatonError);
  EXPECT_THROW(a.add_rule({"g", {}, "q"}), AutomatonError);
  EXPECT_THROW(a.add_op("g", 2), AutomatonError);
}

// ---------------------------------------------------------------------------
// ADC / IG / AMC

Signature ab_p() {
  Signature s;
  s.add_function("a", 0);
  s.add_function("b", 0);
  s.add_predicate("p", 1);
  s.add_predicate("r", 2);
  return s;
}

TEST(Adc, ToIgExamples) {
  auto g = adc_to_ig({parse_atom("p(X,Y)"), {{"X", parse_term("f(Z)")}}});
  EXPECT_EQ(g.atom, parse_atom("p(X,Y)"));
  ASSERT_EQ(g.blocking.size(), 1u);
  EXPECT_EQ(g.blocking[0], parse_atom("p(f(Z),Y)"));

  EXPECT_TRUE(adc_to_ig({parse_atom("p(X)"), {}}).blocking.empty());

  auto h = adc_to_ig({parse_atom("r(X,Y)"), {{"X", parse_term("a")}, {"Y", parse_term("b")}}});
  ASSERT_EQ(h.blocking.size(), 2u);
  EXPECT_EQ(h.blocking[0], parse_atom("r(a,Y)"));
  EXPECT_EQ(h.blocking[1], parse_atom("r(X,b)"));
  auto ta = ig_to_ta(h, ab_p());
  std::vector<Atom> accepted;
  for (const auto& atom : ground_atoms("r", 2, {C("a"), C("b")}))
    if (ta.accepts(atom)) accepted.push_back(atom);
  EXPECT_EQ(accepted, std::vector<Atom>{parse_atom("r(b,a)")});
}

TEST(Adc, Validation) {
  EXPECT_THROW(validate({parse_atom("r(X,X)"), {}}), AutomatonError);
  EXPECT_THROW(validate({parse_atom("p(X)"), {{"Y", parse_term("a")}}}), AutomatonError);
  EXPECT_THROW(validate({parse_atom("p(X)"), {{"X", parse_term("a")}, {"X", parse_term("b")}}}), AutomatonError);
  EXPECT_THROW(validate({parse_atom("r(X,Y)"), {{"X", parse_term("f(Y)")}}}), AutomatonError);
  EXPECT_THROW(validate({parse_atom("p(X)"), {{"X", parse_term("f(Z,Z)")}}}), AutomatonError);
  EXPECT_NO_THROW(validate({parse_atom("r(X,Y)"), {{"X", parse_term("f(Z)")}}}));
}

TEST(Ig, Examples) {
  auto s = ab_p();
  auto a = ig_to_ta({parse_atom("p(X)"), {parse_atom("p(a)")}}, s);
  EXPECT_TRUE(a.accepts(parse_atom("p(b)")));
  EXPECT_FALSE(a.accepts(parse_atom("p(a)")));

  SymbolList ops{{"a", 0}, {"b", 0}, {"g", 1}};
  Signature sg = s;
  sg.add_function("g", 1);
  auto atoms = ground_atoms("r", 2, ground_terms(ops, 2));
  auto plain = from_linear_atom(parse_atom("r(X,g(Y))"), sg);
  auto open = ig_to_ta({parse_atom("r(X,g(Y))"), {}}, sg);
  auto closed = ig_to_ta({parse_atom("r(X,g(Y))"), {parse_atom("r(X,g(Y))")}}, sg);
  EXPECT_TRUE(closed.is_empty());
  for (const auto& atom : atoms) {
    EXPECT_EQ(open.accepts(atom), plain.accepts(atom)) << atom;
    EXPECT_FALSE(closed.accepts(atom));
  }
}

// Ground instances of an ADC, read directly off its definition.
bool adc_generates(const Adc& d, const Atom& ground) {
  auto sigma = match(d.atom, ground);
  if (!sigma) return false;
  for (const auto& [x, t] : d.constraints)
    if (match(t, *sigma->lookup(x))) return false;
  return true;
}

bool ig_generates(const Ig& g, const Atom& ground) {
  if (!match(g.atom, ground)) return false;
  for (const auto& b : g.blocking)
    if (match(b, ground)) return false;
  return true;
}

TEST(IgProperty, AgreesWithInstanceFiltering) {
  SymbolList ops{{"a", 0}, {"g", 1}, {"f", 2}};
  Signature sig;
  for (const auto& [f, n] : ops) sig.add_function(f, n);
  sig.add_predicate("r", 2);
  auto atoms = ground_atoms("r", 2, ground_terms(ops, 1));
  std::vector<Adc> adcs{
      {parse_atom("r(X,Y)"), {{"X", parse_term("a")}}},
      {parse_atom("r(X,g(Y))"), {{"X", parse_term("f(U,V)")}, {"Y", parse_term("a")}}},
      {parse_atom("r(f(X,Y),Z)"), {{"Y", parse_term("g(U)")}, {"Z", parse_term("a")}}},
      {parse_atom("r(X,Y)"), {{"X", parse_term("g(g(U))")}, {"Y", parse_term("f(U,V)")}}},
  };
  for (const auto& d : adcs) {
    Ig g = adc_to_ig(d);
    auto ta = ig_to_ta(g, sig);
    for (const auto& atom : atoms) {
      EXPECT_EQ(adc_generates(d, atom), ig_generates(g, atom)) << atom;
      EXPECT_EQ(ta.accepts(atom), ig_generates(g, atom)) << atom;
    }
  }
}

TreeAutomaton parity() {
  return TreeAutomaton::from_text(
      "ops: c/0 g/1\n"
      "final: even\n"
      "c -> even\n"
      "g(even) -> odd\n"
      "g(odd) -> even\n");
}

TEST(Amc, ParityExample) {
  Signature s;
  s.add_function("c", 0);
  s.add_function("g", 1);
  auto a = amc_to_ta({parse_atom("p(X)"), "X", parity()}, s);
  EXPECT_TRUE(a.accepts(parse_atom("p(c)")));
  EXPECT_FALSE(a.accepts(parse_atom("p(g(c))")));
  EXPECT_TRUE(a.accepts(parse_atom("p(g(g(c)))")));
  EXPECT_FALSE(a.accepts(parse_atom("p(g(g(g(c))))")));
}

TEST(Amc, UniversalAndEmptyConstraints) {
  SymbolList ops{{"c", 0}, {"g", 1}, {"f", 2}};
  Signature s;
  for (const auto& [f, n] : ops) s.add_function(f, n);
  TreeAutomaton all = TreeAutomaton::from_text("ops: c/0 g/1 f/2\nfinal: u\nc -> u\ng(u) -> u\nf(u,u) -> u\n");
  TreeAutomaton none = TreeAutomaton::from_text("ops: c/0 g/1 f/2\nfinal:\nc -> u\n");
  Atom atom = parse_atom("r(X,f(Y,c))");
  auto plain = from_linear_atom(atom, s);
  auto with_all = amc_to_ta({atom, "Y", all}, s);
  auto with_none = amc_to_ta({atom, "Y", none}, s);
  EXPECT_TRUE(with_none.is_empty());
  for (const auto& g : ground_atoms("r", 2, ground_terms(ops, 2))) {
    EXPECT_EQ(with_all.accepts(g), plain.accepts(g)) << g;
    EXPECT_FALSE(with_none.accepts(g));
  }
  EXPECT_THROW(amc_to_ta({atom, "Z", all}, s), AutomatonError);
  EXPECT_THROW(amc_to_ta({atom, "X", TreeAutomaton::from_text("ops: h/1\nfinal:\n")}, s), AutomatonError);
}

TEST(Amc, ConstraintInsideTerm) {
  Signature s;
  s.add_function("c", 0);
  s.add_function("g", 1);
  s.add_function("f", 2);
  auto a = amc_to_ta({parse_atom("p(f(X,Y))"), "X", parity()}, s);
  EXPECT_TRUE(a.accepts(parse_atom("p(f(g(g(c)),g(c)))")));
  EXPECT_FALSE(a.accepts(parse_atom("p(f(g(c),c))")));
  EXPECT_FALSE(a.accepts(parse_atom("p(f(f(c,c),c))")));
}

// ---------------------------------------------------------------------------
// MSLH emission

TEST(TaToMslh, LinearAtomClauses) {
  auto a = from_linear_atom(parse_atom("r(X,g(a,Y))"), linear_signature());
  std::map<std::string, std::string> names;
  ClauseSet n = ta_to_mslh(a, &names);
  EXPECT_TRUE(equal_modulo_renaming(n, parse_clauses("q1(a). q1(b). ~q1(X) | ~q1(Y) | q1(g(X,Y)). q2(a)."
                                                     "~q2(X) | ~q1(Y) | q3(g(X,Y)). ~q1(X) | ~q3(Y) | q4(f_r(X,Y)).")))
      << print_clauses(n);
  EXPECT_EQ(n.size(), 6u);
  EXPECT_TRUE(is_mslh(n));
  EXPECT_EQ(names.at("q4"), "q4");
}

TEST(TaToMslh, RoundTripThroughMinimalModel) {
  auto a = from_linear_atom(parse_atom("r(X,g(a,Y))"), linear_signature());
  ClauseSet n = ta_to_mslh(a);
  std::size_t hits = 0;
  for (const auto& atom : linear_atoms()) {
    Term t = F("f_r", atom.args);
    bool in = ground_membership(n, Atom("q4", {t}));
    hits += in;
    EXPECT_EQ(in, a.accepts(atom)) << atom;
  }
  EXPECT_GT(hits, 0u);
  for (const auto& t : ground_terms(kLinearOps, 3)) {
    EXPECT_EQ(ground_membership(n, Atom("q1", {t})), true);
    EXPECT_EQ(ground_membership(n, Atom("q3", {t})), a.run(t).count("q3") > 0) << t;
  }
}

TEST(TaToMslh, EmptyAndUnusableNames) {
  TreeAutomaton empty;
  empty.add_op("a", 0);
  EXPECT_TRUE(ta_to_mslh(empty).empty());

  Signature s = ab_p();
  auto c = complement(from_linear_atom(parse_atom("p(a)"), s));
  std::map<std::string, std::string> names;
  ClauseSet n = ta_to_mslh(c, &names);
  EXPECT_TRUE(is_mslh(n));
  for (const auto& [q, p] : names) EXPECT_EQ(p.rfind("st", 0), 0u) << q;
  for (const auto& t : {parse_term("a"), parse_term("p(a)"), parse_term("p(b)")}) {
    bool acc = false;
    for (const auto& q : c.finals()) {
      Term u = t.name() == "p" ? F("f_p", t.args()) : t;
      acc = acc || ground_membership(n, Atom(names.at(q), {u}));
    }
    EXPECT_EQ(acc, c.accepts(t)) << t;
  }
}

// ---------------------------------------------------------------------------
// text format

TEST(Text, RoundTrip) {
  auto a = from_linear_atom(parse_atom("r(X,g(a,Y))"), linear_signature());
  std::string text = a.to_text();
  EXPECT_EQ(text,
            "ops: g/2 a/0 b/0 r/2\npreds: r\nfinal: q4\n"
            "g(q1,q1) -> q1\na -> q1\nb -> q1\na -> q2\ng(q2,q1) -> q3\nr(q1,q3) -> q4\n");
  auto b = TreeAutomaton::from_text(text);
  EXPECT_EQ(b.to_text(), text);
  auto c = complement(a);
  EXPECT_EQ(TreeAutomaton::from_text(c.to_text()).to_text(), c.to_text());
}

TEST(Text, CommentsAndErrors) {
  auto a = TreeAutomaton::from_text("% parity\nops: c/0 g/1   % two ops\n\nfinal: e\nc -> e\ng(e) -> o\ng(o)->e\n");
  EXPECT_TRUE(a.accepts(parse_term("g(g(c))")));
  EXPECT_THROW(TreeAutomaton::from_text("ops: c\n"), AutomatonError);
  EXPECT_THROW(TreeAutomaton::from_text("ops: c/x\n"), AutomatonError);
  EXPECT_THROW(TreeAutomaton::from_text("ops: c/0\nd -> q\n"), AutomatonError);
  EXPECT_THROW(TreeAutomaton::from_text("ops: c/0\nc -> \n"), AutomatonError);
  EXPECT_THROW(TreeAutomaton::from_text("ops: g/1\ng(q -> q\n"), AutomatonError);
  EXPECT_THROW(TreeAutomaton::from_text("ops: g/1\ng(q,q) -> q\n"), AutomatonError);
  EXPECT_THROW(TreeAutomaton::from_text("ops: g/1\npreds: h\n"), AutomatonError);
  try {
    TreeAutomaton::from_text("ops: c/0\n\nbogus\n");
    FAIL();
  } catch (const AutomatonError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

// ---------------------------------------------------------------------------
// properties

TEST(BooleanProperty, LanguageLawsOnRandomAutomata) {
  std::mt19937 rng(41);
  SymbolList ops{{"a", 0}, {"g", 1}, {"f", 2}};
  auto terms = ground_terms(ops, 3);
  for (int round = 0; round < 50; ++round) {
    auto a = random_automaton(rng, ops, 3);
    auto b = random_automaton(rng, ops, 3);
    auto i = intersect(a, b), u = union_of(a, b), c = complement(a);
    for (const auto& t : terms) {
      bool x = a.accepts(t), y = b.accepts(t);
      ASSERT_EQ(i.accepts(t), x && y) << t << "\n" << a.to_text() << b.to_text();
      ASSERT_EQ(u.accepts(t), x || y) << t;
      ASSERT_EQ(c.accepts(t), !x) << t << "\n" << a.to_text();
    }
  }
}

TEST(EmptinessProperty, AgreesWithBoundedSearch) {
  std::mt19937 rng(43);
  SymbolList ops{{"a", 0}, {"g", 1}, {"f", 2}};
  std::size_t empty = 0;
  for (int round = 0; round < 60; ++round) {
    auto a = random_automaton(rng, ops, 3, 8);
    bool found = false;
    for (const auto& t : ground_terms(ops, a.states().size())) found = found || a.accepts(t);
    empty += !found;
    EXPECT_EQ(a.is_empty(), !found) << a.to_text();
  }
  EXPECT_GT(empty, 5u);
}

}  // namespace
}  // namespace mslh
