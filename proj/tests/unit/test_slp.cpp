#include "doctest.h"
#include "repsat/measure.hpp"
#include "repsat/oracle.hpp"
#include "repsat/slp.hpp"
#include "repsat/words.hpp"

using namespace repsat;

namespace {

using F = GrammarParsing::Factor;

/// The parsing a, b, a, ab, ab, a, ab, aab of abaababaabaab.
GrammarParsing sample_parsing() {
  GrammarParsing gp;
  gp.factors = {F{{1, 1}, {}},  F{{2, 1}, {}}, F{{3, 1}, {}}, F{{4, 2}, 1},
                F{{6, 2}, 1},   F{{8, 1}, {}}, F{{9, 2}, 1},  F{{11, 3}, 8}};
  gp.internal_nodes = {{1, 2}, {8, 3}};
  return gp;
}

/// X9 -> X6 X8, X8 -> X7 X7, X7 -> X1 X3, X6 -> X4 X5, X5 -> X3 X3, X4 -> X3 X1,
/// X3 -> X1 X2, X2 -> b, X1 -> a (index k is X(k+1)).
Slp nine_rules() {
  Slp s;
  s.rules = {Slp::Terminal{'a'}, Slp::Terminal{'b'}, Slp::Pair{0, 1}, Slp::Pair{2, 0}, Slp::Pair{2, 2},
             Slp::Pair{3, 4},    Slp::Pair{0, 2},   Slp::Pair{6, 6}, Slp::Pair{5, 7}};
  s.start = 8;
  return s;
}

}  // namespace

TEST_SUITE("slp") {
  TEST_CASE("nine-rule SLP for abaababaabaab") {
    const Text t("abaababaabaab");
    CHECK(verify_slp(t, nine_rules()));
    Slp wrong = nine_rules();
    wrong.rules[7] = Slp::Pair{6, 5};
    CHECK_FALSE(verify_slp(t, wrong));
    Slp cyclic = nine_rules();
    cyclic.rules[2] = Slp::Pair{0, 8};
    CHECK_FALSE(verify_slp(t, cyclic));
    Slp dangling = nine_rules();
    dangling.rules[4] = Slp::Pair{2, 12};
    CHECK_FALSE(verify_slp(t, dangling));
    CHECK_FALSE(verify_slp(Text("abaababaabaa"), nine_rules()));
  }

  TEST_CASE("sample parsing becomes a 9-rule SLP") {
    const Text t("abaababaabaab");
    const GrammarParsing gp = sample_parsing();
    CHECK_FALSE(check_grammar_parsing(t, gp).has_value());
    CHECK(gp.size() == 8);
    const Slp s = parsing_to_slp(t, gp);
    CHECK(s.size() == 9);
    CHECK(verify_slp(t, s));
  }

  TEST_CASE("parsing invariants") {
    const Text t("abaababaabaab");
    GrammarParsing late = sample_parsing();
    late.factors[7].ref = 11;
    CHECK(check_grammar_parsing(t, late).has_value());
    GrammarParsing mismatch = sample_parsing();
    mismatch.factors[3].ref = 2;
    CHECK(check_grammar_parsing(t, mismatch).has_value());
    GrammarParsing gap = sample_parsing();
    gap.factors.pop_back();
    CHECK(check_grammar_parsing(t, gap).has_value());
    GrammarParsing single = sample_parsing();
    // [4,6) is one factor, so it cannot be an internal node.
    single.factors[4].ref = 4;
    single.internal_nodes = {{1, 2}, {4, 2}, {8, 3}};
    CHECK(check_grammar_parsing(t, single).has_value());
  }

  TEST_CASE("unaligned reference is rejected") {
    // a, b, ab -> 1, ba -> 2: the interval [2,4) ends inside the factor ab.
    const Text t("ababba");
    GrammarParsing gp;
    gp.factors = {F{{1, 1}, {}}, F{{2, 1}, {}}, F{{3, 2}, 1}, F{{5, 2}, 2}};
    gp.internal_nodes = {{1, 2}, {2, 2}};
    CHECK(check_grammar_parsing(t, gp).has_value());
  }

  TEST_CASE("crossing intervals are rejected") {
    // a, b, c, ab -> 1, bc -> 2: the intervals [1,3) and [2,4) overlap without nesting.
    const Text t("abcabbc");
    GrammarParsing gp;
    gp.factors = {F{{1, 1}, {}}, F{{2, 1}, {}}, F{{3, 1}, {}}, F{{4, 2}, 1}, F{{6, 2}, 2}};
    gp.internal_nodes = {{1, 2}, {2, 2}};
    const auto why = check_grammar_parsing(t, gp);
    REQUIRE(why.has_value());
  }

  TEST_CASE("morphic words") {
    struct Row {
      const char* name;
      int g;
    };
    for (const Row& row : {Row{"fibonacci.04", 6}, Row{"fibonacci.05", 7}, Row{"thuemorse.03", 7},
                           Row{"thuemorse.04", 9}}) {
      const Text t(*morphic_word(row.name));
      const MeasureResult r = compute_measure(Measure::G, t);
      INFO(row.name);
      REQUIRE(r.ok());
      CHECK(r.value == row.g);
    }
  }

  TEST_CASE("small texts") {
    const MeasureResult one = compute_measure(Measure::G, Text("a"));
    REQUIRE(one.ok());
    CHECK(one.value == 1);
    // abab: a, b, ab -> 1; the last factor copies the adjacent first half.
    const MeasureResult abab = compute_measure(Measure::G, Text("abab"));
    REQUIRE(abab.ok());
    CHECK(abab.value == 4);
    CHECK(brute_g(Text("abab")) == 4);
    const auto& w = std::get<SlpWitness>(abab.witness->payload);
    REQUIRE(w.parsing.has_value());
    CHECK(w.parsing->size() == 3);
  }

  TEST_CASE("formula layout") {
    const Text t("abab");
    const Formula f = encode_slp(t);
    for (int i = 1; i <= 5; ++i) CHECK(f.var(SemanticVar::p(i)) == i);
    CHECK(f.frozen() == std::vector<Lit>{1, 5});
    CHECK(f.soft().size() == 4);
    CHECK(f.find(SemanticVar::ref(1, 3, 2)).has_value());
    CHECK_FALSE(f.find(SemanticVar::ref(2, 3, 2)).has_value());
  }

  TEST_CASE("decoded parsing mutation is rejected") {
    const Text t(fibonacci_word(5));
    const Formula f = encode_slp(t);
    const SolveResult s = solve(f, SolverBackend::builtin());
    REQUIRE(s.optimal());
    const GrammarParsing gp = decode_grammar_parsing(t, f, s.assignment);
    CHECK(gp.size() == 6);
    const Slp slp = parsing_to_slp(t, gp);
    CHECK(verify_slp(t, slp));
    // Swap the children of the start rule.
    Slp swapped = slp;
    auto& root = std::get<Slp::Pair>(swapped.rules[swapped.start]);
    std::swap(root.left, root.right);
    CHECK_FALSE(verify_slp(t, swapped));
    // Flipping a boundary variable breaks the assignment.
    Assignment broken = s.assignment;
    const VarId p2 = f.var(SemanticVar::p(2));
    broken.set(p2, !broken.value(p2));
    CHECK_THROWS_AS(decode_grammar_parsing(t, f, broken), InvalidAssignment);
  }
}
