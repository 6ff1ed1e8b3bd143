#include "doctest.h"
#include "repsat/bms.hpp"
#include "repsat/measure.hpp"
#include "repsat/oracle.hpp"
#include "repsat/words.hpp"

using namespace repsat;

namespace {

using G = BmsScheme::Ground;
using C = BmsScheme::Copy;

/// (7,8), (4,5), a, b, (5,7) for abaaababa.
BmsScheme sample_scheme() { return {{C{7, 8}, C{4, 5}, G{'a'}, G{'b'}, C{5, 7}}}; }

}  // namespace

TEST_SUITE("bms") {
  TEST_CASE("sample scheme decodes") {
    const Text t("abaaababa");
    CHECK(verify_bms(t, sample_scheme()));
    CHECK(sample_scheme().size() == 5);
    BmsScheme off = sample_scheme();
    off.phrases[4] = C{4, 6};
    CHECK_FALSE(verify_bms(t, off));
  }

  TEST_CASE("cycles are rejected") {
    CHECK_FALSE(verify_bms(Text("aa"), {{C{2, 2}, C{1, 1}}}));
    CHECK_FALSE(verify_bms(Text("abab"), {{C{3, 4}, C{1, 2}}}));
    CHECK(verify_bms(Text("aa"), {{G{'a'}, C{1, 1}}}));
    CHECK(verify_bms(Text("aa"), {{C{2, 2}, G{'a'}}}));
  }

  TEST_CASE("layout errors are rejected") {
    const Text t("abab");
    CHECK_FALSE(verify_bms(t, {{G{'a'}, G{'b'}}}));
    CHECK_FALSE(verify_bms(t, {{G{'a'}, G{'b'}, C{1, 3}}}));
    CHECK_FALSE(verify_bms(t, {{G{'a'}, G{'b'}, C{0, 1}}}));
    CHECK_FALSE(verify_bms(t, {{G{'a'}, G{'b'}, C{2, 1}}}));
    CHECK_FALSE(verify_bms(t, {{G{'a'}, G{'a'}, C{1, 2}}}));
    CHECK(verify_bms(t, {{G{'a'}, G{'b'}, C{1, 2}}}));
  }

  TEST_CASE("two depth-one nodes may not point at each other") {
    // Without a root requirement at depth one, abab would get the cyclic scheme (3,4),(1,2).
    const MeasureResult r = compute_measure(Measure::B, Text("abab"));
    REQUIRE(r.ok());
    CHECK(r.value == 3);
    CHECK(brute_b(Text("abab")) == 3);
  }

  TEST_CASE("morphic words") {
    CHECK(compute_measure(Measure::B, Text("a")).value == 1);
    for (const auto& [name, b] : {std::pair{"fibonacci.04", 4}, std::pair{"fibonacci.05", 4}}) {
      const MeasureResult r = compute_measure(Measure::B, Text(*morphic_word(name)));
      INFO(name);
      REQUIRE(r.ok());
      CHECK(r.value == b);
    }
  }

  TEST_CASE("sample text optimum") {
    // Regression constant from the exhaustive search: the 5-phrase sample scheme is optimal.
    const Text t("abaaababa");
    const int exact = brute_b(t);
    CHECK(exact == 5);
    const MeasureResult r = compute_measure(Measure::B, t);
    REQUIRE(r.ok());
    CHECK(r.value == exact);
  }

  TEST_CASE("decoded forest and mutations") {
    const Text t(fibonacci_word(5));
    const Formula f = encode_bms(t);
    const SolveResult s = solve(f, SolverBackend::builtin());
    REQUIRE(s.optimal());
    const BmsScheme scheme = decode_bms(t, f, s.assignment);
    CHECK(scheme.size() == 4);
    CHECK(verify_bms(t, scheme));

    // Parents form a forest whose depth labels decrease towards the roots.
    const std::vector<Pos> parent = reference_parents(t, f, s.assignment);
    for (Pos i = 1; i <= t.size(); ++i) {
      Pos x = i;
      int steps = 0;
      while (parent[x] != 0 && steps <= t.size()) {
        CHECK(t.at(parent[x]) == t.at(x));
        x = parent[x];
        ++steps;
      }
      CHECK(steps < t.size());
    }

    // Shift every copy source by one: the scheme no longer decodes to T.
    bool found_copy = false;
    for (std::size_t k = 0; k < scheme.size(); ++k) {
      if (!std::holds_alternative<C>(scheme.phrases[k])) continue;
      found_copy = true;
      for (int delta : {-1, 1}) {
        BmsScheme bad = scheme;
        auto& c = std::get<C>(bad.phrases[k]);
        c.src_start += delta;
        c.src_end += delta;
        if (c.src_start < 1 || c.src_end > t.size()) continue;
        if (t.substr({c.src_start, c.src_end - c.src_start + 1}) ==
            t.substr({std::get<C>(scheme.phrases[k]).src_start, c.src_end - c.src_start + 1})) {
          continue;
        }
        CHECK_FALSE(verify_bms(t, bad));
      }
    }
    CHECK(found_copy);

    // Clearing a root in the assignment is reported.
    Assignment broken = s.assignment;
    for (Pos i = 1; i <= t.size(); ++i) {
      const VarId r = f.var(SemanticVar::root(i));
      if (broken.value(r)) {
        broken.set(r, false);
        break;
      }
    }
    CHECK_THROWS_AS(decode_bms(t, f, broken), InvalidAssignment);
  }

  TEST_CASE("formula layout") {
    const Text t("aba");
    const Formula f = encode_bms(t);
    for (int i = 1; i <= 3; ++i) {
      CHECK(f.var(SemanticVar::p(i)) == i);
      CHECK(f.var(SemanticVar::root(i)) == 3 + i);
    }
    CHECK(f.find(SemanticVar::rp(1, 3)).has_value());
    CHECK_FALSE(f.find(SemanticVar::rp(1, 2)).has_value());
    CHECK(f.find(SemanticVar::dref(1, 3, 1)).has_value());
    // Only two a's: depth 2 is impossible.
    CHECK_FALSE(f.find(SemanticVar::dref(2, 3, 1)).has_value());
    const Formula g = encode_bms(Text("aaaa"));
    CHECK(g.find(SemanticVar::dref(3, 4, 1)).has_value());
    CHECK_FALSE(g.find(SemanticVar::dref(4, 4, 1)).has_value());
    CHECK(f.frozen() == std::vector<Lit>{1});
  }
}
