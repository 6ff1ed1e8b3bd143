#include <bit>
#include <random>
#include <set>

#include "doctest.h"
#include "repsat/attractor.hpp"
#include "repsat/measure.hpp"
#include "repsat/words.hpp"
#include "support.hpp"

using namespace repsat;

namespace {

int distinct_substrings(const std::string& s) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t l = 1; i + l <= s.size(); ++l) seen.insert(s.substr(i, l));
  }
  return static_cast<int>(seen.size());
}

/// Does the position set (bit i-1 for position i) hit an occurrence of every substring?
bool hits_all(const std::string& s, unsigned mask) {
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    for (int l = 1; i + l <= n; ++l) {
      const std::string p = s.substr(i, l);
      bool hit = false;
      for (auto at = s.find(p); at != std::string::npos && !hit; at = s.find(p, at + 1)) {
        for (std::size_t q = at; q < at + l; ++q) hit = hit || ((mask >> q) & 1u);
      }
      if (!hit) return false;
    }
  }
  return true;
}

AttractorSet from_mask(unsigned mask, int n) {
  AttractorSet a;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) a.positions.push_back(i + 1);
  }
  return a;
}

}  // namespace

TEST_SUITE("attractor") {
  TEST_CASE("banana") {
    const Text t("banana");
    const Formula f = encode_attractor(t);
    CHECK(f.var_count() == 6);
    CHECK(f.hard().size() == 4);
    CHECK(f.soft().size() == 6);
    const MeasureResult r = compute_measure(Measure::Gamma, t);
    REQUIRE(r.ok());
    CHECK(r.value == 3);
    CHECK(verify_attractor(t, {{1, 2, 3}}));
    CHECK_FALSE(verify_attractor(t, {{1, 2}}));
    CHECK_FALSE(verify_attractor(t, {{2, 3, 4}}));
  }

  TEST_CASE("single symbol") {
    const MeasureResult r = compute_measure(Measure::Gamma, Text("a"));
    REQUIRE(r.ok());
    CHECK(r.value == 1);
  }

  TEST_CASE("formula shape is n variables and m clauses") {
    const Text fib(fibonacci_word(5));
    const Formula f = encode_attractor(fib);
    CHECK(f.var_count() == 13);
    CHECK(f.hard().size() == 7);
    std::mt19937 rng(5);
    for (int rep = 0; rep < 50; ++rep) {
      const Text t(testing_support::random_string(rng, 1 + rep, rep % 2 ? "ab" : "abc"));
      const Formula g = encode_attractor(t);
      CHECK(g.var_count() == t.size());
      CHECK(g.hard().size() == minimal_substrings(t).count());
      for (const auto& [id, sv] : g.registry()) CHECK(sv == SemanticVar::p(id));
    }
  }

  TEST_CASE("simple variant has one clause per distinct substring") {
    for (const std::string s : {"banana", "abaababaabaab", "aaaa", "abc"}) {
      const Formula f = encode_attractor(Text(s), AttractorVariant::Simple);
      CHECK(f.hard().size() == static_cast<std::size_t>(distinct_substrings(s)));
    }
  }

  TEST_CASE("both variants reach the same optimum") {
    std::mt19937 rng(9);
    for (int rep = 0; rep < 60; ++rep) {
      const Text t(testing_support::random_string(rng, 2 + rep % 25, rep % 3 ? "ab" : "abc"));
      MeasureOptions simple;
      simple.variant = AttractorVariant::Simple;
      const MeasureResult a = compute_measure(Measure::Gamma, t);
      const MeasureResult b = compute_measure(Measure::Gamma, t, simple);
      REQUIRE(a.ok());
      REQUIRE(b.ok());
      CHECK(a.value == b.value);
    }
  }

  TEST_CASE("hitting the minimal substrings hits every substring") {
    // Every position subset of every binary string up to length 9.
    for (int n = 1; n <= 9; ++n) {
      for (const auto& s : testing_support::all_strings(n)) {
        const Text t(s);
        for (unsigned mask = 0; mask < (1u << n); mask += (n >= 8 ? 3 : 1)) {
          INFO(s, " mask=", mask);
          REQUIRE(verify_attractor(t, from_mask(mask, n)) == hits_all(s, mask));
        }
      }
    }
  }

  TEST_CASE("decode and mutation") {
    const Text t(thue_morse_word(5));
    const Formula f = encode_attractor(t);
    const SolveResult s = solve(f, SolverBackend::builtin());
    REQUIRE(s.optimal());
    const AttractorSet a = decode_attractor(t, f, s.assignment);
    CHECK(a.size() == 4);
    CHECK(verify_attractor(t, a));
    // Dropping any single position breaks it.
    for (std::size_t k = 0; k < a.size(); ++k) {
      AttractorSet smaller = a;
      smaller.positions.erase(smaller.positions.begin() + static_cast<long>(k));
      CHECK_FALSE(verify_attractor(t, smaller));
    }
    // Moving a position to a neighbour that does not stay optimal is caught too.
    int rejected = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      for (int delta : {-1, 1}) {
        AttractorSet moved = a;
        moved.positions[k] += delta;
        if (moved.positions[k] < 1 || moved.positions[k] > t.size()) continue;
        std::sort(moved.positions.begin(), moved.positions.end());
        moved.positions.erase(std::unique(moved.positions.begin(), moved.positions.end()), moved.positions.end());
        rejected += verify_attractor(t, moved) ? 0 : 1;
      }
    }
    CHECK(rejected > 0);
  }
}
