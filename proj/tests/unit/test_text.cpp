#include <map>
#include <stdexcept>
#include <set>

#include "doctest.h"
#include "repsat/suffix_automaton.hpp"
#include "repsat/text.hpp"
#include "repsat/words.hpp"
#include "support.hpp"

using namespace repsat;
using testing_support::count_occurrences;

namespace {

/// (start, len) of the leftmost occurrence of every minimal substring, by a
/// quadratic scan over all distinct substrings.
std::set<std::pair<int, int>> naive_minimal(const std::string& s, bool right_only) {
  std::set<std::pair<int, int>> out;
  std::set<std::string> seen;
  const int n = static_cast<int>(s.size());
  for (int len = 1; len <= n; ++len) {
    for (int st = 0; st + len <= n; ++st) {
      const std::string p = s.substr(st, len);
      if (!seen.insert(p).second) continue;
      const int occ = count_occurrences(s, p);
      const bool right = occ < count_occurrences(s, p.substr(0, len - 1));
      const bool left = occ < count_occurrences(s, p.substr(1));
      if (right && (right_only || left)) out.insert({st + 1, len});
    }
  }
  return out;
}

std::set<std::pair<int, int>> as_set(const MinimalSubstringSet& m) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : m.entries) out.insert({e.start, e.len});
  return out;
}

int naive_lpnf(const std::string& s, int i) {
  // 1-based i; largest l with T[i..i+l) occurring at some k, k + l <= i.
  const int n = static_cast<int>(s.size());
  int best = 0;
  for (int l = 1; i - 1 + l <= n; ++l) {
    const std::string p = s.substr(i - 1, l);
    const auto at = s.find(p);
    if (at != std::string::npos && static_cast<int>(at) + 1 + l <= i) best = l;
  }
  return best;
}

int naive_lz(const std::string& s) {
  const int n = static_cast<int>(s.size());
  int i = 0, z = 0;
  while (i < n) {
    int best = 0;
    for (int k = 0; k < i; ++k) {
      int l = 0;
      while (i + l < n && s[k + l] == s[i + l]) ++l;
      best = std::max(best, l);
    }
    i += std::max(best, 1);
    ++z;
  }
  return z;
}

}  // namespace

TEST_SUITE("text") {
  TEST_CASE("text basics") {
    const Text t("banana");
    CHECK(t.size() == 6);
    CHECK(t.at(1) == 'b');
    CHECK(t.sigma() == 3);
    CHECK(t.substr({2, 3}) == "ana");
    CHECK(t.valid({6, 1}));
    CHECK_FALSE(t.valid({6, 2}));
    CHECK_THROWS_AS(Text(""), std::invalid_argument);
  }

  TEST_CASE("occurrences and cover") {
    const Text t("banana");
    CHECK(occurrences(t, {2, 3}) == std::vector<Pos>{2, 4});
    CHECK(cover(t, {2, 3}) == std::vector<Pos>{2, 3, 4, 5, 6});
    CHECK(cover(t, {1, 1}) == std::vector<Pos>{1});
  }

  TEST_CASE("banana minimal substrings") {
    // b, a, n and nan.
    const Text t("banana");
    CHECK(as_set(minimal_substrings(t)) == naive_minimal("banana", false));
    CHECK(minimal_substrings(t).count() == 4);
  }

  TEST_CASE("minimal substrings agree with a quadratic scan on all short binary and ternary strings") {
    for (int n = 1; n <= 9; ++n) {
      for (const auto& s : testing_support::all_strings(n, n <= 6 ? "abc" : "ab")) {
        const Text t(s);
        INFO(s);
        REQUIRE(as_set(minimal_substrings(t)) == naive_minimal(s, false));
        REQUIRE(as_set(right_minimal_substrings(t)) == naive_minimal(s, true));
      }
    }
  }

  TEST_CASE("minimal substrings on random texts") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
      const std::string s = testing_support::random_string(rng, 20 + rep % 60, rep % 2 ? "ab" : "acgt");
      const Text t(s);
      INFO(s);
      REQUIRE(as_set(minimal_substrings(t)) == naive_minimal(s, false));
      REQUIRE(as_set(right_minimal_substrings(t)) == naive_minimal(s, true));
      const SubstringStats st = minimal_substring_stats(t);
      CHECK(st.count == minimal_substrings(t).count());
      CHECK(st.total_length == minimal_substrings(t).total_length());
      const SubstringStats rs = right_minimal_substring_stats(t);
      CHECK(rs.count == right_minimal_substrings(t).count());
      CHECK(rs.total_length == right_minimal_substrings(t).total_length());
    }
  }

  TEST_CASE("separated runs have 2d - 1 minimal substrings") {
    for (int d = 2; d <= 16; ++d) {
      const Text t(separated_runs(d));
      CHECK(t.size() == d * d);
      CHECK(minimal_substrings(t).count() == static_cast<std::size_t>(2 * d - 1));
    }
    // d = 4: a, aa, aaa and the four separators.
    const auto m = minimal_substrings(Text(separated_runs(4)));
    std::map<int, int> by_len;
    for (const auto& e : m.entries) ++by_len[e.len];
    CHECK(by_len == std::map<int, int>{{1, 5}, {2, 1}, {3, 1}});
  }

  TEST_CASE("every symbol is minimal") {
    // a^k occurs once less than a^(k-1), so each run length is minimal.
    const auto run = minimal_substrings(Text("aaaa"));
    REQUIRE(run.count() == 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(run.entries[k].start == 1);
    CHECK(run.total_length() == 10);
    CHECK(minimal_substrings(Text("abc")).count() == 3);
  }

  TEST_CASE("suffix automaton counts") {
    const std::string s = "abaababaab";
    const SuffixAutomaton sam(s);
    CHECK(sam.count(SuffixAutomaton::kRoot) == 11);
    for (int v = 1; v < sam.num_states(); ++v) {
      const int end = sam.first_end(v);
      const std::string longest = s.substr(end - sam.len(v) + 1, sam.len(v));
      CHECK(sam.count(v) == count_occurrences(s, longest));
      CHECK(sam.end_positions(v).size() == static_cast<std::size_t>(sam.count(v)));
    }
  }

  TEST_CASE("LPnF table against brute force") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
      const std::string s = testing_support::random_string(rng, 1 + rep % 40, rep % 3 ? "ab" : "abc");
      const LpnfTable lp = lpnf_table(Text(s));
      for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
        INFO(s, " i=", i);
        REQUIRE(lp.at(i) == naive_lpnf(s, i));
      }
    }
    // abab: position 3 copies "ab" from position 1.
    const LpnfTable lp = lpnf_table(Text("abab"));
    CHECK(lp.at(3) == 2);
    CHECK(lp.at(2) == 0);
  }

  TEST_CASE("match sets") {
    const MatchSets m = match_sets(Text("abaab"));
    CHECK(m.at(1) == std::vector<Pos>{3, 4});
    CHECK(m.at(2) == std::vector<Pos>{5});
    CHECK(m.at(4) == std::vector<Pos>{1, 3});
  }

  TEST_CASE("LZ77 factor count with self-reference") {
    CHECK(lz_factor_count(Text("a")) == 1);
    CHECK(lz_factor_count(Text("aaaaaaa")) == 2);
    CHECK(lz_factor_count(Text("abababab")) == 3);
    std::mt19937 rng(3);
    for (int rep = 0; rep < 200; ++rep) {
      const std::string s = testing_support::random_string(rng, 1 + rep % 50, rep % 2 ? "ab" : "abcd");
      INFO(s);
      REQUIRE(lz_factor_count(Text(s)) == naive_lz(s));
    }
  }

  TEST_CASE("longest common extensions") {
    const Text t("abaababa");
    const LceTable lce(t);
    CHECK(lce(1, 4) == 3);
    CHECK(lce(1, 1) == 8);
    CHECK(lce(2, 5) == 2);
    CHECK(lce.equal(1, 6, 3));
    CHECK_FALSE(lce.equal(1, 6, 4));
  }
}
