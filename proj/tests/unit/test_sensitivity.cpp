#include <sstream>

#include "doctest.h"
#include "repsat/oracle.hpp"
#include "repsat/sensitivity.hpp"
#include "repsat/words.hpp"

using namespace repsat;

TEST_SUITE("sensitivity") {
  TEST_CASE("family texts") {
    CHECK(sensitivity_base(2) == "abbbaaabb");
    CHECK(sensitivity_edited(5) == "abbbaaabcbbbb");
  }

  TEST_CASE("family attractors") {
    CHECK(brute_gamma(Text(sensitivity_base(2))) == 2);
    CHECK(verify_attractor(Text(sensitivity_base(2)), {{4, 7}}));
    for (int k = 3; k <= 6; ++k) {
      const Text t(sensitivity_base(k));
      CHECK(verify_attractor(t, {{5, 8}}));
      CHECK(brute_gamma(t) == 2);
    }
    const Text edited(sensitivity_edited(5));
    CHECK(verify_attractor(edited, {{1, 4, 6, 9, 10}}));
    CHECK(brute_gamma(edited) == 5);
  }

  TEST_CASE("unique substrings of the edited text") {
    for (int k = 5; k <= 9; ++k) {
      const Text t(sensitivity_edited(k));
      const std::string tail(k - 1, 'b');
      for (const std::string& p : {std::string("abb"), std::string("ba"), std::string("aab"), std::string("c"), tail}) {
        const auto at = t.bytes().find(p);
        REQUIRE(at != std::string::npos);
        INFO(p, " in ", t.bytes());
        CHECK(occurrences(t, {static_cast<Pos>(at) + 1, static_cast<int>(p.size())}).size() == 1);
      }
    }
  }

  TEST_CASE("verify_family") {
    const FamilyCheck five = verify_family(5);
    CHECK(five.gamma_before == 2);
    CHECK(five.gamma_after == 5);
    CHECK(five.ratio == doctest::Approx(2.5));
    CHECK(verify_family(3).gamma_before == 2);
    const FamilyCheck two = verify_family(2);
    CHECK(two.gamma_before == 2);
    CHECK(verify_attractor(Text(sensitivity_base(2)), two.before));
    CHECK_THROWS(verify_family(1));
  }

  TEST_CASE("single edits") {
    CHECK(single_edits("ab", EditOp::Insert, "ab") ==
          std::vector<std::string>{"aab", "aba", "abb", "bab"});
    CHECK(single_edits("ab", EditOp::Delete, "ab") == std::vector<std::string>{"a", "b"});
    CHECK(single_edits("a", EditOp::Delete, "ab").empty());
    CHECK(single_edits("ab", EditOp::Substitute, "abc") ==
          std::vector<std::string>{"aa", "ac", "bb", "cb"});
  }

  TEST_CASE("length one") {
    for (EditOp op : {EditOp::Insert, EditOp::Substitute}) {
      SensitivityOptions opt;
      opt.n = 1;
      opt.op = op;
      opt.fresh = 'c';
      const SensitivityReport r = sensitivity_search(opt);
      CHECK(r.best_ratio <= 2);
      CHECK(r.complete);
    }
  }

  TEST_CASE("length nine with a fresh symbol") {
    SensitivityOptions opt;
    opt.n = 9;
    opt.fresh = 'c';
    opt.workers = 2;
    const SensitivityReport r = sensitivity_search(opt);
    CHECK(r.complete);
    CHECK(r.strings == 256);
    CHECK(r.best_ratio >= 2);
    CHECK(brute_gamma(Text(r.text)) == r.gamma_text);
    CHECK(brute_gamma(Text(r.edited)) == r.gamma_edited);

    // Deterministic regardless of the number of workers.
    opt.workers = 1;
    const SensitivityReport again = sensitivity_search(opt);
    CHECK(again.text == r.text);
    CHECK(again.edited == r.edited);
  }

  TEST_CASE("solver-backed gamma above the oracle bound") {
    SensitivityOptions opt;
    opt.n = 6;
    opt.op = EditOp::Delete;
    opt.oracle_max_n = 3;
    const SensitivityReport a = sensitivity_search(opt);
    opt.oracle_max_n = 12;
    const SensitivityReport b = sensitivity_search(opt);
    CHECK(a.best_ratio == b.best_ratio);
    CHECK(a.text == b.text);
  }

  TEST_CASE("budget marks the report incomplete") {
    SensitivityOptions opt;
    opt.n = 14;
    opt.budget_s = 0.05;
    opt.oracle_max_n = 15;
    const SensitivityReport r = sensitivity_search(opt);
    CHECK_FALSE(r.complete);
  }

  TEST_CASE("csv") {
    SensitivityReport r;
    r.n = 13;
    r.best_ratio = 2.5;
    r.text = "abbbaaabbbbbb";
    r.edited = "abbbaaabcbbbbb";
    r.gamma_text = 2;
    r.gamma_edited = 5;
    std::ostringstream out;
    write_sensitivity_csv(out, {r});
    CHECK(out.str() == "n,op,ratio,T,T_prime,gamma_T,gamma_Tprime\n13,insert,2.5,abbbaaabbbbbb,abbbaaabcbbbbb,2,5\n");
  }

  TEST_CASE("argument checks") {
    SensitivityOptions opt;
    opt.n = 3;
    opt.fresh = 'a';
    CHECK_THROWS_AS(sensitivity_search(opt), std::invalid_argument);
    opt.fresh.reset();
    opt.alphabet = "aa";
    CHECK_THROWS_AS(sensitivity_search(opt), std::invalid_argument);
  }
}
