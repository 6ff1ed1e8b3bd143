#include <algorithm>
#include <bit>
#include <sstream>

#include "doctest.h"
#include "repsat/cnf.hpp"

using namespace repsat;

namespace {

/// Formula with k P variables as the gadget inputs.
Formula with_inputs(int k, std::vector<Lit>& lits) {
  Formula f;
  lits.clear();
  for (int i = 1; i <= k; ++i) lits.push_back(f.new_var(SemanticVar::p(i)));
  return f;
}

/// True iff some assignment of the auxiliary variables extends `inputs` (a bit
/// mask over the first k variables) to a model of the hard clauses.
bool extendable(const Formula& f, int k, unsigned inputs) {
  const int aux = f.var_count() - k;
  for (unsigned extra = 0; extra < (1u << aux); ++extra) {
    Assignment a(f.var_count());
    for (int v = 1; v <= k; ++v) a.set(v, (inputs >> (v - 1)) & 1u);
    for (int v = k + 1; v <= f.var_count(); ++v) a.set(v, (extra >> (v - k - 1)) & 1u);
    if (check_assignment(f, a).hard_ok) return true;
  }
  return false;
}

std::string non_comment(const std::string& s) {
  std::istringstream in(s);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != 'c') out += line + "\n";
  }
  return out;
}

std::vector<Clause> sorted(std::vector<Clause> cs) {
  std::sort(cs.begin(), cs.end());
  return cs;
}

}  // namespace

TEST_SUITE("cnf") {
  TEST_CASE("variable allocation") {
    Formula f;
    CHECK(f.new_var(SemanticVar::p(1)) == 1);
    CHECK(f.new_var(SemanticVar::f(1, 2)) == 2);
    CHECK(f.new_aux() == 3);
    CHECK(f.var_count() == 3);
    CHECK_THROWS(f.new_var(SemanticVar::p(1)));
    CHECK(f.var(SemanticVar::f(1, 2)) == 2);
    CHECK_THROWS_AS(f.var(SemanticVar::p(9)), std::out_of_range);
    CHECK_FALSE(f.find(SemanticVar::q(1, 1)).has_value());
    CHECK(f.registry().size() == 2);
  }

  TEST_CASE("tag names round trip") {
    for (VarTag tag : {VarTag::P, VarTag::F, VarTag::Ref, VarTag::Q, VarTag::Root, VarTag::Dref, VarTag::Rp,
                       VarTag::Aux}) {
      CHECK(parse_tag(tag_name(tag)) == tag);
    }
    CHECK(to_string(SemanticVar::dref(2, 5, 3)) == "DREF 2 5 3");
    CHECK_FALSE(parse_tag("X").has_value());
  }

  TEST_CASE("clause validation") {
    Formula f;
    const VarId x = f.new_var(SemanticVar::p(1));
    CHECK_THROWS(f.add_hard({}));
    CHECK_THROWS(f.add_hard({x, 2}));
    const VarId r = f.new_var(SemanticVar::root(1));
    CHECK_THROWS(f.add_soft_negation(r));
  }

  TEST_CASE("at-most-one truth tables") {
    for (int k = 0; k <= 8; ++k) {
      std::vector<Lit> lits;
      Formula f = with_inputs(k, lits);
      f.add_at_most_one(lits);
      CHECK(f.var_count() - k == std::max(0, k - 1));
      CHECK(f.hard().size() == static_cast<std::size_t>(k <= 1 ? 0 : 3 * k - 4));
      for (unsigned m = 0; m < (1u << k); ++m) {
        INFO("k=", k, " mask=", m);
        CHECK(extendable(f, k, m) == (std::popcount(m) <= 1));
      }
    }
  }

  TEST_CASE("at-most-one grows linearly") {
    std::vector<Lit> lits;
    Formula f = with_inputs(20, lits);
    f.add_at_most_one(lits);
    CHECK(f.hard().size() == 56);
    CHECK(f.var_count() == 39);
  }

  TEST_CASE("exactly-one truth tables") {
    for (int k = 1; k <= 8; ++k) {
      std::vector<Lit> lits;
      Formula f = with_inputs(k, lits);
      f.add_exactly_one(lits);
      for (unsigned m = 0; m < (1u << k); ++m) {
        INFO("k=", k, " mask=", m);
        CHECK(extendable(f, k, m) == (std::popcount(m) == 1));
      }
    }
    std::vector<Lit> lits;
    Formula one = with_inputs(1, lits);
    one.add_exactly_one(lits);
    CHECK(one.hard() == std::vector<Clause>{{1}});
    Formula none;
    CHECK_THROWS(none.add_exactly_one(std::vector<Lit>{}));
  }

  TEST_CASE("at-most-one on negated literals") {
    std::vector<Lit> lits;
    Formula f = with_inputs(4, lits);
    std::vector<Lit> neg;
    for (Lit l : lits) neg.push_back(-l);
    f.add_at_most_one(neg);
    for (unsigned m = 0; m < 16; ++m) CHECK(extendable(f, 4, m) == (std::popcount(m) >= 3));
  }

  TEST_CASE("implications") {
    std::vector<Lit> lits;
    Formula f = with_inputs(4, lits);
    f.add_implies(std::vector<Lit>{1}, std::vector<Lit>{2});
    f.add_implies(std::vector<Lit>{1, 2}, std::vector<Lit>{3, 4});
    f.add_implies(std::vector<Lit>{1}, std::vector<Lit>{});
    CHECK(f.hard() == std::vector<Clause>{{-1, 2}, {-1, -2, 3, 4}, {-1}});
  }

  TEST_CASE("iff conjunction") {
    {
      std::vector<Lit> lits;
      Formula f = with_inputs(2, lits);
      f.add_iff_conjunction(1, std::vector<Lit>{2});
      CHECK(f.hard() == std::vector<Clause>{{-1, 2}, {1, -2}});
    }
    {
      // x <=> (a & ~b) with x = 1, a = 2, b = 3.
      std::vector<Lit> lits;
      Formula f = with_inputs(3, lits);
      f.add_iff_conjunction(1, std::vector<Lit>{2, -3});
      CHECK(f.hard().size() == 3);
      for (unsigned m = 0; m < 8; ++m) {
        const bool x = m & 1u, a = m & 2u, b = m & 4u;
        CHECK(extendable(f, 3, m) == (x == (a && !b)));
      }
    }
    {
      std::vector<Lit> lits;
      Formula f = with_inputs(6, lits);
      f.add_iff_conjunction(1, std::vector<Lit>{2, 3, 4, 5, 6});
      const FormulaStats s = stats(f);
      CHECK(s.hard_count == 6);
      CHECK(s.total_literals == 3 * 5 + 1);
    }
  }

  TEST_CASE("freeze adds a hard unit") {
    Formula f;
    const VarId x = f.new_var(SemanticVar::p(1));
    f.freeze(x);
    CHECK(f.frozen() == std::vector<Lit>{x});
    CHECK(f.hard() == std::vector<Clause>{{x}});
  }

  TEST_CASE("stats") {
    CHECK(stats(Formula{}) == FormulaStats{});
    Formula f;
    f.new_var(SemanticVar::p(1));
    f.new_var(SemanticVar::p(2));
    f.add_hard({1, 2});
    f.add_soft_negation(1);
    f.add_soft_negation(2);
    const FormulaStats s = stats(f);
    CHECK(s.var_count == 2);
    CHECK(s.hard_count == 1);
    CHECK(s.soft_count == 2);
    CHECK(s.max_clause_len == 2);
    CHECK(s.total_literals == 4);
  }

  TEST_CASE("check_assignment") {
    Formula f;
    f.new_var(SemanticVar::p(1));
    f.new_var(SemanticVar::p(2));
    f.add_hard({1, 2});
    f.add_soft_negation(1);
    f.add_soft_negation(2);
    Assignment a(2);
    a.set(1, true);
    auto c = check_assignment(f, a);
    CHECK(c.hard_ok);
    CHECK(c.soft_falsified == 1);
    a.set(1, false);
    CHECK_FALSE(check_assignment(f, a).hard_ok);
    a.set(1, true);
    a.set(2, true);
    CHECK(check_assignment(f, a).soft_falsified == 2);
    CHECK_THROWS(check_assignment(f, Assignment(1)));
    CHECK(value_of(f, a, SemanticVar::p(2)));
    CHECK_FALSE(value_of(f, a, SemanticVar::root(2)));
  }

  TEST_CASE("wcnf writer") {
    Formula f;
    f.new_var(SemanticVar::p(1));
    f.new_var(SemanticVar::p(2));
    f.add_hard({1, -2});
    f.add_soft_negation(1);
    std::ostringstream classic, eval;
    write_wcnf(f, classic);
    write_wcnf(f, eval, WcnfFormat::Eval2022);
    CHECK(non_comment(classic.str()) == "p wcnf 2 2 2\n2 1 -2 0\n1 -1 0\n");
    CHECK(non_comment(eval.str()) == "h 1 -2 0\n1 -1 0\n");
    CHECK(classic.str().rfind("c var 1 P 1\nc var 2 P 2\n", 0) == 0);
  }

  TEST_CASE("wcnf round trip") {
    Formula f;
    for (int i = 1; i <= 5; ++i) f.new_var(SemanticVar::p(i));
    f.new_var(SemanticVar::ref(1, 4, 2));
    std::vector<Lit> lits{1, 2, 3, 4, 5};
    f.add_at_most_one(lits);
    f.add_hard({6, -3});
    for (int i = 1; i <= 5; ++i) f.add_soft_negation(i);
    for (WcnfFormat fmt : {WcnfFormat::Classic, WcnfFormat::Eval2022}) {
      std::stringstream buf;
      write_wcnf(f, buf, fmt);
      const WcnfFile back = parse_wcnf(buf);
      CHECK(back.var_count == f.var_count());
      CHECK(sorted(back.hard) == sorted(f.hard()));
      REQUIRE(back.soft.size() == 5);
      for (std::size_t k = 0; k < 5; ++k) {
        CHECK(back.soft[k].first == 1);
        CHECK(back.soft[k].second == Clause{-f.soft()[k]});
      }
      CHECK(back.registry == f.registry());
    }
  }

  TEST_CASE("wcnf parser") {
    std::istringstream multi("c hello\np wcnf 3 3 10\n10 1 2\n 3 0\n10 -1 0\n4 2 0\n");
    const WcnfFile w = parse_wcnf(multi);
    CHECK(w.hard == std::vector<Clause>{{1, 2, 3}, {-1}});
    CHECK(w.soft.size() == 1);
    CHECK(w.soft[0].first == 4);

    std::istringstream bad_count("p wcnf 2 3 5\n5 1 0\n1 -1 0\n");
    CHECK_THROWS(parse_wcnf(bad_count));
    std::istringstream bad_var("p wcnf 2 1 5\n5 3 0\n");
    CHECK_THROWS(parse_wcnf(bad_var));
    std::istringstream bad_token("h 1 x 0\n");
    CHECK_THROWS(parse_wcnf(bad_token));
    std::istringstream unterminated("h 1 2\n");
    CHECK_THROWS(parse_wcnf(unterminated));
  }
}
