#include "doctest.h"
#include "repsat/text.hpp"
#include "repsat/words.hpp"

using namespace repsat;

TEST_SUITE("words") {
  TEST_CASE("fibonacci") {
    CHECK(fibonacci_word(0) == "a");
    CHECK(fibonacci_word(1) == "ab");
    CHECK(fibonacci_word(4) == "abaababa");
    CHECK(fibonacci_word(5) == "abaababaabaab");
    CHECK(fibonacci_word(10).size() == 144);
  }

  TEST_CASE("thue-morse") {
    CHECK(thue_morse_word(3) == "abbabaab");
    CHECK(thue_morse_word(5).size() == 32);
    CHECK(thue_morse_word(6).size() == 64);
  }

  TEST_CASE("period doubling") {
    CHECK(period_doubling_word(0) == "a");
    CHECK(period_doubling_word(3) == "abaaabab");
    CHECK(period_doubling_word(8).size() == 256);
  }

  TEST_CASE("paperfolding") {
    CHECK(paperfolding_word(0) == "11");
    CHECK(paperfolding_word(1) == "1101");
    CHECK(paperfolding_word(2) == "11011001");
    CHECK(paperfolding_word(4).size() == 32);
  }

  TEST_CASE("names") {
    CHECK(morphic_word("fibonacci.05") == fibonacci_word(5));
    CHECK(morphic_word("thuemorse.6") == thue_morse_word(6));
    CHECK(morphic_word("paperfold.04") == paperfolding_word(4));
    CHECK_FALSE(morphic_word("fibonacci").has_value());
    CHECK_FALSE(morphic_word("lucas.03").has_value());
    CHECK_FALSE(morphic_word("fibonacci.x").has_value());
    CHECK_FALSE(morphic_word("fibonacci.99").has_value());
  }

  TEST_CASE("separated runs") {
    CHECK(separated_runs(2) == "aAaB");
    const Text t(separated_runs(4));
    CHECK(t.size() == 16);
    CHECK(t.sigma() == 5);
    CHECK(separator(27) == 0x80);
    CHECK_THROWS(separator(155));
  }
}
