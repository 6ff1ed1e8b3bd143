#include <stdexcept>

#include "doctest.h"
#include "repsat/oracle.hpp"
#include "repsat/words.hpp"

using namespace repsat;

TEST_SUITE("oracle") {
  TEST_CASE("gamma") {
    CHECK(brute_gamma(Text("banana")) == 3);
    CHECK(brute_gamma(Text("abc")) == 3);
    CHECK(brute_gamma(Text("a")) == 1);
    CHECK(brute_gamma(Text("abbbaaabb")) == 2);
    CHECK(brute_attractor(Text("banana")).size() == 3);
    CHECK_THROWS_AS(brute_gamma(Text(std::string(15, 'a'))), std::invalid_argument);
    CHECK(brute_gamma(Text(std::string(15, 'a')), 15) == 1);
  }

  TEST_CASE("b") {
    CHECK(brute_b(Text("a")) == 1);
    CHECK(brute_b(Text(fibonacci_word(4))) == 4);
    CHECK(brute_b(Text("aa")) == 2);
    CHECK(brute_b(Text("abc")) == 3);
    CHECK_THROWS_AS(brute_b(Text("abababababa")), std::invalid_argument);
  }

  TEST_CASE("g") {
    CHECK(brute_g(Text("a")) == 1);
    CHECK(brute_g(Text("aa")) == 2);
    CHECK(brute_g(Text("aaaa")) == 3);
    CHECK(brute_g(Text(fibonacci_word(4))) == 6);
    CHECK(brute_g(Text(thue_morse_word(3))) == 7);
    CHECK_THROWS_AS(brute_g(Text("abababababa")), std::invalid_argument);
  }

  TEST_CASE("chain on all short binary strings") {
    for (int n = 1; n <= 7; ++n) {
      for (int code = 0; code < (1 << n); ++code) {
        std::string s;
        for (int i = n - 1; i >= 0; --i) s.push_back((code >> i) & 1 ? 'b' : 'a');
        const Text t(s);
        const int gamma = brute_gamma(t), b = brute_b(t), z = lz_factor_count(t), g = brute_g(t);
        INFO(s);
        CHECK(gamma <= b);
        CHECK(b <= z);
        CHECK(z <= g);
      }
    }
  }
}
