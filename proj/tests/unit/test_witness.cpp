#include <filesystem>

#include "doctest.h"
#include "repsat/measure.hpp"
#include "repsat/witness.hpp"
#include "repsat/words.hpp"

using namespace repsat;

namespace {

const char* kSampleScheme = R"({"schema":1,"measure":"b","n":9,"size":5,"payload":{"phrases":[
  {"copy":[7,8]},{"copy":[4,5]},{"ground":"a"},{"ground":"b"},{"copy":[5,7]}]}})";

}  // namespace

TEST_SUITE("witness") {
  TEST_CASE("round trips") {
    for (Measure m : {Measure::Gamma, Measure::B, Measure::G}) {
      const Text t(fibonacci_word(5));
      const MeasureResult r = compute_measure(m, t);
      REQUIRE(r.ok());
      const std::string once = dump_witness(*r.witness);
      const Witness back = parse_witness(once);
      CHECK(back.measure() == m);
      CHECK(back.size() == r.witness->size());
      CHECK(dump_witness(back) == once);
      CHECK(verify_witness(t, back, m));
    }
  }

  TEST_CASE("file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "repsat-witness-test.json";
    Witness w;
    w.n = 6;
    w.payload = AttractorSet{{1, 2, 3}};
    save_witness(w, path);
    const Witness back = load_witness(path);
    CHECK(std::get<AttractorSet>(back.payload).positions == std::vector<Pos>{1, 2, 3});
    CHECK(verify_witness(Text("banana"), back, Measure::Gamma));
    std::filesystem::remove(path);
  }

  TEST_CASE("sample scheme") {
    const Witness w = parse_witness(kSampleScheme);
    CHECK(w.measure() == Measure::B);
    CHECK(w.size() == 5);
    CHECK(verify_witness(Text("abaaababa"), w, Measure::B));
    CHECK_THROWS_AS(verify_witness(Text("abaaababa"), w, Measure::Gamma), WitnessError);
  }

  TEST_CASE("non-printable symbols") {
    const std::string s = std::string("a\x01") + "\\" + "\xff" + "a";
    const Text t(s);
    for (Measure m : {Measure::B, Measure::G}) {
      const MeasureResult r = compute_measure(m, t);
      REQUIRE(r.ok());
      const Witness back = parse_witness(dump_witness(*r.witness));
      CHECK(verify_witness(t, back, m));
    }
  }

  TEST_CASE("schema violations") {
    auto bad = [](const std::string& json) { CHECK_THROWS_AS(parse_witness(json), WitnessError); };
    bad("not json");
    bad(R"({"schema":2,"measure":"gamma","n":6,"size":1,"payload":{"positions":[1]}})");
    bad(R"({"schema":1,"measure":"delta","n":6,"size":1,"payload":{"positions":[1]}})");
    bad(R"({"schema":1,"measure":"gamma","n":6,"size":2,"payload":{"positions":[1]}})");
    bad(R"({"schema":1,"measure":"gamma","n":6,"size":1,"payload":{"positions":[1]},"extra":0})");
    bad(R"({"schema":1,"measure":"gamma","n":6,"size":1,"payload":{"positions":[1],"note":"x"}})");
    bad(R"({"schema":1,"measure":"gamma","n":6,"size":1,"payload":{"positions":["1"]}})");
    bad(R"({"schema":1,"measure":"b","n":2,"size":1,"payload":{"phrases":[{"ground":"ab"}]}})");
    bad(R"({"schema":1,"measure":"b","n":2,"size":1,"payload":{"phrases":[{"copy":[1]}]}})");
    bad(R"({"schema":1,"measure":"b","n":2,"size":1,"payload":{"phrases":[{"link":[1,1]}]}})");
    bad(R"({"schema":1,"measure":"g","n":1,"size":1,"payload":{"rules":[["X1","a"]],"start":"X1"}})");
    bad(R"({"schema":1,"measure":"g","n":1,"size":1,"payload":{"rules":[["X2","'a'"]],"start":"X1"}})");
    bad(R"({"schema":1,"measure":"g","n":1,"size":2,"payload":{"rules":[["X1","'a'"],["X1","'b'"]],"start":"X1"}})");
    bad(R"({"schema":1,"measure":"gamma","n":6,"size":1})");
  }

  TEST_CASE("invalid certificates") {
    const Text t("banana");
    Witness w;
    w.n = 6;
    w.payload = AttractorSet{{1, 2}};
    CHECK(witness_problem(t, w).has_value());
    w.payload = AttractorSet{{3, 2, 1}};
    CHECK(witness_problem(t, w).has_value());
    w.payload = AttractorSet{{1, 2, 7}};
    CHECK(witness_problem(t, w).has_value());
    w.n = 5;
    w.payload = AttractorSet{{1, 2, 3}};
    CHECK(witness_problem(t, w).has_value());
  }

  TEST_CASE("mutated grammar") {
    const Text t(thue_morse_word(4));
    const MeasureResult r = compute_measure(Measure::G, t);
    REQUIRE(r.ok());
    Witness w = *r.witness;
    auto& slp = std::get<SlpWitness>(w.payload).slp;
    for (auto& rule : slp.rules) {
      if (auto* term = std::get_if<Slp::Terminal>(&rule)) {
        term->symbol = term->symbol == 'a' ? 'b' : 'a';
        break;
      }
    }
    CHECK_FALSE(verify_witness(t, w, Measure::G));
  }

  TEST_CASE("measure names") {
    CHECK(parse_measure("gamma") == Measure::Gamma);
    CHECK(parse_measure("b") == Measure::B);
    CHECK(parse_measure("g") == Measure::G);
    CHECK_FALSE(parse_measure("z").has_value());
  }
}
