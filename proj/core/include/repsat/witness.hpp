#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "repsat/attractor.hpp"
#include "repsat/bms.hpp"
#include "repsat/slp.hpp"
#include "repsat/text.hpp"

namespace repsat {

enum class Measure { Gamma, B, G };

const char* measure_name(Measure m);
/// Accepts "gamma", "b" and "g".
std::optional<Measure> parse_measure(std::string_view name);

/// Malformed JSON, schema violations and measure mismatches.
class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SlpWitness {
  Slp slp;
  /// The parsing the SLP was built from, when known.
  std::optional<GrammarParsing> parsing;
};

/// Envelope {schema:1, measure, n, size, payload}.
struct Witness {
  int n = 0;
  std::variant<AttractorSet, BmsScheme, SlpWitness> payload;

  Measure measure() const { return static_cast<Measure>(payload.index()); }
  std::size_t size() const;
};

inline constexpr int kWitnessSchema = 1;

std::string dump_witness(const Witness& w);
/// Strict parser: unknown fields, wrong types and inconsistent sizes are rejected.
Witness parse_witness(std::string_view json);

void save_witness(const Witness& w, const std::filesystem::path& path);
Witness load_witness(const std::filesystem::path& path);

/// Routes to the measure's verifier. Throws WitnessError when the witness is
/// for a different measure; returns false for an invalid certificate.
bool verify_witness(const Text& t, const Witness& w, Measure expected);

/// Human-readable reason a witness fails, or nullopt when it is valid.
std::optional<std::string> witness_problem(const Text& t, const Witness& w);

}  // namespace repsat
