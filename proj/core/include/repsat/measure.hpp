#pragma once

#include <optional>
#include <string>

#include "repsat/attractor.hpp"
#include "repsat/cnf.hpp"
#include "repsat/solve.hpp"
#include "repsat/text.hpp"
#include "repsat/witness.hpp"

namespace repsat {

/// The MaxSAT formula for a measure. `variant` only affects gamma.
Formula encode_measure(Measure m, const Text& t, AttractorVariant variant = AttractorVariant::Minimal);

/// Measure value for an optimal cost: the cost itself for gamma and b, the
/// number of factors plus sigma - 1 for g.
int measure_value(Measure m, const Text& t, int cost);

struct MeasureOptions {
  AttractorVariant variant = AttractorVariant::Minimal;
  SolverBackend backend;
};

struct MeasureResult {
  Measure measure = Measure::Gamma;
  SolveStatus status = SolveStatus::Error;
  int value = 0;
  /// Set iff status == Optimum; always verified.
  std::optional<Witness> witness;
  FormulaStats stats;
  double encode_ms = 0;
  double solve_ms = 0;
  std::uint64_t peak_memory_bytes = 0;
  std::string message;

  bool ok() const { return status == SolveStatus::Optimum; }
};

/// Encode, solve, decode and verify. A witness that fails its verifier turns
/// the result into an Error.
MeasureResult compute_measure(Measure m, const Text& t, const MeasureOptions& opt = {});

}  // namespace repsat
