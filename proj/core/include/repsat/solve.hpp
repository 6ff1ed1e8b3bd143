#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repsat/cnf.hpp"

namespace repsat {

enum class SolveStatus { Optimum, Timeout, MemoryLimit, Error };

const char* status_name(SolveStatus s);

struct ResourceLimits {
  /// Wall-clock budget in seconds; 0 disables the limit.
  double time_limit_s = 0;
  /// Memory ceiling in MiB; 0 disables the limit.
  std::size_t memory_limit_mb = 0;
};

enum class BackendKind { ExternalProcess, Exhaustive, Builtin };

struct SolverBackend {
  BackendKind kind = BackendKind::Builtin;
  /// Shell command for ExternalProcess; "{wcnf}" is replaced by the instance
  /// path (appended when the placeholder is absent).
  std::string command;
  WcnfFormat input_format = WcnfFormat::Classic;
  ResourceLimits limits;

  static SolverBackend external(std::string command, ResourceLimits limits = {});
  static SolverBackend exhaustive(ResourceLimits limits = {});
  static SolverBackend builtin(ResourceLimits limits = {});
  /// External solver from $REPSAT_SOLVER when set, otherwise Builtin.
  static SolverBackend from_environment(ResourceLimits limits = {});
};

/// Largest formula the exhaustive backend accepts.
inline constexpr int kExhaustiveMaxVars = 30;

struct SolveResult {
  SolveStatus status = SolveStatus::Error;
  /// Falsified soft clauses; meaningful when status == Optimum.
  int cost = 0;
  Assignment assignment;
  double wall_time_s = 0;
  std::uint64_t peak_memory_bytes = 0;
  std::string message;

  bool optimal() const { return status == SolveStatus::Optimum; }
};

/// Solves f to optimality. An Optimum result is re-checked against f before it is
/// returned; a failed check turns it into Error.
SolveResult solve(const Formula& f, const SolverBackend& backend);

// ---------------------------------------------------------------------------
// Generic unweighted MaxSAT, used by the builtin backend and `repsat maxsat`.

struct MaxSatInstance {
  int var_count = 0;
  std::vector<Clause> hard;
  /// Soft unit literals, each of weight 1, that should be satisfied.
  std::vector<Lit> soft;
};

struct MaxSatOutcome {
  SolveStatus status = SolveStatus::Error;
  std::int64_t cost = 0;
  /// Truth values for 1..var_count (index 0 unused).
  std::vector<bool> model;
  bool unsatisfiable = false;
  std::string message;
};

MaxSatInstance to_instance(const Formula& f);
/// Converts a parsed WCNF; non-unit softs are relaxed with fresh variables.
/// Throws std::runtime_error for weights other than 1.
MaxSatInstance to_instance(const WcnfFile& file);

/// Core-guided (OLL) search on top of CaDiCaL.
MaxSatOutcome solve_builtin(const MaxSatInstance& inst, const ResourceLimits& limits);

/// Brute force over all assignments; refuses more than kExhaustiveMaxVars variables.
MaxSatOutcome solve_exhaustive(const MaxSatInstance& inst, const ResourceLimits& limits);

// ---------------------------------------------------------------------------
// MaxSAT-Evaluation solver output.

struct SolverOutput {
  std::optional<std::int64_t> last_cost;
  /// Text after "s ", e.g. "OPTIMUM FOUND".
  std::string status;
  /// Index 0 unused; empty when no v line was seen.
  std::vector<bool> model;
};

/// Parses `o`, `s` and `v` lines; `v` lines may carry signed literals (legacy)
/// or one 0/1 string (2022 format). Throws std::runtime_error on malformed lines.
SolverOutput parse_solver_output(std::string_view out, int var_count);

enum class ModelFormat { Literals, Bitstring };

/// Writes `o`, `s` and `v` lines for an outcome.
void write_solver_output(std::ostream& out, const MaxSatOutcome& r, int var_count,
                         ModelFormat format = ModelFormat::Literals);

}  // namespace repsat
