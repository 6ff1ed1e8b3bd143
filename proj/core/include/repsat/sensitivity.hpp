#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "repsat/attractor.hpp"
#include "repsat/solve.hpp"

namespace repsat {

enum class EditOp { Insert, Delete, Substitute };

const char* edit_op_name(EditOp op);
std::optional<EditOp> parse_edit_op(std::string_view name);

struct SensitivityOptions {
  int n = 0;
  std::string alphabet = "ab";
  EditOp op = EditOp::Insert;
  /// Extra symbol, not in the alphabet, usable by insertions and substitutions.
  std::optional<char> fresh;
  int workers = 1;
  /// gamma comes from brute_gamma up to this length, from MaxSAT above it.
  int oracle_max_n = 12;
  SolverBackend backend;
  /// Wall-clock budget in seconds; 0 means unlimited.
  double budget_s = 0;
};

struct SensitivityReport {
  EditOp op = EditOp::Insert;
  int n = 0;
  /// gamma(T') / gamma(T), maximal over the enumerated pairs.
  double best_ratio = 0;
  std::string text;
  std::string edited;
  int gamma_text = 0;
  int gamma_edited = 0;
  /// False when the budget ran out before every string was examined.
  bool complete = true;
  std::uint64_t strings = 0;
  std::uint64_t pairs = 0;
};

/// Enumerates the texts over the alphabet up to renaming of symbols and every
/// single edit of each. Ties go to the lexicographically smallest (T, T') pair.
SensitivityReport sensitivity_search(const SensitivityOptions& opt);

/// All texts T' with ed_op(T, T') = 1 (deduplicated, sorted).
std::vector<std::string> single_edits(const std::string& t, EditOp op, const std::string& symbols);

struct FamilyCheck {
  int gamma_before = 0;
  int gamma_after = 0;
  double ratio = 0;
  AttractorSet before;
  AttractorSet after;
};

/// gamma of abbbaaa b^k and of the same text with c inserted at position 9,
/// with both attractors verified and cross-checked against brute_gamma when short enough.
FamilyCheck verify_family(int k, const SolverBackend& backend = {}, int oracle_max_n = 14);

/// Header `n,op,ratio,T,T_prime,gamma_T,gamma_Tprime` followed by one row per report.
void write_sensitivity_csv(std::ostream& out, const std::vector<SensitivityReport>& reports);

}  // namespace repsat
