#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace repsat {

/// Variables are dense positive ids 1..V; literals are signed ids (DIMACS).
using VarId = int;
using Lit = int;
using Clause = std::vector<Lit>;

/// What an encoder variable means. Index meaning per tag:
///   P(i)  F(i,l)  REF(i',i,l)  Q(i',l)  ROOT(i)  DREF(d,i,j)  RP(i,j)  AUX(k)
enum class VarTag : std::uint8_t { P, F, Ref, Q, Root, Dref, Rp, Aux };

struct SemanticVar {
  VarTag tag = VarTag::Aux;
  std::array<int, 3> idx{0, 0, 0};

  static SemanticVar p(int i) { return {VarTag::P, {i, 0, 0}}; }
  static SemanticVar f(int i, int l) { return {VarTag::F, {i, l, 0}}; }
  static SemanticVar ref(int src, int i, int l) { return {VarTag::Ref, {src, i, l}}; }
  static SemanticVar q(int src, int l) { return {VarTag::Q, {src, l, 0}}; }
  static SemanticVar root(int i) { return {VarTag::Root, {i, 0, 0}}; }
  static SemanticVar dref(int d, int i, int j) { return {VarTag::Dref, {d, i, j}}; }
  static SemanticVar rp(int i, int j) { return {VarTag::Rp, {i, j, 0}}; }

  friend bool operator==(const SemanticVar&, const SemanticVar&) = default;
};

/// Number of index fields carried by a tag.
int arity(VarTag tag);
const char* tag_name(VarTag tag);
std::optional<VarTag> parse_tag(std::string_view name);
std::string to_string(const SemanticVar& sv);

struct SemanticVarHash {
  std::size_t operator()(const SemanticVar& sv) const noexcept {
    std::size_t h = static_cast<std::size_t>(sv.tag);
    for (int x : sv.idx) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

struct FormulaStats {
  std::int64_t var_count = 0;
  std::int64_t hard_count = 0;
  std::int64_t soft_count = 0;
  std::int64_t max_clause_len = 0;
  std::int64_t total_literals = 0;

  friend bool operator==(const FormulaStats&, const FormulaStats&) = default;
};

/// Weighted CNF whose soft clauses are weight-1 negative units ¬P(i).
class Formula {
 public:
  /// Allocates a fresh id; non-AUX variables may be registered only once.
  VarId new_var(const SemanticVar& sv);
  VarId new_aux();

  std::optional<VarId> find(const SemanticVar& sv) const;
  /// Throws std::out_of_range for unregistered variables.
  VarId var(const SemanticVar& sv) const;
  const SemanticVar& meaning(VarId v) const { return meaning_.at(v); }

  void add_hard(Clause clause);
  /// Adds the soft unit ¬v; v must be a P variable.
  void add_soft_negation(VarId v);
  /// Asserts a literal with a hard unit clause and records it.
  void freeze(Lit lit);

  /// sum(vars) <= 1 via the sequential (ladder) encoding.
  void add_at_most_one(std::span<const Lit> lits);
  /// sum(vars) == 1. Throws for an empty list.
  void add_exactly_one(std::span<const Lit> lits);
  /// (a1 & ... & ak) => (c1 | ... | cm).
  void add_implies(std::span<const Lit> antecedent, std::span<const Lit> consequent);
  /// x <=> (l1 & ... & lk).
  void add_iff_conjunction(VarId x, std::span<const Lit> lits);

  int var_count() const { return static_cast<int>(meaning_.size()) - 1; }
  const std::vector<Clause>& hard() const { return hard_; }
  /// Soft clauses as the variables v of ¬v, in insertion order.
  const std::vector<VarId>& soft() const { return soft_; }
  const std::vector<Lit>& frozen() const { return frozen_; }

  /// Registered (non-AUX) variables in id order.
  std::vector<std::pair<VarId, SemanticVar>> registry() const;

 private:
  void check_lit(Lit l) const;

  std::vector<SemanticVar> meaning_{SemanticVar{}};  // index 0 unused
  std::unordered_map<SemanticVar, VarId, SemanticVarHash> registry_;
  std::vector<Clause> hard_;
  std::vector<VarId> soft_;
  std::vector<Lit> frozen_;
};

FormulaStats stats(const Formula& f);

/// Truth values for variables 1..V.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int var_count) : values_(var_count + 1, 0) {}

  int var_count() const { return static_cast<int>(values_.size()) - 1; }
  bool value(VarId v) const { return values_.at(v) != 0; }
  void set(VarId v, bool b) { values_.at(v) = b ? 1 : 0; }
  bool satisfies(Lit l) const { return l > 0 ? value(l) : !value(-l); }

 private:
  std::vector<std::uint8_t> values_;
};

struct AssignmentCheck {
  bool hard_ok = false;
  int soft_falsified = 0;
};

/// Evaluates every clause of f under a.
AssignmentCheck check_assignment(const Formula& f, const Assignment& a);

/// Reads a semantic variable's value; unregistered variables read as false.
bool value_of(const Formula& f, const Assignment& a, const SemanticVar& sv);

// ---------------------------------------------------------------------------
// DIMACS WCNF exchange.

enum class WcnfFormat { Classic, Eval2022 };

/// Classic: `p wcnf V C top` with top = #soft + 1; 2022: `h` lines for hard.
/// Registry lines `c var <id> <tag> <indices>` precede the clauses.
void write_wcnf(const Formula& f, std::ostream& out, WcnfFormat format = WcnfFormat::Classic);

/// A parsed WCNF file: clause lists plus any registry comments found.
struct WcnfFile {
  int var_count = 0;
  std::vector<Clause> hard;
  std::vector<std::pair<std::int64_t, Clause>> soft;
  std::vector<std::pair<VarId, SemanticVar>> registry;
};

/// Accepts both formats. Throws std::runtime_error on malformed input.
WcnfFile parse_wcnf(std::istream& in);

}  // namespace repsat
