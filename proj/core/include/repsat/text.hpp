#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repsat {

/// Text positions and lengths. Positions are 1-based in every public API.
using Pos = int;

/// Half-open substring reference T[start..start+len).
struct SubstringRef {
  Pos start = 1;
  int len = 1;

  Pos end() const { return start + len; }
  friend bool operator==(const SubstringRef&, const SubstringRef&) = default;
};

/// The immutable input string. Symbols are bytes.
class Text {
 public:
  explicit Text(std::string bytes);
  static Text from_file(const std::string& path);

  int size() const { return static_cast<int>(bytes_.size()); }
  /// Symbol at 1-based position i.
  unsigned char at(Pos i) const { return static_cast<unsigned char>(bytes_[i - 1]); }
  std::string_view bytes() const { return bytes_; }
  std::string_view substr(const SubstringRef& s) const {
    return std::string_view(bytes_).substr(s.start - 1, s.len);
  }
  bool valid(const SubstringRef& s) const {
    return s.start >= 1 && s.len >= 1 && s.start + s.len - 1 <= size();
  }

  /// Distinct symbols in increasing byte order.
  const std::vector<unsigned char>& alphabet() const { return alphabet_; }
  int sigma() const { return static_cast<int>(alphabet_.size()); }

 private:
  std::string bytes_;
  std::vector<unsigned char> alphabet_;
};

/// Sorted occurrence start positions of the referenced substring.
std::vector<Pos> occurrences(const Text& t, const SubstringRef& s);

/// Sorted union of all occurrence intervals of the referenced substring.
std::vector<Pos> cover(const Text& t, const SubstringRef& s);

/// One canonical (leftmost) occurrence per distinct string.
struct MinimalSubstringSet {
  std::vector<SubstringRef> entries;

  std::size_t count() const { return entries.size(); }
  std::uint64_t total_length() const;
};

/// Substrings all of whose proper substrings occur strictly more often.
/// The empty string counts as occurring n+1 times, so every symbol is minimal.
MinimalSubstringSet minimal_substrings(const Text& t);

/// Substrings whose one-shorter prefix occurs strictly more often.
MinimalSubstringSet right_minimal_substrings(const Text& t);

/// Count and total length of right-minimal substrings without materializing them.
struct SubstringStats {
  std::uint64_t count = 0;
  std::uint64_t total_length = 0;
};
SubstringStats minimal_substring_stats(const Text& t);
SubstringStats right_minimal_substring_stats(const Text& t);

/// Longest non-overlapping previous factor: lpnf[i] is the largest l such that
/// T[i..i+l) occurs at some k with k + l <= i. Index 0 is unused.
struct LpnfTable {
  std::vector<int> lpnf;

  int at(Pos i) const { return lpnf[i]; }
};
LpnfTable lpnf_table(const Text& t);

/// M_i = positions j != i holding the same symbol as i. Index 0 is unused.
struct MatchSets {
  std::vector<std::vector<Pos>> sets;

  const std::vector<Pos>& at(Pos i) const { return sets[i]; }
};
MatchSets match_sets(const Text& t);

/// Number of phrases of the greedy LZ77 parse with self-reference.
int lz_factor_count(const Text& t);

/// Longest common extension table for small texts: lce(i, j) in O(1).
class LceTable {
 public:
  explicit LceTable(const Text& t);

  int operator()(Pos i, Pos j) const {
    if (i > n_ || j > n_) return 0;
    return table_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }
  bool equal(Pos i, Pos j, int len) const { return (*this)(i, j) >= len; }

 private:
  int n_;
  std::vector<std::uint16_t> table_;
};

}  // namespace repsat
