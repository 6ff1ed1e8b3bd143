#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace repsat {

/// Suffix automaton (DAWG) over a byte string.
///
/// Every state groups the substrings sharing one end-position set; the lengths
/// of those substrings form the range [min_len(v), len(v)]. Transitions are kept
/// in a flat singly-linked edge pool so that multi-megabyte inputs stay compact.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::string_view s);

  static constexpr int kRoot = 0;

  int num_states() const { return static_cast<int>(len_.size()); }
  int len(int v) const { return len_[v]; }
  int link(int v) const { return link_[v]; }
  int min_len(int v) const { return v == kRoot ? 0 : len_[link_[v]] + 1; }
  /// 0-based end index of the leftmost occurrence.
  int first_end(int v) const { return first_end_[v]; }
  /// Number of occurrences; the root (empty string) reports n + 1.
  std::int64_t count(int v) const { return count_[v]; }
  int transition(int v, unsigned char c) const;

  /// Calls f(from, symbol, to) for every transition.
  template <class F>
  void for_each_edge(F&& f) const {
    for (int v = 0; v < num_states(); ++v) {
      for (int e = head_[v]; e >= 0; e = next_[e]) f(v, edge_char_[e], edge_to_[e]);
    }
  }

  /// For each state v != root, the state holding the string obtained by
  /// dropping the last symbol of v's shortest member.
  std::vector<int> shortest_prefix_state() const;

  /// 0-based end positions of all occurrences of state v, unsorted.
  std::vector<int> end_positions(int v) const;

 private:
  int add_state(int len, int first_end, bool clone);
  void set_transition(int v, unsigned char c, int to);
  void extend(unsigned char c, int pos);
  void build_link_tree();

  int last_ = kRoot;
  std::vector<int> len_, link_, first_end_, head_;
  std::vector<std::int64_t> count_;
  std::vector<char> clone_;
  std::vector<int> next_, edge_to_;
  std::vector<unsigned char> edge_char_;
  std::vector<int> child_head_, child_next_;
};

}  // namespace repsat
