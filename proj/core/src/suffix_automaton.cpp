#include "repsat/suffix_automaton.hpp"

#include <algorithm>

namespace repsat {

SuffixAutomaton::SuffixAutomaton(std::string_view s) {
  const std::size_t cap = 2 * s.size() + 1;
  len_.reserve(cap);
  link_.reserve(cap);
  first_end_.reserve(cap);
  head_.reserve(cap);
  clone_.reserve(cap);
  next_.reserve(3 * s.size() + 1);
  edge_to_.reserve(3 * s.size() + 1);
  edge_char_.reserve(3 * s.size() + 1);

  add_state(0, -1, false);
  link_[kRoot] = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    extend(static_cast<unsigned char>(s[i]), static_cast<int>(i));
  }

  // Occurrence counts: every non-clone state ends exactly one prefix.
  const int states = num_states();
  count_.assign(states, 0);
  for (int v = 1; v < states; ++v) count_[v] = clone_[v] ? 0 : 1;
  std::vector<int> bucket(s.size() + 2, 0);
  for (int v = 0; v < states; ++v) ++bucket[len_[v]];
  for (std::size_t l = 1; l < bucket.size(); ++l) bucket[l] += bucket[l - 1];
  std::vector<int> order(states);
  for (int v = states - 1; v >= 0; --v) order[--bucket[len_[v]]] = v;
  for (int k = states - 1; k > 0; --k) {
    const int v = order[k];
    count_[link_[v]] += count_[v];
  }
  count_[kRoot] = static_cast<std::int64_t>(s.size()) + 1;

  build_link_tree();
}

int SuffixAutomaton::add_state(int len, int first_end, bool clone) {
  len_.push_back(len);
  link_.push_back(-1);
  first_end_.push_back(first_end);
  head_.push_back(-1);
  clone_.push_back(clone ? 1 : 0);
  return num_states() - 1;
}

int SuffixAutomaton::transition(int v, unsigned char c) const {
  for (int e = head_[v]; e >= 0; e = next_[e]) {
    if (edge_char_[e] == c) return edge_to_[e];
  }
  return -1;
}

void SuffixAutomaton::set_transition(int v, unsigned char c, int to) {
  for (int e = head_[v]; e >= 0; e = next_[e]) {
    if (edge_char_[e] == c) {
      edge_to_[e] = to;
      return;
    }
  }
  next_.push_back(head_[v]);
  edge_to_.push_back(to);
  edge_char_.push_back(c);
  head_[v] = static_cast<int>(next_.size()) - 1;
}

void SuffixAutomaton::extend(unsigned char c, int pos) {
  const int cur = add_state(len_[last_] + 1, pos, false);
  int p = last_;
  while (p != -1 && transition(p, c) < 0) {
    set_transition(p, c, cur);
    p = link_[p];
  }
  if (p == -1) {
    link_[cur] = kRoot;
  } else {
    const int q = transition(p, c);
    if (len_[p] + 1 == len_[q]) {
      link_[cur] = q;
    } else {
      const int cl = add_state(len_[p] + 1, first_end_[q], true);
      // Copy q's outgoing edges; iterate over a snapshot since the pool grows.
      std::vector<std::pair<unsigned char, int>> edges;
      for (int e = head_[q]; e >= 0; e = next_[e]) edges.emplace_back(edge_char_[e], edge_to_[e]);
      for (auto it = edges.rbegin(); it != edges.rend(); ++it) set_transition(cl, it->first, it->second);
      link_[cl] = link_[q];
      while (p != -1 && transition(p, c) == q) {
        set_transition(p, c, cl);
        p = link_[p];
      }
      link_[q] = cl;
      link_[cur] = cl;
    }
  }
  last_ = cur;
}

void SuffixAutomaton::build_link_tree() {
  child_head_.assign(num_states(), -1);
  child_next_.assign(num_states(), -1);
  for (int v = num_states() - 1; v > 0; --v) {
    child_next_[v] = child_head_[link_[v]];
    child_head_[link_[v]] = v;
  }
}

std::vector<int> SuffixAutomaton::shortest_prefix_state() const {
  std::vector<int> pred(num_states(), -1);
  for_each_edge([&](int u, unsigned char, int v) {
    const int want = min_len(v) - 1;
    if (min_len(u) <= want && want <= len(u)) pred[v] = u;
  });
  return pred;
}

std::vector<int> SuffixAutomaton::end_positions(int v) const {
  std::vector<int> out;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u != kRoot && !clone_[u]) out.push_back(first_end_[u]);
    for (int c = child_head_[u]; c >= 0; c = child_next_[c]) stack.push_back(c);
  }
  return out;
}

}  // namespace repsat
