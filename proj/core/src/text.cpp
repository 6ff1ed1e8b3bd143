#include "repsat/text.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "repsat/suffix_automaton.hpp"

namespace repsat {

Text::Text(std::string bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw std::invalid_argument("empty text");
  bool seen[256] = {};
  for (unsigned char c : bytes_) seen[c] = true;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) alphabet_.push_back(static_cast<unsigned char>(c));
  }
}

Text Text::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return Text(std::move(data));
}

std::vector<Pos> occurrences(const Text& t, const SubstringRef& s) {
  const std::string_view text = t.bytes();
  const std::string_view pattern = t.substr(s);
  std::vector<Pos> occ;
  for (std::size_t at = text.find(pattern); at != std::string_view::npos;
       at = text.find(pattern, at + 1)) {
    occ.push_back(static_cast<Pos>(at) + 1);
  }
  return occ;
}

namespace {

std::vector<Pos> merge_intervals(const std::vector<Pos>& sorted_starts, int len) {
  std::vector<Pos> out;
  Pos next_free = 0;
  for (Pos start : sorted_starts) {
    for (Pos p = std::max(start, next_free); p < start + len; ++p) out.push_back(p);
    next_free = std::max(next_free, start + len);
  }
  return out;
}

}  // namespace

std::vector<Pos> cover(const Text& t, const SubstringRef& s) {
  return merge_intervals(occurrences(t, s), s.len);
}

std::uint64_t MinimalSubstringSet::total_length() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += static_cast<std::uint64_t>(e.len);
  return total;
}

namespace {

// Visits (state, length) of every right-minimal substring, or only the shortest
// member of each state when `left_too` is set (minimal substrings).
template <class Visit>
void visit_minimal(const SuffixAutomaton& sam, bool left_too, Visit&& visit) {
  if (left_too) {
    const std::vector<int> pred = sam.shortest_prefix_state();
    for (int v = 1; v < sam.num_states(); ++v) {
      if (sam.count(pred[v]) > sam.count(v)) visit(v, sam.min_len(v));
    }
    return;
  }
  sam.for_each_edge([&](int u, unsigned char, int v) {
    if (sam.count(u) <= sam.count(v)) return;
    for (int l = sam.min_len(u); l <= sam.len(u); ++l) visit(v, l + 1);
  });
}

MinimalSubstringSet collect(const Text& t, bool left_too) {
  const SuffixAutomaton sam(t.bytes());
  MinimalSubstringSet out;
  visit_minimal(sam, left_too, [&](int v, int len) {
    out.entries.push_back(SubstringRef{sam.first_end(v) - len + 2, len});
  });
  std::sort(out.entries.begin(), out.entries.end(), [](const SubstringRef& a, const SubstringRef& b) {
    return a.start != b.start ? a.start < b.start : a.len < b.len;
  });
  return out;
}

SubstringStats stats_of(const Text& t, bool left_too) {
  const SuffixAutomaton sam(t.bytes());
  SubstringStats st;
  if (left_too) {
    visit_minimal(sam, true, [&](int, int len) {
      ++st.count;
      st.total_length += static_cast<std::uint64_t>(len);
    });
    return st;
  }
  // Closed form per edge instead of per length.
  sam.for_each_edge([&](int u, unsigned char, int v) {
    if (sam.count(u) <= sam.count(v)) return;
    const std::uint64_t lo = static_cast<std::uint64_t>(sam.min_len(u)) + 1;
    const std::uint64_t hi = static_cast<std::uint64_t>(sam.len(u)) + 1;
    st.count += hi - lo + 1;
    st.total_length += (lo + hi) * (hi - lo + 1) / 2;
  });
  return st;
}

}  // namespace

MinimalSubstringSet minimal_substrings(const Text& t) { return collect(t, true); }
MinimalSubstringSet right_minimal_substrings(const Text& t) { return collect(t, false); }
SubstringStats minimal_substring_stats(const Text& t) { return stats_of(t, true); }
SubstringStats right_minimal_substring_stats(const Text& t) { return stats_of(t, false); }

LpnfTable lpnf_table(const Text& t) {
  const int n = t.size();
  LpnfTable table;
  table.lpnf.assign(n + 1, 0);
  // Walk each diagonal (k, k + delta) right to left, tracking the match run.
  for (int delta = 1; delta < n; ++delta) {
    int run = 0;
    for (int k = n - delta; k >= 1; --k) {
      const int i = k + delta;
      run = t.at(k) == t.at(i) ? run + 1 : 0;
      table.lpnf[i] = std::max(table.lpnf[i], std::min(run, delta));
    }
  }
  return table;
}

MatchSets match_sets(const Text& t) {
  const int n = t.size();
  std::vector<std::vector<Pos>> by_symbol(256);
  for (Pos i = 1; i <= n; ++i) by_symbol[t.at(i)].push_back(i);
  MatchSets m;
  m.sets.resize(n + 1);
  for (Pos i = 1; i <= n; ++i) {
    for (Pos j : by_symbol[t.at(i)]) {
      if (j != i) m.sets[i].push_back(j);
    }
  }
  return m;
}

int lz_factor_count(const Text& t) {
  const SuffixAutomaton sam(t.bytes());
  const int n = t.size();
  int factors = 0;
  int i = 0;  // 0-based start of the next phrase
  while (i < n) {
    int v = SuffixAutomaton::kRoot;
    int len = 0;
    while (i + len < n) {
      const int w = sam.transition(v, static_cast<unsigned char>(t.bytes()[i + len]));
      // The leftmost occurrence of the extended string must start before i.
      if (w < 0 || sam.first_end(w) - len >= i) break;
      v = w;
      ++len;
    }
    i += std::max(len, 1);
    ++factors;
  }
  return factors;
}

LceTable::LceTable(const Text& t) : n_(t.size()) {
  if (n_ > 16384) throw std::invalid_argument("LceTable: text too long for a quadratic table");
  table_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = n_; i >= 1; --i) {
    for (int j = n_; j >= 1; --j) {
      if (t.at(i) != t.at(j)) continue;
      const int next = (*this)(i + 1, j + 1);
      table_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = static_cast<std::uint16_t>(next + 1);
    }
  }
}

}  // namespace repsat
