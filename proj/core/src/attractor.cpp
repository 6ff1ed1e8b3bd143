#include "repsat/attractor.hpp"

#include <algorithm>
#include <stdexcept>

#include "repsat/suffix_automaton.hpp"

namespace repsat {

namespace {

// Sorted cover of the length-`len` members of state v.
std::vector<Pos> state_cover(const SuffixAutomaton& sam, int v, int len) {
  std::vector<int> ends = sam.end_positions(v);
  std::sort(ends.begin(), ends.end());
  std::vector<Pos> out;
  Pos next_free = 0;
  for (int e : ends) {
    const Pos start = e - len + 2;  // 1-based
    for (Pos p = std::max(start, next_free); p < start + len; ++p) out.push_back(p);
    next_free = std::max(next_free, start + len);
  }
  return out;
}

// Calls f(cover) for every clause of the chosen variant, in a deterministic order
// (by leftmost occurrence, then length).
template <class F>
void for_each_clause_cover(const Text& t, AttractorVariant variant, F&& f) {
  const SuffixAutomaton sam(t.bytes());
  struct Item {
    Pos start;
    int len;
    int state;
  };
  std::vector<Item> items;
  if (variant == AttractorVariant::Minimal) {
    const std::vector<int> pred = sam.shortest_prefix_state();
    for (int v = 1; v < sam.num_states(); ++v) {
      if (sam.count(pred[v]) > sam.count(v)) {
        items.push_back({sam.first_end(v) - sam.min_len(v) + 2, sam.min_len(v), v});
      }
    }
  } else {
    for (int v = 1; v < sam.num_states(); ++v) {
      for (int l = sam.min_len(v); l <= sam.len(v); ++l) items.push_back({sam.first_end(v) - l + 2, l, v});
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.start != b.start ? a.start < b.start : a.len < b.len;
  });
  for (const Item& it : items) f(state_cover(sam, it.state, it.len));
}

bool hits(const std::vector<Pos>& cov, const std::vector<char>& in_set) {
  return std::any_of(cov.begin(), cov.end(), [&](Pos p) { return in_set[p] != 0; });
}

}  // namespace

Formula encode_attractor(const Text& t, AttractorVariant variant) {
  Formula f;
  const int n = t.size();
  std::vector<VarId> p(n + 1);
  for (Pos i = 1; i <= n; ++i) p[i] = f.new_var(SemanticVar::p(i));
  for_each_clause_cover(t, variant, [&](const std::vector<Pos>& cov) {
    Clause c;
    c.reserve(cov.size());
    for (Pos i : cov) c.push_back(p[i]);
    f.add_hard(std::move(c));
  });
  for (Pos i = 1; i <= n; ++i) f.add_soft_negation(p[i]);
  return f;
}

AttractorSet decode_attractor(const Text& t, const Formula& f, const Assignment& a) {
  AttractorSet g;
  for (Pos i = 1; i <= t.size(); ++i) {
    if (value_of(f, a, SemanticVar::p(i))) g.positions.push_back(i);
  }
  return g;
}

bool verify_attractor(const Text& t, const AttractorSet& g) {
  const int n = t.size();
  std::vector<char> in_set(n + 1, 0);
  for (Pos p : g.positions) {
    if (p < 1 || p > n) return false;
    in_set[p] = 1;
  }
  bool ok = true;
  for_each_clause_cover(t, AttractorVariant::Minimal, [&](const std::vector<Pos>& cov) {
    ok = ok && hits(cov, in_set);
  });
  if (n <= 1000) {
    // Independent route: every distinct substring, via plain string search.
    bool all = true;
    for (Pos i = 1; i <= n && all; ++i) {
      for (int len = 1; i + len - 1 <= n && all; ++len) {
        const SubstringRef s{i, len};
        // Only the leftmost occurrence of each distinct string needs checking.
        const std::size_t first = t.bytes().find(t.substr(s));
        if (static_cast<Pos>(first) + 1 != i) continue;
        all = hits(cover(t, s), in_set);
      }
    }
    if (all != ok) throw std::logic_error("attractor verifiers disagree");
  }
  return ok;
}

}  // namespace repsat
