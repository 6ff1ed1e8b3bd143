#include "repsat/bms.hpp"

#include <string>

namespace repsat {

int phrase_length(const BmsScheme::Phrase& ph) {
  if (const auto* c = std::get_if<BmsScheme::Copy>(&ph)) return c->src_end - c->src_start + 1;
  return 1;
}

Formula encode_bms(const Text& t) {
  const int n = t.size();
  const MatchSets m = match_sets(t);
  Formula f;

  std::vector<VarId> p(n + 1), root(n + 1);
  for (Pos i = 1; i <= n; ++i) p[i] = f.new_var(SemanticVar::p(i));
  for (Pos i = 1; i <= n; ++i) root[i] = f.new_var(SemanticVar::root(i));
  for (Pos i = 1; i <= n; ++i) {
    for (Pos j : m.at(i)) f.new_var(SemanticVar::rp(i, j));
  }
  // A reference tree holds one symbol, so depths stay below its count.
  std::vector<int> count(256, 0);
  for (Pos i = 1; i <= n; ++i) ++count[t.at(i)];
  std::vector<int> max_depth(n + 1);
  for (Pos i = 1; i <= n; ++i) max_depth[i] = count[t.at(i)] - 1;
  for (int d = 1; d <= n - 1; ++d) {
    for (Pos i = 1; i <= n; ++i) {
      if (d > max_depth[i]) continue;
      for (Pos j : m.at(i)) f.new_var(SemanticVar::dref(d, i, j));
    }
  }
  auto rp = [&](Pos i, Pos j) { return f.var(SemanticVar::rp(i, j)); };
  auto dref = [&](int d, Pos i, Pos j) { return f.var(SemanticVar::dref(d, i, j)); };

  for (Pos i = 1; i <= n; ++i) {
    // Every node is a root or has exactly one parent at one depth.
    std::vector<Lit> one{root[i]};
    for (int d = 1; d <= max_depth[i]; ++d) {
      for (Pos j : m.at(i)) one.push_back(dref(d, i, j));
    }
    f.add_exactly_one(one);

    for (int d = 1; d <= max_depth[i]; ++d) {
      for (Pos j : m.at(i)) {
        const Lit edge = dref(d, i, j);
        if (d == 1) {
          // Depth-1 nodes hang off a root.
          f.add_hard({-edge, root[j]});
        } else {
          // The parent sits one level higher.
          Clause up{-edge};
          for (Pos k : m.at(j)) up.push_back(dref(d - 1, j, k));
          f.add_hard(std::move(up));
        }
        // Forest edges are position references.
        f.add_hard({-edge, rp(i, j)});
      }
    }

    // At most one reference per position.
    std::vector<Lit> refs;
    for (Pos j : m.at(i)) refs.push_back(rp(i, j));
    f.add_at_most_one(refs);

    // Roots are ground phrases.
    f.add_hard({-root[i], p[i]});
    for (Pos j : m.at(i)) f.add_hard({-root[i], -rp(i, j)});

    for (Pos j : m.at(i)) {
      if (i == 1 || j == 1 || t.at(i - 1) != t.at(j - 1)) {
        // The reference cannot continue the previous position's phrase.
        f.add_hard({-rp(i, j), p[i]});
      } else {
        // A phrase continues only if the previous position refers to j-1.
        f.add_hard({rp(i - 1, j - 1), -rp(i, j), p[i]});
      }
    }
  }

  // Implied: every symbol has a root, and a root ends its phrase.
  for (unsigned char c : t.alphabet()) {
    Clause some;
    for (Pos i = 1; i <= n; ++i) {
      if (t.at(i) == c) some.push_back(root[i]);
    }
    f.add_hard(std::move(some));
  }
  for (Pos i = 1; i < n; ++i) f.add_hard({-root[i], p[i + 1]});
  for (Pos i = 1; i < n; ++i) {
    for (Pos j : m.at(i)) {
      Clause next{-rp(i, j), p[i + 1]};
      if (j < n && t.at(i + 1) == t.at(j + 1)) next.push_back(rp(i + 1, j + 1));
      f.add_hard(std::move(next));
    }
  }

  f.freeze(p[1]);
  for (Pos i = 1; i <= n; ++i) f.add_soft_negation(p[i]);
  return f;
}

std::vector<Pos> reference_parents(const Text& t, const Formula& f, const Assignment& a) {
  const int n = t.size();
  std::vector<Pos> parent(n + 1, 0);
  std::vector<int> edges(n + 1, 0);
  for (const auto& [id, sv] : f.registry()) {
    if (sv.tag != VarTag::Dref || !a.value(id)) continue;
    const Pos i = sv.idx[1];
    parent[i] = sv.idx[2];
    ++edges[i];
  }
  for (Pos i = 1; i <= n; ++i) {
    const bool is_root = value_of(f, a, SemanticVar::root(i));
    if (edges[i] + (is_root ? 1 : 0) != 1) {
      throw InvalidAssignment("position " + std::to_string(i) + " is not exactly one of root/child");
    }
  }
  return parent;
}

BmsScheme decode_bms(const Text& t, const Formula& f, const Assignment& a) {
  const int n = t.size();
  const MatchSets m = match_sets(t);
  auto val = [&](const SemanticVar& sv) { return value_of(f, a, sv); };

  // Position-level references: 0 for roots.
  std::vector<Pos> target(n + 1, 0);
  for (Pos i = 1; i <= n; ++i) {
    int count = 0;
    for (Pos j : m.at(i)) {
      if (val(SemanticVar::rp(i, j))) {
        target[i] = j;
        ++count;
      }
    }
    const bool is_root = val(SemanticVar::root(i));
    if (count > 1) throw InvalidAssignment("position " + std::to_string(i) + " has several references");
    if (is_root == (count == 1)) {
      throw InvalidAssignment("position " + std::to_string(i) + " must be either ground or referencing");
    }
  }
  if (!val(SemanticVar::p(1))) throw InvalidAssignment("P(1) unset");

  BmsScheme s;
  Pos start = 1;
  while (start <= n) {
    Pos end = start + 1;
    while (end <= n && !val(SemanticVar::p(end))) ++end;
    const int len = end - start;
    if (target[start] == 0) {
      if (len != 1) throw InvalidAssignment("ground phrase at " + std::to_string(start) + " is longer than 1");
      s.phrases.emplace_back(BmsScheme::Ground{t.at(start)});
    } else {
      const Pos src = target[start];
      for (int k = 1; k < len; ++k) {
        if (target[start + k] != src + k) {
          throw InvalidAssignment("phrase at " + std::to_string(start) + " has non-adjacent references");
        }
      }
      s.phrases.emplace_back(BmsScheme::Copy{src, src + len - 1});
    }
    start = end;
  }
  if (!verify_bms(t, s)) throw InvalidAssignment("decoded scheme does not reproduce the text");
  return s;
}

bool verify_bms(const Text& t, const BmsScheme& s) {
  const int n = t.size();
  std::vector<Pos> source(n + 1, 0);
  std::string out(n, '\0');
  std::vector<char> known(n + 1, 0);
  Pos pos = 1;
  for (const auto& ph : s.phrases) {
    if (const auto* g = std::get_if<BmsScheme::Ground>(&ph)) {
      if (pos > n) return false;
      out[pos - 1] = static_cast<char>(g->symbol);
      known[pos] = 1;
      ++pos;
      continue;
    }
    const auto& c = std::get<BmsScheme::Copy>(ph);
    if (c.src_start < 1 || c.src_end > n || c.src_end < c.src_start) return false;
    const int len = c.src_end - c.src_start + 1;
    if (pos + len - 1 > n) return false;
    for (int k = 0; k < len; ++k) source[pos + k] = c.src_start + k;
    pos += len;
  }
  if (pos != n + 1) return false;

  int unresolved = 0;
  for (Pos i = 1; i <= n; ++i) unresolved += known[i] ? 0 : 1;
  while (unresolved > 0) {
    bool progress = false;
    for (Pos i = 1; i <= n; ++i) {
      if (known[i] || !known[source[i]]) continue;
      out[i - 1] = out[source[i] - 1];
      known[i] = 1;
      --unresolved;
      progress = true;
    }
    if (!progress) return false;
  }
  return out == t.bytes();
}

}  // namespace repsat
