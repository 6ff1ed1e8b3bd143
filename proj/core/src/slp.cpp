#include "repsat/slp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace repsat {

namespace {

struct IntervalKey {
  Pos start;
  int len;
  auto operator<=>(const IntervalKey&) const = default;
};

}  // namespace

Formula encode_slp(const Text& t) {
  const int n = t.size();
  const LceTable lce(t);
  const LpnfTable lpnf = lpnf_table(t);
  Formula f;

  std::vector<VarId> p(n + 2);
  for (Pos i = 1; i <= n + 1; ++i) p[i] = f.new_var(SemanticVar::p(i));

  // f_{i,l}, stored row-wise.
  std::vector<std::vector<VarId>> fv(n + 1);
  for (Pos i = 1; i <= n; ++i) {
    fv[i].assign(n + 2 - i, 0);
    for (int l = 1; l <= n + 1 - i; ++l) fv[i][l] = f.new_var(SemanticVar::f(i, l));
  }

  // ref_{i'<-i,l}: grouped by referencing factor and by referenced interval.
  std::map<IntervalKey, std::vector<VarId>> refs_of_factor;
  std::map<IntervalKey, std::vector<VarId>> refs_to_interval;
  for (Pos i = 2; i <= n; ++i) {
    for (int l = 2; l <= n + 1 - i; ++l) {
      for (Pos src = 1; src <= i - l; ++src) {
        if (!lce.equal(src, i, l)) continue;
        const VarId r = f.new_var(SemanticVar::ref(src, i, l));
        refs_of_factor[{i, l}].push_back(r);
        refs_to_interval[{src, l}].push_back(r);
      }
    }
  }

  // q_{i',l} exists exactly where some later copy can reference the interval.
  std::map<IntervalKey, VarId> qv;
  for (const auto& [key, refs] : refs_to_interval) qv[key] = f.new_var(SemanticVar::q(key.start, key.len));

  // Factor variables agree with the boundary variables.
  for (Pos i = 1; i <= n; ++i) {
    for (int l = 1; l <= n + 1 - i; ++l) {
      std::vector<Lit> body{p[i]};
      for (Pos k = i + 1; k < i + l; ++k) body.push_back(-p[k]);
      body.push_back(p[i + l]);
      f.add_iff_conjunction(fv[i][l], body);
    }
  }
  // A first occurrence of length >= 2 cannot be a factor.
  for (Pos i = 1; i <= n; ++i) {
    for (int l = std::max(2, lpnf.at(i) + 1); l <= n + 1 - i; ++l) f.add_hard({-fv[i][l]});
  }
  for (const auto& [key, refs] : refs_of_factor) {
    const VarId factor = fv[key.start][key.len];
    // a factor of length >= 2 references some earlier occurrence,
    f.add_implies(std::span<const Lit>(&factor, 1), refs);
    // at most one of them,
    f.add_at_most_one(refs);
    // and references only exist for factors.
    for (VarId r : refs) f.add_hard({-r, factor});
  }
  for (const auto& [key, refs] : refs_to_interval) {
    const VarId q = qv.at(key);
    // q marks referenced intervals.
    Clause some{-q};
    some.insert(some.end(), refs.begin(), refs.end());
    f.add_hard(std::move(some));
    for (VarId r : refs) f.add_hard({-r, q});
    // A referenced interval spans at least two factors.
    f.add_hard({-q, -fv[key.start][key.len]});
    f.add_hard({-q, p[key.start]});
    f.add_hard({-q, p[key.start + key.len]});
  }
  // Referenced intervals do not cross.
  std::vector<std::vector<std::pair<int, VarId>>> q_by_start(n + 1);
  for (const auto& [key, q] : qv) q_by_start[key.start].emplace_back(key.len, q);
  for (const auto& [key, q1] : qv) {
    const Pos end1 = key.start + key.len;
    for (Pos i2 = key.start + 1; i2 < end1; ++i2) {
      for (const auto& [l2, q2] : q_by_start[i2]) {
        if (i2 + l2 > end1) f.add_hard({-q1, -q2});
      }
    }
  }

  f.freeze(p[1]);
  f.freeze(p[n + 1]);
  for (Pos i = 1; i <= n; ++i) f.add_soft_negation(p[i]);
  return f;
}

std::optional<std::string> check_grammar_parsing(const Text& t, const GrammarParsing& gp) {
  const int n = t.size();
  std::vector<int> factor_len_at(n + 2, 0);
  Pos next = 1;
  for (const auto& fac : gp.factors) {
    if (fac.span.start != next || fac.span.len < 1) return "factors do not partition the text";
    if (!t.valid(fac.span)) return "factor out of range";
    factor_len_at[fac.span.start] = fac.span.len;
    next = fac.span.end();
  }
  if (next != n + 1) return "factors do not cover the text";

  std::set<IntervalKey> referenced;
  for (const auto& fac : gp.factors) {
    const auto [i, l] = fac.span;
    if (l == 1) {
      if (fac.ref) return "unit factor carries a reference";
      continue;
    }
    if (!fac.ref) return "factor at " + std::to_string(i) + " has no reference";
    const Pos src = *fac.ref;
    if (src < 1 || src > i - l) return "reference of factor at " + std::to_string(i) + " is not earlier";
    if (t.substr({src, l}) != t.substr(fac.span)) return "reference content mismatch at " + std::to_string(i);
    referenced.insert({src, l});
  }
  for (const auto& key : referenced) {
    const Pos end = key.start + key.len;
    if (factor_len_at[key.start] == 0 || (end <= n && factor_len_at[end] == 0)) {
      return "referenced interval at " + std::to_string(key.start) + " is not factor aligned";
    }
    if (factor_len_at[key.start] == key.len) {
      return "referenced interval at " + std::to_string(key.start) + " is a single factor";
    }
  }
  std::set<IntervalKey> nodes;
  for (const auto& s : gp.internal_nodes) nodes.insert({s.start, s.len});
  if (nodes != referenced) return "internal nodes differ from referenced intervals";
  for (const auto& a : referenced) {
    for (const auto& b : referenced) {
      if (a.start < b.start && b.start < a.start + a.len && a.start + a.len < b.start + b.len) {
        return "referenced intervals cross";
      }
    }
  }
  return std::nullopt;
}

GrammarParsing decode_grammar_parsing(const Text& t, const Formula& f, const Assignment& a) {
  const int n = t.size();
  auto val = [&](const SemanticVar& sv) { return value_of(f, a, sv); };
  if (!val(SemanticVar::p(1)) || !val(SemanticVar::p(n + 1))) throw InvalidAssignment("outer boundaries unset");

  GrammarParsing gp;
  std::vector<Pos> starts;
  for (Pos i = 1; i <= n + 1; ++i) {
    if (val(SemanticVar::p(i))) starts.push_back(i);
  }
  std::set<IntervalKey> factor_set;
  for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
    const SubstringRef span{starts[k], starts[k + 1] - starts[k]};
    factor_set.insert({span.start, span.len});
    gp.factors.push_back({span, std::nullopt});
  }
  for (Pos i = 1; i <= n; ++i) {
    for (int l = 1; l <= n + 1 - i; ++l) {
      if (val(SemanticVar::f(i, l)) != (factor_set.count({i, l}) > 0)) {
        throw InvalidAssignment("factor variable F(" + std::to_string(i) + "," + std::to_string(l) +
                                ") disagrees with boundaries");
      }
    }
  }

  std::set<IntervalKey> referenced;
  for (const auto& [id, sv] : f.registry()) {
    if (sv.tag != VarTag::Ref || !a.value(id)) continue;
    const auto [src, i, l] = sv.idx;
    auto it = std::find_if(gp.factors.begin(), gp.factors.end(),
                           [&](const auto& fac) { return fac.span == SubstringRef{i, l}; });
    if (it == gp.factors.end()) throw InvalidAssignment("reference set for a non-factor at " + std::to_string(i));
    if (it->ref) throw InvalidAssignment("factor at " + std::to_string(i) + " has two references");
    it->ref = src;
    referenced.insert({src, l});
  }
  for (const auto& [id, sv] : f.registry()) {
    if (sv.tag != VarTag::Q) continue;
    if (a.value(id) != (referenced.count({sv.idx[0], sv.idx[1]}) > 0)) {
      throw InvalidAssignment("Q(" + std::to_string(sv.idx[0]) + "," + std::to_string(sv.idx[1]) +
                              ") disagrees with references");
    }
  }
  for (const auto& key : referenced) gp.internal_nodes.push_back({key.start, key.len});
  if (auto why = check_grammar_parsing(t, gp)) throw InvalidAssignment(*why);
  return gp;
}

Slp parsing_to_slp(const Text& t, const GrammarParsing& gp) {
  if (auto why = check_grammar_parsing(t, gp)) throw std::invalid_argument("not a grammar parsing: " + *why);
  Slp slp;
  int terminal_id[256];
  for (unsigned char c : t.alphabet()) {
    terminal_id[c] = static_cast<int>(slp.rules.size());
    slp.rules.emplace_back(Slp::Terminal{c});
  }
  const int n = t.size();
  if (n == 1) {
    slp.start = terminal_id[t.at(1)];
    return slp;
  }

  // Tree items: the root, every internal node, every factor (leaf). Sorting by
  // (start, longer first) places each parent before its children.
  struct Item {
    SubstringRef span;
    int factor = -1;  // index into gp.factors, or -1 for an internal node
    std::vector<int> children;
  };
  std::vector<Item> items;
  items.push_back({{1, n}, -1, {}});
  for (const auto& s : gp.internal_nodes) items.push_back({s, -1, {}});
  for (int k = 0; k < static_cast<int>(gp.factors.size()); ++k) items.push_back({gp.factors[k].span, k, {}});
  std::vector<int> order(items.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const auto& a = items[x].span;
    const auto& b = items[y].span;
    if (a.start != b.start) return a.start < b.start;
    if (a.len != b.len) return a.len > b.len;
    return items[x].factor < items[y].factor;  // nodes before an equal-span leaf
  });
  std::vector<int> stack;
  for (int k : order) {
    while (!stack.empty() && items[stack.back()].span.end() <= items[k].span.start) stack.pop_back();
    if (!stack.empty()) items[stack.back()].children.push_back(k);
    if (items[k].factor < 0) stack.push_back(k);
  }

  std::map<IntervalKey, int> node_symbol;
  // Post-order emission; references always point to finished nodes on the left.
  auto emit = [&](auto&& self, int k) -> int {
    const Item& it = items[k];
    if (it.factor >= 0) {
      if (it.span.len == 1) return terminal_id[t.at(it.span.start)];
      const auto& fac = gp.factors[it.factor];
      return node_symbol.at({*fac.ref, it.span.len});
    }
    int acc = self(self, it.children.front());
    for (std::size_t c = 1; c < it.children.size(); ++c) {
      const int right = self(self, it.children[c]);
      slp.rules.emplace_back(Slp::Pair{acc, right});
      acc = static_cast<int>(slp.rules.size()) - 1;
    }
    node_symbol[{it.span.start, it.span.len}] = acc;
    return acc;
  };
  slp.start = emit(emit, 0);
  return slp;
}

bool verify_slp(const Text& t, const Slp& s) {
  const int rules = static_cast<int>(s.rules.size());
  if (s.start < 0 || s.start >= rules) return false;
  for (const auto& r : s.rules) {
    if (const auto* p = std::get_if<Slp::Pair>(&r)) {
      if (p->left < 0 || p->left >= rules || p->right < 0 || p->right >= rules) return false;
    }
  }
  // Expansion lengths with cycle detection; lengths saturate above n.
  const std::int64_t cap = static_cast<std::int64_t>(t.size()) + 1;
  std::vector<std::int64_t> len(rules, -1);
  std::vector<char> state(rules, 0);  // 0 new, 1 on stack, 2 done
  for (int root = 0; root < rules; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [v, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        const auto& p = std::get<Slp::Pair>(s.rules[v]);
        len[v] = std::min(cap, len[p.left] + len[p.right]);
        state[v] = 2;
        continue;
      }
      if (state[v] == 2) continue;
      if (state[v] == 1) return false;
      if (std::holds_alternative<Slp::Terminal>(s.rules[v])) {
        len[v] = 1;
        state[v] = 2;
        continue;
      }
      state[v] = 1;
      stack.push_back({v, true});
      const auto& p = std::get<Slp::Pair>(s.rules[v]);
      for (int c : {p.right, p.left}) {
        if (state[c] == 1) return false;
        if (state[c] == 0) stack.push_back({c, false});
      }
    }
  }
  if (len[s.start] != t.size()) return false;

  std::string out;
  out.reserve(t.size());
  std::vector<int> stack{s.start};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (const auto* term = std::get_if<Slp::Terminal>(&s.rules[v])) {
      out.push_back(static_cast<char>(term->symbol));
    } else {
      const auto& p = std::get<Slp::Pair>(s.rules[v]);
      stack.push_back(p.right);
      stack.push_back(p.left);
    }
  }
  return out == t.bytes();
}

}  // namespace repsat
