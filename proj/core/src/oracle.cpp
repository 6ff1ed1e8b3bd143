#include "repsat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace repsat {

namespace {

void check_size(const Text& t, int max_n, const char* what) {
  if (t.size() > max_n) {
    throw std::invalid_argument(std::string(what) + " oracle limited to n <= " + std::to_string(max_n) +
                                ", got " + std::to_string(t.size()));
  }
}

int count_occ(const std::string& s, const std::string& p) {
  if (p.empty()) return static_cast<int>(s.size()) + 1;
  int c = 0;
  for (auto at = s.find(p); at != std::string::npos; at = s.find(p, at + 1)) ++c;
  return c;
}

// --- b ---------------------------------------------------------------------

class BmsSearch {
 public:
  explicit BmsSearch(const std::string& s) : s_(s), n_(static_cast<int>(s.size())), source_(n_, -2) {
    for (unsigned char c : s) ++symbol_left_[c];
    for (int c : symbol_left_) distinct_ += c > 0 ? 1 : 0;
  }

  bool feasible(int k) {
    k_ = k;
    return dfs(0, 0, distinct_);
  }

 private:
  // source_[i]: -1 ground, -2 unassigned, else 0-based source position.
  bool cyclic_from(int i) const {
    int x = i;
    for (int steps = 0; steps <= n_; ++steps) {
      x = source_[x];
      if (x < 0) return false;
      if (x == i) return true;
    }
    return true;
  }

  bool dfs(int pos, int used, int ungrounded) {
    if (pos == n_) return true;
    if (used + std::max(1, ungrounded) > k_) return false;

    const auto c = static_cast<unsigned char>(s_[pos]);
    // Ground phrase.
    const bool first_ground = !grounded_[c];
    source_[pos] = -1;
    grounded_[c] = true;
    if (dfs(pos + 1, used + 1, ungrounded - (first_ground ? 1 : 0))) return true;
    grounded_[c] = !first_ground;
    source_[pos] = -2;

    // Copy phrases, longest first.
    for (int len = n_ - pos; len >= 1; --len) {
      for (int src = 0; src + len <= n_; ++src) {
        if (src == pos || s_.compare(src, len, s_, pos, len) != 0) continue;
        for (int q = 0; q < len; ++q) source_[pos + q] = src + q;
        bool ok = true;
        for (int q = 0; q < len && ok; ++q) ok = !cyclic_from(pos + q);
        if (ok && dfs(pos + len, used + 1, ungrounded)) return true;
        for (int q = 0; q < len; ++q) source_[pos + q] = -2;
      }
    }
    return false;
  }

  const std::string& s_;
  int n_;
  int k_ = 0;
  std::vector<int> source_;
  int symbol_left_[256] = {};
  bool grounded_[256] = {};
  int distinct_ = 0;
};

// --- g ---------------------------------------------------------------------

class SlpSearch {
 public:
  explicit SlpSearch(const std::string& s) {
    for (char c : s) members_.insert(std::string(1, c));
    if (s.size() >= 2) {
      members_.insert(s);
      pending_.push_back(s);
    }
  }

  int base() const { return static_cast<int>(members_.size()); }

  bool feasible(int k) {
    k_ = k;
    return dfs();
  }

 private:
  bool dfs() {
    if (static_cast<int>(members_.size()) > k_) return false;
    if (pending_.empty()) return true;
    // Split the longest pending string first.
    auto it = std::max_element(pending_.begin(), pending_.end(),
                               [](const std::string& a, const std::string& b) { return a.size() < b.size(); });
    const std::string s = *it;
    *it = pending_.back();
    pending_.pop_back();
    for (std::size_t i = 1; i < s.size(); ++i) {
      std::vector<std::string> added;
      for (std::string part : {s.substr(0, i), s.substr(i)}) {
        if (members_.insert(part).second) {
          added.push_back(part);
          if (part.size() >= 2) pending_.push_back(part);
        }
      }
      if (dfs()) return true;
      for (const std::string& part : added) {
        members_.erase(part);
        if (part.size() >= 2) pending_.erase(std::find(pending_.begin(), pending_.end(), part));
      }
    }
    pending_.push_back(s);
    return false;
  }

  std::set<std::string> members_;
  std::vector<std::string> pending_;
  int k_ = 0;
};

}  // namespace

std::vector<Pos> brute_attractor(const Text& t, int max_n) {
  check_size(t, max_n, "gamma");
  const std::string s(t.bytes());
  const int n = t.size();
  if (n > 62) throw std::invalid_argument("gamma oracle uses 64-bit masks");

  // Cover masks of all minimal substrings.
  std::set<std::string> seen;
  std::vector<std::uint64_t> covers;
  for (int len = 1; len <= n; ++len) {
    for (int st = 0; st + len <= n; ++st) {
      std::string p = s.substr(st, len);
      if (!seen.insert(p).second) continue;
      const int occ = count_occ(s, p);
      if (occ >= count_occ(s, p.substr(1)) || occ >= count_occ(s, p.substr(0, len - 1))) continue;
      std::uint64_t mask = 0;
      for (auto at = s.find(p); at != std::string::npos; at = s.find(p, at + 1)) {
        mask |= ((std::uint64_t{1} << len) - 1) << at;
      }
      covers.push_back(mask);
    }
  }

  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack: all n-bit masks with k bits set, in increasing order.
    for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < limit;) {
      bool hits = true;
      for (std::uint64_t c : covers) {
        if ((c & m) == 0) {
          hits = false;
          break;
        }
      }
      if (hits) {
        std::vector<Pos> out;
        for (int i = 0; i < n; ++i) {
          if ((m >> i) & 1u) out.push_back(i + 1);
        }
        return out;
      }
      const std::uint64_t low = m & -m;
      const std::uint64_t r = m + low;
      m = (((r ^ m) >> 2) / low) | r;
    }
  }
  throw std::logic_error("no attractor found");
}

int brute_gamma(const Text& t, int max_n) {
  return static_cast<int>(brute_attractor(t, max_n).size());
}

int brute_b(const Text& t, int max_n) {
  check_size(t, max_n, "b");
  const std::string s(t.bytes());
  BmsSearch search(s);
  for (int k = 1; k <= t.size(); ++k) {
    if (search.feasible(k)) return k;
  }
  throw std::logic_error("no macro scheme found");
}

int brute_g(const Text& t, int max_n) {
  check_size(t, max_n, "g");
  SlpSearch search(std::string(t.bytes()));
  for (int k = search.base();; ++k) {
    if (search.feasible(k)) return k;
  }
}

}  // namespace repsat
