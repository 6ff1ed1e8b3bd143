#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

/// Every string of length n over the alphabet, in lexicographic order.
inline std::vector<std::string> all_strings(int n, const std::string& alphabet = "ab") {
  std::vector<std::string> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= alphabet.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::string s(n, alphabet[0]);
    std::uint64_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      s[i] = alphabet[c % alphabet.size()];
      c /= alphabet.size();
    }
    out.push_back(s);
  }
  return out;
}

inline std::string random_string(std::mt19937& rng, int n, const std::string& alphabet) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(n, ' ');
  for (char& c : s) c = alphabet[pick(rng)];
  return s;
}

/// Overlapping occurrence count; the empty string occurs n + 1 times.
inline int count_occurrences(const std::string& s, const std::string& p) {
  if (p.empty()) return static_cast<int>(s.size()) + 1;
  int c = 0;
  for (auto at = s.find(p); at != std::string::npos; at = s.find(p, at + 1)) ++c;
  return c;
}

}  // namespace testing_support
