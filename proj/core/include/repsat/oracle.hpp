#pragma once

#include <vector>

#include "repsat/text.hpp"

namespace repsat {

inline constexpr int kGammaOracleMaxN = 14;
inline constexpr int kBmsOracleMaxN = 9;
inline constexpr int kSlpOracleMaxN = 9;

/// Smallest attractor by enumerating position subsets in order of size. Minimal
/// substrings are found by a direct quadratic scan, not the suffix automaton.
/// Throws std::invalid_argument when n > max_n.
std::vector<Pos> brute_attractor(const Text& t, int max_n = kGammaOracleMaxN);
int brute_gamma(const Text& t, int max_n = kGammaOracleMaxN);

/// Smallest bidirectional macro scheme by depth-first search over phrase sequences.
int brute_b(const Text& t, int max_n = kBmsOracleMaxN);

/// Smallest SLP as the smallest set of strings that contains T and splits every
/// member of length >= 2 into two members.
int brute_g(const Text& t, int max_n = kSlpOracleMaxN);

}  // namespace repsat
