#pragma once

#include <vector>

#include "repsat/cnf.hpp"
#include "repsat/text.hpp"

namespace repsat {

enum class AttractorVariant { Simple, Minimal };

/// Sorted set of attractor positions.
struct AttractorSet {
  std::vector<Pos> positions;

  std::size_t size() const { return positions.size(); }
  friend bool operator==(const AttractorSet&, const AttractorSet&) = default;
};

/// Variables P(1..n) in order, one hard clause C_S = OR_{i in cover(S)} p_i per
/// distinct substring (Simple) or per minimal substring (Minimal), softs ¬p_i.
Formula encode_attractor(const Text& t, AttractorVariant variant = AttractorVariant::Minimal);

AttractorSet decode_attractor(const Text& t, const Formula& f, const Assignment& a);

/// True iff every minimal substring's cover meets the set. For n <= 1000 the
/// check is repeated over all distinct substrings and both must agree.
bool verify_attractor(const Text& t, const AttractorSet& g);

}  // namespace repsat
