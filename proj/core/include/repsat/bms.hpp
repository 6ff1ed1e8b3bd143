#pragma once

#include <variant>
#include <vector>

#include "repsat/cnf.hpp"
#include "repsat/errors.hpp"
#include "repsat/text.hpp"

namespace repsat {

/// Bidirectional macro scheme: a factorization into ground symbols and copies.
struct BmsScheme {
  struct Ground {
    unsigned char symbol;
    friend bool operator==(const Ground&, const Ground&) = default;
  };
  /// Copy of T[src_start..src_end], 1-based and inclusive.
  struct Copy {
    Pos src_start;
    Pos src_end;
    friend bool operator==(const Copy&, const Copy&) = default;
  };
  using Phrase = std::variant<Ground, Copy>;

  std::vector<Phrase> phrases;

  std::size_t size() const { return phrases.size(); }
  friend bool operator==(const BmsScheme&, const BmsScheme&) = default;
};

int phrase_length(const BmsScheme::Phrase& ph);

/// Reference forest plus phrase boundaries:
/// ROOT(i), DREF(d,i,j) for d in [1,n-1] and j in M_i, RP(i,j), P(i) with P(1) frozen.
Formula encode_bms(const Text& t);

/// Glues adjacent positions with adjacent references into phrases.
/// Throws InvalidAssignment when the result is not a valid scheme for T.
BmsScheme decode_bms(const Text& t, const Formula& f, const Assignment& a);

/// Parent of every position in the decoded reference forest (0 for roots),
/// index 0 unused.
std::vector<Pos> reference_parents(const Text& t, const Formula& f, const Assignment& a);

/// True iff the scheme decodes to T: references are resolved pass by pass and
/// a pass without progress means a cycle.
bool verify_bms(const Text& t, const BmsScheme& s);

}  // namespace repsat
