#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "repsat/cnf.hpp"
#include "repsat/errors.hpp"
#include "repsat/text.hpp"

namespace repsat {

/// A grammar parsing: a factorization of T in which every factor longer than one
/// symbol copies an earlier, factor-aligned interval of at least two factors.
struct GrammarParsing {
  struct Factor {
    SubstringRef span;
    /// Start of the referenced earlier occurrence; set iff span.len >= 2.
    std::optional<Pos> ref;
  };
  std::vector<Factor> factors;
  /// Referenced intervals (the internal nodes of the partial parse tree).
  std::vector<SubstringRef> internal_nodes;

  std::size_t size() const { return factors.size(); }
};

/// Variables: P(1..n+1), F(i,l), REF(i',i,l) for earlier matches with i' <= i-l,
/// Q(i',l) for intervals with a later copy. Softs ¬P(1..n).
Formula encode_slp(const Text& t);

/// Throws InvalidAssignment if the assignment violates a parsing invariant.
GrammarParsing decode_grammar_parsing(const Text& t, const Formula& f, const Assignment& a);

/// Checks every GrammarParsing invariant; returns an explanation on failure.
std::optional<std::string> check_grammar_parsing(const Text& t, const GrammarParsing& gp);

/// Chomsky-normal-form straight-line program. Nonterminal k is rules[k]; the
/// external name is "X<k+1>".
struct Slp {
  struct Pair {
    int left;
    int right;
  };
  struct Terminal {
    unsigned char symbol;
  };
  using Rule = std::variant<Pair, Terminal>;

  std::vector<Rule> rules;
  int start = 0;

  std::size_t size() const { return rules.size(); }
};

/// Builds the SLP with terminal rules first (in alphabet order) and left-leaning
/// binarization of multi-child nodes.
Slp parsing_to_slp(const Text& t, const GrammarParsing& gp);

/// True iff rules are well formed, acyclic and the start symbol expands to T.
bool verify_slp(const Text& t, const Slp& s);

}  // namespace repsat
