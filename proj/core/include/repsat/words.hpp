#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace repsat {

/// F0 = a, F1 = ab, Fk = F(k-1) F(k-2).
std::string fibonacci_word(int k);
/// T0 = a, Tk = T(k-1) followed by its a/b complement.
std::string thue_morse_word(int k);
/// P0 = a, Pk = P(k-1) P(k-1) with the last symbol flipped.
std::string period_doubling_word(int k);
/// Regular paperfolding prefix over {0,1}, starting from "11"; length 2^(k+1).
std::string paperfolding_word(int k);

/// Words named like the benchmark files: "fibonacci.05", "thuemorse.06",
/// "perioddoubling.08", "paperfold.04".
std::optional<std::string> morphic_word(std::string_view name);

/// The i-th separator symbol ($_i) used by separated_runs; 1 <= i <= 154.
unsigned char separator(int i);

/// a^(d-1) $_1 a^(d-1) $_2 ... a^(d-1) $_d, of length d^2 with 2d-1 minimal substrings.
std::string separated_runs(int d);

/// abbbaaa b^k.
std::string sensitivity_base(int k);
/// sensitivity_base(k) with 'c' inserted before position 9.
std::string sensitivity_edited(int k);

}  // namespace repsat
