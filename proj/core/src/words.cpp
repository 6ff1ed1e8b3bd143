#include "repsat/words.hpp"

#include <charconv>
#include <stdexcept>

namespace repsat {

namespace {

void check_index(int k, int max) {
  if (k < 0 || k > max) throw std::invalid_argument("word index out of range: " + std::to_string(k));
}

}  // namespace

std::string fibonacci_word(int k) {
  check_index(k, 40);
  std::string prev = "a", cur = "ab";
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string thue_morse_word(int k) {
  check_index(k, 30);
  std::string w = "a";
  for (int i = 0; i < k; ++i) {
    const std::size_t len = w.size();
    for (std::size_t j = 0; j < len; ++j) w.push_back(w[j] == 'a' ? 'b' : 'a');
  }
  return w;
}

std::string period_doubling_word(int k) {
  check_index(k, 30);
  std::string w = "a";
  for (int i = 0; i < k; ++i) {
    w += w;
    w.back() = w.back() == 'a' ? 'b' : 'a';
  }
  return w;
}

std::string paperfolding_word(int k) {
  check_index(k, 29);
  std::string w = "11";
  for (int i = 0; i < k; ++i) {
    std::string next;
    next.reserve(w.size() * 2);
    for (std::size_t j = 0; j < w.size(); j += 2) {
      next += '1';
      next += w[j] == '1' ? (w[j + 1] == '1' ? "101" : "100") : (w[j + 1] == '1' ? "001" : "000");
    }
    w = std::move(next);
  }
  return w;
}

std::optional<std::string> morphic_word(std::string_view name) {
  const auto dot = name.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const std::string_view family = name.substr(0, dot), digits = name.substr(dot + 1);
  int k = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
  try {
    if (family == "fibonacci") return fibonacci_word(k);
    if (family == "thuemorse") return thue_morse_word(k);
    if (family == "perioddoubling") return period_doubling_word(k);
    if (family == "paperfold") return paperfolding_word(k);
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

unsigned char separator(int i) {
  if (i < 1 || i > 154) throw std::invalid_argument("separator index out of range: " + std::to_string(i));
  if (i <= 26) return static_cast<unsigned char>('A' + i - 1);
  return static_cast<unsigned char>(0x80 + i - 27);
}

std::string separated_runs(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  std::string w;
  for (int i = 1; i <= d; ++i) {
    w.append(d - 1, 'a');
    w.push_back(static_cast<char>(separator(i)));
  }
  return w;
}

std::string sensitivity_base(int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  return "abbbaaa" + std::string(k, 'b');
}

std::string sensitivity_edited(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  std::string w = sensitivity_base(k);
  w.insert(8, 1, 'c');
  return w;
}

}  // namespace repsat
