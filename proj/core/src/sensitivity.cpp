#include "repsat/sensitivity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "repsat/measure.hpp"
#include "repsat/oracle.hpp"
#include "repsat/words.hpp"

namespace repsat {

namespace {

/// Renames symbols by order of first occurrence; gamma is invariant under it.
std::string canonical(const std::string& s) {
  int id[256];
  std::fill(std::begin(id), std::end(id), -1);
  int next = 0;
  std::string out(s.size(), '\0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (id[c] < 0) id[c] = next++;
    out[i] = static_cast<char>('a' + id[c]);
  }
  return out;
}

struct Candidate {
  int gamma_text = 0;
  int gamma_edited = 0;
  std::string text;
  std::string edited;
  bool set = false;

  /// True if this candidate should replace `other` in the reduction.
  bool beats(const Candidate& other) const {
    if (!other.set) return set;
    if (!set) return false;
    const long lhs = static_cast<long>(gamma_edited) * other.gamma_text;
    const long rhs = static_cast<long>(other.gamma_edited) * gamma_text;
    if (lhs != rhs) return lhs > rhs;
    return std::tie(text, edited) < std::tie(other.text, other.edited);
  }
};

class GammaCache {
 public:
  explicit GammaCache(const SensitivityOptions& opt) : opt_(opt) {}

  int operator()(const std::string& s) {
    const std::string key = canonical(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Text t(key);
    int g;
    if (t.size() <= opt_.oracle_max_n) {
      g = brute_gamma(t, opt_.oracle_max_n);
    } else {
      MeasureOptions mo;
      mo.backend = opt_.backend;
      const MeasureResult r = compute_measure(Measure::Gamma, t, mo);
      if (!r.ok()) throw std::runtime_error("gamma solve failed for " + s + ": " + r.message);
      g = r.value;
    }
    memo_.emplace(key, g);
    return g;
  }

 private:
  const SensitivityOptions& opt_;
  std::unordered_map<std::string, int> memo_;
};

/// The index-th text of the enumeration, or nullopt if it is not canonical.
std::optional<std::string> nth_text(std::uint64_t index, int n, const std::string& alphabet) {
  const std::uint64_t k = alphabet.size();
  std::string s(n, '\0');
  int used = 0;
  for (int i = n - 1; i >= 0; --i) {
    s[i] = static_cast<char>(index % k);
    index /= k;
  }
  for (int i = 0; i < n; ++i) {
    const int c = s[i];
    if (c > used) return std::nullopt;
    if (c == used) ++used;
    s[i] = alphabet[c];
  }
  return s;
}

}  // namespace

const char* edit_op_name(EditOp op) {
  switch (op) {
    case EditOp::Insert: return "insert";
    case EditOp::Delete: return "delete";
    case EditOp::Substitute: return "substitute";
  }
  return "?";
}

std::optional<EditOp> parse_edit_op(std::string_view name) {
  if (name == "insert") return EditOp::Insert;
  if (name == "delete") return EditOp::Delete;
  if (name == "substitute") return EditOp::Substitute;
  return std::nullopt;
}

std::vector<std::string> single_edits(const std::string& t, EditOp op, const std::string& symbols) {
  std::set<std::string> out;
  const std::size_t n = t.size();
  switch (op) {
    case EditOp::Insert:
      for (std::size_t p = 0; p <= n; ++p) {
        for (char c : symbols) out.insert(t.substr(0, p) + c + t.substr(p));
      }
      break;
    case EditOp::Delete:
      if (n >= 2) {
        for (std::size_t p = 0; p < n; ++p) out.insert(t.substr(0, p) + t.substr(p + 1));
      }
      break;
    case EditOp::Substitute:
      for (std::size_t p = 0; p < n; ++p) {
        for (char c : symbols) {
          if (c == t[p]) continue;
          std::string e = t;
          e[p] = c;
          out.insert(std::move(e));
        }
      }
      break;
  }
  return {out.begin(), out.end()};
}

SensitivityReport sensitivity_search(const SensitivityOptions& opt) {
  if (opt.n < 1) throw std::invalid_argument("n must be positive");
  if (opt.alphabet.empty()) throw std::invalid_argument("alphabet must not be empty");
  std::string symbols = opt.alphabet;
  if (std::set<char>(symbols.begin(), symbols.end()).size() != symbols.size()) {
    throw std::invalid_argument("alphabet has repeated symbols");
  }
  if (opt.fresh) {
    if (symbols.find(*opt.fresh) != std::string::npos) throw std::invalid_argument("fresh symbol is in the alphabet");
    symbols.push_back(*opt.fresh);
  }
  double total_d = 1;
  for (int i = 0; i < opt.n; ++i) total_d *= static_cast<double>(opt.alphabet.size());
  if (total_d > 1e12) throw std::invalid_argument("search space too large");
  const auto total = static_cast<std::uint64_t>(total_d);

  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(opt.budget_s);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> out_of_budget{false};
  const int workers = std::max(1, opt.workers);
  std::vector<Candidate> best(workers);
  std::vector<std::uint64_t> strings(workers, 0), pairs(workers, 0);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](int w) {
    try {
      GammaCache gamma(opt);
      while (true) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= total) break;
        if (opt.budget_s > 0 && std::chrono::steady_clock::now() > deadline) {
          out_of_budget = true;
          break;
        }
        const auto text = nth_text(i, opt.n, opt.alphabet);
        if (!text) continue;
        ++strings[w];
        const int g = gamma(*text);
        for (const std::string& e : single_edits(*text, opt.op, symbols)) {
          ++pairs[w];
          Candidate c{g, gamma(e), *text, e, true};
          if (c.beats(best[w])) best[w] = std::move(c);
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Candidate winner;
  SensitivityReport rep;
  for (int w = 0; w < workers; ++w) {
    if (best[w].beats(winner)) winner = best[w];
    rep.strings += strings[w];
    rep.pairs += pairs[w];
  }
  rep.op = opt.op;
  rep.n = opt.n;
  rep.complete = !out_of_budget;
  if (!winner.set) return rep;

  // Re-derive both values through the solver and check the attractors.
  for (const std::string* s : {&winner.text, &winner.edited}) {
    const Text t(*s);
    MeasureOptions mo;
    mo.backend = opt.backend;
    const MeasureResult r = compute_measure(Measure::Gamma, t, mo);
    const int expected = s == &winner.text ? winner.gamma_text : winner.gamma_edited;
    if (!r.ok() || r.value != expected) {
      throw std::logic_error("gamma of " + *s + " could not be confirmed by the solver");
    }
  }
  rep.text = winner.text;
  rep.edited = winner.edited;
  rep.gamma_text = winner.gamma_text;
  rep.gamma_edited = winner.gamma_edited;
  rep.best_ratio = static_cast<double>(winner.gamma_edited) / winner.gamma_text;
  return rep;
}

FamilyCheck verify_family(int k, const SolverBackend& backend, int oracle_max_n) {
  if (k < 2) throw std::invalid_argument("family index must be at least 2");
  FamilyCheck out;
  MeasureOptions mo;
  mo.backend = backend;
  for (const bool edited : {false, true}) {
    const Text t(edited ? sensitivity_edited(k) : sensitivity_base(k));
    const MeasureResult r = compute_measure(Measure::Gamma, t, mo);
    if (!r.ok()) throw std::runtime_error("gamma solve failed: " + r.message);
    const auto& a = std::get<AttractorSet>(r.witness->payload);
    if (!verify_attractor(t, a)) throw std::logic_error("solver attractor rejected");
    if (t.size() <= oracle_max_n && brute_gamma(t, oracle_max_n) != r.value) {
      throw std::logic_error("solver and oracle disagree on " + std::string(t.bytes()));
    }
    (edited ? out.gamma_after : out.gamma_before) = r.value;
    (edited ? out.after : out.before) = a;
  }
  out.ratio = static_cast<double>(out.gamma_after) / out.gamma_before;
  return out;
}

void write_sensitivity_csv(std::ostream& out, const std::vector<SensitivityReport>& reports) {
  out << "n,op,ratio,T,T_prime,gamma_T,gamma_Tprime\n";
  for (const auto& r : reports) {
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.6g", r.best_ratio);
    out << r.n << ',' << edit_op_name(r.op) << ',' << ratio << ',' << r.text << ',' << r.edited << ','
        << r.gamma_text << ',' << r.gamma_edited << '\n';
  }
}

}  // namespace repsat
