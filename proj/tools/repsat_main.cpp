// repsat: exact repetitiveness measures via MaxSAT.
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "repsat/measure.hpp"
#include "repsat/oracle.hpp"
#include "repsat/sensitivity.hpp"
#include "repsat/solve.hpp"
#include "repsat/text.hpp"
#include "repsat/witness.hpp"
#include "repsat/words.hpp"

namespace {

using namespace repsat;

enum Exit : int { kOk = 0, kInvalid = 1, kUsage = 2, kResource = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Measure measure_arg(const std::string& s) {
  if (auto m = parse_measure(s)) return *m;
  throw UsageError("unknown measure '" + s + "' (expected gamma, b or g)");
}

Text read_text(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw UsageError("cannot open " + path);
  try {
    return Text::from_file(path);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct SolverFlags {
  std::string solver;
  bool exhaustive = false;
  double time_limit = 0;
  std::size_t mem_limit = 0;

  void attach(CLI::App* app) {
    app->add_option("--solver", solver, "External MaxSAT solver command; {wcnf} is the instance path")
        ->envname("REPSAT_SOLVER");
    app->add_flag("--exhaustive", exhaustive, "Use the brute-force backend (at most 30 variables)");
    app->add_option("--time-limit", time_limit, "Seconds per solve (0 = none)")->check(CLI::NonNegativeNumber);
    app->add_option("--mem-limit", mem_limit, "MiB per solve (0 = none)");
  }

  SolverBackend backend() const {
    const ResourceLimits limits{time_limit, mem_limit};
    if (exhaustive) return SolverBackend::exhaustive(limits);
    if (!solver.empty()) return SolverBackend::external(solver, limits);
    return SolverBackend::builtin(limits);
  }
};

AttractorVariant variant_arg(const std::string& s) {
  return s == "simple" ? AttractorVariant::Simple : AttractorVariant::Minimal;
}

int status_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimum: return kOk;
    case SolveStatus::Timeout:
    case SolveStatus::MemoryLimit: return kResource;
    case SolveStatus::Error: return kInternal;
  }
  return kInternal;
}

// --- subcommands ---------------------------------------------------------

int cmd_encode(const std::string& measure, const std::string& file, const std::string& variant,
               const std::string& format, const std::string& output) {
  const Measure m = measure_arg(measure);
  const Text t = read_text(file);
  const Formula f = encode_measure(m, t, variant_arg(variant));
  const WcnfFormat fmt = format == "wcnf2022" ? WcnfFormat::Eval2022 : WcnfFormat::Classic;
  if (output.empty() || output == "-") {
    write_wcnf(f, std::cout, fmt);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + output);
    write_wcnf(f, out, fmt);
  }
  return kOk;
}

int cmd_solve(const std::string& measure, const std::string& file, const SolverFlags& flags,
              const std::string& variant, const std::string& json_out, bool verbose) {
  const Measure m = measure_arg(measure);
  const Text t = read_text(file);
  MeasureOptions opt;
  opt.variant = variant_arg(variant);
  opt.backend = flags.backend();
  const MeasureResult r = compute_measure(m, t, opt);
  if (!r.ok()) {
    std::cout << status_name(r.status) << '\n';
    std::cerr << "repsat: " << measure << " on " << file << ": " << status_name(r.status) << ": " << r.message
              << '\n';
    return status_exit(r.status);
  }
  std::cout << r.value << '\n';
  if (verbose) {
    std::cerr << "n=" << t.size() << " vars=" << r.stats.var_count << " hard=" << r.stats.hard_count
              << " soft=" << r.stats.soft_count << " encode_ms=" << r.encode_ms << " solve_ms=" << r.solve_ms
              << '\n';
  }
  if (!json_out.empty()) save_witness(*r.witness, json_out);
  return kOk;
}

int cmd_verify(const std::string& measure, const std::string& file, const std::string& witness_path) {
  const Measure m = measure_arg(measure);
  const Text t = read_text(file);
  Witness w;
  try {
    w = load_witness(witness_path);
  } catch (const WitnessError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kInvalid;
  }
  if (w.measure() != m) {
    std::cerr << "invalid: type error: witness is for measure '" << measure_name(w.measure()) << "', not '"
              << measure << "'\n";
    return kInvalid;
  }
  if (auto why = witness_problem(t, w)) {
    std::cerr << "invalid: " << *why << '\n';
    return kInvalid;
  }
  std::cout << "valid " << measure_name(m) << " witness of size " << w.size() << '\n';
  return kOk;
}

int cmd_stats(const std::vector<std::string>& files, bool list_minimal) {
  if (list_minimal) {
    std::cout << "file,start,length\n";
    for (const auto& file : files) {
      const Text t = read_text(file);
      for (const auto& s : minimal_substrings(t).entries) {
        std::cout << file << ',' << s.start << ',' << s.len << '\n';
      }
    }
    return kOk;
  }
  std::cout << "file,n,lrmin_count,rmin_count,lrmin_total,rmin_total\n";
  for (const auto& file : files) {
    const Text t = read_text(file);
    const SubstringStats lr = minimal_substring_stats(t);
    const SubstringStats r = right_minimal_substring_stats(t);
    std::cout << file << ',' << t.size() << ',' << lr.count << ',' << r.count << ',' << lr.total_length << ','
              << r.total_length << '\n';
  }
  return kOk;
}

std::vector<int> parse_prefixes(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1) throw UsageError("bad prefix length '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("no prefix lengths given");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmd_bench(const std::string& measure, const std::string& file, const std::string& prefix_list,
              const std::string& csv, const SolverFlags& flags, const std::string& variant, int workers) {
  const Measure m = measure_arg(measure);
  const Text full = read_text(file);
  std::vector<int> prefixes;
  for (int p : parse_prefixes(prefix_list)) {
    if (p <= full.size()) prefixes.push_back(p);
  }
  if (prefixes.empty()) throw UsageError("every prefix is longer than the text");

  std::vector<std::string> rows(prefixes.size());
  std::vector<int> exits(prefixes.size(), kOk);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < prefixes.size(); k = next++) {
      const Text t{std::string(full.bytes().substr(0, prefixes[k]))};
      MeasureOptions opt;
      opt.variant = variant_arg(variant);
      opt.backend = flags.backend();
      const MeasureResult r = compute_measure(m, t, opt);
      std::ostringstream row;
      row << file << ',' << prefixes[k] << ',' << measure_name(m) << ',';
      if (r.ok()) row << r.value;
      row << ',' << status_name(r.status) << ',' << r.encode_ms << ',' << r.solve_ms << ',' << r.stats.var_count
          << ',' << r.stats.hard_count << ',' << r.stats.soft_count << ',' << r.stats.max_clause_len << ','
          << r.stats.total_literals;
      rows[k] = row.str();
      exits[k] = status_exit(r.status);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!csv.empty() && csv != "-") {
    file_out.open(csv, std::ios::binary);
    if (!file_out) throw UsageError("cannot write " + csv);
    out = &file_out;
  }
  *out << "file,prefix,measure,value,status,encode_ms,solve_ms,vars,hard,soft,max_clause,total_literals\n";
  for (const auto& r : rows) *out << r << '\n';
  return *std::max_element(exits.begin(), exits.end());
}

int cmd_oracle(const std::string& measure, const std::string& text) {
  const Measure m = measure_arg(measure);
  if (text.empty()) throw UsageError("empty string");
  const Text t(text);
  try {
    switch (m) {
      case Measure::Gamma: std::cout << brute_gamma(t) << '\n'; break;
      case Measure::B: std::cout << brute_b(t) << '\n'; break;
      case Measure::G: std::cout << brute_g(t) << '\n'; break;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

struct SensitivityFlags {
  int n = 0;
  std::string alphabet = "ab";
  std::string op = "insert";
  std::string fresh;
  int workers = 1;
  int oracle_max_n = 12;
  double budget = 0;
  int family = 0;
  std::string csv;
};

int cmd_sensitivity(const SensitivityFlags& s, const SolverFlags& flags) {
  if (s.family > 0) {
    const FamilyCheck fc = verify_family(s.family, flags.backend());
    auto show = [](const AttractorSet& a) {
      std::string out;
      for (Pos p : a.positions) out += (out.empty() ? "" : " ") + std::to_string(p);
      return "{" + out + "}";
    };
    std::cout << "T=" << sensitivity_base(s.family) << " gamma=" << fc.gamma_before << " attractor=" << show(fc.before)
              << '\n'
              << "T'=" << sensitivity_edited(s.family) << " gamma=" << fc.gamma_after
              << " attractor=" << show(fc.after) << '\n'
              << "ratio=" << fc.ratio << '\n';
    return kOk;
  }
  if (s.n < 1) throw UsageError("--n is required (or --family K)");
  SensitivityOptions opt;
  opt.n = s.n;
  opt.alphabet = s.alphabet;
  const auto op = parse_edit_op(s.op);
  if (!op) throw UsageError("unknown edit operation '" + s.op + "'");
  opt.op = *op;
  if (!s.fresh.empty()) {
    if (s.fresh.size() != 1) throw UsageError("--fresh takes one symbol");
    opt.fresh = s.fresh[0];
  }
  opt.workers = s.workers;
  opt.oracle_max_n = s.oracle_max_n;
  opt.backend = flags.backend();
  opt.budget_s = s.budget;
  SensitivityReport rep;
  try {
    rep = sensitivity_search(opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!s.csv.empty() && s.csv != "-") {
    file_out.open(s.csv, std::ios::binary);
    if (!file_out) throw UsageError("cannot write " + s.csv);
    out = &file_out;
  }
  write_sensitivity_csv(*out, {rep});
  if (!rep.complete) {
    std::cerr << "repsat: budget exhausted after " << rep.strings << " texts; report is incomplete\n";
    return kResource;
  }
  return kOk;
}

int cmd_maxsat(const std::string& path, bool exhaustive, bool bitstring, double time_limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  const WcnfFile file = parse_wcnf(in);
  const MaxSatInstance inst = to_instance(file);
  const ResourceLimits limits{time_limit, 0};
  const MaxSatOutcome r = exhaustive ? solve_exhaustive(inst, limits) : solve_builtin(inst, limits);
  std::cout << "c repsat builtin maxsat\n";
  write_solver_output(std::cout, r, file.var_count, bitstring ? ModelFormat::Bitstring : ModelFormat::Literals);
  if (r.status == SolveStatus::Optimum) return 30;
  return r.unsatisfiable ? 20 : 0;
}

int cmd_gen(const std::string& name, const std::string& output) {
  std::string word;
  if (auto w = morphic_word(name)) {
    word = *w;
  } else {
    const auto dot = name.rfind('.');
    int k = -1;
    if (dot != std::string::npos) {
      try {
        k = std::stoi(name.substr(dot + 1));
      } catch (const std::exception&) {
      }
    }
    const std::string family = dot == std::string::npos ? name : name.substr(0, dot);
    if (k >= 1 && family == "separated") word = separated_runs(k);
    else if (k >= 0 && family == "sensitivity") word = sensitivity_base(k);
    else if (k >= 2 && family == "sensitivity-edited") word = sensitivity_edited(k);
    else throw UsageError("unknown word '" + name + "'");
  }
  if (output.empty() || output == "-") {
    std::cout << word;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + output);
    out << word;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact string attractor, macro scheme and SLP sizes via MaxSAT"};
  app.require_subcommand(1);
  int code = kOk;

  // encode
  std::string measure, file, variant = "minimal", format = "wcnf", output;
  auto* encode = app.add_subcommand("encode", "Write the MaxSAT instance of a measure as WCNF");
  encode->add_option("measure", measure, "gamma | b | g")->required();
  encode->add_option("file", file, "Input text")->required();
  encode->add_option("--variant", variant, "Attractor clause set")->check(CLI::IsMember({"simple", "minimal"}));
  encode->add_option("--format", format, "Output format")->check(CLI::IsMember({"wcnf", "wcnf2022"}));
  encode->add_option("-o,--output", output, "Output path (default stdout)");
  encode->callback([&] { code = cmd_encode(measure, file, variant, format, output); });

  // solve
  SolverFlags solve_flags;
  std::string json_out;
  bool verbose = false;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a measure and its witness");
  solve_cmd->add_option("measure", measure, "gamma | b | g")->required();
  solve_cmd->add_option("file", file, "Input text")->required();
  solve_cmd->add_option("--variant", variant, "Attractor clause set")->check(CLI::IsMember({"simple", "minimal"}));
  solve_cmd->add_option("--json", json_out, "Write the witness here");
  solve_cmd->add_flag("-v,--verbose", verbose, "Print formula size and timings to stderr");
  solve_flags.attach(solve_cmd);
  solve_cmd->callback([&] { code = cmd_solve(measure, file, solve_flags, variant, json_out, verbose); });

  // verify
  std::string witness_path;
  auto* verify = app.add_subcommand("verify", "Check a witness JSON against a text");
  verify->add_option("measure", measure, "gamma | b | g")->required();
  verify->add_option("file", file, "Input text")->required();
  verify->add_option("witness", witness_path, "Witness JSON")->required();
  verify->callback([&] { code = cmd_verify(measure, file, witness_path); });

  // stats
  std::vector<std::string> files;
  bool list_minimal = false;
  auto* stats_cmd = app.add_subcommand("stats", "Minimal and right-minimal substring statistics (CSV)");
  stats_cmd->add_option("files", files, "Input texts")->required();
  stats_cmd->add_flag("--minimal-substrings", list_minimal, "List every minimal substring instead");
  stats_cmd->callback([&] { code = cmd_stats(files, list_minimal); });

  // bench
  SolverFlags bench_flags;
  std::string prefixes = "10,30,100,300,1000,3000", csv;
  int workers = 1;
  auto* bench = app.add_subcommand("bench", "Solve a measure on several prefixes and write CSV rows");
  bench->add_option("measure", measure, "gamma | b | g")->required();
  bench->add_option("file", file, "Input text")->required();
  bench->add_option("--prefixes", prefixes, "Comma-separated prefix lengths");
  bench->add_option("--csv", csv, "Output CSV (default stdout)");
  bench->add_option("--variant", variant, "Attractor clause set")->check(CLI::IsMember({"simple", "minimal"}));
  bench->add_option("--workers", workers, "Parallel solves")->check(CLI::PositiveNumber);
  bench_flags.attach(bench);
  bench->callback([&] { code = cmd_bench(measure, file, prefixes, csv, bench_flags, variant, workers); });

  // oracle
  std::string text;
  auto* oracle = app.add_subcommand("oracle", "Brute-force a measure on a short string");
  oracle->add_option("measure", measure, "gamma | b | g")->required();
  oracle->add_option("string", text, "The text itself")->required();
  oracle->callback([&] { code = cmd_oracle(measure, text); });

  // sensitivity
  SensitivityFlags sens;
  SolverFlags sens_flags;
  auto* sensitivity = app.add_subcommand("sensitivity", "Exhaustive edit-sensitivity search for gamma");
  sensitivity->add_option("--n", sens.n, "Text length");
  sensitivity->add_option("--alphabet", sens.alphabet, "Symbols of the enumerated texts");
  sensitivity->add_option("--op", sens.op, "Edit operation")->check(CLI::IsMember({"insert", "delete", "substitute"}));
  sensitivity->add_option("--fresh", sens.fresh, "Extra symbol for insertions and substitutions");
  sensitivity->add_option("--workers", sens.workers, "Worker threads")->check(CLI::PositiveNumber);
  sensitivity->add_option("--oracle-max-n", sens.oracle_max_n, "Longest text given to the brute-force oracle");
  sensitivity->add_option("--budget", sens.budget, "Seconds before the search stops (0 = none)");
  sensitivity->add_option("--family", sens.family, "Check the abbbaaa b^k family for this k instead");
  sensitivity->add_option("--csv", sens.csv, "Output CSV (default stdout)");
  sens_flags.attach(sensitivity);
  sensitivity->callback([&] { code = cmd_sensitivity(sens, sens_flags); });

  // maxsat
  std::string wcnf;
  bool exhaustive = false, bitstring = false;
  double maxsat_time = 0;
  auto* maxsat = app.add_subcommand("maxsat", "Solve a WCNF file and print MaxSAT-Evaluation output");
  maxsat->add_option("wcnf", wcnf, "Instance")->required();
  maxsat->add_flag("--exhaustive", exhaustive, "Brute force (at most 30 variables)");
  maxsat->add_flag("--bitstring", bitstring, "Print the model as one 0/1 string");
  maxsat->add_option("--time-limit", maxsat_time, "Seconds (0 = none)");
  maxsat->callback([&] { code = cmd_maxsat(wcnf, exhaustive, bitstring, maxsat_time); });

  // gen
  std::string word_name;
  auto* gen = app.add_subcommand(
      "gen", "Write a generated word: fibonacci.K, thuemorse.K, perioddoubling.K, paperfold.K, separated.D, "
             "sensitivity.K, sensitivity-edited.K");
  gen->add_option("name", word_name, "Word name")->required();
  gen->add_option("-o,--output", output, "Output path (default stdout)");
  gen->callback([&] { code = cmd_gen(word_name, output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "repsat: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "repsat: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return code;
}
