#include "repsat/solve.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cadical.hpp"

namespace repsat {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t self_peak_rss() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<std::uint64_t>(ru.ru_maxrss) * 1024u;
}

/// Resident set size of a process in bytes, 0 if unknown.
std::uint64_t rss_of(pid_t pid) {
  const std::string path = pid == 0 ? "/proc/self/statm" : "/proc/" + std::to_string(pid) + "/statm";
  std::ifstream in(path);
  std::uint64_t size = 0, resident = 0;
  if (!(in >> size >> resident)) return 0;
  return resident * static_cast<std::uint64_t>(sysconf(_SC_PAGESIZE));
}

/// Summed resident set size of every process in a process group.
std::uint64_t group_rss(pid_t pgid) {
  std::uint64_t total = 0;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator("/proc", ec)) {
    const std::string name = entry.path().filename().string();
    if (name.empty() || name.find_first_not_of("0123456789") != std::string::npos) continue;
    std::ifstream stat(entry.path() / "stat");
    std::string line;
    if (!std::getline(stat, line)) continue;
    const auto close = line.rfind(')');
    if (close == std::string::npos) continue;
    std::istringstream fields(line.substr(close + 1));
    std::string state;
    long ppid = 0, pgrp = 0;
    if (!(fields >> state >> ppid >> pgrp) || pgrp != pgid) continue;
    total += rss_of(static_cast<pid_t>(std::stol(name)));
  }
  return total;
}

std::uint64_t limit_bytes(const ResourceLimits& l) {
  return static_cast<std::uint64_t>(l.memory_limit_mb) * 1024u * 1024u;
}

// ---------------------------------------------------------------------------
// Builtin backend: OLL over CaDiCaL.

class Watchdog : public CaDiCaL::Terminator {
 public:
  explicit Watchdog(const ResourceLimits& l) : limits_(l), start_(Clock::now()) {}

  bool terminate() override {
    if (limits_.time_limit_s > 0 && seconds_since(start_) > limits_.time_limit_s) {
      status_ = SolveStatus::Timeout;
      return true;
    }
    if (limits_.memory_limit_mb > 0 && ++calls_ % 256 == 0 && rss_of(0) > limit_bytes(limits_)) {
      status_ = SolveStatus::MemoryLimit;
      return true;
    }
    return false;
  }

  SolveStatus status() const { return status_; }

 private:
  ResourceLimits limits_;
  Clock::time_point start_;
  std::uint64_t calls_ = 0;
  SolveStatus status_ = SolveStatus::Optimum;
};

class Oll {
 public:
  Oll(const MaxSatInstance& inst, const ResourceLimits& limits)
      : inst_(inst), watchdog_(limits), next_var_(inst.var_count) {
    solver_.connect_terminator(&watchdog_);
    for (const Clause& c : inst.hard) solver_.clause(c);
    if (next_var_ > 0) solver_.resize(next_var_);
  }

  ~Oll() { solver_.disconnect_terminator(); }

  MaxSatOutcome run() {
    MaxSatOutcome out;
    std::vector<Lit> active;
    for (Lit l : inst_.soft) {
      // A soft literal listed twice counts twice; give each copy its own selector.
      if (seen_.insert(l).second) {
        active.push_back(l);
      } else {
        const Lit s = fresh();
        solver_.clause(-s, l);
        active.push_back(s);
      }
    }

    std::int64_t lower = 0;
    while (true) {
      for (Lit l : active) solver_.assume(l);
      const int r = solver_.solve();
      if (r == 0) return interrupted();
      if (r == 10) break;

      std::vector<Lit> core;
      for (Lit l : active) {
        if (solver_.failed(l)) core.push_back(l);
      }
      if (core.empty()) {
        out.status = SolveStatus::Error;
        out.unsatisfiable = true;
        out.message = "hard clauses unsatisfiable";
        return out;
      }
      if (!trim(core)) return interrupted();
      ++lower;

      std::unordered_set<Lit> in_core(core.begin(), core.end());
      std::vector<Lit> next;
      for (Lit l : active) {
        if (!in_core.count(l)) next.push_back(l);
      }
      for (Lit l : core) {
        auto it = sums_.find(l);
        if (it == sums_.end()) continue;
        const auto [tot, k] = it->second;
        // The totalizer may now exceed k: relax it to at most k + 1.
        if (auto l2 = bound_literal(tot, k + 1)) next.push_back(*l2);
      }
      if (core.size() == 1) {
        solver_.clause(-core[0]);
      } else {
        std::vector<Lit> violated;
        for (Lit l : core) violated.push_back(-l);
        tots_.push_back({std::move(violated), {}});
        if (auto l2 = bound_literal(static_cast<int>(tots_.size()) - 1, 1)) next.push_back(*l2);
      }
      active = std::move(next);
    }

    out.status = SolveStatus::Optimum;
    out.model.assign(inst_.var_count + 1, false);
    for (int v = 1; v <= inst_.var_count; ++v) out.model[v] = solver_.val(v) > 0;
    for (Lit l : inst_.soft) {
      const bool sat = l > 0 ? out.model[l] : !out.model[-l];
      out.cost += sat ? 0 : 1;
    }
    if (out.cost != lower) {
      out.status = SolveStatus::Error;
      out.message = "internal: optimum " + std::to_string(out.cost) + " differs from bound " + std::to_string(lower);
    }
    return out;
  }

 private:
  struct Totalizer {
    std::vector<Lit> inputs;
    /// outputs[k-1] is implied by "at least k inputs true".
    std::vector<Lit> outputs;
  };

  Lit fresh() {
    ++next_var_;
    solver_.resize(next_var_);
    return next_var_;
  }

  MaxSatOutcome interrupted() const {
    MaxSatOutcome out;
    out.status = watchdog_.status() == SolveStatus::Optimum ? SolveStatus::Error : watchdog_.status();
    out.message = out.status == SolveStatus::Timeout ? "time limit reached" : "memory limit reached";
    return out;
  }

  /// Re-solves under the core alone while it keeps shrinking.
  bool trim(std::vector<Lit>& core) {
    for (int round = 0; round < 5 && core.size() > 1; ++round) {
      for (Lit l : core) solver_.assume(l);
      const int r = solver_.solve();
      if (r == 0) return false;
      if (r != 20) break;
      std::vector<Lit> smaller;
      for (Lit l : core) {
        if (solver_.failed(l)) smaller.push_back(l);
      }
      if (smaller.empty() || smaller.size() == core.size()) break;
      core = std::move(smaller);
    }
    return true;
  }

  /// Literal asserting "at most k inputs of tots_[t] are true", or none if trivial.
  std::optional<Lit> bound_literal(int t, int k) {
    Totalizer& tot = tots_[t];
    const int m = static_cast<int>(tot.inputs.size());
    if (k >= m) return std::nullopt;
    if (static_cast<int>(tot.outputs.size()) < k + 1) tot.outputs = build(tot.inputs, 0, m, k + 1);
    const Lit l = -tot.outputs[k];
    sums_[l] = {t, k};
    return l;
  }

  /// Unary counter over inputs[lo, hi) truncated at `cap` outputs.
  std::vector<Lit> build(const std::vector<Lit>& inputs, int lo, int hi, int cap) {
    if (hi - lo == 1) return {inputs[lo]};
    const int mid = (lo + hi) / 2;
    const std::vector<Lit> a = build(inputs, lo, mid, cap);
    const std::vector<Lit> b = build(inputs, mid, hi, cap);
    const int size = std::min<int>(cap, static_cast<int>(a.size() + b.size()));
    std::vector<Lit> r(size);
    for (Lit& x : r) x = fresh();
    for (int i = 0; i <= static_cast<int>(a.size()); ++i) {
      for (int j = 0; j <= static_cast<int>(b.size()); ++j) {
        if (i + j == 0) continue;
        const int k = std::min(i + j, size);
        std::vector<Lit> c;
        if (i > 0) c.push_back(-a[i - 1]);
        if (j > 0) c.push_back(-b[j - 1]);
        c.push_back(r[k - 1]);
        solver_.clause(c);
      }
    }
    return r;
  }

  const MaxSatInstance& inst_;
  CaDiCaL::Solver solver_;
  Watchdog watchdog_;
  int next_var_;
  std::unordered_set<Lit> seen_;
  std::vector<Totalizer> tots_;
  std::unordered_map<Lit, std::pair<int, int>> sums_;
};

// ---------------------------------------------------------------------------
// External process backend.

struct ProcessRun {
  std::string out;
  std::string err;
  int wait_status = 0;
  bool timed_out = false;
  bool memory_exceeded = false;
  std::uint64_t peak_rss = 0;
};

bool looks_out_of_memory(const ProcessRun& run) {
  for (const char* sign : {"MemoryError", "bad_alloc", "out of memory", "Out of memory", "Cannot allocate memory"}) {
    if (run.err.find(sign) != std::string::npos || run.out.find(sign) != std::string::npos) return true;
  }
  return false;
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

ProcessRun run_process(const std::string& command, const ResourceLimits& limits) {
  int out_pipe[2], err_pipe[2];
  if (pipe2(out_pipe, O_CLOEXEC) != 0 || pipe2(err_pipe, O_CLOEXEC) != 0) {
    throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
  }
  // Address space is capped at twice the budget as a backstop; the budget
  // itself is enforced on the sampled resident set size.
  const rlim_t as = static_cast<rlim_t>(2 * limit_bytes(limits));
  const char* argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};

  const pid_t pid = fork();
  if (pid < 0) throw std::runtime_error(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    setpgid(0, 0);
    if (as > 0) {
      rlimit rl{as, as};
      setrlimit(RLIMIT_AS, &rl);
    }
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    const int devnull = open("/dev/null", O_RDONLY);
    if (devnull >= 0) dup2(devnull, STDIN_FILENO);
    execv("/bin/sh", const_cast<char* const*>(argv));
    _exit(127);
  }
  setpgid(pid, pid);
  close(out_pipe[1]);
  close(err_pipe[1]);

  ProcessRun run;
  const auto t0 = Clock::now();
  pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
  int open_fds = 2;
  char buf[1 << 14];
  while (open_fds > 0) {
    const int ready = poll(fds, 2, 50);
    if (ready < 0 && errno != EINTR) break;
    for (int k = 0; k < 2; ++k) {
      if (fds[k].fd < 0 || !(fds[k].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      const ssize_t got = read(fds[k].fd, buf, sizeof buf);
      if (got > 0) {
        (k == 0 ? run.out : run.err).append(buf, static_cast<std::size_t>(got));
      } else if (got == 0 || errno != EINTR) {
        close(fds[k].fd);
        fds[k].fd = -1;
        --open_fds;
      }
    }
    if (limits.time_limit_s > 0 && seconds_since(t0) > limits.time_limit_s) {
      run.timed_out = true;
      break;
    }
    if (limits.memory_limit_mb > 0) {
      const std::uint64_t rss = group_rss(pid);
      run.peak_rss = std::max(run.peak_rss, rss);
      if (rss > limit_bytes(limits)) {
        run.memory_exceeded = true;
        break;
      }
    }
  }
  if (run.timed_out || run.memory_exceeded) kill(-pid, SIGKILL);
  for (auto& fd : fds) {
    if (fd.fd >= 0) close(fd.fd);
  }
  rusage ru{};
  while (wait4(pid, &run.wait_status, 0, &ru) < 0 && errno == EINTR) {
  }
  // Reap anything left in the group (e.g. a solver started by a wrapper script).
  kill(-pid, SIGKILL);
  run.peak_rss = std::max<std::uint64_t>(run.peak_rss, static_cast<std::uint64_t>(ru.ru_maxrss) * 1024u);
  return run;
}

class TempFile {
 public:
  TempFile() {
    const char* dir = std::getenv("TMPDIR");
    std::string tmpl = std::string(dir && *dir ? dir : "/tmp") + "/repsat-XXXXXX.wcnf";
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    const int fd = mkstemps(buf.data(), 5);
    if (fd < 0) throw std::runtime_error(std::string("mkstemps: ") + std::strerror(errno));
    close(fd);
    path_ = buf.data();
  }
  ~TempFile() { std::remove(path_.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

SolveResult solve_external(const Formula& f, const SolverBackend& b) {
  SolveResult res;
  TempFile file;
  {
    std::ofstream out(file.path());
    write_wcnf(f, out, b.input_format);
    if (!out) throw std::runtime_error("cannot write " + file.path());
  }
  std::string cmd = b.command;
  const std::string quoted = shell_quote(file.path());
  if (const auto at = cmd.find("{wcnf}"); at != std::string::npos) {
    for (auto p = at; p != std::string::npos; p = cmd.find("{wcnf}", p + quoted.size())) {
      cmd.replace(p, 6, quoted);
    }
  } else {
    cmd += " " + quoted;
  }

  const ProcessRun run = run_process(cmd, b.limits);
  res.peak_memory_bytes = run.peak_rss;
  if (run.timed_out) {
    res.status = SolveStatus::Timeout;
    res.message = "time limit reached";
    return res;
  }
  if (run.memory_exceeded) {
    res.status = SolveStatus::MemoryLimit;
    res.message = "memory limit reached";
    return res;
  }

  SolverOutput parsed;
  try {
    parsed = parse_solver_output(run.out, f.var_count());
  } catch (const std::exception& e) {
    res.message = e.what();
    return res;
  }
  if (parsed.status != "OPTIMUM FOUND") {
    const bool crashed = !WIFEXITED(run.wait_status) || (WEXITSTATUS(run.wait_status) != 0 &&
                                                         WEXITSTATUS(run.wait_status) != 30);
    if (b.limits.memory_limit_mb > 0 && crashed && looks_out_of_memory(run)) {
      res.status = SolveStatus::MemoryLimit;
      res.message = "solver ran out of memory";
      return res;
    }
    res.message = parsed.status.empty() ? "solver printed no status line" : "solver status: " + parsed.status;
    if (!run.err.empty()) res.message += "; stderr: " + run.err.substr(0, 200);
    return res;
  }
  if (parsed.model.empty()) {
    res.message = "solver printed no model";
    return res;
  }
  res.assignment = Assignment(f.var_count());
  for (int v = 1; v <= f.var_count(); ++v) res.assignment.set(v, parsed.model[v]);
  res.status = SolveStatus::Optimum;
  if (parsed.last_cost) res.cost = static_cast<int>(*parsed.last_cost);
  else res.cost = -1;
  return res;
}

std::vector<bool> parse_bits(const std::string& tok, int var_count) {
  std::vector<bool> model(var_count + 1, false);
  for (int v = 1; v <= var_count; ++v) model[v] = tok[v - 1] == '1';
  return model;
}

}  // namespace

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimum: return "optimum";
    case SolveStatus::Timeout: return "timeout";
    case SolveStatus::MemoryLimit: return "memlimit";
    case SolveStatus::Error: return "error";
  }
  return "error";
}

SolverBackend SolverBackend::external(std::string command, ResourceLimits limits) {
  SolverBackend b;
  b.kind = BackendKind::ExternalProcess;
  b.command = std::move(command);
  b.limits = limits;
  return b;
}

SolverBackend SolverBackend::exhaustive(ResourceLimits limits) {
  SolverBackend b;
  b.kind = BackendKind::Exhaustive;
  b.limits = limits;
  return b;
}

SolverBackend SolverBackend::builtin(ResourceLimits limits) {
  SolverBackend b;
  b.limits = limits;
  return b;
}

SolverBackend SolverBackend::from_environment(ResourceLimits limits) {
  const char* cmd = std::getenv("REPSAT_SOLVER");
  if (cmd && *cmd) return external(cmd, limits);
  return builtin(limits);
}

MaxSatInstance to_instance(const Formula& f) {
  MaxSatInstance inst;
  inst.var_count = f.var_count();
  inst.hard = f.hard();
  for (VarId v : f.soft()) inst.soft.push_back(-v);
  return inst;
}

MaxSatInstance to_instance(const WcnfFile& file) {
  MaxSatInstance inst;
  inst.var_count = file.var_count;
  inst.hard = file.hard;
  for (const auto& [w, clause] : file.soft) {
    if (w != 1) throw std::runtime_error("only unit weights are supported, got " + std::to_string(w));
    if (clause.size() == 1) {
      inst.soft.push_back(clause[0]);
      continue;
    }
    const Lit r = ++inst.var_count;
    Clause relaxed = clause;
    relaxed.push_back(r);
    inst.hard.push_back(std::move(relaxed));
    inst.soft.push_back(-r);
  }
  return inst;
}

MaxSatOutcome solve_builtin(const MaxSatInstance& inst, const ResourceLimits& limits) {
  for (const Clause& c : inst.hard) {
    if (c.empty()) {
      MaxSatOutcome out;
      out.unsatisfiable = true;
      out.message = "hard clauses unsatisfiable";
      return out;
    }
  }
  Oll oll(inst, limits);
  return oll.run();
}

MaxSatOutcome solve_exhaustive(const MaxSatInstance& inst, const ResourceLimits& limits) {
  MaxSatOutcome out;
  const int n = inst.var_count;
  if (n > kExhaustiveMaxVars) {
    out.message = "exhaustive backend refuses " + std::to_string(n) + " variables (max " +
                  std::to_string(kExhaustiveMaxVars) + ")";
    return out;
  }
  auto bit = [](Lit l) { return std::uint64_t{1} << (std::abs(l) - 1); };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hard;
  for (const Clause& c : inst.hard) {
    std::uint64_t pos = 0, neg = 0;
    for (Lit l : c) (l > 0 ? pos : neg) |= bit(l);
    hard.emplace_back(pos, neg);
  }
  std::uint64_t want_true = 0, want_false = 0;
  std::vector<Lit> extra;  // repeated soft literals
  for (Lit l : inst.soft) {
    std::uint64_t& mask = l > 0 ? want_true : want_false;
    if (mask & bit(l)) extra.push_back(l);
    else mask |= bit(l);
  }

  const auto t0 = Clock::now();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::int64_t best = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    if ((m & 0xffff) == 0xffff && limits.time_limit_s > 0 && seconds_since(t0) > limits.time_limit_s) {
      out.status = SolveStatus::Timeout;
      out.message = "time limit reached";
      return out;
    }
    bool ok = true;
    for (const auto& [pos, neg] : hard) {
      if (((m & pos) | (~m & neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::int64_t cost = std::popcount(~m & want_true) + std::popcount(m & want_false);
    for (Lit l : extra) cost += ((m & bit(l)) != 0) == (l > 0) ? 0 : 1;
    if (best < 0 || cost < best) {
      best = cost;
      best_mask = m;
    }
  }
  if (best < 0) {
    out.unsatisfiable = true;
    out.message = "hard clauses unsatisfiable";
    return out;
  }
  out.status = SolveStatus::Optimum;
  out.cost = best;
  out.model.assign(n + 1, false);
  for (int v = 1; v <= n; ++v) out.model[v] = (best_mask >> (v - 1)) & 1u;
  return out;
}

SolveResult solve(const Formula& f, const SolverBackend& b) {
  const auto t0 = Clock::now();
  SolveResult res;
  try {
    if (b.kind == BackendKind::ExternalProcess) {
      res = solve_external(f, b);
    } else {
      const MaxSatInstance inst = to_instance(f);
      const MaxSatOutcome out =
          b.kind == BackendKind::Exhaustive ? solve_exhaustive(inst, b.limits) : solve_builtin(inst, b.limits);
      res.status = out.status;
      res.message = out.message;
      if (out.status == SolveStatus::Optimum) {
        res.cost = static_cast<int>(out.cost);
        res.assignment = Assignment(f.var_count());
        for (int v = 1; v <= f.var_count(); ++v) res.assignment.set(v, out.model[v]);
      }
      res.peak_memory_bytes = self_peak_rss();
    }
  } catch (const std::exception& e) {
    res = SolveResult{};
    res.message = e.what();
  }
  res.wall_time_s = seconds_since(t0);

  if (res.status == SolveStatus::Optimum) {
    const AssignmentCheck check = check_assignment(f, res.assignment);
    if (!check.hard_ok) {
      res.status = SolveStatus::Error;
      res.message = "solver assignment violates a hard clause";
    } else if (res.cost >= 0 && res.cost != check.soft_falsified) {
      res.status = SolveStatus::Error;
      res.message = "reported cost " + std::to_string(res.cost) + " but assignment falsifies " +
                    std::to_string(check.soft_falsified) + " soft clauses";
    } else {
      res.cost = check.soft_falsified;
    }
  }
  if (res.status != SolveStatus::Optimum) {
    res.assignment = Assignment();
    res.cost = 0;
  }
  return res;
}

SolverOutput parse_solver_output(std::string_view text, int var_count) {
  SolverOutput out;
  std::vector<std::string> v_tokens;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line.substr(1));
    if (line.size() > 1 && line[1] != ' ' && line[1] != '\t') {
      throw std::runtime_error("malformed solver output line " + std::to_string(line_no) + ": " + line);
    }
    switch (line[0]) {
      case 'o': {
        std::int64_t cost;
        std::string rest;
        if (!(ls >> cost) || (ls >> rest)) {
          throw std::runtime_error("malformed o line " + std::to_string(line_no) + ": " + line);
        }
        out.last_cost = cost;
        break;
      }
      case 's': {
        std::string word, all;
        while (ls >> word) all += (all.empty() ? "" : " ") + word;
        if (all.empty()) throw std::runtime_error("empty s line " + std::to_string(line_no));
        out.status = all;
        break;
      }
      case 'v': {
        std::string tok;
        while (ls >> tok) v_tokens.push_back(tok);
        break;
      }
      default:
        throw std::runtime_error("malformed solver output line " + std::to_string(line_no) + ": " + line);
    }
  }
  if (v_tokens.empty()) return out;

  const std::string& first = v_tokens[0];
  const bool bitstring = v_tokens.size() == 1 && static_cast<int>(first.size()) == var_count &&
                         first.find_first_not_of("01") == std::string::npos;
  if (bitstring) {
    out.model = parse_bits(first, var_count);
    return out;
  }
  out.model.assign(var_count + 1, false);
  for (const std::string& tok : v_tokens) {
    char* end = nullptr;
    errno = 0;
    const long lit = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || errno != 0) {
      throw std::runtime_error("malformed v token: " + tok);
    }
    if (lit == 0) continue;
    const long v = std::labs(lit);
    if (v <= var_count) out.model[v] = lit > 0;
  }
  return out;
}

void write_solver_output(std::ostream& out, const MaxSatOutcome& r, int var_count, ModelFormat format) {
  if (r.status != SolveStatus::Optimum) {
    out << "s " << (r.unsatisfiable ? "UNSATISFIABLE" : "UNKNOWN") << '\n';
    return;
  }
  out << "o " << r.cost << '\n' << "s OPTIMUM FOUND\n";
  if (format == ModelFormat::Bitstring) {
    out << "v ";
    for (int v = 1; v <= var_count; ++v) out << (r.model[v] ? '1' : '0');
    out << '\n';
    return;
  }
  out << "v";
  for (int v = 1; v <= var_count; ++v) out << ' ' << (r.model[v] ? v : -v);
  out << " 0\n";
}

}  // namespace repsat
