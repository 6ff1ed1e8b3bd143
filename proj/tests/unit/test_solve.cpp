#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "repsat/attractor.hpp"
#include "repsat/solve.hpp"

using namespace repsat;

namespace {

const std::string kCli = REPSAT_CLI;

/// Executable shell script in a fresh temporary directory.
std::string script(const std::string& name, const std::string& body) {
  const auto dir = std::filesystem::temp_directory_path() / ("repsat-test-" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << "#!/bin/sh\n" << body << "\n";
  std::filesystem::permissions(path, std::filesystem::perms::owner_all);
  return path.string();
}

/// Random formula with a planted model; every variable is a P variable and a
/// random subset carries soft clauses.
Formula random_formula(std::mt19937& rng, int vars, int clauses) {
  Formula f;
  for (int v = 1; v <= vars; ++v) f.new_var(SemanticVar::p(v));
  std::vector<bool> planted(vars + 1);
  for (int v = 1; v <= vars; ++v) planted[v] = rng() % 2;
  std::uniform_int_distribution<int> pick(1, vars);
  for (int c = 0; c < clauses; ++c) {
    Clause cl;
    const int width = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < width; ++k) {
      const int v = pick(rng);
      cl.push_back(rng() % 2 ? v : -v);
    }
    bool sat = false;
    for (Lit l : cl) sat = sat || (planted[std::abs(l)] == (l > 0));
    if (!sat) cl[0] = -cl[0];
    f.add_hard(cl);
  }
  for (int v = 1; v <= vars; ++v) {
    if (rng() % 4 != 0) f.add_soft_negation(v);
  }
  return f;
}

}  // namespace

TEST_SUITE("solve") {
  TEST_CASE("banana on every backend") {
    const Formula f = encode_attractor(Text("banana"));
    for (const SolverBackend& b :
         {SolverBackend::builtin(), SolverBackend::exhaustive(), SolverBackend::external(kCli + " maxsat {wcnf}"),
          SolverBackend::external(kCli + " maxsat --bitstring"),
          SolverBackend::external(kCli + " maxsat --exhaustive {wcnf}")}) {
      INFO(b.command);
      const SolveResult r = solve(f, b);
      REQUIRE(r.optimal());
      CHECK(r.cost == 3);
      const AssignmentCheck c = check_assignment(f, r.assignment);
      CHECK(c.hard_ok);
      CHECK(c.soft_falsified == 3);
    }
    SolverBackend eval = SolverBackend::external(kCli + " maxsat {wcnf}");
    eval.input_format = WcnfFormat::Eval2022;
    CHECK(solve(f, eval).cost == 3);
  }

  TEST_CASE("single symbol") {
    const Formula f = encode_attractor(Text("a"));
    CHECK(solve(f, SolverBackend::builtin()).cost == 1);
    CHECK(solve(f, SolverBackend::exhaustive()).cost == 1);
  }

  TEST_CASE("backends agree on random formulas") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 120; ++rep) {
      const int vars = 1 + rep % 20;
      const Formula f = random_formula(rng, vars, vars * 2);
      const SolveResult a = solve(f, SolverBackend::builtin());
      const SolveResult b = solve(f, SolverBackend::exhaustive());
      REQUIRE(a.optimal());
      REQUIRE(b.optimal());
      CHECK(a.cost == b.cost);
      if (rep % 10 == 0) {
        const SolveResult c = solve(f, SolverBackend::external(kCli + " maxsat {wcnf}"));
        REQUIRE(c.optimal());
        CHECK(c.cost == a.cost);
      }
    }
  }

  TEST_CASE("generic instances with positive and repeated soft literals") {
    std::mt19937 rng(1);
    for (int rep = 0; rep < 100; ++rep) {
      MaxSatInstance inst;
      inst.var_count = 2 + rep % 12;
      std::uniform_int_distribution<int> pick(1, inst.var_count);
      for (int c = 0; c < inst.var_count; ++c) {
        const int v = pick(rng), w = pick(rng);
        inst.hard.push_back({rng() % 2 ? v : -v, rng() % 2 ? w : -w});
      }
      for (int s = 0; s < inst.var_count + 3; ++s) {
        const int v = pick(rng);
        inst.soft.push_back(rng() % 2 ? v : -v);
      }
      const MaxSatOutcome a = solve_builtin(inst, {});
      const MaxSatOutcome b = solve_exhaustive(inst, {});
      REQUIRE(a.unsatisfiable == b.unsatisfiable);
      if (!b.unsatisfiable) {
        REQUIRE(a.status == SolveStatus::Optimum);
        CHECK(a.cost == b.cost);
      }
    }
  }

  TEST_CASE("unsatisfiable hard clauses") {
    Formula f;
    f.new_var(SemanticVar::p(1));
    f.add_hard({1});
    f.add_hard({-1});
    f.add_soft_negation(1);
    CHECK(solve(f, SolverBackend::builtin()).status == SolveStatus::Error);
    CHECK(solve(f, SolverBackend::exhaustive()).status == SolveStatus::Error);
    CHECK(solve(f, SolverBackend::external(kCli + " maxsat {wcnf}")).status == SolveStatus::Error);
  }

  TEST_CASE("exhaustive backend refuses large formulas") {
    Formula f;
    for (int v = 1; v <= 31; ++v) f.new_var(SemanticVar::p(v));
    f.add_hard({1});
    const SolveResult r = solve(f, SolverBackend::exhaustive());
    CHECK(r.status == SolveStatus::Error);
    CHECK(r.message.find("refuses") != std::string::npos);
  }

  TEST_CASE("builtin time limit") {
    // Pigeonhole 10 into 9: hard for CDCL, so a tiny budget always expires.
    Formula f;
    const int holes = 9, pigeons = 10;
    for (int p = 1; p <= pigeons; ++p) {
      for (int h = 1; h <= holes; ++h) f.new_var(SemanticVar::rp(p, h));
    }
    for (int p = 1; p <= pigeons; ++p) {
      Clause c;
      for (int h = 1; h <= holes; ++h) c.push_back(f.var(SemanticVar::rp(p, h)));
      f.add_hard(c);
    }
    for (int h = 1; h <= holes; ++h) {
      for (int p = 1; p <= pigeons; ++p) {
        for (int q = p + 1; q <= pigeons; ++q) {
          f.add_hard({-f.var(SemanticVar::rp(p, h)), -f.var(SemanticVar::rp(q, h))});
        }
      }
    }
    const SolveResult r = solve(f, SolverBackend::builtin({0.2, 0}));
    CHECK(r.status == SolveStatus::Timeout);
    CHECK(r.wall_time_s < 5);
  }

  TEST_CASE("external solver timeout") {
    const Formula f = encode_attractor(Text("banana"));
    const std::string slow = script("slow.sh", "sleep 30");
    const SolveResult r = solve(f, SolverBackend::external(slow + " {wcnf}", {0.3, 0}));
    CHECK(r.status == SolveStatus::Timeout);
    CHECK(r.wall_time_s < 5);
  }

  TEST_CASE("external solver memory ceiling") {
    const Formula f = encode_attractor(Text("banana"));
    const std::string hog = script(
        "hog.sh", "exec python3 -c \"import time\nb=[]\nfor _ in range(200):\n    b.append(b'x' * (8 << 20))\n    time.sleep(0.01)\"");
    const SolveResult r = solve(f, SolverBackend::external(hog, {10, 64}));
    CHECK(r.status == SolveStatus::MemoryLimit);
  }

  TEST_CASE("malformed solver output") {
    const Formula f = encode_attractor(Text("banana"));
    auto run = [&](const std::string& name, const std::string& body) {
      return solve(f, SolverBackend::external(script(name, body) + " {wcnf}"));
    };
    CHECK(run("garbage.sh", "echo 'o banana'").status == SolveStatus::Error);
    CHECK(run("badv.sh", "echo 's OPTIMUM FOUND'; echo 'v 1 x 0'").status == SolveStatus::Error);
    CHECK(run("nostatus.sh", "echo 'v 1 2 3 0'").status == SolveStatus::Error);
    CHECK(run("nomodel.sh", "echo 'o 3'; echo 's OPTIMUM FOUND'").status == SolveStatus::Error);
    CHECK(run("unknown.sh", "echo 's UNKNOWN'").status == SolveStatus::Error);
    // A model violating a hard clause is never trusted.
    const SolveResult bad = run("wrong.sh", "echo 'o 0'; echo 's OPTIMUM FOUND'; echo 'v -1 -2 -3 -4 -5 -6 0'");
    CHECK(bad.status == SolveStatus::Error);
    CHECK(bad.message.find("hard clause") != std::string::npos);
    // Claimed cost disagrees with the model.
    const SolveResult liar = run("liar.sh", "echo 'o 2'; echo 's OPTIMUM FOUND'; echo 'v 1 -2 -3 -4 5 6 0'");
    CHECK(liar.status == SolveStatus::Error);
    // A correct canned answer is accepted.
    const SolveResult ok = run("canned.sh", "echo 'c hi'; echo 'o 4'; echo 'o 3'; echo 's OPTIMUM FOUND'; echo 'v 1 -2 -3'; echo 'v -4 5 6 0'");
    REQUIRE(ok.optimal());
    CHECK(ok.cost == 3);
    const SolveResult bits = run("bits.sh", "echo 'o 3'; echo 's OPTIMUM FOUND'; echo 'v 100011'");
    REQUIRE(bits.optimal());
    CHECK(bits.cost == 3);
  }

  TEST_CASE("solver output parser") {
    const SolverOutput legacy = parse_solver_output("c x\no 5\no 2\ns OPTIMUM FOUND\nv 1 -2\nv 3 0\n", 3);
    CHECK(legacy.last_cost == 2);
    CHECK(legacy.status == "OPTIMUM FOUND");
    CHECK(legacy.model == std::vector<bool>{false, true, false, true});
    const SolverOutput bits = parse_solver_output("s OPTIMUM FOUND\nv 0110\n", 4);
    CHECK(bits.model == std::vector<bool>{false, false, true, true, false});
    CHECK_THROWS(parse_solver_output("x 1\n", 2));
    CHECK_THROWS(parse_solver_output("o\n", 2));
    CHECK_THROWS(parse_solver_output("v 1 y 0\n", 2));
    CHECK(parse_solver_output("", 2).model.empty());
  }

  TEST_CASE("solver output writer round trip") {
    MaxSatOutcome r;
    r.status = SolveStatus::Optimum;
    r.cost = 1;
    r.model = {false, true, false, true};
    for (ModelFormat fmt : {ModelFormat::Literals, ModelFormat::Bitstring}) {
      std::ostringstream out;
      write_solver_output(out, r, 3, fmt);
      const SolverOutput back = parse_solver_output(out.str(), 3);
      CHECK(back.last_cost == 1);
      CHECK(back.model == r.model);
    }
  }

  TEST_CASE("wcnf with non-unit soft clauses") {
    std::istringstream in("p wcnf 3 4 10\n10 1 2 0\n1 -1 -2 0\n1 3 0\n1 -3 0\n");
    const WcnfFile file = parse_wcnf(in);
    const MaxSatInstance inst = to_instance(file);
    CHECK(inst.var_count == 4);
    CHECK(solve_builtin(inst, {}).cost == 1);
    CHECK(solve_exhaustive(inst, {}).cost == 1);
    std::istringstream weighted("p wcnf 1 1 10\n3 1 0\n");
    CHECK_THROWS(to_instance(parse_wcnf(weighted)));
  }
}
