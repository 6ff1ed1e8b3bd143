#include "repsat/measure.hpp"

#include <chrono>

#include "repsat/bms.hpp"
#include "repsat/slp.hpp"

namespace repsat {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Formula encode_measure(Measure m, const Text& t, AttractorVariant variant) {
  switch (m) {
    case Measure::Gamma: return encode_attractor(t, variant);
    case Measure::B: return encode_bms(t);
    case Measure::G: return encode_slp(t);
  }
  throw std::invalid_argument("unknown measure");
}

int measure_value(Measure m, const Text& t, int cost) {
  return m == Measure::G ? cost + t.sigma() - 1 : cost;
}

MeasureResult compute_measure(Measure m, const Text& t, const MeasureOptions& opt) {
  MeasureResult r;
  r.measure = m;
  auto t0 = std::chrono::steady_clock::now();
  const Formula f = encode_measure(m, t, opt.variant);
  r.encode_ms = ms_since(t0);
  r.stats = stats(f);

  t0 = std::chrono::steady_clock::now();
  const SolveResult s = solve(f, opt.backend);
  r.solve_ms = ms_since(t0);
  r.peak_memory_bytes = s.peak_memory_bytes;
  r.status = s.status;
  r.message = s.message;
  if (!s.optimal()) return r;

  r.value = measure_value(m, t, s.cost);
  Witness w;
  w.n = t.size();
  try {
    switch (m) {
      case Measure::Gamma: w.payload = decode_attractor(t, f, s.assignment); break;
      case Measure::B: w.payload = decode_bms(t, f, s.assignment); break;
      case Measure::G: {
        GrammarParsing gp = decode_grammar_parsing(t, f, s.assignment);
        Slp slp = parsing_to_slp(t, gp);
        w.payload = SlpWitness{std::move(slp), std::move(gp)};
        break;
      }
    }
  } catch (const std::exception& e) {
    r.status = SolveStatus::Error;
    r.message = e.what();
    return r;
  }
  if (static_cast<int>(w.size()) != r.value) {
    r.status = SolveStatus::Error;
    r.message = "witness size " + std::to_string(w.size()) + " differs from optimum " + std::to_string(r.value);
    return r;
  }
  if (auto why = witness_problem(t, w)) {
    r.status = SolveStatus::Error;
    r.message = "witness rejected: " + *why;
    return r;
  }
  r.witness = std::move(w);
  return r;
}

}  // namespace repsat
