#include "repsat/witness.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace repsat {

namespace {

using json = nlohmann::ordered_json;

std::string symbol_text(unsigned char c) {
  if (c >= 0x20 && c < 0x7f && c != '\\') return std::string(1, static_cast<char>(c));
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02x", c);
  return buf;
}

unsigned char parse_symbol(const std::string& s) {
  if (s.size() == 1 && s[0] != '\\') return static_cast<unsigned char>(s[0]);
  if (s.size() == 4 && s[0] == '\\' && s[1] == 'x') {
    unsigned value = 0;
    for (int k = 2; k < 4; ++k) {
      const char c = s[k];
      value *= 16;
      if (c >= '0' && c <= '9') value += c - '0';
      else if (c >= 'a' && c <= 'f') value += c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') value += c - 'A' + 10;
      else throw WitnessError("bad symbol escape: " + s);
    }
    return static_cast<unsigned char>(value);
  }
  throw WitnessError("bad symbol: " + s);
}

std::string rule_name(int k) { return "X" + std::to_string(k + 1); }

int parse_rule_name(const json& j, int count) {
  if (!j.is_string()) throw WitnessError("rule name must be a string");
  const std::string s = j.get<std::string>();
  if (s.size() < 2 || s[0] != 'X' || s.find_first_not_of("0123456789", 1) != std::string::npos ||
      s[1] == '0') {
    throw WitnessError("bad rule name: " + s);
  }
  const long k = std::stol(s.substr(1));
  if (k < 1 || k > count) throw WitnessError("rule name out of range: " + s);
  return static_cast<int>(k - 1);
}

void expect_keys(const json& j, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional, const char* where) {
  if (!j.is_object()) throw WitnessError(std::string(where) + " must be an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    if (!j.contains(k)) throw WitnessError(std::string(where) + " lacks field '" + k + "'");
    allowed.insert(k);
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw WitnessError(std::string(where) + " has unknown field '" + key + "'");
  }
}

int get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw WitnessError(std::string(what) + " must be an integer");
  return j.get<int>();
}

json payload_json(const AttractorSet& a) { return {{"positions", a.positions}}; }

json payload_json(const BmsScheme& s) {
  json phrases = json::array();
  for (const auto& ph : s.phrases) {
    if (const auto* g = std::get_if<BmsScheme::Ground>(&ph)) {
      phrases.push_back({{"ground", symbol_text(g->symbol)}});
    } else {
      const auto& c = std::get<BmsScheme::Copy>(ph);
      phrases.push_back({{"copy", {c.src_start, c.src_end}}});
    }
  }
  return {{"phrases", phrases}};
}

json payload_json(const SlpWitness& w) {
  json rules = json::array();
  const int m = static_cast<int>(w.slp.rules.size());
  for (int k = m - 1; k >= 0; --k) {
    const auto& r = w.slp.rules[k];
    if (const auto* p = std::get_if<Slp::Pair>(&r)) {
      rules.push_back({rule_name(k), rule_name(p->left), rule_name(p->right)});
    } else {
      rules.push_back({rule_name(k), "'" + symbol_text(std::get<Slp::Terminal>(r).symbol) + "'"});
    }
  }
  json out = {{"rules", rules}, {"start", rule_name(w.slp.start)}};
  if (w.parsing) {
    json factors = json::array();
    for (const auto& f : w.parsing->factors) {
      json item = {f.span.start, f.span.len};
      if (f.ref) item.push_back(*f.ref);
      factors.push_back(item);
    }
    out["factors"] = factors;
  }
  return out;
}

AttractorSet parse_gamma(const json& p) {
  expect_keys(p, {"positions"}, {}, "payload");
  if (!p["positions"].is_array()) throw WitnessError("positions must be an array");
  AttractorSet a;
  for (const auto& x : p["positions"]) a.positions.push_back(get_int(x, "position"));
  return a;
}

BmsScheme parse_b(const json& p) {
  expect_keys(p, {"phrases"}, {}, "payload");
  if (!p["phrases"].is_array()) throw WitnessError("phrases must be an array");
  BmsScheme s;
  for (const auto& ph : p["phrases"]) {
    if (!ph.is_object() || ph.size() != 1) throw WitnessError("phrase must have exactly one field");
    if (ph.contains("ground")) {
      if (!ph["ground"].is_string()) throw WitnessError("ground symbol must be a string");
      s.phrases.emplace_back(BmsScheme::Ground{parse_symbol(ph["ground"].get<std::string>())});
    } else if (ph.contains("copy")) {
      const json& c = ph["copy"];
      if (!c.is_array() || c.size() != 2) throw WitnessError("copy must be [start, end]");
      s.phrases.emplace_back(BmsScheme::Copy{get_int(c[0], "copy start"), get_int(c[1], "copy end")});
    } else {
      throw WitnessError("unknown phrase kind: " + ph.items().begin().key());
    }
  }
  return s;
}

SlpWitness parse_g(const json& p) {
  expect_keys(p, {"rules", "start"}, {"factors"}, "payload");
  const json& rules = p["rules"];
  if (!rules.is_array() || rules.empty()) throw WitnessError("rules must be a non-empty array");
  const int m = static_cast<int>(rules.size());
  SlpWitness w;
  w.slp.rules.resize(m, Slp::Terminal{0});
  std::vector<char> defined(m, 0);
  for (const auto& r : rules) {
    if (!r.is_array() || (r.size() != 2 && r.size() != 3)) throw WitnessError("rule must have 2 or 3 entries");
    const int k = parse_rule_name(r[0], m);
    if (defined[k]) throw WitnessError("rule " + rule_name(k) + " defined twice");
    defined[k] = 1;
    if (r.size() == 3) {
      w.slp.rules[k] = Slp::Pair{parse_rule_name(r[1], m), parse_rule_name(r[2], m)};
    } else {
      if (!r[1].is_string()) throw WitnessError("terminal must be a string");
      const std::string s = r[1].get<std::string>();
      if (s.size() < 3 || s.front() != '\'' || s.back() != '\'') throw WitnessError("terminal must be quoted: " + s);
      w.slp.rules[k] = Slp::Terminal{parse_symbol(s.substr(1, s.size() - 2))};
    }
  }
  w.slp.start = parse_rule_name(p["start"], m);
  if (p.contains("factors")) {
    if (!p["factors"].is_array()) throw WitnessError("factors must be an array");
    GrammarParsing gp;
    std::set<std::pair<Pos, int>> nodes;
    for (const auto& f : p["factors"]) {
      if (!f.is_array() || (f.size() != 2 && f.size() != 3)) throw WitnessError("factor must be [start, len(, ref)]");
      GrammarParsing::Factor fac{{get_int(f[0], "factor start"), get_int(f[1], "factor length")}, std::nullopt};
      if (f.size() == 3) {
        fac.ref = get_int(f[2], "factor reference");
        nodes.insert({*fac.ref, fac.span.len});
      }
      gp.factors.push_back(fac);
    }
    for (const auto& [start, len] : nodes) gp.internal_nodes.push_back({start, len});
    w.parsing = std::move(gp);
  }
  return w;
}

}  // namespace

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::Gamma: return "gamma";
    case Measure::B: return "b";
    case Measure::G: return "g";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
  if (name == "gamma") return Measure::Gamma;
  if (name == "b") return Measure::B;
  if (name == "g") return Measure::G;
  return std::nullopt;
}

std::size_t Witness::size() const {
  return std::visit(
      [](const auto& p) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, SlpWitness>) return p.slp.size();
        else return p.size();
      },
      payload);
}

std::string dump_witness(const Witness& w) {
  json j;
  j["schema"] = kWitnessSchema;
  j["measure"] = measure_name(w.measure());
  j["n"] = w.n;
  j["size"] = w.size();
  j["payload"] = std::visit([](const auto& p) { return payload_json(p); }, w.payload);
  return j.dump(2) + "\n";
}

Witness parse_witness(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw WitnessError(std::string("malformed witness JSON: ") + e.what());
  }
  expect_keys(j, {"schema", "measure", "n", "size", "payload"}, {}, "witness");
  if (get_int(j["schema"], "schema") != kWitnessSchema) {
    throw WitnessError("unsupported witness schema " + j["schema"].dump());
  }
  if (!j["measure"].is_string()) throw WitnessError("measure must be a string");
  const auto m = parse_measure(j["measure"].get<std::string>());
  if (!m) throw WitnessError("unknown measure " + j["measure"].dump());

  Witness w;
  w.n = get_int(j["n"], "n");
  switch (*m) {
    case Measure::Gamma: w.payload = parse_gamma(j["payload"]); break;
    case Measure::B: w.payload = parse_b(j["payload"]); break;
    case Measure::G: w.payload = parse_g(j["payload"]); break;
  }
  if (get_int(j["size"], "size") != static_cast<int>(w.size())) {
    throw WitnessError("size field " + j["size"].dump() + " disagrees with payload size " + std::to_string(w.size()));
  }
  return w;
}

void save_witness(const Witness& w, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  out << dump_witness(w);
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

Witness load_witness(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_witness(buf.str());
}

std::optional<std::string> witness_problem(const Text& t, const Witness& w) {
  if (w.n != t.size()) {
    return "witness is for n = " + std::to_string(w.n) + ", text has n = " + std::to_string(t.size());
  }
  switch (w.measure()) {
    case Measure::Gamma: {
      const auto& a = std::get<AttractorSet>(w.payload);
      for (std::size_t k = 0; k < a.positions.size(); ++k) {
        if (a.positions[k] < 1 || a.positions[k] > t.size()) return "position out of range";
        if (k > 0 && a.positions[k] <= a.positions[k - 1]) return "positions not strictly increasing";
      }
      if (!verify_attractor(t, a)) return "some substring has no occurrence crossing the set";
      return std::nullopt;
    }
    case Measure::B:
      if (!verify_bms(t, std::get<BmsScheme>(w.payload))) return "scheme does not decode to the text";
      return std::nullopt;
    case Measure::G: {
      const auto& s = std::get<SlpWitness>(w.payload);
      if (!verify_slp(t, s.slp)) return "grammar does not derive the text";
      if (s.parsing) {
        if (auto why = check_grammar_parsing(t, *s.parsing)) return "factor list: " + *why;
      }
      return std::nullopt;
    }
  }
  return "unknown measure";
}

bool verify_witness(const Text& t, const Witness& w, Measure expected) {
  if (w.measure() != expected) {
    throw WitnessError(std::string("witness is for measure '") + measure_name(w.measure()) + "', expected '" +
                       measure_name(expected) + "'");
  }
  return !witness_problem(t, w).has_value();
}

}  // namespace repsat
