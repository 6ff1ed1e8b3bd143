#include "repsat/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace repsat {

int arity(VarTag tag) {
  switch (tag) {
    case VarTag::P:
    case VarTag::Root:
    case VarTag::Aux:
      return 1;
    case VarTag::F:
    case VarTag::Q:
    case VarTag::Rp:
      return 2;
    case VarTag::Ref:
    case VarTag::Dref:
      return 3;
  }
  return 0;
}

const char* tag_name(VarTag tag) {
  switch (tag) {
    case VarTag::P: return "P";
    case VarTag::F: return "F";
    case VarTag::Ref: return "REF";
    case VarTag::Q: return "Q";
    case VarTag::Root: return "ROOT";
    case VarTag::Dref: return "DREF";
    case VarTag::Rp: return "RP";
    case VarTag::Aux: return "AUX";
  }
  return "?";
}

std::optional<VarTag> parse_tag(std::string_view name) {
  for (VarTag t : {VarTag::P, VarTag::F, VarTag::Ref, VarTag::Q, VarTag::Root, VarTag::Dref,
                   VarTag::Rp, VarTag::Aux}) {
    if (name == tag_name(t)) return t;
  }
  return std::nullopt;
}

std::string to_string(const SemanticVar& sv) {
  std::string s = tag_name(sv.tag);
  for (int k = 0; k < arity(sv.tag); ++k) s += " " + std::to_string(sv.idx[k]);
  return s;
}

VarId Formula::new_var(const SemanticVar& sv) {
  if (sv.tag == VarTag::Aux) return new_aux();
  const VarId id = static_cast<VarId>(meaning_.size());
  if (!registry_.emplace(sv, id).second) {
    throw std::invalid_argument("variable already registered: " + to_string(sv));
  }
  meaning_.push_back(sv);
  return id;
}

VarId Formula::new_aux() {
  const VarId id = static_cast<VarId>(meaning_.size());
  meaning_.push_back(SemanticVar{VarTag::Aux, {id, 0, 0}});
  return id;
}

std::optional<VarId> Formula::find(const SemanticVar& sv) const {
  const auto it = registry_.find(sv);
  if (it == registry_.end()) return std::nullopt;
  return it->second;
}

VarId Formula::var(const SemanticVar& sv) const {
  const auto it = registry_.find(sv);
  if (it == registry_.end()) throw std::out_of_range("unregistered variable " + to_string(sv));
  return it->second;
}

void Formula::check_lit(Lit l) const {
  if (l == 0 || std::abs(l) > var_count()) {
    throw std::invalid_argument("literal " + std::to_string(l) + " references an unallocated variable");
  }
}

void Formula::add_hard(Clause clause) {
  if (clause.empty()) throw std::invalid_argument("empty hard clause");
  for (Lit l : clause) check_lit(l);
  hard_.push_back(std::move(clause));
}

void Formula::add_soft_negation(VarId v) {
  check_lit(v);
  if (meaning_[v].tag != VarTag::P) throw std::invalid_argument("soft clauses must negate a P variable");
  soft_.push_back(v);
}

void Formula::freeze(Lit lit) {
  add_hard({lit});
  frozen_.push_back(lit);
}

void Formula::add_at_most_one(std::span<const Lit> lits) {
  const std::size_t k = lits.size();
  if (k <= 1) return;
  for (Lit l : lits) check_lit(l);
  // s_i is true when some of lits[0..i] is true.
  std::vector<VarId> s(k - 1);
  for (auto& v : s) v = new_aux();
  hard_.push_back({-lits[0], s[0]});
  for (std::size_t i = 1; i + 1 < k; ++i) {
    hard_.push_back({-lits[i], s[i]});
    hard_.push_back({-s[i - 1], s[i]});
    hard_.push_back({-lits[i], -s[i - 1]});
  }
  hard_.push_back({-lits[k - 1], -s[k - 2]});
}

void Formula::add_exactly_one(std::span<const Lit> lits) {
  if (lits.empty()) throw std::invalid_argument("exactly-one over an empty set is unsatisfiable");
  add_hard(Clause(lits.begin(), lits.end()));
  add_at_most_one(lits);
}

void Formula::add_implies(std::span<const Lit> antecedent, std::span<const Lit> consequent) {
  Clause c;
  c.reserve(antecedent.size() + consequent.size());
  for (Lit a : antecedent) c.push_back(-a);
  c.insert(c.end(), consequent.begin(), consequent.end());
  add_hard(std::move(c));
}

void Formula::add_iff_conjunction(VarId x, std::span<const Lit> lits) {
  Clause back{x};
  for (Lit l : lits) {
    add_hard({-x, l});
    back.push_back(-l);
  }
  add_hard(std::move(back));
}

std::vector<std::pair<VarId, SemanticVar>> Formula::registry() const {
  std::vector<std::pair<VarId, SemanticVar>> out;
  for (VarId v = 1; v <= var_count(); ++v) {
    if (meaning_[v].tag != VarTag::Aux) out.emplace_back(v, meaning_[v]);
  }
  return out;
}

FormulaStats stats(const Formula& f) {
  FormulaStats st;
  st.var_count = f.var_count();
  st.hard_count = static_cast<std::int64_t>(f.hard().size());
  st.soft_count = static_cast<std::int64_t>(f.soft().size());
  for (const Clause& c : f.hard()) {
    st.max_clause_len = std::max<std::int64_t>(st.max_clause_len, static_cast<std::int64_t>(c.size()));
    st.total_literals += static_cast<std::int64_t>(c.size());
  }
  if (!f.soft().empty()) st.max_clause_len = std::max<std::int64_t>(st.max_clause_len, 1);
  st.total_literals += st.soft_count;
  return st;
}

AssignmentCheck check_assignment(const Formula& f, const Assignment& a) {
  if (a.var_count() < f.var_count()) throw std::invalid_argument("assignment does not cover all variables");
  AssignmentCheck r;
  r.hard_ok = std::all_of(f.hard().begin(), f.hard().end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Lit l) { return a.satisfies(l); });
  });
  for (VarId v : f.soft()) r.soft_falsified += a.value(v) ? 1 : 0;
  return r;
}

bool value_of(const Formula& f, const Assignment& a, const SemanticVar& sv) {
  const auto v = f.find(sv);
  return v && a.value(*v);
}

void write_wcnf(const Formula& f, std::ostream& out, WcnfFormat format) {
  for (const auto& [id, sv] : f.registry()) out << "c var " << id << ' ' << to_string(sv) << '\n';
  const std::size_t top = f.soft().size() + 1;
  if (format == WcnfFormat::Classic) {
    out << "p wcnf " << f.var_count() << ' ' << f.hard().size() + f.soft().size() << ' ' << top << '\n';
  }
  for (const Clause& c : f.hard()) {
    if (format == WcnfFormat::Classic) {
      out << top;
    } else {
      out << 'h';
    }
    for (Lit l : c) out << ' ' << l;
    out << " 0\n";
  }
  for (VarId v : f.soft()) out << "1 " << -v << " 0\n";
}

namespace {

[[noreturn]] void malformed(int line, const std::string& what) {
  throw std::runtime_error("wcnf line " + std::to_string(line) + ": " + what);
}

std::int64_t to_int(const std::string& tok, int line) {
  char* end = nullptr;
  const long long v = std::strtoll(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0') malformed(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

WcnfFile parse_wcnf(std::istream& in) {
  WcnfFile file;
  bool classic = false;
  std::int64_t top = 0;
  int declared_clauses = -1;
  int max_var = 0;

  // Pending clause state; clauses may span lines.
  bool in_clause = false;
  bool hard = false;
  std::int64_t weight = 0;
  Clause clause;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") {
      std::string kw;
      if (ls >> kw && kw == "var") {
        std::int64_t id = 0;
        std::string tag;
        if (!(ls >> id >> tag)) malformed(line, "bad registry comment");
        const auto t = parse_tag(tag);
        if (!t) malformed(line, "unknown variable tag " + tag);
        SemanticVar sv{*t, {0, 0, 0}};
        for (int k = 0; k < arity(*t); ++k) {
          if (!(ls >> sv.idx[k])) malformed(line, "missing registry index");
        }
        file.registry.emplace_back(static_cast<VarId>(id), sv);
      }
      continue;
    }
    if (tok == "p") {
      std::string kind;
      std::int64_t vars = 0, clauses = 0;
      if (!(ls >> kind >> vars >> clauses >> top) || kind != "wcnf") malformed(line, "bad header");
      classic = true;
      file.var_count = static_cast<int>(vars);
      declared_clauses = static_cast<int>(clauses);
      continue;
    }
    do {
      if (!in_clause) {
        in_clause = true;
        clause.clear();
        if (tok == "h") {
          if (classic) malformed(line, "'h' clause in a classic file");
          hard = true;
        } else {
          weight = to_int(tok, line);
          if (weight <= 0) malformed(line, "non-positive weight");
          hard = classic && weight >= top;
        }
        continue;
      }
      const std::int64_t l = to_int(tok, line);
      if (l == 0) {
        if (hard) {
          if (clause.empty()) malformed(line, "empty hard clause");
          file.hard.push_back(clause);
        } else {
          file.soft.emplace_back(weight, clause);
        }
        in_clause = false;
        continue;
      }
      max_var = std::max<int>(max_var, static_cast<int>(l < 0 ? -l : l));
      clause.push_back(static_cast<Lit>(l));
    } while (ls >> tok);
  }
  if (in_clause) malformed(line, "unterminated clause");
  if (classic) {
    if (max_var > file.var_count) malformed(line, "literal exceeds declared variable count");
    if (declared_clauses >= 0 &&
        static_cast<std::size_t>(declared_clauses) != file.hard.size() + file.soft.size()) {
      malformed(line, "clause count does not match header");
    }
  } else {
    file.var_count = max_var;
    for (const auto& [id, sv] : file.registry) file.var_count = std::max(file.var_count, id);
  }
  return file;
}

}  // namespace repsat
