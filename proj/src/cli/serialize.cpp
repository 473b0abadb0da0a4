#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "lyu/cli/results.hpp"
#include "lyu/resolution/quotient.hpp"
#include "lyu/simplicial/complex.hpp"

namespace lyu::cli {

using nlohmann::json;

Invariant parse_invariant(const std::string& s) {
  if (s == "depth") return Invariant::Depth;
  if (s == "betti") return Invariant::Betti;
  if (s == "table") return Invariant::Table;
  if (s == "ccm") return Invariant::Ccm;
  if (s == "covers") return Invariant::Covers;
  if (s == "all") return Invariant::All;
  throw DomainError("unknown invariant '" + s + "'");
}

std::string to_string(Invariant inv) {
  switch (inv) {
    case Invariant::Depth: return "depth";
    case Invariant::Betti: return "betti";
    case Invariant::Table: return "table";
    case Invariant::Ccm: return "ccm";
    case Invariant::Covers: return "covers";
    case Invariant::All: return "all";
  }
  return "all";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "ascii") return OutputFormat::Ascii;
  if (s == "json") return OutputFormat::Json;
  if (s == "latex") return OutputFormat::Latex;
  throw DomainError("unknown format '" + s + "'");
}

InvariantResults compute_invariants(const MonomialIdeal& ideal, const FieldSpec& field, Invariant which) {
  require_squarefree_proper(ideal, "invariants");
  const bool all = which == Invariant::All;
  InvariantResults r;
  if (all || which == Invariant::Covers) {
    CoversResult c;
    for (auto p : minimal_primes(ideal)) {
      std::vector<int> v;
      for (auto i : varset_indices(p)) v.push_back(static_cast<int>(i) + 1);
      c.minimal_primes.push_back(std::move(v));
    }
    r.covers = std::move(c);
  }
  std::optional<ResolutionSummary> res;
  if (all || which == Invariant::Depth || which == Invariant::Betti) res = resolve_quotient(ideal, field);
  if (all || which == Invariant::Depth) {
    const auto hd = height_dim(ideal);
    DepthResult d{hd.height, hd.dimension, depth_lc(ideal, field), res->depth, false};
    d.cohen_macaulay = d.depth_lc == d.dim;
    r.depth = d;
  }
  if (all || which == Invariant::Betti) r.betti = BettiResult{res->betti, res->hilbert};
  if (all || which == Invariant::Table) {
    TableResult t;
    t.table = lyubeznik_table(ideal, field);
    t.last_column = last_column(t.table);
    const auto rep = validate_table(t.table);
    t.valid = rep.passed();
    for (const auto& c : rep.checks)
      if (!c.passed) t.validation_failures.push_back(c.name + " " + c.witness);
    r.table = std::move(t);
  }
  if (all || which == Invariant::Ccm) {
    const auto k = canonical_module_summary(ideal, field);
    r.ccm = CcmResult{k.is_cohen_macaulay(), k.depth, k.krull_dim};
  }
  return r;
}

namespace {

std::string num(long v) { return std::to_string(v); }
long to_long(const json& j) { return std::stol(j.get<std::string>()); }
int to_int(const json& j) { return static_cast<int>(to_long(j)); }

json numbers(const std::vector<long>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(num(x));
  return a;
}
json numbers(const std::vector<int>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(num(x));
  return a;
}
std::vector<int> ints(const json& a) {
  std::vector<int> v;
  for (const auto& x : a) v.push_back(to_int(x));
  return v;
}
std::vector<long> longs(const json& a) {
  std::vector<long> v;
  for (const auto& x : a) v.push_back(to_long(x));
  return v;
}

json field_json(const FieldSpec& f) { return {{"characteristic", num(f.characteristic)}}; }
FieldSpec field_from(const json& j) {
  const auto c = to_long(j.at("characteristic"));
  return c == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint32_t>(c));
}

json betti_json(const BettiTable& b) {
  json entries = json::array();
  for (const auto& [key, v] : b.entries)
    entries.push_back({{"i", num(key.first)}, {"degree", numbers(key.second)}, {"value", num(v)}});
  return {{"entries", entries}, {"totals", numbers(b.totals())}};
}
BettiTable betti_from(const json& j) {
  BettiTable b;
  for (const auto& e : j.at("entries")) b.entries[{to_int(e.at("i")), ints(e.at("degree"))}] = to_long(e.at("value"));
  return b;
}

json hilbert_json(const HilbertSeries& h) {
  json num_terms = json::array();
  for (const auto& [k, c] : h.numerator) num_terms.push_back({{"exponent", num(k)}, {"coefficient", c.get_str()}});
  return {{"numerator", num_terms}, {"denominator_power", num(h.denominator_power)}, {"text", h.to_string()}};
}
HilbertSeries hilbert_from(const json& j) {
  HilbertSeries h;
  for (const auto& t : j.at("numerator")) h.numerator[to_int(t.at("exponent"))] = mpz_class(t.at("coefficient").get<std::string>());
  h.denominator_power = to_int(j.at("denominator_power"));
  return h;
}

}  // namespace

json to_json(const InvariantResults& r) {
  json inv = json::object();
  if (r.depth)
    inv["depth"] = {{"height", num(r.depth->height)},
                    {"dim", num(r.depth->dim)},
                    {"depth_lc", num(r.depth->depth_lc)},
                    {"depth_ab", num(r.depth->depth_ab)},
                    {"cohen_macaulay", r.depth->cohen_macaulay}};
  if (r.betti) inv["betti"] = {{"graded", betti_json(r.betti->betti)}, {"hilbert_series", hilbert_json(r.betti->hilbert)}};
  if (r.table) {
    json rows = json::array();
    for (const auto& row : r.table->table.entries) rows.push_back(numbers(row));
    inv["table"] = {{"d", num(r.table->table.d)},
                    {"field", field_json(r.table->table.field)},
                    {"entries", rows},
                    {"last_column", numbers(r.table->last_column)},
                    {"valid", r.table->valid},
                    {"validation_failures", r.table->validation_failures}};
  }
  if (r.ccm)
    inv["ccm"] = {{"canonically_cm", r.ccm->canonically_cm},
                  {"canonical_depth", num(r.ccm->canonical_depth)},
                  {"canonical_dim", num(r.ccm->canonical_dim)}};
  if (r.covers) {
    json c = json::array();
    for (const auto& p : r.covers->minimal_primes) c.push_back(numbers(p));
    inv["covers"] = {{"minimal_primes", c}};
  }
  return inv;
}

InvariantResults invariants_from_json(const json& inv) {
  InvariantResults r;
  if (inv.contains("depth")) {
    const auto& d = inv.at("depth");
    r.depth = DepthResult{to_int(d.at("height")), to_int(d.at("dim")), to_int(d.at("depth_lc")),
                          to_int(d.at("depth_ab")), d.at("cohen_macaulay").get<bool>()};
  }
  if (inv.contains("betti"))
    r.betti = BettiResult{betti_from(inv.at("betti").at("graded")), hilbert_from(inv.at("betti").at("hilbert_series"))};
  if (inv.contains("table")) {
    const auto& t = inv.at("table");
    TableResult tr;
    tr.table.d = to_int(t.at("d"));
    tr.table.field = field_from(t.at("field"));
    for (const auto& row : t.at("entries")) tr.table.entries.push_back(longs(row));
    tr.last_column = longs(t.at("last_column"));
    tr.valid = t.at("valid").get<bool>();
    tr.validation_failures = t.at("validation_failures").get<std::vector<std::string>>();
    r.table = std::move(tr);
  }
  if (inv.contains("ccm")) {
    const auto& c = inv.at("ccm");
    r.ccm = CcmResult{c.at("canonically_cm").get<bool>(), to_int(c.at("canonical_depth")), to_int(c.at("canonical_dim"))};
  }
  if (inv.contains("covers")) {
    CoversResult c;
    for (const auto& p : inv.at("covers").at("minimal_primes")) c.minimal_primes.push_back(ints(p));
    r.covers = std::move(c);
  }
  return r;
}

json to_json(const JobResult& r) {
  json gens = json::array();
  for (const auto& g : r.ideal.generators()) gens.push_back(numbers(g.exponents()));
  return {{"context", {{"n", num(static_cast<long>(r.ideal.nvars()))}, {"names", r.ideal.context().names()}}},
          {"ideal", {{"generators", gens}, {"text", r.ideal.to_string()}, {"unmixed_part", r.unmixed}}},
          {"field", field_json(r.field)},
          {"invariants", to_json(r.invariants)}};
}

JobResult job_result_from_json(const json& j) {
  const auto n = static_cast<std::size_t>(to_long(j.at("context").at("n")));
  VariableContext ctx(n, j.at("context").at("names").get<std::vector<std::string>>());
  std::vector<Monomial> gens;
  for (const auto& g : j.at("ideal").at("generators")) gens.emplace_back(ints(g));
  return JobResult{MonomialIdeal(ctx, std::move(gens)), field_from(j.at("field")),
                   j.at("ideal").at("unmixed_part").get<bool>(), invariants_from_json(j.at("invariants"))};
}

namespace {

std::string coarse_betti(const BettiTable& b) {
  std::map<std::pair<int, int>, long> coarse;  // (row = deg - i, i)
  int max_i = b.proj_dim(), max_row = 0;
  for (const auto& [key, v] : b.entries) {
    int deg = 0;
    for (int x : key.second) deg += x;
    coarse[{deg - key.first, key.first}] += v;
    max_row = std::max(max_row, deg - key.first);
  }
  const auto totals = b.totals();
  std::ostringstream os;
  os << "       ";
  for (int i = 0; i <= max_i; ++i) os << std::setw(4) << i;
  os << "\ntotal: ";
  for (auto t : totals) os << std::setw(4) << t;
  os << '\n';
  for (int row = 0; row <= max_row; ++row) {
    os << std::setw(5) << row << ": ";
    for (int i = 0; i <= max_i; ++i) {
      auto it = coarse.find({row, i});
      os << std::setw(4) << (it == coarse.end() ? std::string(".") : std::to_string(it->second));
    }
    os << '\n';
  }
  return os.str();
}

std::string list(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::string format_ascii(const JobResult& r) {
  std::ostringstream os;
  const auto& inv = r.invariants;
  os << (r.unmixed ? "unmixed part: " : "ideal: ") << r.ideal.to_string() << '\n';
  os << "ring: " << r.field.to_string() << "[x1..x" << r.ideal.nvars() << "]  (characteristic "
     << r.field.characteristic << ")\n";
  if (inv.covers) {
    os << "minimal primes:";
    for (const auto& p : inv.covers->minimal_primes) {
      os << " (";
      for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << "x" << p[k];
      os << ")";
    }
    os << '\n';
  }
  if (inv.depth)
    os << "height: " << inv.depth->height << "  dim: " << inv.depth->dim << "\n"
       << "depth: " << inv.depth->depth_lc << " (local cohomology), " << inv.depth->depth_ab
       << " (Auslander-Buchsbaum)\n"
       << "Cohen-Macaulay: " << (inv.depth->cohen_macaulay ? "yes" : "no") << '\n';
  if (inv.betti)
    os << "Betti table:\n" << coarse_betti(inv.betti->betti) << "Hilbert series: " << inv.betti->hilbert.to_string()
       << '\n';
  if (inv.ccm)
    os << "canonically Cohen-Macaulay: " << (inv.ccm->canonically_cm ? "yes" : "no") << "  (canonical module depth "
       << inv.ccm->canonical_depth << ", dim " << inv.ccm->canonical_dim << ")\n";
  if (inv.table) {
    os << "Lyubeznik table (characteristic " << inv.table->table.field.characteristic << ", d = " << inv.table->table.d
       << "):\n"
       << format_table_ascii(inv.table->table) << "last column: " << list(inv.table->last_column) << '\n'
       << "table properties: " << (inv.table->valid ? "valid" : "INVALID") << '\n';
    for (const auto& f : inv.table->validation_failures) os << "  failed: " << f << '\n';
  }
  return os.str();
}

std::string format_latex(const JobResult& r) {
  std::ostringstream os;
  const auto& inv = r.invariants;
  os << "% " << (r.unmixed ? "unmixed part of " : "") << "(" << r.ideal.to_string() << ") over "
     << r.field.to_string() << '\n';
  if (inv.depth)
    os << "$\\operatorname{depth} R/I = " << inv.depth->depth_lc << "$, $\\dim R/I = " << inv.depth->dim << "$\n";
  if (inv.betti) {
    os << "$\\beta(R/I) = (";
    const auto t = inv.betti->betti.totals();
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
    os << ")$\n";
  }
  if (inv.ccm) os << "CCM: " << (inv.ccm->canonically_cm ? "yes" : "no") << "\n";
  if (inv.table) os << "\\[\n\\Lambda(R/I) = " << format_table_latex(inv.table->table) << "\\]\n";
  return os.str();
}

}  // namespace lyu::cli
