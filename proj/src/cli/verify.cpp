#include "lyu/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <tuple>

#include "lyu/cli/runner.hpp"
#include "lyu/graph/graph.hpp"
#include "lyu/invariants/invariants.hpp"
#include "lyu/resolution/quotient.hpp"
#include "lyu/simplicial/complex.hpp"

namespace lyu::cli {

int verify_cap(bool extended) { return extended ? 12 : 7; }

bool VerifyReport::passed() const {
  for (const auto& c : claims)
    if (!c.passed) return false;
  return true;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json j = {{"n", std::to_string(c.n)}, {"claim", c.claim},   {"expected", c.expected},
                        {"computed", c.computed},  {"passed", c.passed}};
    if (!c.error.empty()) j["error"] = c.error;
    arr.push_back(j);
  }
  return {{"field", {{"characteristic", std::to_string(field.characteristic)}}},
          {"passed", passed()},
          {"claims", arr}};
}

std::string VerifyReport::to_ascii() const {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : claims) {
    os << (c.passed ? "PASS" : "FAIL") << "  C_" << c.n << "  " << c.claim << ": expected " << c.expected
       << ", computed " << c.computed;
    if (!c.error.empty()) os << " [" << c.error << "]";
    os << '\n';
    failed += !c.passed;
  }
  os << claims.size() - failed << "/" << claims.size() << " claims passed (" << field.to_string() << ")\n";
  return os.str();
}

namespace {

std::string cells(const LyubeznikTable& t) {
  std::string s;
  for (int i = 0; i < static_cast<int>(t.entries.size()); ++i)
    for (int j = 0; j < static_cast<int>(t.entries.size()); ++j)
      if (t.at(i, j) != 0)
        s += (s.empty() ? "" : " ") + std::string("l") + std::to_string(i) + std::to_string(j) + "=" +
             std::to_string(t.at(i, j));
  return "d=" + std::to_string(t.d) + (s.empty() ? "" : " ") + s;
}

std::string cells(int d, const std::vector<std::tuple<int, int, long>>& nonzero) {
  LyubeznikTable t;
  t.d = d;
  t.entries.assign(static_cast<std::size_t>(d + 1), std::vector<long>(static_cast<std::size_t>(d + 1), 0));
  for (auto [i, j, v] : nonzero) t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  return cells(t);
}

std::string column(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

class Suite {
 public:
  Suite(int n, FieldSpec field, std::vector<ClaimResult>& out) : n_(n), field_(field), out_(out) {}

  void claim(const std::string& name, const std::string& expected, const std::function<std::string()>& compute) {
    ClaimResult c{n_, name, expected, "", false, ""};
    try {
      c.computed = compute();
      c.passed = c.computed == expected;
    } catch (...) {
      c.error = classify(std::current_exception()).second;
      c.computed = "error";
    }
    out_.push_back(std::move(c));
  }

  const MonomialIdeal& ideal() {
    if (!ideal_) ideal_ = edge_ideal(cycle(n_));
    return *ideal_;
  }
  const MonomialIdeal& unmixed() {
    if (!unmixed_) unmixed_ = unmixed_part(ideal());
    return *unmixed_;
  }
  const LyubeznikTable& table() {
    if (!table_) table_ = lyubeznik_table(ideal(), field_);
    return *table_;
  }
  const LyubeznikTable& unmixed_table() {
    if (!unmixed_table_) unmixed_table_ = lyubeznik_table(unmixed(), field_);
    return *unmixed_table_;
  }
  int dim() { return height_dim(ideal()).dimension; }

 private:
  int n_;
  FieldSpec field_;
  std::vector<ClaimResult>& out_;
  std::optional<MonomialIdeal> ideal_, unmixed_;
  std::optional<LyubeznikTable> table_, unmixed_table_;
};

void verify_cycle(int n, const FieldSpec& field, std::vector<ClaimResult>& out) {
  Suite s(n, field, out);
  const bool even = n % 2 == 0;

  if (even) {
    std::string odds, evens;
    for (int v = 1; v <= n; ++v) (v % 2 ? odds : evens) += (v > 2 ? "," : "") + std::to_string(v);
    s.claim("minimum vertex covers", "{" + odds + "} {" + evens + "}", [&] {
      std::string r;
      for (const auto& c : minimum_vertex_covers(cycle(n))) {
        std::string one;
        for (int v : c) one += (one.empty() ? "" : ",") + std::to_string(v);
        r += (r.empty() ? "{" : " {") + one + "}";
      }
      return r;
    });
  } else {
    const int half = (n - 1) / 2;
    s.claim("minimum vertex covers = S u R", "|S|+|R|=" + std::to_string(n) + ", equal", [&] {
      const auto fam = odd_cycle_cover_families(half);
      auto both = fam.s_family;
      both.insert(both.end(), fam.r_family.begin(), fam.r_family.end());
      std::sort(both.begin(), both.end());
      both.erase(std::unique(both.begin(), both.end()), both.end());
      auto min = minimum_vertex_covers(cycle(n));
      std::sort(min.begin(), min.end());
      return "|S|+|R|=" + std::to_string(fam.s_family.size() + fam.r_family.size()) +
             (both == min ? ", equal" : ", differ");
    });
    if (n >= 5) {
      const auto rep = std::make_shared<std::optional<SumDecompositionReport>>();
      auto get = [rep, half]() -> const SumDecompositionReport& {
        if (!*rep) *rep = verify_sum_decomposition(half);
        return **rep;
      };
      s.claim("I1+I2 = (p1+q_s) n (q1+p_{s+1})", "equal",
              [&] { return get().sum_identity ? "equal" : get().lhs.to_string() + " vs " + get().rhs.to_string(); });
      s.claim("I^u = I1 n I2", "equal", [&] { return get().unmixed_identity ? "equal" : "differ"; });
      if (n <= 7)
        s.claim("I = I1 n I2", "equal", [&] { return get().edge_ideal_identity ? "equal" : get().failures.back(); });
    }
  }

  if (even || n >= 5)
    s.claim("depth R/I^u (local cohomology, Auslander-Buchsbaum)", even ? "1,1" : "2,2", [&] {
      return std::to_string(depth_lc(s.unmixed(), field)) + "," + std::to_string(depth_ab(s.unmixed(), field));
    });

  s.claim("R/I canonically Cohen-Macaulay", (even || n <= 5) ? "yes" : "no",
          [&] { return is_canonically_cm(s.ideal(), field) ? "yes" : "no"; });

  s.claim("m annihilates H^i(R/I^u), i < d", "pass", [&] {
    const auto rep = quasi_buchsbaum_check(s.unmixed(), field);
    std::string r = rep.passed() ? "pass" : "fail";
    for (const auto& c : rep.checks)
      if (!c.passed) r += "; " + c.witness;
    return r;
  });

  s.claim("Hilbert series K_{R/I} = K_{R/I^u}", "equal", [&] {
    const auto a = canonical_module_summary(s.ideal(), field);
    const auto b = canonical_module_summary(s.unmixed(), field);
    if (a.hilbert == b.hilbert && a.k_polynomial == b.k_polynomial) return std::string("equal");
    return a.hilbert.to_string() + " vs " + b.hilbert.to_string();
  });

  const int d = s.dim();
  if (n == 3 || n == 5) s.claim("Lyubeznik table R/I", cells(d, {{d, d, 1}}), [&] { return cells(s.table()); });
  if (n == 4) s.claim("Lyubeznik table R/I", cells(2, {{0, 1, 1}, {2, 2, 2}}), [&] { return cells(s.table()); });
  if (n == 7)
    s.claim("Lyubeznik table R/I", cells(3, {{0, 2, 1}, {2, 3, 1}, {3, 3, 1}}), [&] { return cells(s.table()); });

  if (even || n >= 7) {
    std::vector<long> col(static_cast<std::size_t>(d + 1), 0);
    col[static_cast<std::size_t>(d)] = even ? 2 : 1;
    if (!even) col[static_cast<std::size_t>(d - 1)] = 1;
    s.claim("last column of Lyubeznik table R/I", column(col), [&] { return column(last_column(s.table())); });
    s.claim("Lyubeznik table R/I^u",
            even ? cells(d, {{0, 1, 1}, {d, d, 2}}) : cells(d, {{0, 2, 1}, {d - 1, d, 1}, {d, d, 1}}),
            [&] { return cells(s.unmixed_table()); });
  }

  s.claim("table properties R/I", "valid", [&] {
    const auto rep = validate_table(s.table());
    std::string r = rep.passed() ? "valid" : "invalid";
    for (const auto& c : rep.checks)
      if (!c.passed) r += "; " + c.name + " " + c.witness;
    return r;
  });
}

}  // namespace

VerifyReport verify_cycle_claims(const VerifyOptions& options) {
  const int cap = verify_cap(options.extended);
  if (options.from < 3) throw DomainError("cycle length must be at least 3, got " + std::to_string(options.from));
  if (options.to > cap)
    throw DomainError("cycle length " + std::to_string(options.to) + " exceeds the cap " + std::to_string(cap) +
                      (options.extended ? "" : " (use --extended)"));
  if (options.from > options.to) throw DomainError("empty range");
  VerifyReport report;
  report.field = options.field;
  for (int n = options.from; n <= options.to; ++n) verify_cycle(n, options.field, report.claims);
  return report;
}

}  // namespace lyu::cli
