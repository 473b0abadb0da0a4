#include "lyu/invariants/invariants.hpp"

#include "lyu/invariants/ext.hpp"
#include "lyu/simplicial/complex.hpp"

namespace lyu {

bool InvariantReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void InvariantReport::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, std::move(witness)});
}

namespace {

template <class F>
FreeComplex<F> resolve(const F& field, const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("Ext of R/I needs a nonzero ideal");
  auto res = minimal_free_resolution(field, quotient_presentation(field, ideal), ideal.nvars() + 1);
  verify_d_squared(field, res);
  return res;
}

template <class F>
ExtSummary summarize_module(const F& field, const ModulePresentation<F>& p) {
  ExtSummary s;
  s.generators = p.generators().rank();
  s.is_zero = s.generators == 0;
  if (s.is_zero) return s;
  const auto res = minimal_free_resolution(field, p, p.nvars() + 1);
  verify_d_squared(field, res);
  const auto r = summarize(res);
  s.betti = r.betti;
  s.hilbert = r.hilbert;
  s.k_polynomial = k_polynomial(res);
  s.krull_dim = r.krull_dim;
  s.proj_dim = r.proj_dim;
  s.depth = r.depth;
  return s;
}

std::string degree_string(const Degree& d, std::size_t n) { return d.to_string(n); }

}  // namespace

ExtSummary ext_summary(const MonomialIdeal& ideal, std::size_t k, const FieldSpec& spec) {
  if (k > ideal.nvars()) throw DomainError("ext_summary: k exceeds the number of variables");
  return with_field(spec, [&](const auto& field) {
    return summarize_module(field, cohomology_presentation(field, resolve(field, ideal), k));
  });
}

ExtSummary canonical_module_summary(const MonomialIdeal& ideal, const FieldSpec& spec) {
  require_squarefree_proper(ideal, "canonical_module");
  const auto hd = height_dim(ideal);
  return ext_summary(ideal, static_cast<std::size_t>(hd.height), spec);
}

bool is_cm_ext(const MonomialIdeal& ideal, std::size_t k, const FieldSpec& spec) {
  const auto s = ext_summary(ideal, k, spec);
  if (s.is_zero) throw DomainError("is_CM_module: zero module");
  return s.is_cohen_macaulay();
}

bool is_canonically_cm(const MonomialIdeal& ideal, const FieldSpec& spec) {
  const auto s = canonical_module_summary(ideal, spec);
  if (s.is_zero) throw DomainError("canonical module vanished; the ideal must be proper and nonzero");
  return s.is_cohen_macaulay();
}

InvariantReport quasi_buchsbaum_check(const MonomialIdeal& ideal, const FieldSpec& spec) {
  require_squarefree_proper(ideal, "quasi_buchsbaum_check");
  const auto n = static_cast<int>(ideal.nvars());
  const int d = height_dim(ideal).dimension;
  InvariantReport report;
  report.values["dim"] = d;
  with_field(spec, [&](const auto& field) {
    const auto res = resolve(field, ideal);
    for (int i = 0; i < d; ++i) {
      const auto e = cohomology_presentation(field, res, static_cast<std::size_t>(n - i));
      std::pair<std::size_t, std::size_t> w{};
      const bool ok = annihilated_by_maximal_ideal(field, e, &w);
      std::string witness;
      if (!ok)
        witness = "i=" + std::to_string(i) + ": " + ideal.context().name(w.first) + " acts nonzero on generator " +
                  std::to_string(w.second) + " of degree " +
                  degree_string(e.generators().degrees[w.second], ideal.nvars()) + " of Ext^" +
                  std::to_string(n - i);
      report.add("m*H^" + std::to_string(i) + "=0", ok, witness);
    }
    return 0;
  });
  return report;
}

std::vector<std::string> duality_shift_mismatches(const MonomialIdeal& ideal, const FieldSpec& spec) {
  require_squarefree_proper(ideal, "duality_shift");
  const auto n = ideal.nvars();
  const auto lc = local_cohomology_dims(ideal, spec);
  std::vector<std::string> bad;
  with_field(spec, [&](const auto& field) {
    const auto res = resolve(field, ideal);
    const Degree ones = Degree::ones(n);
    for (std::size_t i = 0; i <= n; ++i) {
      const auto e = cohomology_presentation(field, res, n - i);
      for (VarSet sigma = 0; sigma < (VarSet{1} << n); ++sigma) {
        Degree s;
        for (auto v : varset_indices(sigma)) s.e[v] = 1;
        const auto ext_dim = hilbert_function_at(field, e, s - ones);
        const auto lc_dim = lc.at(static_cast<int>(i), sigma);
        if (ext_dim != lc_dim)
          bad.push_back("i=" + std::to_string(i) + " sigma=" + s.to_string(n) + ": Ext gives " +
                        std::to_string(ext_dim) + ", local cohomology gives " + std::to_string(lc_dim));
      }
    }
    return 0;
  });
  return bad;
}

long LyubeznikTable::at(int i, int j) const {
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= entries.size() || static_cast<std::size_t>(j) >= entries.size())
    return 0;
  return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool LyubeznikTable::is_trivial() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const long expected = (static_cast<int>(i) == d && static_cast<int>(j) == d) ? 1 : 0;
      if (entries[i][j] != expected) return false;
    }
  return true;
}

namespace {

template <class F>
LyubeznikTable table_over(const F& field, const MonomialIdeal& ideal, int extent, int only_i = -1, int only_j = -1) {
  const auto n = static_cast<int>(ideal.nvars());
  LyubeznikTable t;
  t.d = height_dim(ideal).dimension;
  t.field = field.spec();
  t.entries.assign(static_cast<std::size_t>(extent + 1), std::vector<long>(static_cast<std::size_t>(extent + 1), 0));
  const auto res = resolve(field, ideal);
  for (int j = 0; j <= extent; ++j) {
    if (only_j >= 0 && j != only_j) continue;
    const auto e = cohomology_presentation(field, res, static_cast<std::size_t>(n - j));
    if (e.generators().rank() == 0) continue;
    const auto res_e = minimal_free_resolution(field, e, ideal.nvars() + 1);
    verify_d_squared(field, res_e);
    for (int i = 0; i <= extent; ++i) {
      if (only_i >= 0 && i != only_i) continue;
      t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<long>(degree_zero_cohomology(field, res_e, static_cast<std::size_t>(n - i)));
    }
  }
  return t;
}

}  // namespace

long lyubeznik_number(const MonomialIdeal& ideal, int i, int j, const FieldSpec& spec) {
  require_squarefree_proper(ideal, "lyubeznik_number");
  const int d = height_dim(ideal).dimension;
  if (i < 0 || j < 0 || i > d || j > d)
    throw DomainError("lyubeznik_number: (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0.." +
                      std::to_string(d));
  return with_field(spec, [&](const auto& field) { return table_over(field, ideal, d, i, j).at(i, j); });
}

LyubeznikTable lyubeznik_table(const MonomialIdeal& ideal, const FieldSpec& spec, bool full_extent) {
  require_squarefree_proper(ideal, "lyubeznik_table");
  const int extent = full_extent ? static_cast<int>(ideal.nvars()) : height_dim(ideal).dimension;
  return with_field(spec, [&](const auto& field) { return table_over(field, ideal, extent); });
}

}  // namespace lyu
