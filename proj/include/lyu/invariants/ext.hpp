#pragma once

#include <vector>

#include "lyu/resolution/resolution.hpp"

namespace lyu {

/// Presentation of H^k(Hom(res, R)), i.e. Ext^k(M, R) when `res` resolves M.
/// Built as ker(d_{k+1}^T) / im(d_k^T): the kernel is generated minimally, and
/// its relations are the kernel-coordinates of syz([kernel | d_k^T]).
template <class F>
ModulePresentation<F> cohomology_presentation(const F& field, const FreeComplex<F>& res, std::size_t k,
                                              EngineLimits limits = {}) {
  const auto n = res.nvars();
  if (k > res.top()) return {GradedMatrix<F>::from_columns(FreeModule{n, {}}, {})};

  const FreeModule fk = res.module(k).dual();
  GradedMatrix<F> outgoing;
  if (k + 1 <= res.top()) {
    outgoing = res.d(k + 1).dual();
  } else {
    std::vector<HomVec<F>> zero;
    for (const auto& d : fk.degrees) zero.push_back({d, {}});
    outgoing = GradedMatrix<F>(fk, FreeModule{n, {}}, std::move(zero));
  }
  const auto cycles = kernel(field, outgoing, limits);
  if (cycles.cols() == 0) return {GradedMatrix<F>::from_columns(FreeModule{n, {}}, {})};

  std::vector<HomVec<F>> combined = cycles.columns();
  if (k >= 1) {
    const auto incoming = res.d(k).dual();
    combined.insert(combined.end(), incoming.columns().begin(), incoming.columns().end());
  }
  const auto both = GradedMatrix<F>::from_columns(fk, std::move(combined));
  const auto ncycles = static_cast<std::uint32_t>(cycles.cols());

  std::vector<HomVec<F>> relations;
  for (const auto& s : syzygy_generators(field, both, limits)) {
    HomVec<F> r{s.degree, {}};
    for (const auto& [pos, c] : s.coefs)
      if (pos < ncycles) r.coefs.emplace_back(pos, c);
    if (!r.is_zero()) relations.push_back(std::move(r));
  }
  ModulePresentation<F> p{GradedMatrix<F>::from_columns(cycles.source(), std::move(relations))};
  return prune(field, p, limits);
}

/// Ext^k(coker p, R), minimally presented.
template <class F>
ModulePresentation<F> ext_module(const F& field, const ModulePresentation<F>& p, std::size_t k, EngineLimits limits = {}) {
  if (k > p.nvars()) throw DomainError("ext_module: k exceeds the number of variables");
  const auto res = minimal_free_resolution(field, p, p.nvars() + 1, limits);
  return cohomology_presentation(field, res, k, limits);
}

/// dim_K of the multidegree-0 part of H^k(Hom(res, R)). A summand R(-a) of F_k
/// dualizes to R(a), whose degree-0 part is K * x^a when a >= 0 and 0 otherwise;
/// the dual differentials act on these pieces by their scalar coefficients.
template <class F>
std::size_t degree_zero_cohomology(const F& field, const FreeComplex<F>& res, std::size_t k) {
  if (k > res.top()) return 0;
  const auto& fk = res.module(k).degrees;
  std::size_t dim = 0;
  for (const auto& a : fk)
    if (a.nonnegative()) ++dim;
  if (dim == 0) return 0;

  std::size_t out_rank = 0, in_rank = 0;
  if (k + 1 <= res.top()) {
    // d_{k+1}^T restricted: one vector per generator of F_k with degree >= 0
    const auto dual = res.d(k + 1).dual();
    EchelonBasis<F> basis(field);
    for (std::size_t r = 0; r < fk.size(); ++r)
      if (fk[r].nonnegative()) basis.insert(dual.column(r).coefs);
    out_rank = basis.rank();
  }
  if (k >= 1) {
    const auto dual = res.d(k).dual();
    const auto& prev = res.module(k - 1).degrees;
    EchelonBasis<F> basis(field);
    for (std::size_t r = 0; r < prev.size(); ++r)
      if (prev[r].nonnegative()) basis.insert(dual.column(r).coefs);
    in_rank = basis.rank();
  }
  return dim - out_rank - in_rank;
}

/// Whether every variable annihilates coker(p); on failure `witness` gets
/// (variable index, generator index).
template <class F>
bool annihilated_by_maximal_ideal(const F& field, const ModulePresentation<F>& p,
                                  std::pair<std::size_t, std::size_t>* witness = nullptr, EngineLimits limits = {}) {
  const auto& gens = p.generators();
  const auto gb = groebner_module(field, gens, p.relations.columns(), limits);
  for (std::size_t g = 0; g < gens.rank(); ++g)
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      HomVec<F> xg{gens.degrees[g] + Degree::unit(v), {{static_cast<std::uint32_t>(g), field.one()}}};
      if (!normal_form(gb, xg).is_zero()) {
        if (witness) *witness = {v, g};
        return false;
      }
    }
  return true;
}

}  // namespace lyu
