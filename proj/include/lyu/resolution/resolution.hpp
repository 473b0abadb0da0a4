#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "lyu/ideal/ideal.hpp"
#include "lyu/resolution/betti.hpp"
#include "lyu/resolution/groebner.hpp"

namespace lyu {

/// The module coker(relations); relations.target() lists the generators.
template <class F>
struct ModulePresentation {
  GradedMatrix<F> relations;

  const FreeModule& generators() const noexcept { return relations.target(); }
  std::size_t nvars() const noexcept { return relations.nvars(); }
};

/// R/I presented by the row of minimal generators of I.
template <class F>
ModulePresentation<F> quotient_presentation(const F& field, const MonomialIdeal& ideal) {
  const auto n = ideal.nvars();
  if (n > kMaxEngineVars) throw ResourceError("resolution engine supports at most 16 variables");
  FreeModule target{n, {Degree{}}};
  std::vector<HomVec<F>> cols;
  for (const auto& g : ideal.generators()) cols.push_back({Degree::from(g.exponents()), {{0u, field.one()}}});
  return {GradedMatrix<F>::from_columns(std::move(target), std::move(cols))};
}

/// Minimal presentation of the same module: generators hit by a scalar entry
/// are eliminated (first column first, lowest row first), then the remaining
/// relations are cut down to a minimal generating set.
template <class F>
ModulePresentation<F> prune(const F& field, const ModulePresentation<F>& p, EngineLimits limits = {}) {
  const auto& gens = p.generators();
  std::vector<HomVec<F>> cols = p.relations.columns();
  std::vector<bool> alive(gens.rank(), true);
  std::vector<bool> used(cols.size(), false);

  for (;;) {
    std::size_t pc = cols.size();
    std::uint32_t pr = 0;
    for (std::size_t c = 0; c < cols.size() && pc == cols.size(); ++c) {
      if (used[c]) continue;
      for (const auto& [r, coef] : cols[c].coefs)
        if (gens.degrees[r] == cols[c].degree) {
          pc = c;
          pr = r;
          break;
        }
    }
    if (pc == cols.size()) break;
    used[pc] = true;
    alive[pr] = false;
    const auto pivot = cols[pc];
    const auto u = *find_coef<F>(pivot.coefs, pr);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (used[c]) continue;
      if (const auto* w = find_coef<F>(cols[c].coefs, pr)) cols[c] = sub_scaled(field, cols[c], field.div(*w, u), pivot);
    }
  }

  std::vector<std::uint32_t> remap(gens.rank(), 0);
  FreeModule new_gens{gens.nvars, {}};
  for (std::size_t r = 0; r < gens.rank(); ++r)
    if (alive[r]) {
      remap[r] = static_cast<std::uint32_t>(new_gens.degrees.size());
      new_gens.degrees.push_back(gens.degrees[r]);
    }
  std::vector<HomVec<F>> rels;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (used[c] || cols[c].is_zero()) continue;
    HomVec<F> v{cols[c].degree, {}};
    for (auto& [r, coef] : cols[c].coefs) v.coefs.emplace_back(remap[r], coef);
    rels.push_back(std::move(v));
  }
  rels = minimal_generators(field, new_gens, std::move(rels), limits);
  return {GradedMatrix<F>::from_columns(std::move(new_gens), std::move(rels))};
}

/// Minimal multigraded free resolution F_0 <- F_1 <- ... of coker(p).
/// Throws ResourceError if it does not close up within max_len steps.
template <class F>
FreeComplex<F> minimal_free_resolution(const F& field, const ModulePresentation<F>& p, std::size_t max_len,
                                       EngineLimits limits = {}) {
  const auto minimal = prune(field, p, limits);
  std::vector<FreeModule> modules{minimal.generators()};
  std::vector<GradedMatrix<F>> diffs;
  if (minimal.generators().rank() == 0) return FreeComplex<F>(std::move(modules), std::move(diffs));

  GradedMatrix<F> current = minimal.relations;
  while (current.cols() > 0) {
    if (diffs.size() >= max_len) throw ResourceError("resolution did not terminate within " + std::to_string(max_len) + " steps");
    if (current.cols() > limits.max_rank) throw ResourceError("resolution rank cap exceeded");
    modules.push_back(current.source());
    diffs.push_back(current);
    current = kernel(field, current, limits);
  }
  return FreeComplex<F>(std::move(modules), std::move(diffs));
}

/// Taylor resolution of R/I on the minimal generators of I: F_k has a basis
/// indexed by k-subsets S, in degree lcm(S), and
///   d(e_S) = sum_{t in S} (-1)^{pos(t)} (lcm S / lcm S\t) e_{S\t}.
template <class F>
FreeComplex<F> taylor_complex(const F& field, const MonomialIdeal& ideal, std::size_t max_generators = 20) {
  const auto n = ideal.nvars();
  const auto& gens = ideal.generators();
  const std::size_t g = gens.size();
  if (g == 0) throw DomainError("taylor_complex: zero ideal");
  if (g > max_generators) throw ResourceError("taylor_complex: " + std::to_string(g) + " generators exceed the cap");
  if (n > kMaxEngineVars) throw ResourceError("resolution engine supports at most 16 variables");

  std::vector<Degree> gdeg;
  for (const auto& m : gens) gdeg.push_back(Degree::from(m.exponents()));

  const std::uint32_t full = (std::uint32_t{1} << g);
  std::vector<std::vector<std::uint32_t>> subsets(g + 1);
  std::vector<std::uint32_t> index_of(full);
  std::vector<Degree> lcm_of(full);
  for (std::uint32_t s = 0; s < full; ++s) {
    auto k = static_cast<std::size_t>(__builtin_popcount(s));
    index_of[s] = static_cast<std::uint32_t>(subsets[k].size());
    subsets[k].push_back(s);
    Degree d;
    for (std::size_t t = 0; t < g; ++t)
      if (s >> t & 1u) d = join(d, gdeg[t]);
    lcm_of[s] = d;
  }

  std::vector<FreeModule> modules;
  for (std::size_t k = 0; k <= g; ++k) {
    FreeModule m{n, {}};
    for (auto s : subsets[k]) m.degrees.push_back(lcm_of[s]);
    modules.push_back(std::move(m));
  }
  std::vector<GradedMatrix<F>> diffs;
  for (std::size_t k = 1; k <= g; ++k) {
    std::vector<HomVec<F>> cols;
    for (auto s : subsets[k]) {
      HomVec<F> v{lcm_of[s], {}};
      int position = 0;
      for (std::size_t t = 0; t < g; ++t) {
        if (!(s >> t & 1u)) continue;
        const auto face = s & ~(std::uint32_t{1} << t);
        v.coefs.emplace_back(index_of[face], position % 2 == 0 ? field.one() : field.neg(field.one()));
        ++position;
      }
      std::sort(v.coefs.begin(), v.coefs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      cols.push_back(std::move(v));
    }
    diffs.emplace_back(modules[k], modules[k - 1], std::move(cols));
  }
  return FreeComplex<F>(std::move(modules), std::move(diffs));
}

/// Cancels scalar entries by Gaussian elimination of complexes, lowest
/// homological degree first, lowest (column, row) first. The result is
/// homotopy equivalent to the input and has no scalar entries.
template <class F>
FreeComplex<F> minimalize_complex(const F& field, const FreeComplex<F>& c) {
  const std::size_t top = c.top();
  std::vector<std::vector<HomVec<F>>> cols(top + 1);  // cols[k] = columns of d_k
  std::vector<std::vector<bool>> alive(top + 1);
  for (std::size_t k = 0; k <= top; ++k) alive[k].assign(c.module(k).rank(), true);
  for (std::size_t k = 1; k <= top; ++k) cols[k] = c.d(k).columns();

  for (std::size_t k = 1; k <= top; ++k) {
    const auto& rows = c.module(k - 1).degrees;
    for (;;) {
      std::size_t pc = cols[k].size();
      std::uint32_t pr = 0;
      for (std::size_t j = 0; j < cols[k].size() && pc == cols[k].size(); ++j) {
        if (!alive[k][j]) continue;
        for (const auto& [r, coef] : cols[k][j].coefs)
          if (rows[r] == cols[k][j].degree) {
            pc = j;
            pr = r;
            break;
          }
      }
      if (pc == cols[k].size()) break;
      const auto pivot = cols[k][pc];
      const auto u = *find_coef<F>(pivot.coefs, pr);
      for (std::size_t j = 0; j < cols[k].size(); ++j) {
        if (j == pc || !alive[k][j]) continue;
        if (const auto* w = find_coef<F>(cols[k][j].coefs, pr))
          cols[k][j] = sub_scaled(field, cols[k][j], field.div(*w, u), pivot);
      }
      alive[k][pc] = false;
      alive[k - 1][pr] = false;
      // row pc of d_{k+1} disappears with the generator
      if (k < top)
        for (auto& col : cols[k + 1])
          std::erase_if(col.coefs, [&](const auto& t) { return t.first == pc; });
    }
  }

  std::vector<std::vector<std::uint32_t>> remap(top + 1);
  std::vector<FreeModule> modules;
  for (std::size_t k = 0; k <= top; ++k) {
    FreeModule m{c.nvars(), {}};
    remap[k].assign(alive[k].size(), 0);
    for (std::size_t i = 0; i < alive[k].size(); ++i)
      if (alive[k][i]) {
        remap[k][i] = static_cast<std::uint32_t>(m.degrees.size());
        m.degrees.push_back(c.module(k).degrees[i]);
      }
    modules.push_back(std::move(m));
  }
  std::vector<GradedMatrix<F>> diffs;
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<HomVec<F>> out;
    for (std::size_t j = 0; j < cols[k].size(); ++j) {
      if (!alive[k][j]) continue;
      HomVec<F> v{cols[k][j].degree, {}};
      for (const auto& [r, coef] : cols[k][j].coefs) {
        if (!alive[k - 1][r]) throw Error("minimalize_complex: surviving column references a cancelled row");
        v.coefs.emplace_back(remap[k - 1][r], coef);
      }
      out.push_back(std::move(v));
    }
    diffs.emplace_back(modules[k], modules[k - 1], std::move(out));
  }
  // drop trailing zero modules
  while (modules.size() > 1 && modules.back().rank() == 0) {
    modules.pop_back();
    diffs.pop_back();
  }
  return FreeComplex<F>(std::move(modules), std::move(diffs));
}

/// beta_{k,a} = number of generators of F_k in degree a (meaningful for minimal complexes).
template <class F>
BettiTable graded_betti(const FreeComplex<F>& c) {
  BettiTable t;
  const auto n = c.nvars();
  for (std::size_t k = 0; k <= c.top(); ++k)
    for (const auto& d : c.module(k).degrees) ++t.entries[{static_cast<int>(k), d.to_vector(n)}];
  return t;
}

/// Multigraded K-polynomial  sum_k (-1)^k sum_{gens of F_k} t^deg.
template <class F>
std::map<Degree, long> k_polynomial(const FreeComplex<F>& c) {
  std::map<Degree, long> k;
  for (std::size_t i = 0; i <= c.top(); ++i)
    for (const auto& d : c.module(i).degrees) k[d] += (i % 2 == 0 ? 1 : -1);
  std::erase_if(k, [](const auto& kv) { return kv.second == 0; });
  return k;
}

/// Coarsely graded Hilbert series of the module resolved by `c`.
template <class F>
HilbertSeries hilbert_series(const FreeComplex<F>& c) {
  HilbertSeries h;
  h.denominator_power = static_cast<int>(c.nvars());
  for (const auto& [d, v] : k_polynomial(c)) h.numerator[d.total()] += v;
  h.reduce();
  return h;
}

/// dim_K of the degree-`d` part of coker(p).
template <class F>
std::size_t hilbert_function_at(const F& field, const ModulePresentation<F>& p, const Degree& d) {
  std::size_t gens = 0;
  for (const auto& g : p.generators().degrees)
    if (g.leq(d)) ++gens;
  EchelonBasis<F> basis(field);
  for (const auto& col : p.relations.columns())
    if (col.degree.leq(d)) basis.insert(col.coefs);
  return gens - basis.rank();
}

struct ResolutionSummary {
  BettiTable betti;
  HilbertSeries hilbert;
  int krull_dim = -1;
  int proj_dim = -1;
  /// n - proj_dim (Auslander-Buchsbaum); meaningless for the zero module.
  int depth = -1;
};

template <class F>
ResolutionSummary summarize(const FreeComplex<F>& c) {
  ResolutionSummary s;
  s.betti = graded_betti(c);
  s.hilbert = hilbert_series(c);
  s.krull_dim = s.hilbert.krull_dim();
  s.proj_dim = c.length() < 0 ? -1 : static_cast<int>(c.top());
  s.depth = static_cast<int>(c.nvars()) - s.proj_dim;
  return s;
}

}  // namespace lyu
