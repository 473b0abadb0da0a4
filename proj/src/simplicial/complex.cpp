#include "lyu/simplicial/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "lyu/algebra/sparse.hpp"

namespace lyu {

namespace {

std::vector<VarSet> maximal_sets(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
    return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> kept;
  for (auto s : sets)
    if (std::none_of(kept.begin(), kept.end(), [&](VarSet k) { return (s & k) == s; })) kept.push_back(s);
  std::sort(kept.begin(), kept.end());
  return kept;
}

VarSet ground_mask(std::size_t n) { return n >= 64 ? ~VarSet{0} : (VarSet{1} << n) - 1; }

template <class F>
std::vector<std::size_t> homology_over(const F& field, const SimplicialComplex& k) {
  const auto faces = k.faces();  // faces[d+1] = faces of dimension d
  std::vector<std::unordered_map<VarSet, std::uint32_t>> index(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d)
    for (std::size_t i = 0; i < faces[d].size(); ++i) index[d][faces[d][i]] = static_cast<std::uint32_t>(i);

  // rank of the boundary map from faces[d] to faces[d-1]
  std::vector<std::size_t> rank(faces.size() + 1, 0);
  for (std::size_t d = 1; d < faces.size(); ++d) {
    EchelonBasis<F> basis(field);
    for (auto face : faces[d]) {
      SparseVector<F> col;
      int sign = 0;
      for (auto v : varset_indices(face)) {
        col.emplace_back(index[d - 1].at(face & ~(VarSet{1} << v)), sign % 2 == 0 ? field.one() : field.neg(field.one()));
        ++sign;
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      basis.insert(std::move(col));
    }
    rank[d] = basis.rank();
  }
  std::vector<std::size_t> h(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d) h[d] = faces[d].size() - rank[d] - rank[d + 1];
  return h;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t ground_size, std::vector<VarSet> facets) : n_(ground_size) {
  if (n_ > kMaxIdealVars) throw DomainError("simplicial complex on more than 64 vertices");
  for (auto f : facets)
    if (f & ~ground_mask(n_)) throw DomainError("facet outside the ground set");
  facets_ = maximal_sets(std::move(facets));
}

bool SimplicialComplex::contains(VarSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return (face & f) == face; });
}

int SimplicialComplex::dimension() const {
  if (is_void()) return -2;
  int d = -1;
  for (auto f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

std::vector<std::vector<VarSet>> SimplicialComplex::faces() const {
  std::unordered_set<VarSet> all;
  for (auto f : facets_) {
    // every subset of f
    VarSet s = f;
    for (;;) {
      all.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<std::vector<VarSet>> out(static_cast<std::size_t>(dimension() + 2));
  for (auto s : all) out[static_cast<std::size_t>(popcount(s))].push_back(s);
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

SimplicialComplex SimplicialComplex::induced(VarSet w) const {
  std::vector<VarSet> f;
  for (auto facet : facets_) f.push_back(facet & w);
  return {n_, std::move(f)};
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  std::vector<VarSet> facets;
  const VarSet all = ground_mask(ideal.nvars());
  for (auto p : minimal_primes(ideal)) facets.push_back(all & ~p);
  return {ideal.nvars(), std::move(facets)};
}

MonomialIdeal to_ideal(const SimplicialComplex& complex, const VariableContext& ctx) {
  if (ctx.size() != complex.ground_size()) throw ContextMismatch("context size differs from the ground set");
  if (complex.is_void()) return MonomialIdeal(ctx, {Monomial::unit(ctx.size())});
  // minimal non-faces = minimal transversals of the facet complements
  std::vector<VarSet> complements;
  for (auto f : complex.facets()) complements.push_back(ground_mask(ctx.size()) & ~f);
  if (std::find(complements.begin(), complements.end(), VarSet{0}) != complements.end()) return MonomialIdeal(ctx);
  return MonomialIdeal::from_supports(ctx, minimal_transversals(complements));
}

SimplicialComplex link(const SimplicialComplex& complex, VarSet sigma) {
  if (!complex.contains(sigma)) throw DomainError("link: sigma is not a face");
  std::vector<VarSet> f;
  for (auto facet : complex.facets())
    if ((facet & sigma) == sigma) f.push_back(facet & ~sigma);
  return {complex.ground_size(), std::move(f)};
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& spec) {
  if (complex.is_void()) throw DomainError("reduced homology of the void complex");
  return with_field(spec, [&](const auto& field) { return homology_over(field, complex); });
}

std::size_t LocalCohomologyTable::at(int i, VarSet sigma) const {
  auto it = entries.find({i, sigma});
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::size_t> LocalCohomologyTable::totals(std::size_t n) const {
  std::vector<std::size_t> t(n + 1, 0);
  for (const auto& [key, v] : entries) t.at(static_cast<std::size_t>(key.first)) += v;
  return t;
}

bool LocalCohomologyTable::vanishes(int i) const {
  return std::none_of(entries.begin(), entries.end(), [&](const auto& kv) { return kv.first.first == i; });
}

LocalCohomologyTable local_cohomology_dims(const MonomialIdeal& ideal, const FieldSpec& spec) {
  require_squarefree_proper(ideal, "local_cohomology_dims");
  const auto delta = stanley_reisner_complex(ideal);
  LocalCohomologyTable table;
  for (const auto& layer : delta.faces())
    for (auto sigma : layer) {
      const auto h = reduced_homology_dims(link(delta, sigma), spec);
      for (std::size_t k = 0; k < h.size(); ++k) {
        if (h[k] == 0) continue;
        // homology degree k-1, cohomological degree (k-1) + |sigma| + 1
        table.entries[{static_cast<int>(k) + popcount(sigma), sigma}] = h[k];
      }
    }
  return table;
}

int depth_lc(const MonomialIdeal& ideal, const FieldSpec& spec) {
  const auto t = local_cohomology_dims(ideal, spec);
  int depth = static_cast<int>(ideal.nvars()) + 1;
  for (const auto& [key, v] : t.entries) depth = std::min(depth, key.first);
  return depth;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, const FieldSpec& spec) {
  return depth_lc(ideal, spec) == height_dim(ideal).dimension;
}

BettiTable betti_hochster(const MonomialIdeal& ideal, const FieldSpec& spec) {
  require_squarefree_proper(ideal, "betti_hochster");
  const auto n = ideal.nvars();
  if (n > 20) throw ResourceError("betti_hochster enumerates 2^n subsets; n > 20 refused");
  const auto delta = stanley_reisner_complex(ideal);
  BettiTable t;
  for (VarSet w = 0; w <= ground_mask(n); ++w) {
    const auto h = reduced_homology_dims(delta.induced(w), spec);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      // homology degree k-1 = |w| - i - 1
      const int i = popcount(w) - static_cast<int>(k);
      std::vector<int> deg(n, 0);
      for (auto v : varset_indices(w)) deg[v] = 1;
      t.entries[{i, deg}] = static_cast<long>(h[k]);
    }
  }
  return t;
}

}  // namespace lyu
