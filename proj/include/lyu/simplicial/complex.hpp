#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lyu/algebra/field.hpp"
#include "lyu/ideal/ideal.hpp"
#include "lyu/resolution/betti.hpp"

namespace lyu {

/// Simplicial complex on the ground set {0..n-1}, stored by its facets.
/// No facets: the void complex. Single facet {}: the empty complex.
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t ground_size, std::vector<VarSet> facets);

  static SimplicialComplex void_complex(std::size_t n) { return {n, {}}; }
  static SimplicialComplex empty_complex(std::size_t n) { return {n, {VarSet{0}}}; }

  std::size_t ground_size() const noexcept { return n_; }
  const std::vector<VarSet>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool contains(VarSet face) const;
  /// Largest face size minus one; -1 for the empty complex, -2 for the void one.
  int dimension() const;

  /// faces()[k] lists the faces of dimension k-1, sorted.
  std::vector<std::vector<VarSet>> faces() const;
  /// Restriction to the vertex set w.
  SimplicialComplex induced(VarSet w) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::size_t n_;
  std::vector<VarSet> facets_;
};

/// Faces are the supports of squarefree monomials outside I.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);
/// Ideal generated by the minimal non-faces.
MonomialIdeal to_ideal(const SimplicialComplex& complex, const VariableContext& ctx);

/// { tau : tau n sigma = {}, tau u sigma in K }.
SimplicialComplex link(const SimplicialComplex& complex, VarSet sigma);

/// dim_K of reduced homology; entry k is degree k-1, running from -1 to dim.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field = {});

/// dim_K H^i_m(R/I)_{-sigma} for squarefree sigma, from the link homology of the
/// Stanley-Reisner complex: dim H^i_m(R/I)_{-sigma} = dim H~_{i-|sigma|-1}(lk sigma).
struct LocalCohomologyTable {
  std::map<std::pair<int, VarSet>, std::size_t> entries;  // zero entries omitted

  std::size_t at(int i, VarSet sigma) const;
  /// Sum over squarefree sigma of the entries, for i = 0..n.
  std::vector<std::size_t> totals(std::size_t n) const;
  bool vanishes(int i) const;
};

LocalCohomologyTable local_cohomology_dims(const MonomialIdeal& ideal, const FieldSpec& field = {});

/// min { i : H^i_m(R/I) != 0 }.
int depth_lc(const MonomialIdeal& ideal, const FieldSpec& field = {});
bool is_cohen_macaulay(const MonomialIdeal& ideal, const FieldSpec& field = {});

/// beta_{i,sigma}(R/I) = dim H~_{|sigma|-i-1}(Delta restricted to sigma).
BettiTable betti_hochster(const MonomialIdeal& ideal, const FieldSpec& field = {});

}  // namespace lyu
