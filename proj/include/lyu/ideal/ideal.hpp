#pragma once

#include <string>
#include <vector>

#include "lyu/ideal/monomial.hpp"

namespace lyu {

/// Monomial ideal stored by its minimal generating set, in canonical order.
/// An empty generator list is the zero ideal; the generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(VariableContext ctx) : ctx_(std::move(ctx)) {}
  MonomialIdeal(VariableContext ctx, std::vector<Monomial> generators);

  /// The prime generated by the variables in `vars`.
  static MonomialIdeal prime(const VariableContext& ctx, VarSet vars);
  /// Squarefree ideal generated by the products over each support.
  static MonomialIdeal from_supports(const VariableContext& ctx, const std::vector<VarSet>& supports);

  const VariableContext& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_.size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;

  bool contains(const Monomial& m) const;
  /// True when `other` is a subideal of *this.
  bool contains(const MonomialIdeal& other) const;

  /// Supports of the generators; only meaningful for squarefree ideals.
  std::vector<VarSet> generator_supports() const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  VariableContext ctx_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset of `gens`, canonically sorted.
std::vector<Monomial> minimalize_generators(std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of a nonempty list of ideals.
MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals);

/// Minimal transversals (hitting sets) of a hypergraph, sorted lexicographically
/// by their index lists. The empty hypergraph has the single transversal {}.
std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& edges);

/// Throws DomainError unless `ideal` is squarefree, nonzero and proper.
void require_squarefree_proper(const MonomialIdeal& ideal, const char* op);

/// Minimal primes of a squarefree ideal, each as the set of variables generating it.
std::vector<VarSet> minimal_primes(const MonomialIdeal& ideal);

struct HeightDim {
  int height;
  int dimension;
  bool operator==(const HeightDim&) const = default;
};

HeightDim height_dim(const MonomialIdeal& ideal);

/// Intersection of the minimal primes of minimal height.
MonomialIdeal unmixed_part(const MonomialIdeal& ideal);

/// Squarefree Alexander dual: generated by the products over the minimal primes.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

}  // namespace lyu
