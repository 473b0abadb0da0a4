#include "lyu/ideal/ideal.hpp"

#include <algorithm>

#include "lyu/errors.hpp"

namespace lyu {

std::vector<Monomial> minimalize_generators(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  const auto n = gens.front().nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw ContextMismatch("generators over different variable contexts");

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // a divisor always has total degree <= its multiple, so it is already kept
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(VariableContext ctx, std::vector<Monomial> generators) : ctx_(std::move(ctx)) {
  for (const auto& g : generators)
    if (g.nvars() != ctx_.size()) throw ContextMismatch("generator length differs from context size");
  gens_ = minimalize_generators(std::move(generators));
}

MonomialIdeal MonomialIdeal::prime(const VariableContext& ctx, VarSet vars) {
  std::vector<Monomial> gens;
  for (auto i : varset_indices(vars)) gens.push_back(Monomial::from_support(ctx.size(), VarSet{1} << i));
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_supports(const VariableContext& ctx, const std::vector<VarSet>& supports) {
  std::vector<Monomial> gens;
  gens.reserve(supports.size());
  for (auto s : supports) gens.push_back(Monomial::from_support(ctx.size(), s));
  return MonomialIdeal(ctx, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (!(other.ctx_ == ctx_)) throw ContextMismatch("ideals over different contexts");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

std::vector<VarSet> MonomialIdeal::generator_supports() const {
  std::vector<VarSet> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.support());
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += g.to_string(ctx_);
  }
  return out;
}

namespace {

void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("ideals over different variable contexts");
}

bool lex_less(VarSet a, VarSet b) { return varset_indices(a) < varset_indices(b); }

}  // namespace

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw DomainError("intersection of an empty family");
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& edges) {
  // Berge's incremental scheme: extend the transversals of the first k edges
  // to the (k+1)-st, then discard non-minimal sets.
  std::vector<VarSet> current{0};
  for (VarSet edge : edges) {
    std::vector<VarSet> next;
    for (VarSet t : current) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (auto v : varset_indices(edge)) next.push_back(t | (VarSet{1} << v));
    }
    std::sort(next.begin(), next.end(), [](VarSet a, VarSet b) {
      return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current.clear();
    for (VarSet t : next) {
      bool dominated = std::any_of(current.begin(), current.end(), [&](VarSet k) { return (k & t) == k; });
      if (!dominated) current.push_back(t);
    }
  }
  std::sort(current.begin(), current.end(), lex_less);
  return current;
}

void require_squarefree_proper(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw DomainError(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw DomainError(std::string(op) + ": unit ideal");
  if (!ideal.is_squarefree()) throw DomainError(std::string(op) + ": ideal is not squarefree");
  if (ideal.nvars() > kMaxIdealVars) throw DomainError(std::string(op) + ": more than 64 variables");
}

std::vector<VarSet> minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree_proper(ideal, "minimal_primes");
  return minimal_transversals(ideal.generator_supports());
}

HeightDim height_dim(const MonomialIdeal& ideal) {
  const auto primes = minimal_primes(ideal);
  int h = popcount(primes.front());
  for (auto p : primes) h = std::min(h, popcount(p));
  return {h, static_cast<int>(ideal.nvars()) - h};
}

MonomialIdeal unmixed_part(const MonomialIdeal& ideal) {
  const auto primes = minimal_primes(ideal);
  const int h = height_dim(ideal).height;
  std::vector<VarSet> top;
  for (auto p : primes)
    if (popcount(p) == h) top.push_back(p);
  // a squarefree ideal is the intersection of its minimal primes; that
  // intersection is generated by the minimal transversals of the primes
  return MonomialIdeal::from_supports(ideal.context(), minimal_transversals(top));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  return MonomialIdeal::from_supports(ideal.context(), minimal_primes(ideal));
}

}  // namespace lyu
