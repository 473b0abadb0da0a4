#include "lyu/graph/graph.hpp"

#include <algorithm>

#include "lyu/errors.hpp"

namespace lyu {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (n_ < 1) throw DomainError("graph needs at least one vertex");
  if (static_cast<std::size_t>(n_) > kMaxIdealVars) throw DomainError("graph has more than 64 vertices");
  for (auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > n_ || v > n_)
      throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw DomainError("duplicate edge");
  edges_ = std::move(edges);
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Graph::Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return Graph(n, std::move(edges));
}

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edges().empty()) throw DomainError("edge ideal of an edgeless graph");
  VariableContext ctx(static_cast<std::size_t>(g.vertex_count()));
  std::vector<VarSet> supports;
  for (auto [u, v] : g.edges()) supports.push_back((VarSet{1} << (u - 1)) | (VarSet{1} << (v - 1)));
  return MonomialIdeal::from_supports(ctx, supports);
}

VertexSet to_vertices(VarSet s) {
  VertexSet out;
  for (auto i : varset_indices(s)) out.push_back(static_cast<int>(i) + 1);
  return out;
}

VarSet from_vertices(const VertexSet& v) {
  VarSet s = 0;
  for (int x : v) s |= VarSet{1} << (x - 1);
  return s;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  std::vector<VarSet> supports;
  for (auto [u, v] : g.edges()) supports.push_back((VarSet{1} << (u - 1)) | (VarSet{1} << (v - 1)));
  std::vector<VertexSet> out;
  for (auto t : minimal_transversals(supports)) out.push_back(to_vertices(t));
  return out;
}

std::vector<VertexSet> minimum_vertex_covers(const Graph& g) {
  auto all = minimal_vertex_covers(g);
  std::size_t best = g.vertex_count() + 1;
  for (const auto& c : all) best = std::min(best, c.size());
  std::vector<VertexSet> out;
  for (auto& c : all)
    if (c.size() == best) out.push_back(std::move(c));
  return out;
}

OddCycleCoverFamilies odd_cycle_cover_families(int s) {
  if (s < 1) throw DomainError("cover families need s >= 1");
  OddCycleCoverFamilies f;
  for (int i = 1; i <= s + 1; ++i) {
    VertexSet c;
    for (int r = i - 1; r <= s; ++r) c.push_back(2 * r + 1);
    for (int r = 1; r <= i - 1; ++r) c.push_back(2 * r);
    std::sort(c.begin(), c.end());
    f.s_family.push_back(std::move(c));
  }
  for (int j = 1; j <= s; ++j) {
    VertexSet c;
    for (int r = 0; r <= j - 1; ++r) c.push_back(2 * r + 1);
    for (int r = j; r <= s; ++r) c.push_back(2 * r);
    std::sort(c.begin(), c.end());
    f.r_family.push_back(std::move(c));
  }
  return f;
}

SumDecompositionReport verify_sum_decomposition(int s) {
  const int n = 2 * s + 1;
  const VariableContext ctx(static_cast<std::size_t>(n));
  const auto fam = odd_cycle_cover_families(s);

  std::vector<MonomialIdeal> p, q;
  for (const auto& c : fam.s_family) p.push_back(MonomialIdeal::prime(ctx, from_vertices(c)));
  for (const auto& c : fam.r_family) q.push_back(MonomialIdeal::prime(ctx, from_vertices(c)));

  SumDecompositionReport rep{s, false, false, intersect_all(p), intersect_all(q),
                             MonomialIdeal(ctx), MonomialIdeal(ctx), {}};
  rep.lhs = ideal_sum(rep.i1, rep.i2);
  rep.rhs = ideal_intersect(ideal_sum(p.front(), q.back()), ideal_sum(q.front(), p.back()));
  rep.sum_identity = rep.lhs == rep.rhs;
  if (!rep.sum_identity) rep.failures.push_back("I1+I2 = " + rep.lhs.to_string() + " but rhs = " + rep.rhs.to_string());

  const auto cn = edge_ideal(cycle(n));
  const auto meet = ideal_intersect(rep.i1, rep.i2);
  rep.edge_ideal_identity = meet == cn;
  if (!rep.edge_ideal_identity) {
    std::string extra;
    for (const auto& g : meet.generators())
      if (!cn.contains(g)) {
        extra = "; " + g.to_string(ctx) + " lies in I1 n I2 but not in I(C_" + std::to_string(n) + ")";
        break;
      }
    rep.failures.push_back("I1 n I2 = " + meet.to_string() + " differs from I(C_" + std::to_string(n) + ")" + extra);
  }
  rep.unmixed_identity = meet == unmixed_part(cn);
  if (!rep.unmixed_identity) rep.failures.push_back("I1 n I2 differs from the unmixed part of I(C_" + std::to_string(n) + ")");
  return rep;
}

}  // namespace lyu
