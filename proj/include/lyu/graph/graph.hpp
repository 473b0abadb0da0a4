#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lyu/ideal/ideal.hpp"

namespace lyu {

/// Simple undirected graph on vertices 1..n. Vertex i corresponds to x_i.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  /// Edges normalized to u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Cycle graph C_n.
Graph cycle(int n);

/// (x_u x_v : {u,v} an edge) in K[x_1..x_n].
MonomialIdeal edge_ideal(const Graph& g);

/// Sorted 1-based vertex list of a cover.
using VertexSet = std::vector<int>;

VertexSet to_vertices(VarSet s);
VarSet from_vertices(const VertexSet& v);

std::vector<VertexSet> minimal_vertex_covers(const Graph& g);
std::vector<VertexSet> minimum_vertex_covers(const Graph& g);

/// The two explicit families of minimum covers of C_{2s+1}:
/// S_i = {x_{2r+1} : i-1 <= r <= s} u {x_{2r} : 1 <= r <= i-1}, 1 <= i <= s+1, and
/// R_j = {x_{2r+1} : 0 <= r <= j-1} u {x_{2r} : j <= r <= s}, 1 <= j <= s.
struct OddCycleCoverFamilies {
  std::vector<VertexSet> s_family;
  std::vector<VertexSet> r_family;
};

OddCycleCoverFamilies odd_cycle_cover_families(int s);

/// Outcome of checking, for n = 2s+1, that with I1 = the intersection of the
/// S-primes and I2 = the intersection of the R-primes:
///   I1 + I2 = (P_1 + Q_s) n (Q_1 + P_{s+1})   and   I(C_n) = I1 n I2.
/// The second identity fails from s = 4 on (C_9 has minimal covers of size
/// s+2); unmixed_identity records the weaker I(C_n)^u = I1 n I2.
struct SumDecompositionReport {
  int s = 0;
  bool sum_identity = false;
  bool edge_ideal_identity = false;
  MonomialIdeal i1;
  MonomialIdeal i2;
  MonomialIdeal lhs;  // I1 + I2
  MonomialIdeal rhs;  // (P_1 + Q_s) n (Q_1 + P_{s+1})
  std::vector<std::string> failures;
  bool unmixed_identity = false;  // I1 n I2 = unmixed part of I(C_n)

  bool passed() const { return sum_identity && edge_ideal_identity; }
};

SumDecompositionReport verify_sum_decomposition(int s);

}  // namespace lyu
