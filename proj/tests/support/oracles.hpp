// Brute-force reference implementations used by the tests. Nothing here calls
// into the resolution engine, the hypergraph code or the simplicial engine;
// ideals are read only through their generator exponent vectors.
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lyu/algebra/field.hpp"
#include "lyu/ideal/ideal.hpp"
#include "lyu/resolution/betti.hpp"

namespace oracle {

using lyu::VarSet;

inline std::vector<VarSet> supports(const lyu::MonomialIdeal& I) {
  std::vector<VarSet> s;
  for (const auto& g : I.generators()) {
    VarSet m = 0;
    for (std::size_t i = 0; i < g.nvars(); ++i)
      if (g[i] > 0) m |= VarSet{1} << i;
    s.push_back(m);
  }
  return s;
}

inline bool contains_squarefree(const std::vector<VarSet>& gens, VarSet s) {
  for (auto g : gens)
    if ((g & ~s) == 0) return true;
  return false;
}

/// Every squarefree monomial, as a support, lying in the ideal.
inline std::vector<VarSet> squarefree_members(const lyu::MonomialIdeal& I) {
  const auto g = supports(I);
  std::vector<VarSet> out;
  for (VarSet s = 0; s < (VarSet{1} << I.nvars()); ++s)
    if (contains_squarefree(g, s)) out.push_back(s);
  return out;
}

inline std::vector<VarSet> faces(const lyu::MonomialIdeal& I) {
  const auto g = supports(I);
  std::vector<VarSet> out;
  for (VarSet s = 0; s < (VarSet{1} << I.nvars()); ++s)
    if (!contains_squarefree(g, s)) out.push_back(s);
  return out;
}

/// Minimal vertex covers of the generator supports by exhaustive search.
inline std::vector<VarSet> minimal_primes(const lyu::MonomialIdeal& I) {
  const auto g = supports(I);
  const std::size_t n = I.nvars();
  std::vector<VarSet> covers;
  for (VarSet c = 0; c < (VarSet{1} << n); ++c) {
    bool hits = true;
    for (auto e : g) hits = hits && (e & c) != 0;
    if (hits) covers.push_back(c);
  }
  std::vector<VarSet> minimal;
  for (auto c : covers) {
    bool is_min = true;
    for (auto d : covers) is_min = is_min && !(d != c && (d & ~c) == 0);
    if (is_min) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

/// Number of degree-k monomials outside I.
inline long hilbert_function(const lyu::MonomialIdeal& I, int k) {
  const std::size_t n = I.nvars();
  long count = 0;
  std::vector<int> e(n, 0);
  auto outside = [&] {
    for (const auto& g : I.generators()) {
      bool div = true;
      for (std::size_t i = 0; i < n; ++i) div = div && g[i] <= e[i];
      if (div) return false;
    }
    return true;
  };
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      count += outside();
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (n == 0) return k == 0;
  rec(0, k);
  return count;
}

// ---- dense linear algebra -------------------------------------------------

template <class F>
using Vec = std::vector<typename F::Element>;

/// Row echelon form kept incrementally; `pivot[r]` is the pivot column of row r.
template <class F>
struct Echelon {
  const F& f;
  std::size_t cols;
  std::vector<Vec<F>> rows;
  std::vector<std::size_t> pivot;

  Echelon(const F& field, std::size_t c) : f(field), cols(c) {}

  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto c = v[pivot[r]];
      if (f.is_zero(c)) continue;
      for (std::size_t k = 0; k < cols; ++k) f.sub_mul(v[k], c, rows[r][k]);
    }
    return v;
  }

  bool insert(Vec<F> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < cols && f.is_zero(v[p])) ++p;
    if (p == cols) return false;
    const auto inv = f.div(f.one(), v[p]);
    for (auto& x : v) x = f.mul(x, inv);
    for (auto& row : rows) {
      const auto c = row[p];
      if (f.is_zero(c)) continue;
      for (std::size_t k = 0; k < cols; ++k) f.sub_mul(row[k], c, v[k]);
    }
    rows.push_back(std::move(v));
    pivot.push_back(p);
    return true;
  }
};

template <class F>
std::size_t rank(const F& f, const std::vector<Vec<F>>& vectors, std::size_t cols) {
  Echelon<F> e(f, cols);
  for (const auto& v : vectors) e.insert(v);
  return e.rows.size();
}

/// Basis of { x : sum_c x_c * columns[c] = 0 }.
template <class F>
std::vector<Vec<F>> kernel(const F& f, const std::vector<Vec<F>>& columns, std::size_t rows) {
  const std::size_t m = columns.size();
  // augment each column with a unit vector tracking the combination
  Echelon<F> e(f, rows + m);
  std::vector<Vec<F>> out;
  for (std::size_t c = 0; c < m; ++c) {
    Vec<F> v(rows + m, f.zero());
    for (std::size_t r = 0; r < rows; ++r) v[r] = columns[c][r];
    v[rows + c] = f.one();
    e.insert(v);
  }
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    if (e.pivot[r] >= rows) out.emplace_back(e.rows[r].begin() + static_cast<long>(rows), e.rows[r].end());
  return out;
}

// ---- simplicial homology --------------------------------------------------

/// Reduced homology dimensions of the complex with the given faces; entry k is
/// degree k-1 (faces of size k).
template <class F>
std::vector<std::size_t> reduced_homology(const F& f, const std::vector<VarSet>& face_list, std::size_t n) {
  std::vector<std::vector<VarSet>> by_size(n + 2);
  for (auto s : face_list) by_size[static_cast<std::size_t>(lyu::popcount(s))].push_back(s);
  std::vector<std::size_t> ranks(n + 3, 0);  // ranks[k]: boundary from size k to size k-1
  for (std::size_t k = 1; k <= n; ++k) {
    if (by_size[k].empty() || by_size[k - 1].empty()) continue;
    std::map<VarSet, std::size_t> idx;
    for (std::size_t t = 0; t < by_size[k - 1].size(); ++t) idx[by_size[k - 1][t]] = t;
    std::vector<Vec<F>> cols;
    for (auto s : by_size[k]) {
      Vec<F> v(by_size[k - 1].size(), f.zero());
      int sign = 1;
      for (std::size_t u = 0; u < n; ++u)
        if (s >> u & 1) {
          v[idx.at(s & ~(VarSet{1} << u))] = f.from_int(sign);
          sign = -sign;
        }
      cols.push_back(v);
    }
    ranks[k] = rank(f, cols, by_size[k - 1].size());
  }
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k <= n; ++k) h.push_back(by_size[k].size() - ranks[k] - ranks[k + 1]);
  return h;
}

/// beta_{i,W}(R/I) = dim H~_{|W|-i-1}(Delta_W), over all W.
template <class F>
lyu::BettiTable hochster_betti(const F& f, const lyu::MonomialIdeal& I) {
  const std::size_t n = I.nvars();
  const auto all = faces(I);
  lyu::BettiTable b;
  for (VarSet w = 0; w < (VarSet{1} << n); ++w) {
    std::vector<VarSet> restricted;
    for (auto s : all)
      if ((s & ~w) == 0) restricted.push_back(s);
    const auto h = reduced_homology(f, restricted, n);
    const int size = lyu::popcount(w);
    std::vector<int> deg(n);
    for (std::size_t u = 0; u < n; ++u) deg[u] = static_cast<int>(w >> u & 1);
    for (int i = 0; i <= size; ++i) {
      const auto k = static_cast<std::size_t>(size - i);  // degree size-i-1 sits at entry size-i
      if (k < h.size() && h[k] > 0) b.entries[{i, deg}] = static_cast<long>(h[k]);
    }
  }
  return b;
}

// ---- Cech complexes of the Stanley-Reisner ring ---------------------------

inline int koszul_sign(VarSet g, std::size_t v) {
  return lyu::popcount(g & ((VarSet{1} << v) - 1)) % 2 ? -1 : 1;
}

/// H^j(K_F) where K_F is the degree -F strand of the Cech complex of R/I:
/// basis e_G for faces G containing F, |G| = cohomological degree.
/// Stores cocycle representatives of a basis of cohomology, in coordinates
/// over the j-faces containing F.
template <class F>
struct CechStrand {
  std::vector<VarSet> cells;          // j-faces containing F
  std::vector<Vec<F>> representatives;
};

template <class F>
class CechCohomology {
 public:
  CechCohomology(const F& f, const lyu::MonomialIdeal& I) : f_(f), n_(I.nvars()), faces_(faces(I)) {
    is_face_.assign(std::size_t{1} << n_, false);
    for (auto s : faces_) is_face_[s] = true;
  }

  bool is_face(VarSet s) const { return is_face_[s]; }

  CechStrand<F> strand(VarSet F_, std::size_t j) const {
    CechStrand<F> out;
    const auto cells_j = cells(F_, j);
    out.cells = cells_j;
    if (cells_j.empty()) return out;
    const auto cells_up = cells(F_, j + 1);
    const auto cells_down = j == 0 ? std::vector<VarSet>{} : cells(F_, j - 1);
    // cocycles: kernel of delta on C^j_F
    std::vector<Vec<F>> delta_cols;
    for (auto g : cells_j) delta_cols.push_back(delta(g, cells_up));
    auto z = cells_up.empty() ? identity(cells_j.size()) : kernel(f_, delta_cols, cells_up.size());
    Echelon<F> b(f_, cells_j.size());
    for (auto g : cells_down) b.insert(delta(g, cells_j));
    for (auto& v : z)
      if (b.insert(v)) out.representatives.push_back(v);
    return out;
  }

  /// Coordinates of the class of a cocycle of K_{F} (given over `from.cells`)
  /// in the cohomology basis of `to` = strand of a subset F' of F.
  Vec<F> coordinates(const CechStrand<F>& from, const Vec<F>& z, const CechStrand<F>& to, VarSet F_sub,
                     std::size_t j) const {
    Vec<F> v(to.cells.size(), f_.zero());
    for (std::size_t a = 0; a < from.cells.size(); ++a) {
      const auto it = std::find(to.cells.begin(), to.cells.end(), from.cells[a]);
      assert(it != to.cells.end());
      v[static_cast<std::size_t>(it - to.cells.begin())] = z[a];
    }
    // solve v = sum c_k rep_k + boundary
    const std::size_t m = to.representatives.size();
    std::vector<Vec<F>> cols = to.representatives;
    const auto down = j == 0 ? std::vector<VarSet>{} : cells(F_sub, j - 1);
    for (auto g : down) cols.push_back(delta(g, to.cells));
    Vec<F> neg = v;
    for (auto& x : neg) x = f_.neg(x);
    cols.push_back(neg);
    const auto ker = kernel(f_, cols, to.cells.size());
    for (const auto& k : ker)
      if (!f_.is_zero(k.back())) {
        const auto s = f_.div(f_.one(), k.back());
        Vec<F> c(m);
        for (std::size_t i = 0; i < m; ++i) c[i] = f_.mul(k[i], s);
        return c;
      }
    assert(false && "cocycle class not expressible");
    return {};
  }

 private:
  std::vector<VarSet> cells(VarSet F_, std::size_t size) const {
    std::vector<VarSet> out;
    for (auto s : faces_)
      if ((F_ & ~s) == 0 && static_cast<std::size_t>(lyu::popcount(s)) == size) out.push_back(s);
    return out;
  }

  Vec<F> delta(VarSet g, const std::vector<VarSet>& target) const {
    Vec<F> v(target.size(), f_.zero());
    for (std::size_t u = 0; u < n_; ++u) {
      if (g >> u & 1) continue;
      const VarSet h = g | VarSet{1} << u;
      if (!is_face_[h]) continue;
      const auto it = std::find(target.begin(), target.end(), h);
      v[static_cast<std::size_t>(it - target.begin())] = f_.from_int(koszul_sign(g, u));
    }
    return v;
  }

  std::vector<Vec<F>> identity(std::size_t m) const {
    std::vector<Vec<F>> out(m, Vec<F>(m, f_.zero()));
    for (std::size_t i = 0; i < m; ++i) out[i][i] = f_.one();
    return out;
  }

  const F& f_;
  std::size_t n_;
  std::vector<VarSet> faces_;
  std::vector<bool> is_face_;
};

/// dim H^i_m(R/I)_{-F} for all i and squarefree F, via the Cech complex.
template <class F>
std::map<std::pair<int, VarSet>, std::size_t> local_cohomology(const F& f, const lyu::MonomialIdeal& I) {
  CechCohomology<F> c(f, I);
  std::map<std::pair<int, VarSet>, std::size_t> out;
  for (VarSet s = 0; s < (VarSet{1} << I.nvars()); ++s) {
    if (!c.is_face(s)) continue;
    for (std::size_t i = 0; i <= I.nvars(); ++i) {
      const auto k = c.strand(s, i).representatives.size();
      if (k) out[{static_cast<int>(i), s}] = k;
    }
  }
  return out;
}

template <class F>
int depth(const F& f, const lyu::MonomialIdeal& I) {
  int best = static_cast<int>(I.nvars()) + 1;
  for (const auto& [key, v] : local_cohomology(f, I)) best = std::min(best, key.first);
  return best;
}

/// lambda_{i,j} for 0 <= i, j <= n. With N = Ext^{n-j}(R/I, omega), a squarefree
/// module, lambda_{i,j} = dim H^i_m(N)_0, the cohomology of the complex
/// sum_{|F|=i} N_F. By local duality N_F is dual to H^j_m(R/I)_{-F}, so the
/// computation runs on the dual complex built from the Cech strands.
template <class F>
std::vector<std::vector<long>> lyubeznik(const F& f, const lyu::MonomialIdeal& I) {
  const std::size_t n = I.nvars();
  CechCohomology<F> c(f, I);
  std::vector<std::vector<long>> table(n + 1, std::vector<long>(n + 1, 0));
  for (std::size_t j = 0; j <= n; ++j) {
    std::map<VarSet, CechStrand<F>> strands;
    std::map<VarSet, std::size_t> offset;
    std::vector<std::size_t> dim(n + 1, 0);
    std::vector<std::vector<VarSet>> by_size(n + 1);
    for (VarSet s = 0; s < (VarSet{1} << n); ++s) {
      if (!c.is_face(s)) continue;
      auto st = c.strand(s, j);
      if (st.representatives.empty()) continue;
      const auto k = static_cast<std::size_t>(lyu::popcount(s));
      offset[s] = dim[k];
      dim[k] += st.representatives.size();
      by_size[k].push_back(s);
      strands.emplace(s, std::move(st));
    }
    // boundary W_i -> W_{i-1}, columns indexed by W_i basis
    std::vector<std::vector<Vec<F>>> d(n + 2);
    for (std::size_t i = 1; i <= n; ++i) {
      for (auto s : by_size[i]) {
        const auto& st = strands.at(s);
        for (const auto& rep : st.representatives) {
          Vec<F> col(dim[i - 1], f.zero());
          for (std::size_t u = 0; u < n; ++u) {
            if (!(s >> u & 1)) continue;
            const VarSet t = s & ~(VarSet{1} << u);
            const auto it = strands.find(t);
            if (it == strands.end()) continue;
            const auto coords = c.coordinates(st, rep, it->second, t, j);
            const auto sign = f.from_int(koszul_sign(t, u));
            for (std::size_t k = 0; k < coords.size(); ++k)
              col[offset.at(t) + k] = f.add(col[offset.at(t) + k], f.mul(sign, coords[k]));
          }
          d[i].push_back(std::move(col));
        }
      }
    }
    std::vector<std::size_t> rk(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i)
      if (!d[i].empty() && dim[i - 1] > 0) rk[i] = rank(f, d[i], dim[i - 1]);
    for (std::size_t i = 0; i <= n; ++i)
      table[i][j] = static_cast<long>(dim[i] - rk[i] - rk[i + 1]);
  }
  return table;
}

// ---- corpora ---------------------------------------------------------------

/// Every nonempty antichain of nonempty subsets of {0..n-1}, as ideals.
inline std::vector<lyu::MonomialIdeal> all_squarefree_ideals(std::size_t n) {
  const lyu::VariableContext ctx(n);
  const std::size_t m = (std::size_t{1} << n) - 1;  // nonempty subsets: 1..2^n-1
  std::vector<lyu::MonomialIdeal> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<VarSet> sets;
    for (std::size_t k = 0; k < m; ++k)
      if (pick >> k & 1) sets.push_back(static_cast<VarSet>(k + 1));
    bool antichain = true;
    for (auto a : sets)
      for (auto b : sets) antichain = antichain && (a == b || (a & ~b) != 0);
    if (antichain) out.push_back(lyu::MonomialIdeal::from_supports(ctx, sets));
  }
  return out;
}

inline lyu::MonomialIdeal random_squarefree_ideal(std::mt19937& rng, std::size_t n, int max_gens) {
  const lyu::VariableContext ctx(n);
  std::uniform_int_distribution<VarSet> pick(1, (VarSet{1} << n) - 1);
  std::uniform_int_distribution<int> count(1, max_gens);
  std::vector<VarSet> sets;
  for (int k = count(rng); k > 0; --k) sets.push_back(pick(rng));
  return lyu::MonomialIdeal::from_supports(ctx, sets);
}

}  // namespace oracle
