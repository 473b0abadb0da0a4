#pragma once

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>
#include <vector>

#include "lyu/resolution/graded.hpp"

namespace lyu {

/// Hard caps; exceeding one raises ResourceError instead of truncating.
struct EngineLimits {
  std::size_t max_basis_size = 400000;
  std::size_t max_pairs = 20000000;
  std::size_t max_rank = 200000;
};

/// Groebner basis of a homogeneous submodule of a free module, for the
/// position-over-term order with positions ranked by index (lower index =
/// larger term). With the fine grading a homogeneous vector has one term per
/// position, so the monomial order inside a position never has to break a
/// tie and is not materialized.
///
/// Vectors may carry extra "tracking" positions at indices >= ambient().rank();
/// they ride along through every reduction but never become leading terms.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(const F& field, FreeModule ambient, EngineLimits limits = {})
      : field_(field), ambient_(std::move(ambient)), limits_(limits), by_lead_(ambient_.rank()) {}

  const FreeModule& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<HomVec<F>>& elements() const noexcept { return elems_; }

  bool ambient_part_zero(const HomVec<F>& v) const {
    return v.coefs.empty() || v.coefs.front().first >= ambient_.rank();
  }

  /// Fully reduces every ambient position of `v`.
  HomVec<F> reduce(HomVec<F> v) const {
    std::size_t k = 0;
    while (k < v.coefs.size() && v.coefs[k].first < ambient_.rank()) {
      const auto pos = v.coefs[k].first;
      const HomVec<F>* reducer = nullptr;
      for (auto idx : by_lead_[pos])
        if (elems_[idx].degree.leq(v.degree)) {
          reducer = &elems_[idx];
          break;
        }
      if (!reducer) {
        ++k;
        continue;
      }
      // reducer has lead coefficient 1
      auto c = v.coefs[k].second;
      v = sub_scaled(field_, v, c, *reducer);
    }
    return v;
  }

  /// Adds a reduced vector with nonzero ambient part and schedules its S-pairs.
  void add_element(HomVec<F> v) {
    if (ambient_part_zero(v)) throw Error("groebner: cannot add an element with zero ambient part");
    if (elems_.size() >= limits_.max_basis_size) throw ResourceError("Groebner basis size cap exceeded");
    auto lc = v.coefs.front().second;
    if (!field_.is_zero(field_.sub(lc, field_.one()))) {
      auto inv = field_.div(field_.one(), lc);
      for (auto& t : v.coefs) t.second = field_.mul(t.second, inv);
    }
    const auto j = static_cast<std::uint32_t>(elems_.size());
    const auto pos = v.coefs.front().first;
    schedule_pairs(j, pos, v.degree);
    by_lead_[pos].push_back(j);
    elems_.push_back(std::move(v));
  }

  /// Total degree of the next pending S-pair, INT_MAX when none.
  int next_pair_degree() const { return pairs_.empty() ? INT_MAX : pairs_.top().total; }

  /// Reduces all pending S-pairs of total degree <= bound. Pairs with nonzero
  /// remainder extend the basis; zero remainders are kept in zero_reductions().
  void process_pairs(int bound) {
    while (!pairs_.empty() && pairs_.top().total <= bound) {
      Pair p = pairs_.top();
      pairs_.pop();
      HomVec<F> s{p.lcm, sub_scaled(field_, elems_[p.i].coefs, field_.one(), elems_[p.j].coefs)};
      s = reduce(std::move(s));
      if (ambient_part_zero(s)) {
        if (!s.is_zero()) zero_reductions_.push_back(std::move(s));
      } else {
        add_element(std::move(s));
      }
    }
  }

  void complete() { process_pairs(INT_MAX); }

  /// Remainders with vanishing ambient part; their tracking parts are relations.
  std::vector<HomVec<F>>& zero_reductions() noexcept { return zero_reductions_; }

 private:
  struct Pair {
    int total;
    std::uint32_t j;
    std::uint32_t i;
    Degree lcm;
    bool operator>(const Pair& o) const {
      if (total != o.total) return total > o.total;
      if (j != o.j) return j > o.j;
      return i > o.i;
    }
  };

  // For the new element j, keep pair (i, j) only when lcm(m_i, m_j) / m_j is a
  // minimal generator of the colon ideal (m_1..m_{j-1}) : m_j (ties keep the
  // smallest i). These generate the syzygies of the lead terms.
  void schedule_pairs(std::uint32_t j, std::uint32_t pos, const Degree& deg) {
    const auto& same = by_lead_[pos];
    std::vector<std::pair<Degree, std::uint32_t>> quot;
    quot.reserve(same.size());
    for (auto i : same) quot.emplace_back(join(elems_[i].degree, deg) - deg, i);
    for (std::size_t a = 0; a < quot.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < quot.size() && minimal; ++b) {
        if (a == b || !quot[b].first.leq(quot[a].first)) continue;
        if (!(quot[b].first == quot[a].first) || b < a) minimal = false;
      }
      if (!minimal) continue;
      if (++pair_count_ > limits_.max_pairs) throw ResourceError("S-pair cap exceeded");
      Degree l = quot[a].first + deg;
      pairs_.push(Pair{l.total(), j, quot[a].second, l});
    }
  }

  const F& field_;
  FreeModule ambient_;
  EngineLimits limits_;
  std::vector<HomVec<F>> elems_;
  std::vector<std::vector<std::uint32_t>> by_lead_;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs_;
  std::vector<HomVec<F>> zero_reductions_;
  std::size_t pair_count_ = 0;
};

/// Groebner basis of the submodule spanned by `gens` inside `ambient`.
template <class F>
GroebnerBasis<F> groebner_module(const F& field, const FreeModule& ambient, const std::vector<HomVec<F>>& gens,
                                 EngineLimits limits = {}) {
  GroebnerBasis<F> gb(field, ambient, limits);
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].degree.total() < gens[b].degree.total(); });
  for (auto idx : order) {
    gb.process_pairs(gens[idx].degree.total());
    auto r = gb.reduce(gens[idx]);
    if (!r.is_zero()) gb.add_element(std::move(r));
  }
  gb.complete();
  return gb;
}

/// Unique remainder of `v` modulo the submodule with basis `gb`.
template <class F>
HomVec<F> normal_form(const GroebnerBasis<F>& gb, const HomVec<F>& v) {
  return gb.reduce(v);
}

/// Columns generating ker(m), obtained from the reductions to zero of the
/// S-pairs of a Groebner basis of the column span (Schreyer). Not minimal.
template <class F>
std::vector<HomVec<F>> syzygy_generators(const F& field, const GradedMatrix<F>& m, EngineLimits limits = {}) {
  const auto rank = static_cast<std::uint32_t>(m.rows());
  GroebnerBasis<F> gb(field, m.target(), limits);
  std::vector<HomVec<F>> syz;
  auto tracking_part = [&](const HomVec<F>& v) {
    HomVec<F> t{v.degree, {}};
    for (const auto& [pos, c] : v.coefs) t.coefs.emplace_back(pos - rank, c);
    return t;
  };

  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.column(a).degree.total() < m.column(b).degree.total();
  });
  for (auto c : order) {
    gb.process_pairs(m.column(c).degree.total());
    HomVec<F> v = m.column(c);
    v.coefs.emplace_back(rank + static_cast<std::uint32_t>(c), field.one());
    v = gb.reduce(std::move(v));
    if (gb.ambient_part_zero(v)) syz.push_back(tracking_part(v));
    else gb.add_element(std::move(v));
  }
  gb.complete();
  for (const auto& z : gb.zero_reductions()) syz.push_back(tracking_part(z));
  return syz;
}

/// A minimal generating subset of the submodule spanned by `vecs`, in order of
/// increasing total degree.
template <class F>
std::vector<HomVec<F>> minimal_generators(const F& field, const FreeModule& ambient, std::vector<HomVec<F>> vecs,
                                          EngineLimits limits = {}) {
  std::erase_if(vecs, [](const HomVec<F>& v) { return v.is_zero(); });
  std::stable_sort(vecs.begin(), vecs.end(),
                   [](const HomVec<F>& a, const HomVec<F>& b) { return a.degree.total() < b.degree.total(); });
  GroebnerBasis<F> gb(field, ambient, limits);
  std::vector<HomVec<F>> kept;
  for (auto& v : vecs) {
    gb.process_pairs(v.degree.total());
    auto r = gb.reduce(v);
    if (r.is_zero()) continue;
    gb.add_element(std::move(r));
    kept.push_back(std::move(v));
  }
  return kept;
}

/// Generators of the kernel of `m` (not necessarily minimal).
template <class F>
GradedMatrix<F> syzygy_matrix(const F& field, const GradedMatrix<F>& m, EngineLimits limits = {}) {
  return GradedMatrix<F>::from_columns(m.source(), syzygy_generators(field, m, limits));
}

/// Minimal generators of the kernel of `m`.
template <class F>
GradedMatrix<F> kernel(const F& field, const GradedMatrix<F>& m, EngineLimits limits = {}) {
  return GradedMatrix<F>::from_columns(m.source(),
                                       minimal_generators(field, m.source(), syzygy_generators(field, m, limits), limits));
}

}  // namespace lyu
