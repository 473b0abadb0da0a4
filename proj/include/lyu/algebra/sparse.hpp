#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lyu {

/// Sparse coefficient vector: (position, nonzero coefficient), positions strictly increasing.
template <class F>
using SparseVector = std::vector<std::pair<std::uint32_t, typename F::Element>>;

/// a - c * b
template <class F>
SparseVector<F> sub_scaled(const F& field, const SparseVector<F>& a, const typename F::Element& c,
                           const SparseVector<F>& b) {
  SparseVector<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, field.neg(field.mul(c, b[j].second)));
      ++j;
    } else {
      auto v = a[i].second;
      field.sub_mul(v, c, b[j].second);
      if (!field.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
const typename F::Element* find_coef(const SparseVector<F>& v, std::uint32_t pos) {
  std::size_t lo = 0, hi = v.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (v[mid].first < pos) lo = mid + 1;
    else hi = mid;
  }
  return lo < v.size() && v[lo].first == pos ? &v[lo].second : nullptr;
}

/// Row echelon form built incrementally; used for ranks and kernel dimensions
/// of the small exact matrices arising throughout the library.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(const F& field) : field_(field) {}

  /// Reduces `v` against the basis; returns the reduced vector.
  SparseVector<F> reduce(SparseVector<F> v) const {
    std::size_t k = 0;
    while (k < v.size()) {
      auto it = pivots_.find(v[k].first);
      if (it == pivots_.end()) {
        ++k;
        continue;
      }
      const auto& row = rows_[it->second];
      auto c = field_.div(v[k].second, row.front().second);
      v = sub_scaled(field_, v, c, row);
    }
    return v;
  }

  /// Adds `v`; returns true when it was independent of the current basis.
  bool insert(SparseVector<F> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    pivots_.emplace(v.front().first, rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  const F& field_;
  std::vector<SparseVector<F>> rows_;
  std::unordered_map<std::uint32_t, std::size_t> pivots_;
};

template <class F>
std::size_t rank_of(const F& field, const std::vector<SparseVector<F>>& vectors) {
  EchelonBasis<F> basis(field);
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace lyu
