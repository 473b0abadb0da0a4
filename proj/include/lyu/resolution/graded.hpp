#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lyu/algebra/sparse.hpp"
#include "lyu/errors.hpp"
#include "lyu/resolution/degree.hpp"

namespace lyu {

/// Free module  sum_i R(-degrees[i])  over K[x_1..x_nvars]; generator i sits in degree degrees[i].
struct FreeModule {
  std::size_t nvars = 0;
  std::vector<Degree> degrees;

  std::size_t rank() const noexcept { return degrees.size(); }
  FreeModule dual() const {
    FreeModule d{nvars, degrees};
    for (auto& g : d.degrees) g = -g;
    return d;
  }
  bool operator==(const FreeModule&) const = default;
};

/// Multigraded homogeneous element of a free module. Because the grading is
/// fine, the entry at position r is  coef * x^(degree - deg(e_r)) : a single term,
/// so the element is a degree plus a sparse coefficient vector.
template <class F>
struct HomVec {
  Degree degree;
  SparseVector<F> coefs;

  bool is_zero() const noexcept { return coefs.empty(); }
  bool operator==(const HomVec&) const = default;
};

/// y - c * x, where x is first shifted up to y's degree (x.degree <= y.degree).
template <class F>
HomVec<F> sub_scaled(const F& field, const HomVec<F>& y, const typename F::Element& c, const HomVec<F>& x) {
  return {y.degree, sub_scaled(field, y.coefs, c, x.coefs)};
}

/// Homogeneous map between free modules; column c is the image of source generator c.
template <class F>
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(FreeModule source, FreeModule target, std::vector<HomVec<F>> columns)
      : source_(std::move(source)), target_(std::move(target)), cols_(std::move(columns)) {
    if (source_.nvars != target_.nvars) throw DomainError("graded matrix: mismatched variable counts");
    if (cols_.size() != source_.rank()) throw DomainError("graded matrix: column count differs from source rank");
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (!(cols_[c].degree == source_.degrees[c]))
        throw DomainError("graded matrix: column " + std::to_string(c) + " is not homogeneous of its source degree");
      for (const auto& [r, coef] : cols_[c].coefs) {
        if (r >= target_.rank()) throw DomainError("graded matrix: row index out of range");
        if (!(target_.degrees[r].leq(cols_[c].degree)))
          throw DomainError("graded matrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
                            ") would need a negative exponent");
      }
    }
  }

  /// Matrix whose columns are `columns`, with source degrees read off the columns.
  static GradedMatrix from_columns(FreeModule target, std::vector<HomVec<F>> columns) {
    FreeModule source{target.nvars, {}};
    for (const auto& c : columns) source.degrees.push_back(c.degree);
    return GradedMatrix(std::move(source), std::move(target), std::move(columns));
  }

  const FreeModule& source() const noexcept { return source_; }
  const FreeModule& target() const noexcept { return target_; }
  const std::vector<HomVec<F>>& columns() const noexcept { return cols_; }
  const HomVec<F>& column(std::size_t c) const { return cols_.at(c); }
  std::size_t rows() const noexcept { return target_.rank(); }
  std::size_t cols() const noexcept { return cols_.size(); }
  std::size_t nvars() const noexcept { return source_.nvars; }

  /// Coefficient of entry (r, c); its monomial is x^(deg source c - deg target r).
  std::optional<typename F::Element> coefficient(std::size_t r, std::size_t c) const {
    const auto* v = find_coef<F>(cols_.at(c).coefs, static_cast<std::uint32_t>(r));
    if (!v) return std::nullopt;
    return *v;
  }

  /// True when some nonzero entry is a scalar (monomial 1).
  bool has_unit_entry() const {
    for (const auto& col : cols_)
      for (const auto& [r, coef] : col.coefs)
        if (target_.degrees[r] == col.degree) return true;
    return false;
  }

  /// Hom(-, R) of this map: target* -> source*, given by the transpose.
  GradedMatrix dual() const {
    FreeModule src = target_.dual(), tgt = source_.dual();
    std::vector<HomVec<F>> cols(src.rank());
    for (std::size_t r = 0; r < cols.size(); ++r) cols[r].degree = src.degrees[r];
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (const auto& [r, coef] : cols_[c].coefs) cols[r].coefs.emplace_back(static_cast<std::uint32_t>(c), coef);
    return GradedMatrix(std::move(src), std::move(tgt), std::move(cols));
  }

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<HomVec<F>> cols_;
};

/// Image of a source element under `m`.
template <class F>
HomVec<F> apply(const F& field, const GradedMatrix<F>& m, const HomVec<F>& v) {
  HomVec<F> out{v.degree, {}};
  for (const auto& [c, coef] : v.coefs) out = sub_scaled(field, out, field.neg(coef), m.column(c));
  return out;
}

/// a o b
template <class F>
GradedMatrix<F> compose(const F& field, const GradedMatrix<F>& a, const GradedMatrix<F>& b) {
  if (!(a.source() == b.target())) throw DomainError("compose: incompatible free modules");
  std::vector<HomVec<F>> cols;
  cols.reserve(b.cols());
  for (const auto& col : b.columns()) cols.push_back(apply(field, a, col));
  return GradedMatrix<F>(b.source(), a.target(), std::move(cols));
}

template <class F>
bool is_zero_map(const GradedMatrix<F>& m) {
  for (const auto& c : m.columns())
    if (!c.is_zero()) return false;
  return true;
}

/// Chain complex  F_0 <- F_1 <- ... <- F_p  of free modules.
template <class F>
class FreeComplex {
 public:
  FreeComplex() = default;
  /// differentials[k-1] is d_k : F_k -> F_{k-1}.
  FreeComplex(std::vector<FreeModule> modules, std::vector<GradedMatrix<F>> differentials)
      : modules_(std::move(modules)), diffs_(std::move(differentials)) {
    if (modules_.empty()) throw DomainError("free complex needs F_0");
    if (diffs_.size() + 1 != modules_.size()) throw DomainError("free complex: need one differential per F_k, k >= 1");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
      if (!(diffs_[k].source() == modules_[k + 1]) || !(diffs_[k].target() == modules_[k]))
        throw DomainError("free complex: differential d_" + std::to_string(k + 1) + " has wrong shape");
  }

  std::size_t nvars() const { return modules_.front().nvars; }
  /// Index of the last module (trailing zero modules included).
  std::size_t top() const noexcept { return modules_.size() - 1; }
  /// Largest k with F_k != 0, or -1 for the zero complex.
  int length() const {
    for (int k = static_cast<int>(modules_.size()) - 1; k >= 0; --k)
      if (modules_[static_cast<std::size_t>(k)].rank() > 0) return k;
    return -1;
  }
  const FreeModule& module(std::size_t k) const { return modules_.at(k); }
  const std::vector<FreeModule>& modules() const noexcept { return modules_; }
  /// d_k : F_k -> F_{k-1}, 1 <= k <= top().
  const GradedMatrix<F>& d(std::size_t k) const { return diffs_.at(k - 1); }
  const std::vector<GradedMatrix<F>>& differentials() const noexcept { return diffs_; }

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& m : modules_) r.push_back(m.rank());
    return r;
  }

  /// True when no differential has a scalar entry.
  bool is_minimal() const {
    for (const auto& d : diffs_)
      if (d.has_unit_entry()) return false;
    return true;
  }

 private:
  std::vector<FreeModule> modules_;
  std::vector<GradedMatrix<F>> diffs_;
};

/// Throws unless d_{k-1} o d_k = 0 for every k.
template <class F>
void verify_d_squared(const F& field, const FreeComplex<F>& c) {
  for (std::size_t k = 2; k <= c.top(); ++k)
    if (!is_zero_map(compose(field, c.d(k - 1), c.d(k))))
      throw Error("complex check failed: d_" + std::to_string(k - 1) + " o d_" + std::to_string(k) + " != 0");
}

}  // namespace lyu
