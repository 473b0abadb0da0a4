#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lyu {

/// Bitmask over variable indices (bit i set <=> x_{i+1} present).
using VarSet = std::uint64_t;

constexpr std::size_t kMaxIdealVars = 64;

inline int popcount(VarSet s) { return __builtin_popcountll(s); }

/// Sorted 0-based variable indices of a bitmask.
std::vector<std::size_t> varset_indices(VarSet s);
VarSet varset_from_indices(const std::vector<std::size_t>& indices);

/// The polynomial ring K[x_1..x_n] as far as naming goes.
class VariableContext {
 public:
  /// Context with names x1..xn.
  explicit VariableContext(std::size_t n);
  VariableContext(std::size_t n, std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool operator==(const VariableContext&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Exponent vector x^a with a >= 0. The zero vector is the unit monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial from_support(std::size_t n, VarSet support);

  std::size_t nvars() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  int total_degree() const noexcept;
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  bool divides(const Monomial& other) const;
  VarSet support() const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

  /// Canonical order: total degree ascending, then lexicographic with x1
  /// largest (so x1*x2 sorts before x2*x3).
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::string to_string(const VariableContext& ctx) const;

 private:
  std::vector<int> exps_;
};

}  // namespace lyu
