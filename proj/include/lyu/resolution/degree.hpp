#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lyu/errors.hpp"

namespace lyu {

constexpr std::size_t kMaxEngineVars = 16;

/// A Z^n multidegree (n <= 16); unused trailing slots stay zero.
struct Degree {
  std::array<std::int16_t, kMaxEngineVars> e{};

  static Degree from(const std::vector<int>& v) {
    if (v.size() > kMaxEngineVars) throw ResourceError("resolution engine supports at most 16 variables");
    Degree d;
    for (std::size_t i = 0; i < v.size(); ++i) d.e[i] = static_cast<std::int16_t>(v[i]);
    return d;
  }
  static Degree unit(std::size_t i) {
    Degree d;
    d.e[i] = 1;
    return d;
  }
  static Degree ones(std::size_t n) {
    Degree d;
    for (std::size_t i = 0; i < n; ++i) d.e[i] = 1;
    return d;
  }

  std::vector<int> to_vector(std::size_t n) const { return {e.begin(), e.begin() + static_cast<long>(n)}; }

  int total() const {
    int t = 0;
    for (auto x : e) t += x;
    return t;
  }
  bool nonnegative() const {
    return std::all_of(e.begin(), e.end(), [](std::int16_t x) { return x >= 0; });
  }
  /// Componentwise <=, i.e. x^a divides x^b when both are monomials.
  bool leq(const Degree& o) const {
    for (std::size_t i = 0; i < kMaxEngineVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  friend Degree operator+(Degree a, const Degree& b) {
    for (std::size_t i = 0; i < kMaxEngineVars; ++i) a.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
    return a;
  }
  friend Degree operator-(Degree a, const Degree& b) {
    for (std::size_t i = 0; i < kMaxEngineVars; ++i) a.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
    return a;
  }
  friend Degree operator-(Degree a) {
    for (auto& x : a.e) x = static_cast<std::int16_t>(-x);
    return a;
  }
  friend Degree join(Degree a, const Degree& b) {
    for (std::size_t i = 0; i < kMaxEngineVars; ++i) a.e[i] = std::max(a.e[i], b.e[i]);
    return a;
  }

  bool operator==(const Degree&) const = default;
  auto operator<=>(const Degree&) const = default;

  std::string to_string(std::size_t n) const {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ",";
      s += std::to_string(e[i]);
    }
    return s + ")";
  }
};

struct DegreeHash {
  std::size_t operator()(const Degree& d) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : d.e) h = (h ^ static_cast<std::uint16_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace lyu
