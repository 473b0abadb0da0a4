#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lyu {

/// Multigraded Betti numbers beta_{i,a}; absent keys are zero.
struct BettiTable {
  std::map<std::pair<int, std::vector<int>>, long> entries;

  /// Total Betti numbers beta_0, beta_1, ... up to the projective dimension.
  std::vector<long> totals() const;
  /// Largest i with some beta_{i,a} != 0, -1 for the zero module.
  int proj_dim() const;
  bool operator==(const BettiTable&) const = default;
};

/// N(t) / (1-t)^denominator_power with N a Laurent polynomial; kept reduced
/// (N(1) != 0 unless N = 0 or the power is 0).
struct HilbertSeries {
  std::map<int, mpz_class> numerator;
  int denominator_power = 0;

  /// Divides N by (1-t) while possible.
  void reduce();
  /// Pole order at t = 1, or -1 for the zero series.
  int krull_dim() const;
  /// N(1) of the reduced form.
  mpz_class multiplicity() const;
  /// Coefficient of t^k of the power series expansion.
  mpz_class coefficient(int k) const;
  std::string to_string() const;
  bool operator==(const HilbertSeries&) const = default;
};

}  // namespace lyu
