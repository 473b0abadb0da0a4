#include "lyu/resolution/betti.hpp"

#include <algorithm>

namespace lyu {

std::vector<long> BettiTable::totals() const {
  std::vector<long> t(static_cast<std::size_t>(proj_dim() + 1), 0);
  for (const auto& [key, v] : entries) t[static_cast<std::size_t>(key.first)] += v;
  return t;
}

int BettiTable::proj_dim() const {
  int p = -1;
  for (const auto& [key, v] : entries)
    if (v != 0) p = std::max(p, key.first);
  return p;
}

void HilbertSeries::reduce() {
  std::erase_if(numerator, [](const auto& kv) { return sgn(kv.second) == 0; });
  while (denominator_power > 0 && !numerator.empty()) {
    mpz_class at_one = 0;
    for (const auto& [k, c] : numerator) at_one += c;
    if (sgn(at_one) != 0) break;
    // q(1-t) = N  <=>  q_k = sum_{m <= k} N_m
    std::map<int, mpz_class> q;
    mpz_class run = 0;
    const int lo = numerator.begin()->first, hi = numerator.rbegin()->first;
    for (int k = lo; k < hi; ++k) {
      if (auto it = numerator.find(k); it != numerator.end()) run += it->second;
      if (sgn(run) != 0) q[k] = run;
    }
    numerator = std::move(q);
    --denominator_power;
  }
  if (numerator.empty()) denominator_power = 0;
}

int HilbertSeries::krull_dim() const {
  if (numerator.empty()) return -1;
  HilbertSeries r = *this;
  r.reduce();
  return r.denominator_power;
}

mpz_class HilbertSeries::multiplicity() const {
  HilbertSeries r = *this;
  r.reduce();
  mpz_class s = 0;
  for (const auto& [k, c] : r.numerator) s += c;
  return s;
}

mpz_class HilbertSeries::coefficient(int k) const {
  // [t^m] 1/(1-t)^p = binom(m + p - 1, p - 1)
  mpz_class total = 0;
  for (const auto& [e, c] : numerator) {
    const int m = k - e;
    if (m < 0) continue;
    if (denominator_power == 0) {
      if (m == 0) total += c;
      continue;
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m + denominator_power - 1),
                 static_cast<unsigned long>(denominator_power - 1));
    total += c * b;
  }
  return total;
}

std::string HilbertSeries::to_string() const {
  std::string num;
  for (const auto& [k, c] : numerator) {
    std::string coef = c.get_str();
    if (!num.empty()) num += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) num += "-";
    if (sgn(c) < 0) coef = coef.substr(1);
    if (k == 0) num += coef;
    else num += (coef == "1" ? "" : coef + "*") + (k == 1 ? std::string("t") : "t^" + std::to_string(k));
  }
  if (num.empty()) num = "0";
  return "(" + num + ")/(1-t)^" + std::to_string(denominator_power);
}

}  // namespace lyu
