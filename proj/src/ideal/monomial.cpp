#include "lyu/ideal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lyu/errors.hpp"

namespace lyu {

std::vector<std::size_t> varset_indices(VarSet s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(s)));
    s &= s - 1;
  }
  return out;
}

VarSet varset_from_indices(const std::vector<std::size_t>& indices) {
  VarSet s = 0;
  for (auto i : indices) {
    if (i >= kMaxIdealVars) throw DomainError("variable index exceeds 64");
    s |= VarSet{1} << i;
  }
  return s;
}

VariableContext::VariableContext(std::size_t n) {
  if (n == 0) throw DomainError("variable context needs at least one variable");
  names_.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
}

VariableContext::VariableContext(std::size_t n, std::vector<std::string> names) : names_(std::move(names)) {
  if (n == 0) throw DomainError("variable context needs at least one variable");
  if (names_.size() != n) throw DomainError("variable context: expected " + std::to_string(n) + " names");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw DomainError("variable context: names must be distinct");
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw DomainError("monomial exponents must be non-negative");
}

Monomial Monomial::from_support(std::size_t n, VarSet support) {
  std::vector<int> e(n, 0);
  for (auto i : varset_indices(support)) {
    if (i >= n) throw DomainError("support outside variable range");
    e[i] = 1;
  }
  return Monomial(std::move(e));
}

int Monomial::total_degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (other.nvars() != nvars()) throw ContextMismatch("monomials over different contexts");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

VarSet Monomial::support() const {
  if (exps_.size() > kMaxIdealVars) throw DomainError("support needs at most 64 variables");
  VarSet s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s |= VarSet{1} << i;
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw ContextMismatch("monomials over different contexts");
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw ContextMismatch("monomials over different contexts");
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
  // reversed: more of x1 comes first
  return other.exps_ <=> exps_;
}

std::string Monomial::to_string(const VariableContext& ctx) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace lyu
