#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "lyu/errors.hpp"

namespace lyu {

/// Coefficient field K: characteristic 0 (exact rationals) or a prime p.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws DomainError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);

  std::string to_string() const { return characteristic == 0 ? "QQ" : "ZZ/" + std::to_string(characteristic); }
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint32_t p);

inline FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw DomainError("characteristic must be 0 or a prime < 2^31, got " + std::to_string(p));
  return {p};
}

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const { return v; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element neg(const Element& a) const { return -a; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element div(const Element& a, const Element& b) const {
    if (is_zero(b)) throw DomainError("division by zero");
    return a / b;
  }
  /// a -= c * b
  void sub_mul(Element& a, const Element& c, const Element& b) const { a -= c * b; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).characteristic) {}

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  bool is_zero(Element a) const { return a == 0; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const { return static_cast<Element>(std::uint64_t{a} * b % p_); }
  Element div(Element a, Element b) const {
    if (b == 0) throw DomainError("division by zero");
    return mul(a, inverse(b));
  }
  void sub_mul(Element& a, Element c, Element b) const { a = sub(a, mul(c, b)); }

  std::string to_string(Element a) const { return std::to_string(a); }
  FieldSpec spec() const { return {p_}; }
  std::uint32_t characteristic() const { return p_; }

 private:
  Element inverse(Element a) const {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Element>(result);
  }

  std::uint32_t p_;
};

/// Calls fn(field) with a Rationals or PrimeField matching `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.characteristic == 0) return std::forward<Fn>(fn)(Rationals{});
  return std::forward<Fn>(fn)(PrimeField(spec.characteristic));
}

}  // namespace lyu
