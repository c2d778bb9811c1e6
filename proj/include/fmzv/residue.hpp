#pragma once

// Integers modulo a small runtime prime.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "fmzv/ring.hpp"

namespace fmzv {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

/// Element of Z/lZ. The modulus travels with the value so mixed-modulus
/// arithmetic is caught instead of silently producing garbage.
class ResidueInt {
 public:
  ResidueInt(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 2 || modulus > (std::int64_t{1} << 31))
      throw std::invalid_argument("residue modulus out of range");
    value_ = normalize(value);
  }

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  ResidueInt operator+(const ResidueInt& o) const { return {value_ + check(o).value_, modulus_}; }
  ResidueInt operator-(const ResidueInt& o) const { return {value_ - check(o).value_, modulus_}; }
  ResidueInt operator*(const ResidueInt& o) const { return {value_ * check(o).value_, modulus_}; }
  ResidueInt operator-() const { return {-value_, modulus_}; }
  ResidueInt& operator+=(const ResidueInt& o) { return *this = *this + o; }
  ResidueInt& operator-=(const ResidueInt& o) { return *this = *this - o; }
  ResidueInt& operator*=(const ResidueInt& o) { return *this = *this * o; }

  bool operator==(const ResidueInt& o) const {
    return modulus_ == o.modulus_ && value_ == o.value_;
  }

  ResidueInt pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    ResidueInt r(1, modulus_), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      b *= b;
    }
    return r;
  }

  // Extended Euclid; works for composite moduli whenever gcd(v, l) = 1.
  ResidueInt inverse() const {
    std::int64_t a = value_, m = modulus_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t t = a / m;
      a -= t * m;
      std::swap(a, m);
      x0 -= t * x1;
      std::swap(x0, x1);
    }
    if (a != 1) throw not_invertible("residue is not a unit");
    return {x0, modulus_};
  }

 private:
  std::int64_t normalize(std::int64_t v) const {
    v %= modulus_;
    return v < 0 ? v + modulus_ : v;
  }
  const ResidueInt& check(const ResidueInt& o) const {
    if (o.modulus_ != modulus_) throw std::invalid_argument("residue modulus mismatch");
    return o;
  }

  std::int64_t value_ = 0;
  std::int64_t modulus_;
};

inline std::ostream& operator<<(std::ostream& os, const ResidueInt& r) {
  return os << r.value() << " (mod " << r.modulus() << ")";
}

/// Image of an exact rational in Z/lZ; empty when l divides the denominator.
inline std::optional<ResidueInt> reduce_mod(const BigRat& x, std::int64_t l) {
  BigInt num = x.get_num() % BigInt(static_cast<long>(l));
  BigInt den = x.get_den() % BigInt(static_cast<long>(l));
  if (den == 0) return std::nullopt;
  ResidueInt n(num.get_si(), l), d(den.get_si(), l);
  return n * d.inverse();
}

template <>
struct ring_traits<ResidueInt> {
  static ResidueInt zero(const ResidueInt& like) { return {0, like.modulus()}; }
  static ResidueInt one(const ResidueInt& like) { return {1, like.modulus()}; }
  static ResidueInt from_int(const ResidueInt& like, std::int64_t v) { return {v, like.modulus()}; }
  static bool is_zero(const ResidueInt& x) { return x.value() == 0; }
  static ResidueInt invert(const ResidueInt& x) { return x.inverse(); }
};

}  // namespace fmzv
