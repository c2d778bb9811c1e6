#pragma once

// Exact scalar types and the ring_traits customization point used by the
// generic series containers.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fmzv {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Raised when a value must be inverted but is not a unit of its ring.
class not_invertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ring operations that cannot be expressed through operators alone.
///
/// Rings with runtime parameters (residue rings, polynomial rings over a
/// runtime field) cannot default-construct their zero, so every factory takes
/// a `like` argument carrying the ring context.
template <class R>
struct ring_traits;

template <>
struct ring_traits<BigRat> {
  static BigRat zero(const BigRat&) { return BigRat(0); }
  static BigRat one(const BigRat&) { return BigRat(1); }
  static BigRat from_int(const BigRat&, std::int64_t v) {
    return BigRat(BigInt(static_cast<long>(v)));
  }
  static bool is_zero(const BigRat& x) { return sgn(x) == 0; }
  static BigRat invert(const BigRat& x) {
    if (sgn(x) == 0) throw not_invertible("division by zero rational");
    BigRat r = 1;
    r /= x;
    return r;
  }
};

inline BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// `base^exp` for a signed exponent, exact.
inline BigRat rat_pow(const BigInt& base, int exp) {
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
  if (exp >= 0) return BigRat(p);
  BigRat r(BigInt(1), p);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRat& x) { return x.get_str(); }
inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace fmzv
