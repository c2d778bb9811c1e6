#pragma once

// The coefficient fields F_q and F_{q'} (q' = q^{q-1}) and the polynomial
// ring A = F_q[T] inside A' = F_{q'}[T].

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmzv/charp/gf.hpp"
#include "fmzv/charp/poly.hpp"

namespace fmzv::charp {

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > UINT64_MAX / b) throw std::overflow_error("integer power overflow");
    r *= b;
  }
  return r;
}

/// Monic polynomial of degree d over the first `order` codes of `f`, whose
/// lower coefficients are the base-`order` digits of `code`.
inline Poly monic_from_code(const FiniteField& f, std::size_t order, unsigned d, std::uint64_t code) {
  std::vector<GfElem> c(d + 1);
  for (unsigned i = 0; i < d; ++i) {
    c[i] = GfElem(static_cast<std::uint16_t>(code % order));
    code /= order;
  }
  c[d] = FiniteField::one();
  return Poly(f, std::move(c));
}

/// Trial division by every monic polynomial of degree <= deg/2 whose
/// coefficients lie in the subfield of the first `order` codes.
inline bool is_irreducible_over(const Poly& a, std::size_t order) {
  const int n = a.degree();
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    const std::uint64_t count = ipow(order, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code)
      if ((a % monic_from_code(a.field(), order, static_cast<unsigned>(d), code)).is_zero()) return false;
  }
  return true;
}

/// Lexicographically least monic irreducible of degree d over `f`:
/// the first hit when the lower coefficients, read as base-|f| digits
/// (constant term least significant), are counted upward from 0.
inline Poly least_irreducible(const FiniteField& f, unsigned d) {
  const std::uint64_t count = ipow(f.order(), d);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly cand = monic_from_code(f, f.order(), d, code);
    if (is_irreducible_over(cand, f.order())) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

/// F_q = F_p[u]/(f), F_{q'} = F_q[v]/(g) with f, g the least irreducibles
/// of degrees e and q-1. All polynomial arithmetic runs over F_{q'}; A is
/// the subring of polynomials whose coefficient codes are below q.
class FieldCtx {
 public:
  static constexpr std::uint64_t default_enum_budget = std::uint64_t{1} << 20;

  FieldCtx(unsigned p, unsigned q_exp)
      : p_(p),
        e_(checked_exp(q_exp)),
        q_(checked_q(static_cast<std::size_t>(ipow(p, q_exp)))),
        prime_(std::make_unique<FiniteField>(FiniteField::prime(p))),
        base_modulus_(least_irreducible(*prime_, q_exp)),
        base_(std::make_unique<FiniteField>(FiniteField::extension(*prime_, base_modulus_.coeffs()))),
        ext_modulus_(least_irreducible(*base_, static_cast<unsigned>(q_ - 1))),
        big_(std::make_unique<FiniteField>(FiniteField::extension(*base_, ext_modulus_.coeffs()))),
        q_prime_(big_->order()) {}

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  unsigned p() const { return p_; }
  unsigned q_exp() const { return e_; }
  std::size_t q() const { return q_; }
  std::size_t q_prime() const { return q_prime_; }

  /// Arithmetic field of every Poly produced by this context: F_{q'}.
  const FiniteField& field() const { return *big_; }
  const FiniteField& base_field() const { return *base_; }
  const Poly& base_modulus() const { return base_modulus_; }
  const Poly& ext_modulus() const { return ext_modulus_; }

  bool in_base(GfElem a) const { return a.code < q_; }
  bool in_A(const Poly& a) const { return a.coefficients_below(q_); }

  std::vector<GfElem> base_units() const {
    std::vector<GfElem> out;
    for (std::size_t c = 1; c < q_; ++c) out.emplace_back(static_cast<std::uint16_t>(c));
    return out;
  }
  std::vector<GfElem> ext_units() const {
    std::vector<GfElem> out;
    for (std::size_t c = 1; c < q_prime_; ++c) out.emplace_back(static_cast<std::uint16_t>(c));
    return out;
  }

  Poly zero() const { return Poly(*big_); }
  Poly one() const { return Poly::one(*big_); }
  Poly theta() const { return Poly::variable(*big_); }
  Poly constant(GfElem c) const { return Poly::constant(*big_, c); }
  Poly from_int(std::int64_t n) const { return constant(big_->from_int(n)); }

  /// All q^d monic polynomials of degree d in A, ordered by their code.
  std::vector<Poly> enumerate_monic(unsigned d, std::uint64_t budget = default_enum_budget) const {
    const std::uint64_t count = ipow(q_, d);
    if (count > budget) throw std::length_error("monic enumeration exceeds budget");
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) out.push_back(monic_from_code(*big_, q_, d, code));
    return out;
  }

  bool is_irreducible_in_A(const Poly& a) const { return in_A(a) && is_irreducible_over(a, q_); }

  std::vector<Poly> monic_irreducibles(unsigned d) const {
    std::vector<Poly> out;
    for (auto& a : enumerate_monic(d))
      if (is_irreducible_over(a, q_)) out.push_back(a);
    return out;
  }

  std::string describe() const {
    return "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[u]/(" + base_modulus_.str("u") + "), F_" +
           std::to_string(q_prime_) + " = F_" + std::to_string(q_) + "[v]/(" + ext_modulus_.str("v") + ")";
  }

 private:
  static unsigned checked_exp(unsigned e) {
    if (e < 1) throw std::invalid_argument("q exponent must be >= 1");
    return e;
  }
  static std::size_t checked_q(std::size_t q) {
    if (q > 16 || ipow(q, static_cast<unsigned>(q - 1)) > FiniteField::max_order)
      throw std::invalid_argument("q too large: F_{q^(q-1)} exceeds the table-arithmetic limit");
    return q;
  }

  unsigned p_;
  unsigned e_;
  std::size_t q_;
  std::unique_ptr<FiniteField> prime_;
  Poly base_modulus_;
  std::unique_ptr<FiniteField> base_;
  Poly ext_modulus_;
  std::unique_ptr<FiniteField> big_;
  std::size_t q_prime_;
};

}  // namespace fmzv::charp
