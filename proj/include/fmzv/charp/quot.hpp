#pragma once

// Residue rings A'/(P) = F_{q'}[T]/(P) for a monic irreducible P in A.
// P need not stay irreducible over F_{q'}, so this is a product of fields
// and an element is a unit exactly when it is coprime to P.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/poly.hpp"
#include "fmzv/charp/ratfunc.hpp"

namespace fmzv::charp {

class QuotCtx {
 public:
  /// Power sums S_d(s) mod P are tabulated for d < deg P and |s| <= cached_s.
  QuotCtx(const FieldCtx& ctx, Poly P, int cached_s = 4) : ctx_(&ctx), P_(std::move(P)), cached_s_(cached_s) {
    if (!P_.is_monic() || P_.degree() < 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    if (&P_.field() != &ctx.field()) throw std::invalid_argument("modulus is not over the context field");
    if (!ctx.is_irreducible_in_A(P_)) throw std::invalid_argument("modulus is not a monic irreducible of A");
    for (unsigned d = 0; d < static_cast<unsigned>(P_.degree()); ++d)
      for (int s = -cached_s_; s <= cached_s_; ++s) cache_.emplace(std::make_pair(d, s), compute_power_sum(d, s));
  }

  const FieldCtx& field_ctx() const { return *ctx_; }
  const FiniteField& field() const { return ctx_->field(); }
  const Poly& modulus() const { return P_; }
  int degree() const { return P_.degree(); }

  Poly reduce(const Poly& a) const { return a % P_; }
  Poly zero() const { return Poly(field()); }
  Poly one() const { return reduce(Poly::one(field())); }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % P_; }

  bool is_unit(const Poly& a) const { return gcd(reduce(a), P_).is_one(); }

  Poly inv(const Poly& a) const {
    auto [g, u, v] = ext_gcd(reduce(a), P_);
    if (!g.is_one()) throw not_invertible("element not coprime to the modulus");
    return reduce(u);
  }

  Poly pow(const Poly& a, long e) const {
    Poly b = e < 0 ? inv(a) : reduce(a);
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Poly r = one();
    for (; k > 0; k >>= 1) {
      if (k & 1) r = mul(r, b);
      if (k > 1) b = mul(b, b);
    }
    return r;
  }

  /// Image of num/den, or nothing when P meets the denominator.
  std::optional<Poly> reduce(const RatFunc& x) const {
    const Poly d = reduce(x.den());
    if (!gcd(d, P_).is_one()) return std::nullopt;
    return mul(reduce(x.num()), inv(d));
  }

  /// S_d(s) mod P. For s > 0 this needs d < deg P.
  Poly power_sum_mod(unsigned d, int s) const {
    if (auto it = cache_.find({d, s}); it != cache_.end()) return it->second;
    return compute_power_sum(d, s);
  }

  std::string str() const { return P_.str("θ"); }

 private:
  Poly compute_power_sum(unsigned d, int s) const {
    if (s > 0 && static_cast<int>(d) >= P_.degree())
      throw std::domain_error("S_d(s) mod P with s > 0 needs d < deg P");
    Poly acc = zero();
    for (const auto& a : ctx_->enumerate_monic(d)) acc = add(acc, pow(a, -s));
    return acc;
  }

  const FieldCtx* ctx_;
  Poly P_;
  int cached_s_;
  std::map<std::pair<unsigned, int>, Poly> cache_;
};

}  // namespace fmzv::charp
