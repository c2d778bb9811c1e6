#pragma once

// Table-driven finite fields GF(p^n) with small order.
//
// Elements are integer codes. A prime field uses 0..p-1. An extension
// B[v]/(g) of a base field B with |B| = b encodes sum_i d_i v^i as
// sum_i code(d_i) b^i, so the codes 0..b-1 are exactly the embedded base
// field. Towers therefore embed by the identity on codes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmzv/ring.hpp"

namespace fmzv::charp {

struct GfElem {
  std::uint16_t code = 0;
  constexpr GfElem() = default;
  constexpr explicit GfElem(std::uint16_t c) : code(c) {}
  auto operator<=>(const GfElem&) const = default;
};

class FiniteField {
 public:
  static constexpr std::size_t max_order = 1024;

  static FiniteField prime(unsigned p) {
    if (p < 2 || p > 251) throw std::invalid_argument("prime field characteristic out of range");
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("characteristic is not prime");
    FiniteField f(p, 1, p);
    for (unsigned a = 0; a < p; ++a)
      for (unsigned b = 0; b < p; ++b) {
        f.add_[a * p + b] = static_cast<std::uint16_t>((a + b) % p);
        f.mul_[a * p + b] = static_cast<std::uint16_t>((a * b) % p);
      }
    f.finish();
    return f;
  }

  /// base[v]/(g) for a monic g (coefficient codes, low degree first) that
  /// the caller has checked to be irreducible over `base`.
  static FiniteField extension(const FiniteField& base, const std::vector<GfElem>& modulus) {
    if (modulus.size() < 2 || modulus.back() != base.one())
      throw std::invalid_argument("extension modulus must be monic of degree >= 1");
    const std::size_t deg = modulus.size() - 1;
    std::size_t order = 1;
    for (std::size_t i = 0; i < deg; ++i) {
      order *= base.order();
      if (order > max_order) throw std::invalid_argument("field too large for table arithmetic");
    }
    FiniteField f(base.characteristic(), base.degree() * static_cast<unsigned>(deg), order);
    const std::size_t b = base.order();
    auto digits = [&](std::size_t code) {
      std::vector<GfElem> d(deg);
      for (std::size_t i = 0; i < deg; ++i) {
        d[i] = GfElem(static_cast<std::uint16_t>(code % b));
        code /= b;
      }
      return d;
    };
    auto encode = [&](const std::vector<GfElem>& d) {
      std::size_t code = 0;
      for (std::size_t i = deg; i-- > 0;) code = code * b + d[i].code;
      return static_cast<std::uint16_t>(code);
    };
    for (std::size_t x = 0; x < order; ++x) {
      const auto dx = digits(x);
      for (std::size_t y = 0; y < order; ++y) {
        const auto dy = digits(y);
        std::vector<GfElem> sum(deg);
        for (std::size_t i = 0; i < deg; ++i) sum[i] = base.add(dx[i], dy[i]);
        f.add_[x * order + y] = encode(sum);
        // Schoolbook product, then reduce by the monic modulus from the top.
        std::vector<GfElem> prod(2 * deg - 1, base.zero());
        for (std::size_t i = 0; i < deg; ++i)
          for (std::size_t j = 0; j < deg; ++j) prod[i + j] = base.add(prod[i + j], base.mul(dx[i], dy[j]));
        for (std::size_t k = prod.size(); k-- > deg;) {
          const GfElem c = prod[k];
          if (c == base.zero()) continue;
          for (std::size_t i = 0; i <= deg; ++i) prod[k - deg + i] = base.sub(prod[k - deg + i], base.mul(c, modulus[i]));
        }
        prod.resize(deg);
        f.mul_[x * order + y] = encode(prod);
      }
    }
    f.finish();
    return f;
  }

  unsigned characteristic() const { return p_; }
  /// Degree over the prime field.
  unsigned degree() const { return degree_; }
  std::size_t order() const { return order_; }

  static constexpr GfElem zero() { return GfElem(0); }
  static constexpr GfElem one() { return GfElem(1); }

  GfElem add(GfElem a, GfElem b) const { return GfElem(add_[idx(a, b)]); }
  GfElem mul(GfElem a, GfElem b) const { return GfElem(mul_[idx(a, b)]); }
  GfElem neg(GfElem a) const { return GfElem(neg_[a.code]); }
  GfElem sub(GfElem a, GfElem b) const { return add(a, neg(b)); }
  GfElem inv(GfElem a) const {
    if (a.code == 0) throw not_invertible("inverse of zero field element");
    return GfElem(inv_[a.code]);
  }
  GfElem div(GfElem a, GfElem b) const { return mul(a, inv(b)); }

  GfElem pow(GfElem a, std::uint64_t e) const {
    // The multiplicative group has order |F| - 1.
    if (a.code == 0) return e == 0 ? one() : zero();
    e %= order_ - 1;
    GfElem r = one();
    for (; e > 0; e >>= 1) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  }

  /// Image of an integer under Z -> F.
  GfElem from_int(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return GfElem(static_cast<std::uint16_t>(m));
  }

  std::vector<GfElem> elements() const {
    std::vector<GfElem> out;
    for (std::size_t c = 0; c < order_; ++c) out.emplace_back(static_cast<std::uint16_t>(c));
    return out;
  }

  bool contains(GfElem a) const { return a.code < order_; }

 private:
  FiniteField(unsigned p, unsigned degree, std::size_t order)
      : p_(p), degree_(degree), order_(order), add_(order * order), mul_(order * order), neg_(order), inv_(order) {}

  std::size_t idx(GfElem a, GfElem b) const { return static_cast<std::size_t>(a.code) * order_ + b.code; }

  void finish() {
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) {
        if (add_[a * order_ + b] == 0) neg_[a] = static_cast<std::uint16_t>(b);
        if (mul_[a * order_ + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);
      }
  }

  unsigned p_;
  unsigned degree_;
  std::size_t order_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

}  // namespace fmzv::charp
