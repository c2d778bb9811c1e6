#pragma once

// Carlitz brackets [n], D_n, L_n, the Carlitz factorial Pi(n) = Gamma_{n+1},
// and exact power sums S_d(s) over monic polynomials of degree d.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/poly.hpp"
#include "fmzv/charp/ratfunc.hpp"

namespace fmzv::charp {

/// Base-q digits of n, least significant first (empty for n = 0).
inline std::vector<unsigned> base_q_digits(std::uint64_t n, std::uint64_t q) {
  std::vector<unsigned> out;
  for (; n > 0; n /= q) out.push_back(static_cast<unsigned>(n % q));
  return out;
}

/// Largest d with q^d <= n (n >= 1).
inline unsigned floor_log(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw std::domain_error("floor_log of 0");
  unsigned d = 0;
  for (std::uint64_t p = q; p <= n; p *= q) ++d;
  return d;
}

class CarlitzConstants {
 public:
  CarlitzConstants(const FieldCtx& ctx, unsigned n_max) : ctx_(&ctx), n_max_(n_max) {
    const std::uint64_t q = ctx.q();
    const Poly theta = ctx.theta();
    bracket_.push_back(ctx.zero());
    for (unsigned n = 1; n <= n_max; ++n) bracket_.push_back(theta.pow(ipow(q, n)) - theta);
    D_.push_back(ctx.one());
    L_.push_back(ctx.one());
    for (unsigned n = 1; n <= n_max; ++n) {
      // D_n = [n] D_{n-1}^q and L_n = -[n] L_{n-1}.
      D_.push_back(bracket_[n] * D_[n - 1].frobenius(q));
      L_.push_back(-(bracket_[n] * L_[n - 1]));
    }
    const std::uint64_t top = ipow(q, n_max);
    pi_.reserve(top + 1);
    for (std::uint64_t n = 0; n <= top; ++n) {
      Poly acc = ctx.one();
      const auto digits = base_q_digits(n, q);
      for (std::size_t j = 0; j < digits.size(); ++j)
        if (digits[j] > 0) acc *= D_[j].pow(digits[j]);
      pi_.push_back(std::move(acc));
    }
  }

  const FieldCtx& field_ctx() const { return *ctx_; }
  unsigned n_max() const { return n_max_; }
  std::uint64_t pi_max() const { return pi_.size() - 1; }

  const Poly& bracket(unsigned n) const {
    if (n == 0) throw std::out_of_range("[0] is not defined");
    return bracket_.at(n);
  }
  const Poly& D(unsigned n) const { return D_.at(n); }
  const Poly& L(unsigned n) const { return L_.at(n); }
  /// Carlitz factorial Pi(n).
  const Poly& Pi(std::uint64_t n) const { return pi_.at(n); }
  /// Carlitz gamma Gamma_m = Pi(m - 1), m >= 1.
  const Poly& Gamma(std::uint64_t m) const {
    if (m == 0) throw std::out_of_range("Gamma_0 is not defined");
    return pi_.at(m - 1);
  }

  /// Smallest table size whose factorials reach Pi(n).
  static unsigned n_max_for_pi(std::uint64_t n, std::uint64_t q) { return n == 0 ? 0 : floor_log(n, q) + 1; }

 private:
  const FieldCtx* ctx_;
  unsigned n_max_;
  std::vector<Poly> bracket_, D_, L_, pi_;
};

/// S_d(s) = sum over monic a of degree d of a^{-s}, exactly in k.
inline RatFunc power_sum_exact(const FieldCtx& ctx, unsigned d, int s,
                               std::uint64_t budget = FieldCtx::default_enum_budget) {
  const auto monics = ctx.enumerate_monic(d, budget);
  if (s <= 0) {
    Poly acc = ctx.zero();
    for (const auto& a : monics) acc += a.pow(static_cast<std::uint64_t>(-s));
    return RatFunc(acc);
  }
  // Sum over a common denominator (the product of all a^s) in one pass:
  // sum_a prod_{b != a} b^s / prod_b b^s, with prefix/suffix products.
  std::vector<Poly> pw;
  pw.reserve(monics.size());
  for (const auto& a : monics) pw.push_back(a.pow(static_cast<std::uint64_t>(s)));
  const std::size_t m = pw.size();
  std::vector<Poly> prefix(m + 1, ctx.one()), suffix(m + 1, ctx.one());
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * pw[i];
  for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * pw[i];
  Poly num = ctx.zero();
  for (std::size_t i = 0; i < m; ++i) num += prefix[i] * suffix[i + 1];
  return RatFunc(num, prefix[m]);
}

}  // namespace fmzv::charp
