#pragma once

// Multivariate truncated power series with per-variable truncation orders.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fmzv/ring.hpp"
#include "fmzv/series.hpp"

namespace fmzv {

/// Coefficients of monomials x_0^{e_0}...x_r^{e_r} with e_i <= orders[i].
/// Storage is dense in mixed radix; a zero entry is an absent monomial.
template <class R>
class MultiTruncSeries {
 public:
  using traits = ring_traits<R>;
  using Exponents = std::vector<std::size_t>;

  MultiTruncSeries(std::vector<std::size_t> orders, const R& like)
      : orders_(std::move(orders)), strides_(orders_.size()) {
    std::size_t size = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      strides_[i] = size;
      size *= orders_[i] + 1;
    }
    coeffs_.assign(size, traits::zero(like));
  }

  static MultiTruncSeries constant(std::vector<std::size_t> orders, const R& c) {
    MultiTruncSeries s(std::move(orders), c);
    s.coeffs_[0] = c;
    return s;
  }

  /// Embeds an ordinary univariate series in variable `var`.
  static MultiTruncSeries from_univariate(std::vector<std::size_t> orders, std::size_t var,
                                          const TruncSeries<R>& u) {
    const auto ordinary = u.to_ordinary();
    MultiTruncSeries s(std::move(orders), u[0]);
    if (var >= s.orders_.size()) throw std::invalid_argument("variable index out of range");
    for (std::size_t e = 0; e <= s.orders_[var] && e <= ordinary.order(); ++e)
      s.coeffs_[e * s.strides_[var]] = ordinary[e];
    return s;
  }

  const std::vector<std::size_t>& orders() const { return orders_; }
  std::size_t variables() const { return orders_.size(); }
  std::size_t size() const { return coeffs_.size(); }

  const R& coeff(std::span<const std::size_t> exps) const { return coeffs_[flat(exps)]; }
  void set(std::span<const std::size_t> exps, R value) { coeffs_[flat(exps)] = std::move(value); }

  Exponents exponents_of(std::size_t flat_index) const {
    Exponents e(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      e[i] = flat_index / strides_[i];
      flat_index %= strides_[i];
    }
    return e;
  }

  MultiTruncSeries operator+(const MultiTruncSeries& o) const {
    check(o);
    MultiTruncSeries r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
  }

  MultiTruncSeries operator-(const MultiTruncSeries& o) const {
    check(o);
    MultiTruncSeries r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
  }

  MultiTruncSeries scaled(const R& k) const {
    MultiTruncSeries r = *this;
    for (auto& c : r.coeffs_) c = c * k;
    return r;
  }

  MultiTruncSeries operator*(const MultiTruncSeries& o) const {
    check(o);
    MultiTruncSeries r(orders_, coeffs_[0]);
    std::vector<std::size_t> nz_a, nz_b;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!traits::is_zero(coeffs_[i])) nz_a.push_back(i);
      if (!traits::is_zero(o.coeffs_[i])) nz_b.push_back(i);
    }
    for (std::size_t i : nz_a) {
      const Exponents ea = exponents_of(i);
      for (std::size_t j : nz_b) {
        const Exponents eb = exponents_of(j);
        bool inside = true;
        for (std::size_t v = 0; v < orders_.size() && inside; ++v) inside = ea[v] + eb[v] <= orders_[v];
        if (!inside) continue;
        // Mixed radix addition is plain addition when no digit overflows.
        r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
      }
    }
    return r;
  }

  /// Inverse of a series with unit constant term: c^{-1} sum_k u^k, where
  /// u = 1 - a/c vanishes at the origin and so is nilpotent under truncation.
  MultiTruncSeries inverse() const {
    const R c_inv = traits::invert(coeffs_[0]);
    MultiTruncSeries u = constant(orders_, traits::one(coeffs_[0])) - scaled(c_inv);
    std::size_t total = 0;
    for (auto o : orders_) total += o;
    MultiTruncSeries acc = constant(orders_, traits::one(coeffs_[0]));
    MultiTruncSeries power = acc;
    for (std::size_t k = 1; k <= total; ++k) {
      power = power * u;
      acc = acc + power;
    }
    return acc.scaled(c_inv);
  }

  /// First monomial (in storage order) where the two series differ.
  std::optional<Exponents> first_mismatch(const MultiTruncSeries& o) const {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == o.coeffs_[i])) return exponents_of(i);
    return std::nullopt;
  }

  bool operator==(const MultiTruncSeries& o) const { return !first_mismatch(o).has_value(); }

 private:
  std::size_t flat(std::span<const std::size_t> exps) const {
    if (exps.size() != orders_.size()) throw std::invalid_argument("exponent tuple has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > orders_[i]) throw std::out_of_range("exponent beyond truncation order");
      idx += exps[i] * strides_[i];
    }
    return idx;
  }
  void check(const MultiTruncSeries& o) const {
    if (o.orders_ != orders_) throw std::invalid_argument("multivariate series order mismatch");
  }

  std::vector<std::size_t> orders_;
  std::vector<std::size_t> strides_;
  std::vector<R> coeffs_;
};

}  // namespace fmzv
