#pragma once

// Truncated formal power series over an arbitrary commutative ring.
//
// A TruncSeries of order N stores c_0..c_N. In ordinary mode c_n is the
// coefficient of x^n; in exponential mode it is the coefficient of x^n/n!
// and products are binomial convolutions. Nothing ever reads beyond N.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fmzv/ring.hpp"

namespace fmzv {

enum class SeriesKind { ordinary, exponential };

template <class R>
class TruncSeries {
 public:
  using traits = ring_traits<R>;

  /// Zero series of the given order; `zero` fixes the coefficient ring.
  TruncSeries(std::size_t order, const R& zero, SeriesKind kind = SeriesKind::ordinary)
      : coeffs_(order + 1, traits::zero(zero)), kind_(kind) {}

  explicit TruncSeries(std::vector<R> coeffs, SeriesKind kind = SeriesKind::ordinary)
      : coeffs_(std::move(coeffs)), kind_(kind) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static TruncSeries constant(std::size_t order, const R& c, SeriesKind kind = SeriesKind::ordinary) {
    TruncSeries s(order, c, kind);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series x (ordinary and exponential agree: coefficient 1 at n = 1).
  static TruncSeries variable(std::size_t order, const R& like, SeriesKind kind = SeriesKind::ordinary) {
    TruncSeries s(order, like, kind);
    if (order >= 1) s.coeffs_[1] = traits::one(like);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  SeriesKind kind() const { return kind_; }
  const std::vector<R>& coeffs() const { return coeffs_; }

  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  void set(std::size_t n, R value) { coeffs_.at(n) = std::move(value); }

  R zero_element() const { return traits::zero(coeffs_[0]); }
  R one_element() const { return traits::one(coeffs_[0]); }

  /// Index of the first nonzero coefficient, empty for the zero series.
  std::optional<std::size_t> valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
      if (!traits::is_zero(coeffs_[n])) return n;
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

  TruncSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1), kind_);
  }

  TruncSeries operator+(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r = *this;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
    return r;
  }

  TruncSeries operator-(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r = *this;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
    return r;
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = zero_element() - c;
    return r;
  }

  TruncSeries scaled(const R& k) const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = c * k;
    return r;
  }

  bool operator==(const TruncSeries& o) const {
    return kind_ == o.kind_ && coeffs_ == o.coeffs_;
  }

  /// Exponential coefficients c_n become c_n / n!. Needs n! invertible.
  TruncSeries to_ordinary() const {
    if (kind_ == SeriesKind::ordinary) return *this;
    TruncSeries r(order(), coeffs_[0], SeriesKind::ordinary);
    R fact = one_element();
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (n > 0) fact = fact * traits::from_int(coeffs_[0], static_cast<std::int64_t>(n));
      r.coeffs_[n] = coeffs_[n] * traits::invert(fact);
    }
    return r;
  }

  TruncSeries to_exponential() const {
    if (kind_ == SeriesKind::exponential) return *this;
    TruncSeries r(order(), coeffs_[0], SeriesKind::exponential);
    R fact = one_element();
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (n > 0) fact = fact * traits::from_int(coeffs_[0], static_cast<std::int64_t>(n));
      r.coeffs_[n] = coeffs_[n] * fact;
    }
    return r;
  }

  void check_compatible(const TruncSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    if (o.kind_ != kind_) throw std::invalid_argument("series kind mismatch");
  }

 private:
  std::vector<R> coeffs_;
  SeriesKind kind_;
};

/// Cauchy product (ordinary) or binomial convolution (exponential), truncated.
template <class R>
TruncSeries<R> series_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  using traits = ring_traits<R>;
  a.check_compatible(b);
  const std::size_t N = a.order();
  if (a.kind() == SeriesKind::exponential && N > 66)
    throw std::out_of_range("exponential product beyond order 66 would overflow the binomial row");
  TruncSeries<R> r(N, a[0], a.kind());
  std::vector<std::int64_t> row{1};  // Pascal row n, used in exponential mode
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) {
      std::vector<std::int64_t> next(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
      row = std::move(next);
    }
    R acc = r.zero_element();
    for (std::size_t k = 0; k <= n; ++k) {
      if (traits::is_zero(a[k]) || traits::is_zero(b[n - k])) continue;
      if (a.kind() == SeriesKind::exponential)
        acc = acc + traits::from_int(a[0], row[k]) * a[k] * b[n - k];
      else
        acc = acc + a[k] * b[n - k];
    }
    r.set(n, std::move(acc));
  }
  return r;
}

template <class R>
TruncSeries<R> operator*(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  return series_mul(a, b);
}

template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& a, std::uint64_t e) {
  TruncSeries<R> result = TruncSeries<R>::constant(a.order(), a.one_element(), a.kind());
  TruncSeries<R> base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = series_mul(result, base);
    if (e > 1) base = series_mul(base, base);
  }
  return result;
}

/// Multiplicative inverse of a series whose constant term is a unit.
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& b) {
  using traits = ring_traits<R>;
  if (b.kind() == SeriesKind::exponential) return series_inverse(b.to_ordinary()).to_exponential();
  const R inv0 = traits::invert(b[0]);
  TruncSeries<R> q(b.order(), b[0]);
  q.set(0, inv0);
  for (std::size_t n = 1; n <= b.order(); ++n) {
    R acc = q.zero_element();
    for (std::size_t k = 1; k <= n; ++k)
      if (!traits::is_zero(b[k])) acc = acc + b[k] * q[n - k];
    q.set(n, q.zero_element() - acc * inv0);
  }
  return q;
}

/// a / b where b may have a zero constant term.
///
/// With v = valuation(b), both operands are shifted down by x^v and a is
/// multiplied by the inverse of the resulting unit series. The quotient is
/// determined only up to order N - v, which is the order of the result.
template <class R>
TruncSeries<R> series_div(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  a.check_compatible(b);
  if (a.kind() == SeriesKind::exponential)
    return series_div(a.to_ordinary(), b.to_ordinary()).to_exponential();
  const auto vb = b.valuation();
  if (!vb) throw std::domain_error("series division by zero");
  const auto va = a.valuation();
  if (va && *va < *vb) throw std::domain_error("series division: valuation of dividend below divisor");
  const std::size_t v = *vb, N = a.order() - v;
  std::vector<R> as, bs;
  as.reserve(N + 1);
  bs.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    as.push_back(a[n + v]);
    bs.push_back(b[n + v]);
  }
  return series_mul(TruncSeries<R>(std::move(as)), series_inverse(TruncSeries<R>(std::move(bs))));
}

template <class R>
TruncSeries<R> operator/(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  return series_div(a, b);
}

/// outer(inner(x)), inner without constant term. Horner evaluation.
template <class R>
TruncSeries<R> series_compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner) {
  using traits = ring_traits<R>;
  outer.check_compatible(inner);
  if (!traits::is_zero(inner[0])) throw std::domain_error("series composition: inner series has a constant term");
  if (outer.kind() == SeriesKind::exponential)
    return series_compose(outer.to_ordinary(), inner.to_ordinary()).to_exponential();
  const std::size_t N = outer.order();
  TruncSeries<R> r = TruncSeries<R>::constant(N, outer[N]);
  for (std::size_t k = N; k-- > 0;) {
    r = series_mul(r, inner);
    r.set(0, r[0] + outer[k]);
  }
  return r;
}

}  // namespace fmzv
