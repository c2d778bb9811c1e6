#pragma once

// Alternating multiple poly-Bernoulli numbers B_n^{s;eps}, C_n^{s;eps}.
//
// Two independent routes:
//   * ampbn_series expands Li_s((1-e^{-x})eps_1, eps_2, ..., eps_r) as a
//     truncated series and divides by 1-e^{-x};
//   * ampbn_closed evaluates the finite Stirling-number sum.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmzv/char0/stirling.hpp"
#include "fmzv/index.hpp"
#include "fmzv/multi_series.hpp"
#include "fmzv/ring.hpp"
#include "fmzv/series.hpp"

namespace fmzv::char0 {

/// Sign tuple eps in {+1, -1}^r.
class Signs {
 public:
  Signs() = default;
  explicit Signs(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
      if (e != 1 && e != -1) throw std::invalid_argument("sign entries must be +1 or -1");
  }
  static Signs all_plus(std::size_t r) { return Signs(std::vector<int>(r, 1)); }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<int>& entries() const { return entries_; }
  bool all_plus() const {
    for (int e : entries_)
      if (e != 1) return false;
    return true;
  }
  Signs with_leading_plus(std::size_t count) const {
    std::vector<int> e(count, 1);
    e.insert(e.end(), entries_.begin(), entries_.end());
    return Signs(std::move(e));
  }
  /// All 2^r sign tuples, (+,..,+) first, in binary counting order.
  static std::vector<Signs> enumerate(std::size_t r) {
    std::vector<Signs> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      std::vector<int> e(r);
      for (std::size_t i = 0; i < r; ++i) e[i] = (mask >> (r - 1 - i)) & 1 ? -1 : 1;
      out.emplace_back(std::move(e));
    }
    return out;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + std::string(entries_[i] > 0 ? "+" : "-");
    return s + ")";
  }
  auto operator<=>(const Signs&) const = default;

 private:
  std::vector<int> entries_;
};

inline int sign_pow(int eps, long m) { return (eps == -1 && (m & 1)) ? -1 : 1; }

enum class MpbnVariant { B, C };

struct AmpbnSeries {
  std::vector<BigRat> B;
  std::vector<BigRat> C;
};

namespace detail {

/// e^{c x} as an ordinary series.
inline TruncSeries<BigRat> exp_series(std::size_t order, long c) {
  TruncSeries<BigRat> s(order, BigRat(0));
  BigRat term = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    s.set(n, term);
    term = term * BigRat(c) / BigRat(static_cast<long>(n + 1));
  }
  return s;
}

inline void check_shape(const Index& s, const Signs& eps) {
  if (s.depth() != eps.size()) throw std::invalid_argument("index and sign tuple differ in length");
}

}  // namespace detail

/// B_0..B_N and C_0..C_N from the defining generating functions.
///
/// Only m_1 <= N+1 can reach x^N after dividing (1-e^{-x})^{m_1} by 1-e^{-x}.
/// The depth-0 generating function 1/(1-e^{-x}) has a pole; it is rejected.
inline AmpbnSeries ampbn_series(const Index& s, const Signs& eps, std::size_t N) {
  detail::check_shape(s, eps);
  const std::size_t r = s.depth();
  if (r == 0) throw std::domain_error("depth-0 poly-Bernoulli generating function has a pole at x = 0");
  const std::size_t top = N + 1;

  // tail[k][m] = sum over m > m_{k+1} > ... > m_r >= 1 of prod eps^m / m^s
  // (k counted from 0; tail[r] is identically 1).
  std::vector<std::vector<BigRat>> tail(r + 1, std::vector<BigRat>(top + 2, 0));
  for (std::size_t m = 0; m <= top + 1; ++m) tail[r][m] = 1;
  for (std::size_t k = r; k-- > 1;) {
    BigRat acc = 0;
    for (std::size_t m = 1; m <= top + 1; ++m) {
      tail[k][m] = acc;  // strictly below m
      acc += BigRat(sign_pow(eps[k], static_cast<long>(m))) * rat_pow(BigInt(static_cast<long>(m)), -s[k]) *
             tail[k + 1][m];
    }
  }

  const auto e_minus = detail::exp_series(top, -1);
  const auto one = TruncSeries<BigRat>::constant(top, BigRat(1));
  const auto E = one - e_minus;

  TruncSeries<BigRat> li(top, BigRat(0));
  auto E_pow = one;
  for (std::size_t m = 1; m <= top; ++m) {
    E_pow = series_mul(E_pow, E);
    BigRat w = BigRat(sign_pow(eps[0], static_cast<long>(m))) * rat_pow(BigInt(static_cast<long>(m)), -s[0]) *
               tail[1][m];
    if (sgn(w) != 0) li = li + E_pow.scaled(w);
  }

  const auto b_ord = series_div(li, E);  // order N
  const auto c_ord = series_mul(b_ord, detail::exp_series(N, -1));
  AmpbnSeries out;
  for (std::size_t n = 0; n <= N; ++n) {
    const BigRat f(factorial(static_cast<unsigned>(n)));
    out.B.push_back(b_ord[n] * f);
    out.C.push_back(c_ord[n] * f);
  }
  return out;
}

namespace detail {

// Visits every strictly decreasing tuple top >= m_1 > ... > m_r >= 1 and hands
// the tail weight prod_{i>=2} eps_i^{m_i} / m_i^{s_i} to `fn(m_1, weight)`.
template <class Fn>
void for_each_decreasing(const Index& s, const Signs& eps, long top, Fn&& fn) {
  const std::size_t r = s.depth();
  std::vector<long> m(r);
  auto rec = [&](auto&& self, std::size_t pos, long bound, const BigRat& weight) -> void {
    if (pos == r) {
      fn(m[0], weight);
      return;
    }
    for (long v = bound; v >= 1; --v) {
      if (static_cast<long>(r - pos) > v) break;  // not enough room for the remaining entries
      m[pos] = v;
      BigRat w = weight;
      if (pos > 0) w *= BigRat(sign_pow(eps[pos], v)) * rat_pow(BigInt(v), -s[pos]);
      self(self, pos + 1, v - 1, w);
    }
  };
  rec(rec, 0, top, BigRat(1));
}

}  // namespace detail

/// Finite Stirling-sum evaluation of B_n (all eps = +1) or C_n (any eps).
///
/// C_n = (-1)^n sum_{n+1 >= m_1 > ... > m_r > 0}
///         eps^m (-1)^{m_1-1} (m_1-1)! {n+1, m_1} / m^s,
/// B_n uses {n, m_1-1} in place of {n+1, m_1}.
inline BigRat ampbn_closed(const Index& s, const Signs& eps, std::size_t n, MpbnVariant variant,
                           const StirlingTable& table) {
  detail::check_shape(s, eps);
  if (s.depth() == 0) throw std::domain_error("closed form needs depth >= 1");
  if (variant == MpbnVariant::B && !eps.all_plus())
    throw std::invalid_argument("closed form for B is only available for eps = (+1, ..., +1)");
  if (n + 1 > table.bound()) throw std::out_of_range("Stirling table too small for requested n");
  BigRat sum = 0;
  detail::for_each_decreasing(s, eps, static_cast<long>(n + 1), [&](long m1, const BigRat& tail_weight) {
    const BigInt& st = variant == MpbnVariant::C ? table.second(n + 1, static_cast<std::size_t>(m1))
                                                 : table.second(n, static_cast<std::size_t>(m1 - 1));
    if (st == 0) return;
    BigRat term(factorial(static_cast<unsigned>(m1 - 1)) * st);
    if ((m1 - 1) & 1) term = -term;
    term *= BigRat(sign_pow(eps[0], m1)) * rat_pow(BigInt(m1), -s[0]) * tail_weight;
    sum += term;
  });
  if (n & 1) sum = -sum;
  return sum;
}

struct GenfunReport {
  std::size_t depth = 0;
  Signs eps;
  int lower_bound = 0;
  std::size_t monomials = 0;
  std::optional<std::vector<std::size_t>> b_mismatch;
  std::optional<std::vector<std::size_t>> c_mismatch;
  bool ok() const { return !b_mismatch && !c_mismatch; }
};

/// Compares both sides of the negative-index generating-function identity
///
///   sum_{s_i >= lower} sum_n B_n^{(-s);eps} x^n/n! prod y_i^{s_i}/s_i!
///     = (1-e^{-x})^{r-1} / prod_i (eps_1...eps_i e^{-y_1-...-y_i} + e^{-x} - 1)
///
/// and its C counterpart (extra factor e^{-x}) as multivariate truncated
/// series in (x, y_1, ..., y_r). Variable 0 is x.
inline GenfunReport genfun_dual_check(const Signs& eps, std::size_t x_order, const std::vector<std::size_t>& y_orders,
                                      int lower_bound = 0) {
  const std::size_t r = eps.size();
  if (r == 0) throw std::invalid_argument("generating-function check needs r >= 1");
  if (y_orders.size() != r) throw std::invalid_argument("need one y order per depth");
  if (lower_bound < 0) throw std::invalid_argument("summation lower bound must be >= 0");
  std::vector<std::size_t> orders{x_order};
  orders.insert(orders.end(), y_orders.begin(), y_orders.end());
  using MS = MultiTruncSeries<BigRat>;

  MS lhs_b(orders, BigRat(0)), lhs_c(orders, BigRat(0));
  std::vector<std::size_t> svals(r, 0);
  auto visit = [&](auto&& self, std::size_t pos) -> void {
    if (pos == r) {
      std::vector<int> neg(r);
      BigInt yfact = 1;
      for (std::size_t i = 0; i < r; ++i) {
        neg[i] = -static_cast<int>(svals[i]);
        yfact *= factorial(static_cast<unsigned>(svals[i]));
      }
      const auto ser = ampbn_series(Index(neg), eps, x_order);
      std::vector<std::size_t> exps{0};
      exps.insert(exps.end(), svals.begin(), svals.end());
      for (std::size_t n = 0; n <= x_order; ++n) {
        exps[0] = n;
        const BigRat scale(BigInt(1), factorial(static_cast<unsigned>(n)) * yfact);
        lhs_b.set(exps, ser.B[n] * scale);
        lhs_c.set(exps, ser.C[n] * scale);
      }
      return;
    }
    for (std::size_t v = static_cast<std::size_t>(lower_bound); v <= y_orders[pos]; ++v) {
      svals[pos] = v;
      self(self, pos + 1);
    }
  };
  visit(visit, 0);

  const auto e_minus_x = MS::from_univariate(orders, 0, detail::exp_series(x_order, -1));
  const auto one = MS::constant(orders, BigRat(1));
  const auto one_minus = one - e_minus_x;
  MS rhs = one;
  for (std::size_t i = 1; i < r; ++i) rhs = rhs * one_minus;
  MS e_minus_y = one;
  int prefix_sign = 1;
  for (std::size_t i = 0; i < r; ++i) {
    e_minus_y = e_minus_y * MS::from_univariate(orders, i + 1, detail::exp_series(y_orders[i], -1));
    prefix_sign *= eps[i];
    const MS factor = e_minus_y.scaled(BigRat(prefix_sign)) + e_minus_x - one;
    rhs = rhs * factor.inverse();
  }
  const MS rhs_c = rhs * e_minus_x;

  GenfunReport rep;
  rep.depth = r;
  rep.eps = eps;
  rep.lower_bound = lower_bound;
  rep.monomials = rhs.size();
  rep.b_mismatch = lhs_b.first_mismatch(rhs);
  rep.c_mismatch = lhs_c.first_mismatch(rhs_c);
  return rep;
}

}  // namespace fmzv::char0
