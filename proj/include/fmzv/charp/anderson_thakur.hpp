#pragma once

// Anderson-Thakur polynomials H_n(t) in A[t], from the generating series
//   sum_n h_n(t,y) / Gamma_{n+1}(t) x^n = (1 - sum_i G_i(t,y)/D_i(t) x^{q^i})^{-1}
// with G_i(t,y) = prod_{k=1..i} (t^{q^i} - y^{q^k}) and H_n(t) = h_n(t, theta).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fmzv/charp/carlitz.hpp"
#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/poly.hpp"
#include "fmzv/charp/ratfunc.hpp"

namespace fmzv::charp {

/// H_{s-1}(t) = sum_j u_{s,j} t^j with every u_{s,j} in A.
struct ATPoly {
  unsigned s = 1;
  std::vector<Poly> u;  // u[j] = u_{s,j}, trailing zeros trimmed

  int t_degree() const { return static_cast<int>(u.size()) - 1; }
  const Poly& coeff(std::size_t j) const { return u.at(j); }

  std::string str() const {
    std::string out;
    for (std::size_t j = u.size(); j-- > 0;) {
      if (u[j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + u[j].str("θ") + ")";
      if (j > 0) out += j == 1 ? "*t" : "*t^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
  }
};

namespace detail {

// Polynomial in y whose coefficients are polynomials in t.
using BiPoly = std::vector<Poly>;

inline void trim(BiPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline BiPoly bi_add(const BiPoly& a, const BiPoly& b, const FiniteField& f) {
  BiPoly r(std::max(a.size(), b.size()), Poly(f));
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] += a[k];
    if (k < b.size()) r[k] += b[k];
  }
  trim(r);
  return r;
}

inline BiPoly bi_mul(const BiPoly& a, const BiPoly& b, const FiniteField& f) {
  if (a.empty() || b.empty()) return {};
  BiPoly r(a.size() + b.size() - 1, Poly(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline BiPoly bi_scale(const BiPoly& a, const Poly& c) {
  BiPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  trim(r);
  return r;
}

// Fraction with a bivariate numerator and a monic t-only denominator.
struct BiFrac {
  BiPoly num;
  Poly den;
};

inline void normalize(BiFrac& x) {
  Poly g = x.den;
  for (const auto& c : x.num) {
    if (g.is_one()) break;
    if (!c.is_zero()) g = gcd(g, c);
  }
  if (g.is_one()) return;
  for (auto& c : x.num) c = c / g;
  x.den = x.den / g;
}

inline BiFrac frac_add(const BiFrac& a, const BiFrac& b, const FiniteField& f) {
  if (a.num.empty()) return b;
  if (b.num.empty()) return a;
  const Poly g = gcd(a.den, b.den);
  const Poly ca = b.den / g, cb = a.den / g;
  BiFrac r{bi_add(bi_scale(a.num, ca), bi_scale(b.num, cb), f), a.den * ca};
  normalize(r);
  return r;
}

// G_i(t, y) as a bivariate polynomial.
inline BiPoly G_poly(unsigned i, std::uint64_t q, const FiniteField& f) {
  BiPoly acc{Poly::one(f)};
  const std::uint64_t qi = ipow(q, i);
  for (unsigned k = 1; k <= i; ++k) {
    const std::size_t yk = static_cast<std::size_t>(ipow(q, k));
    BiPoly factor(yk + 1, Poly(f));
    factor[0] = Poly::monomial(f, FiniteField::one(), static_cast<std::size_t>(qi));
    factor[yk] = Poly::constant(f, f.neg(FiniteField::one()));
    acc = bi_mul(acc, factor, f);
  }
  return acc;
}

}  // namespace detail

/// H_0 .. H_{n_max}. Throws std::logic_error if Gamma_{n+1}(t) fails to
/// clear a denominator, which would be an arithmetic bug.
inline std::vector<ATPoly> anderson_thakur(unsigned n_max, const FieldCtx& ctx) {
  using namespace detail;
  const FiniteField& f = ctx.field();
  const std::uint64_t q = ctx.q();
  const unsigned i_max = n_max == 0 ? 0 : floor_log(n_max, q);
  const CarlitzConstants K(ctx, std::max(i_max, CarlitzConstants::n_max_for_pi(n_max, q)));

  std::vector<BiFrac> step;  // G_i / D_i for q^i <= n_max
  for (unsigned i = 0; i <= i_max; ++i) step.push_back({G_poly(i, q, f), K.D(i)});

  std::vector<BiFrac> c;
  c.push_back({BiPoly{Poly::one(f)}, Poly::one(f)});
  for (unsigned n = 1; n <= n_max; ++n) {
    BiFrac acc{{}, Poly::one(f)};
    for (unsigned i = 0; i <= i_max; ++i) {
      const std::uint64_t qi = ipow(q, i);
      if (qi > n) break;
      const BiFrac& prev = c[n - qi];
      if (prev.num.empty()) continue;
      BiFrac term{bi_mul(step[i].num, prev.num, f), step[i].den * prev.den};
      normalize(term);
      acc = frac_add(acc, term, f);
    }
    c.push_back(std::move(acc));
  }

  const Poly theta = ctx.theta();
  std::vector<ATPoly> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Poly& gamma = K.Pi(n);
    BiPoly h;
    for (const auto& coef : c[n].num) {
      auto [quo, rem] = divmod(coef * gamma, c[n].den);
      if (!rem.is_zero()) throw std::logic_error("Anderson-Thakur denominator did not clear at n = " + std::to_string(n));
      h.push_back(std::move(quo));
    }
    // Substitute y = theta: u_j = sum_k [t^j y^k] theta^k.
    std::size_t tdeg = 0;
    for (const auto& hk : h) tdeg = std::max<std::size_t>(tdeg, static_cast<std::size_t>(hk.degree() + 1));
    std::vector<Poly> u(tdeg, ctx.zero());
    Poly theta_k = ctx.one();
    for (const auto& hk : h) {
      for (std::size_t j = 0; j < hk.coeffs().size(); ++j)
        if (hk.coeffs()[j].code != 0) u[j] += theta_k.scaled(hk.coeffs()[j]);
      theta_k *= theta;
    }
    while (!u.empty() && u.back().is_zero()) u.pop_back();
    out.push_back(ATPoly{n + 1, std::move(u)});
  }
  return out;
}

struct ATIdentityReport {
  unsigned n = 0, d = 0;
  RatFunc lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// sum_j u_{n,j}^{q^d} theta^j  vs  L_d^n Gamma_n S_d(n), for H = H_{n-1}.
inline ATIdentityReport at_identity_check(const ATPoly& H, unsigned d, const FieldCtx& ctx) {
  const unsigned n = H.s;
  if (n < 1) throw std::invalid_argument("identity needs n >= 1");
  const std::uint64_t Q = ipow(ctx.q(), d);
  Poly lhs = ctx.zero();
  Poly theta_j = ctx.one();
  for (const auto& uj : H.u) {
    lhs += uj.frobenius(Q) * theta_j;
    theta_j *= ctx.theta();
  }
  const CarlitzConstants K(ctx, std::max(d, CarlitzConstants::n_max_for_pi(n - 1, ctx.q())));
  const RatFunc rhs = RatFunc(K.L(d).pow(n) * K.Gamma(n)) * power_sum_exact(ctx, d, static_cast<int>(n));
  return ATIdentityReport{n, d, RatFunc(lhs), rhs};
}

}  // namespace fmzv::charp
