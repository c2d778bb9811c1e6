#pragma once

// Per-prime components of (alternating) finite multiple zeta values over
// A = F_q[theta], finite Carlitz multiple polylogarithms over A'/(P), and
// checks of their expressions through Anderson-Thakur coefficients and
// poly-Bernoulli-Carlitz numbers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/mpbcn.hpp"
#include "fmzv/charp/quot.hpp"
#include "fmzv/index.hpp"

namespace fmzv::charp {

using SignTuple = std::vector<GfElem>;  // entries in F_q^x

inline std::string signs_str(const SignTuple& eps) {
  std::string out;
  for (std::size_t i = 0; i < eps.size(); ++i) out += (i ? "," : "") + std::to_string(eps[i].code);
  return out;
}

/// All (q-1)-th roots of eps in F_{q'}^x, in code order.
inline std::vector<GfElem> gamma_roots(GfElem eps, const FieldCtx& ctx) {
  if (eps.code == 0 || !ctx.in_base(eps)) throw std::invalid_argument("sign must be a unit of F_q");
  std::vector<GfElem> out;
  for (auto g : ctx.ext_units())
    if (ctx.field().pow(g, ctx.q() - 1) == eps) out.push_back(g);
  return out;
}

/// First (q-1)-th root of eps in code order.
inline GfElem gamma_root(GfElem eps, const FieldCtx& ctx) {
  const auto roots = gamma_roots(eps, ctx);
  if (roots.empty()) throw std::logic_error("no (q-1)-th root of a sign in F_{q'}");
  return roots.front();
}

inline std::vector<GfElem> gamma_roots_of(const SignTuple& eps, const FieldCtx& ctx) {
  std::vector<GfElem> out;
  for (auto e : eps) out.push_back(gamma_root(e, ctx));
  return out;
}

/// Every tuple in (F_q^x)^r, in lexicographic code order.
inline std::vector<SignTuple> all_sign_tuples(std::size_t r, const FieldCtx& ctx) {
  std::vector<SignTuple> out{{}};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<SignTuple> next;
    for (const auto& prefix : out)
      for (auto e : ctx.base_units()) {
        next.push_back(prefix);
        next.back().push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

namespace detail {

// sum_{deg P > d_1 > ... > d_r >= 0} prod_i w_i(d_i), innermost first.
template <class Weight>
Poly nested_degree_sum(std::size_t r, const QuotCtx& Q, Weight&& w) {
  const std::size_t D = static_cast<std::size_t>(Q.degree());
  std::vector<Poly> below(D + 1, Q.one());  // below[d]: inner sum with next index < d
  for (std::size_t k = r; k-- > 0;) {
    std::vector<Poly> next(D + 1, Q.zero());
    Poly acc = Q.zero();
    for (std::size_t d = 0; d <= D; ++d) {
      next[d] = acc;
      if (d < D) acc = Q.add(acc, Q.mul(w(k, static_cast<unsigned>(d)), below[d]));
    }
    below = std::move(next);
  }
  return below[D];
}

}  // namespace detail

/// zeta_{A}(s; eps)_P via the degree regrouping into products of S_d(s_i).
inline Poly fmzv_p_component(const Index& s, const SignTuple& eps, const QuotCtx& Q) {
  if (s.depth() != eps.size()) throw std::invalid_argument("index and sign tuple differ in length");
  const FiniteField& F = Q.field();
  for (auto e : eps)
    if (e.code == 0 || !Q.field_ctx().in_base(e)) throw std::invalid_argument("signs must be units of F_q");
  return detail::nested_degree_sum(s.depth(), Q, [&](std::size_t i, unsigned d) {
    return Q.power_sum_mod(d, s[i]).scaled(F.pow(eps[i], d));
  });
}

inline Poly fmzv_p_component(const Index& s, const QuotCtx& Q) {
  return fmzv_p_component(s, SignTuple(s.depth(), FiniteField::one()), Q);
}

/// Li_{A,s}(a)_P = sum_{deg P > i_1 > ... > i_r >= 0} prod a_k^{q^{i_k}} / L_{i_k}^{s_k} in A'/(P).
inline Poly fcmpl_component(const Index& s, const std::vector<Poly>& a, const QuotCtx& Q, const CarlitzConstants& K) {
  if (a.size() != s.depth()) throw std::invalid_argument("argument count differs from depth");
  if (!s.all_positive()) throw std::invalid_argument("polylogarithm index entries must be >= 1");
  const unsigned D = static_cast<unsigned>(Q.degree());
  if (D > 0 && K.n_max() < D - 1) throw std::out_of_range("Carlitz constants table too small for deg P");
  const std::uint64_t q = Q.field_ctx().q();
  std::vector<Poly> inv_L;
  for (unsigned i = 0; i < D; ++i) {
    // Every irreducible factor of L_i has degree <= i < deg P.
    if (!Q.is_unit(K.L(i))) throw std::logic_error("L_i not invertible modulo P with i < deg P");
    inv_L.push_back(Q.inv(K.L(i)));
  }
  return detail::nested_degree_sum(s.depth(), Q, [&](std::size_t k, unsigned i) {
    return Q.mul(Q.pow(a[k], static_cast<long>(ipow(q, i))), Q.pow(inv_L[i], s[k]));
  });
}

struct FamzvCheckReport {
  std::string suite;
  Poly P;
  Index s;
  SignTuple eps;
  std::vector<GfElem> gamma;
  std::size_t leading_ones = 0;
  bool excluded = false;
  std::string note;
  std::optional<Poly> lhs, rhs;
  bool holds() const { return !excluded && lhs && rhs && *lhs == *rhs; }
};

namespace detail {

inline void check_roots(const SignTuple& eps, const std::vector<GfElem>& gamma, const FieldCtx& ctx) {
  if (gamma.size() != eps.size()) throw std::invalid_argument("root tuple length differs from signs");
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (gamma[i].code == 0 || ctx.field().pow(gamma[i], ctx.q() - 1) != eps[i])
      throw std::invalid_argument("gamma_i is not a (q-1)-th root of eps_i");
}

// 1 / (gamma_1 Gamma_{s_1} ... gamma_r Gamma_{s_r}) mod P, or nothing when P
// divides some Gamma_{s_i}.
inline std::optional<Poly> prefactor(const Index& s, const std::vector<GfElem>& gamma, const QuotCtx& Q,
                                     const CarlitzConstants& K) {
  Poly acc = Q.one();
  for (std::size_t i = 0; i < s.depth(); ++i) {
    const Poly g = Q.reduce(K.Gamma(static_cast<std::uint64_t>(s[i])));
    if (!Q.is_unit(g)) return std::nullopt;
    acc = Q.mul(acc, g.scaled(gamma[i]));
  }
  return Q.inv(acc);
}

inline std::size_t selector_weight(const std::vector<unsigned>& j) {
  std::size_t w = 0;
  for (auto x : j) w += x;
  return w;
}

inline FamzvCheckReport new_report(const char* suite, const Index& s, const SignTuple& eps,
                                   const std::vector<GfElem>& gamma, std::size_t r_prime, const QuotCtx& Q) {
  FamzvCheckReport rep{suite, Q.modulus(), s, eps, gamma, r_prime, false, {}, std::nullopt, std::nullopt};
  return rep;
}

}  // namespace detail

/// zeta(s; eps)_P  vs  (1/prod gamma_i Gamma_{s_i}) sum_{j in J_s} theta^{|j|} Li_{A,s}(gamma_i u_{s_i,j_i})_P.
inline FamzvCheckReport verify_famzv_mcpl(const Index& s, const SignTuple& eps, const std::vector<GfElem>& gamma,
                                          const QuotCtx& Q, const SpecialTables& T) {
  if (!s.all_positive() || s.depth() == 0) throw std::invalid_argument("index entries must be >= 1");
  detail::check_roots(eps, gamma, Q.field_ctx());
  auto rep = detail::new_report("famzv-mcpl", s, eps, gamma, 0, Q);
  const auto pre = detail::prefactor(s, gamma, Q, T.constants());
  if (!pre) {
    rep.excluded = true;
    rep.note = "P divides some Gamma_{s_i}";
    return rep;
  }
  rep.lhs = fmzv_p_component(s, eps, Q);
  Poly sum = Q.zero();
  const Poly theta = Q.reduce(Q.field_ctx().theta());
  for (const auto& j : T.selectors(s)) {
    std::vector<Poly> a;
    for (std::size_t i = 0; i < s.depth(); ++i) a.push_back(Q.reduce(T.twisted_coeff(s[i], gamma[i], j[i])));
    const Poly li = fcmpl_component(s, a, Q, T.constants());
    sum = Q.add(sum, Q.mul(Q.pow(theta, static_cast<long>(detail::selector_weight(j))), li));
  }
  rep.rhs = Q.mul(*pre, sum);
  return rep;
}

/// With r' leading ones (and leading signs 1):
///   zeta(1^{r'}, s; 1^{r'}, eps)_P  vs
///   (1/prod gamma_i Gamma_{s_i}) sum_j theta^{|j|}
///       sum_{deg P > d_0 > ... > d_{r'} >= r-1} BC_{q^{d_{r'}}-1}^{s,gamma,j} / (L_{d_0}...L_{d_{r'}} BC_{q^{d_{r'}}-1})
/// where BC_n without superscripts is the s = (1), gamma = (1), j = (0) value.
inline FamzvCheckReport verify_famzv_mpbcn(const Index& s, const SignTuple& eps, const std::vector<GfElem>& gamma,
                                           std::size_t r_prime, const QuotCtx& Q, const SpecialTables& T) {
  if (!s.all_positive() || s.depth() == 0) throw std::invalid_argument("index entries must be >= 1");
  detail::check_roots(eps, gamma, Q.field_ctx());
  auto rep = detail::new_report("famzv-mpbcn", s, eps, gamma, r_prime, Q);
  const auto& K = T.constants();
  const auto pre = detail::prefactor(s, gamma, Q, K);
  if (!pre) {
    rep.excluded = true;
    rep.note = "P divides some Gamma_{s_i}";
    return rep;
  }
  const FieldCtx& ctx = Q.field_ctx();
  const std::size_t r = s.depth();
  const unsigned D = static_cast<unsigned>(Q.degree());

  SignTuple eps_bar(r_prime, FiniteField::one());
  eps_bar.insert(eps_bar.end(), eps.begin(), eps.end());
  rep.lhs = fmzv_p_component(s.with_leading_ones(r_prime), eps_bar, Q);

  // w[d] = sum_j theta^{|j|} BC^{s,gamma,j}_{q^d-1} / (L_d BC_{q^d-1}) mod P, d in [r-1, deg P).
  const AmpbcnArgs plain{Index({1}), {FiniteField::one()}, {0}};
  std::vector<Poly> w(D, Q.zero());
  for (unsigned d = static_cast<unsigned>(r - 1); d < D; ++d) {
    const std::size_t n = static_cast<std::size_t>(ipow(ctx.q(), d) - 1);
    const RatFunc denom = RatFunc(K.L(d)) * ampbcn_closed(plain, n, T);
    RatFunc acc = RatFunc::zero(ctx.field());
    for (const auto& j : T.selectors(s)) {
      const RatFunc bc = ampbcn_closed(AmpbcnArgs{s, gamma, j}, n, T);
      acc += RatFunc(ctx.theta().pow(detail::selector_weight(j))) * bc;
    }
    const auto val = Q.reduce(acc / denom);
    if (!val) {
      rep.excluded = true;
      rep.note = "P meets a BC denominator at d = " + std::to_string(d);
      return rep;
    }
    w[d] = *val;
  }

  // Outer chain deg P > d_0 > ... > d_{r'-1} > d_{r'} with weights 1/L_{d_i}.
  std::vector<Poly> chain(D, Q.zero());  // chain[d]: value with current last index d
  for (unsigned d = 0; d < D; ++d) chain[d] = w[d];
  for (std::size_t level = 0; level < r_prime; ++level) {
    std::vector<Poly> next(D, Q.zero());
    Poly acc = Q.zero();
    for (unsigned d = 0; d < D; ++d) {
      next[d] = Q.mul(Q.inv(K.L(d)), acc);
      acc = Q.add(acc, chain[d]);
    }
    chain = std::move(next);
  }
  Poly total = Q.zero();
  for (unsigned d = 0; d < D; ++d) total = Q.add(total, chain[d]);
  rep.rhs = Q.mul(*pre, total);
  return rep;
}

}  // namespace fmzv::charp
