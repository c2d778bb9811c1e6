#pragma once

// Carlitz exponential, Stirling-Carlitz numbers of the second kind and the
// alternating multiple poly-Bernoulli-Carlitz numbers BC_n^{s,gamma,j}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmzv/charp/anderson_thakur.hpp"
#include "fmzv/charp/carlitz.hpp"
#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/ratfunc.hpp"
#include "fmzv/index.hpp"
#include "fmzv/series.hpp"

namespace fmzv::charp {

using RSeries = TruncSeries<RatFunc>;

/// e_C(z) = sum_i z^{q^i} / D_i truncated at z^order.
inline RSeries carlitz_exp_series(const CarlitzConstants& K, std::size_t order) {
  const FieldCtx& ctx = K.field_ctx();
  RSeries e(order, RatFunc::zero(ctx.field()));
  std::uint64_t qi = 1;
  for (unsigned i = 0; qi <= order; ++i, qi *= ctx.q()) e.set(static_cast<std::size_t>(qi), RatFunc(ctx.one(), K.D(i)));
  return e;
}

/// {n m}_C for 0 <= n, m <= bound, from (e_C)^m / Pi(m) = sum_n {n m}_C z^n / Pi(n).
class StirlingCarlitzTable {
 public:
  StirlingCarlitzTable(const CarlitzConstants& K, std::size_t bound) : bound_(bound) {
    if (K.pi_max() < bound) throw std::out_of_range("Carlitz factorial table too small for Stirling-Carlitz bound");
    const FieldCtx& ctx = K.field_ctx();
    const RSeries e = carlitz_exp_series(K, bound);
    RSeries power = RSeries::constant(bound, RatFunc::one(ctx.field()));
    values_.assign((bound + 1) * (bound + 1), RatFunc::zero(ctx.field()));
    for (std::size_t m = 0; m <= bound; ++m) {
      if (m > 0) power = series_mul(power, e);
      const RatFunc inv_pi_m(ctx.one(), K.Pi(m));
      for (std::size_t n = 0; n <= bound; ++n)
        if (!power[n].is_zero()) values_[n * (bound + 1) + m] = power[n] * RatFunc(K.Pi(n)) * inv_pi_m;
    }
  }

  std::size_t bound() const { return bound_; }
  const RatFunc& operator()(std::size_t n, std::size_t m) const {
    if (n > bound_ || m > bound_) throw std::out_of_range("Stirling-Carlitz index beyond table bound");
    return values_[n * (bound_ + 1) + m];
  }

 private:
  std::size_t bound_;
  std::vector<RatFunc> values_;
};

/// Everything the BC computations read: constants, Anderson-Thakur
/// coefficients and the Stirling-Carlitz table, for n <= n_bound and
/// index entries s <= s_max.
class SpecialTables {
 public:
  SpecialTables(const FieldCtx& ctx, std::size_t n_bound, unsigned s_max)
      : ctx_(&ctx),
        n_bound_(n_bound),
        s_max_(s_max),
        K_(ctx, needed_n_max(ctx.q(), n_bound, s_max)),
        H_(anderson_thakur(s_max == 0 ? 0 : s_max - 1, ctx)),
        stirling_(K_, n_bound) {}

  const FieldCtx& field_ctx() const { return *ctx_; }
  const CarlitzConstants& constants() const { return K_; }
  const StirlingCarlitzTable& stirling() const { return stirling_; }
  std::size_t n_bound() const { return n_bound_; }
  unsigned s_max() const { return s_max_; }

  /// H_{s-1}; requires 1 <= s <= s_max.
  const ATPoly& at(int s) const {
    if (s < 1 || static_cast<unsigned>(s) > s_max_) throw std::out_of_range("Anderson-Thakur index outside the table");
    return H_[static_cast<std::size_t>(s - 1)];
  }

  /// All j in J_s in lexicographic order.
  std::vector<std::vector<unsigned>> selectors(const Index& s) const {
    std::vector<std::vector<unsigned>> out{{}};
    for (int si : s.entries()) {
      std::vector<std::vector<unsigned>> next;
      const int m = at(si).t_degree();
      for (const auto& prefix : out)
        for (int j = 0; j <= m; ++j) {
          next.push_back(prefix);
          next.back().push_back(static_cast<unsigned>(j));
        }
      out = std::move(next);
    }
    return out;
  }

  void check_selector(const Index& s, const std::vector<unsigned>& j) const {
    if (j.size() != s.depth()) throw std::invalid_argument("selector length differs from depth");
    for (std::size_t i = 0; i < j.size(); ++i)
      if (static_cast<int>(j[i]) > at(s[i]).t_degree()) throw std::invalid_argument("selector outside J_s");
  }

  /// gamma_i u_{s_i, j_i}.
  Poly twisted_coeff(int s, GfElem gamma, unsigned j) const { return at(s).coeff(j).scaled(gamma); }

 private:
  static unsigned needed_n_max(std::uint64_t q, std::size_t n_bound, unsigned s_max) {
    unsigned n = std::max(floor_log(n_bound + 1, q), CarlitzConstants::n_max_for_pi(n_bound, q));
    if (s_max > 0) n = std::max(n, CarlitzConstants::n_max_for_pi(s_max - 1, q));
    return n;
  }

  const FieldCtx* ctx_;
  std::size_t n_bound_;
  unsigned s_max_;
  CarlitzConstants K_;
  std::vector<ATPoly> H_;
  StirlingCarlitzTable stirling_;
};

struct AmpbcnArgs {
  Index s;
  std::vector<GfElem> gamma;
  std::vector<unsigned> j;
};

namespace detail {

inline void check_ampbcn_args(const AmpbcnArgs& a, const SpecialTables& T) {
  if (a.s.depth() == 0) throw std::invalid_argument("AMPBCN needs depth >= 1");
  if (!a.s.all_positive()) throw std::invalid_argument("AMPBCN index entries must be >= 1");
  if (a.gamma.size() != a.s.depth()) throw std::invalid_argument("twist length differs from depth");
  for (auto g : a.gamma)
    if (g.code == 0 || !T.field_ctx().field().contains(g)) throw std::invalid_argument("twist entries must be units of F_{q'}");
  T.check_selector(a.s, a.j);
}

// prod_{i >= from} (gamma_i u_i)^{q^{d_i}} / L_{d_i}^{s_i} summed over
// bound > d_from > ... > d_r >= 0.
inline RatFunc tail_sum(const AmpbcnArgs& a, const SpecialTables& T, std::size_t from, unsigned bound) {
  const FieldCtx& ctx = T.field_ctx();
  const auto& K = T.constants();
  const std::size_t r = a.s.depth();
  RatFunc total = RatFunc::zero(ctx.field());
  std::vector<unsigned> d(r);
  std::function<void(std::size_t, unsigned, Poly, Poly)> rec = [&](std::size_t i, unsigned below, Poly num, Poly den) {
    if (i == r) {
      total += RatFunc(num, den);
      return;
    }
    for (unsigned di = 0; di < below; ++di) {
      if (di + 1 < r - i) continue;  // not enough room for the remaining strictly smaller indices
      const Poly x = T.twisted_coeff(a.s[i], a.gamma[i], a.j[i]).frobenius(ipow(ctx.q(), di));
      rec(i + 1, di, num * x, den * K.L(di).pow(static_cast<std::uint64_t>(a.s[i])));
    }
  };
  rec(from, bound, ctx.one(), ctx.one());
  return total;
}

// The d_1 = m term of the polylogarithm without the e_C power:
// (gamma_1 u_1)^{q^m} / L_m^{s_1} * tail_sum(.., 1, m).
inline RatFunc head_coefficient(const AmpbcnArgs& a, const SpecialTables& T, unsigned m) {
  const FieldCtx& ctx = T.field_ctx();
  const Poly x = T.twisted_coeff(a.s[0], a.gamma[0], a.j[0]).frobenius(ipow(ctx.q(), m));
  const RatFunc head(x, T.constants().L(m).pow(static_cast<std::uint64_t>(a.s[0])));
  return head * tail_sum(a, T, 1, m);
}

}  // namespace detail

/// BC_0 .. BC_N from the generating function: the truncated polylogarithm
/// along e_C(z), divided by e_C(z), rescaled by Pi(n).
inline std::vector<RatFunc> ampbcn_series(const AmpbcnArgs& a, std::size_t N, const SpecialTables& T) {
  detail::check_ampbcn_args(a, T);
  if (N > T.n_bound()) throw std::out_of_range("N beyond the precomputed bound");
  const FieldCtx& ctx = T.field_ctx();
  const std::size_t order = N + 1;
  const RSeries e = carlitz_exp_series(T.constants(), order);
  RSeries num(order, RatFunc::zero(ctx.field()));
  std::uint64_t qm = 1;
  for (unsigned m = 0; qm <= order; ++m, qm *= ctx.q()) {
    const RatFunc c = detail::head_coefficient(a, T, m);
    if (c.is_zero()) continue;
    num = num + series_pow(e, qm).scaled(c);
  }
  const RSeries quotient = series_div(num, e);  // order N
  std::vector<RatFunc> out;
  for (std::size_t n = 0; n <= N; ++n) out.push_back(quotient[n] * RatFunc(T.constants().Pi(n)));
  return out;
}

/// BC_n as the finite Stirling-Carlitz sum over log_q(n+1) >= d_1 > ... > d_r >= 0.
inline RatFunc ampbcn_closed(const AmpbcnArgs& a, std::size_t n, const SpecialTables& T) {
  detail::check_ampbcn_args(a, T);
  if (n > T.n_bound()) throw std::out_of_range("n beyond the precomputed bound");
  const FieldCtx& ctx = T.field_ctx();
  const auto& K = T.constants();
  RatFunc total = RatFunc::zero(ctx.field());
  const unsigned top = floor_log(n + 1, ctx.q());
  for (unsigned d1 = 0; d1 <= top; ++d1) {
    const std::uint64_t qd = ipow(ctx.q(), d1);
    const RatFunc& st = T.stirling()(n, static_cast<std::size_t>(qd - 1));
    if (st.is_zero()) continue;
    total += RatFunc(K.Gamma(qd)) * st * detail::head_coefficient(a, T, d1);
  }
  return total;
}

struct RecursionReport {
  unsigned m = 0;
  RatFunc lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// BC_{q^m-1}^{s} vs BC_{q^m-1}^{s_1} * sum_{d=r-2}^{m-1} BC_{q^d-1}^{s*} / Gamma_{q^d}.
inline RecursionReport recursion_check(const AmpbcnArgs& a, unsigned m, const SpecialTables& T) {
  if (a.s.depth() < 2) throw std::invalid_argument("recursion needs depth >= 2");
  if (m < 1) throw std::invalid_argument("recursion needs m >= 1");
  const FieldCtx& ctx = T.field_ctx();
  const std::size_t r = a.s.depth();
  const std::size_t n = static_cast<std::size_t>(ipow(ctx.q(), m) - 1);
  AmpbcnArgs head{a.s.prefix(1), {a.gamma[0]}, {a.j[0]}};
  AmpbcnArgs rest{a.s.suffix_from(1), {a.gamma.begin() + 1, a.gamma.end()}, {a.j.begin() + 1, a.j.end()}};
  RatFunc sum = RatFunc::zero(ctx.field());
  for (unsigned d = static_cast<unsigned>(r - 2); d + 1 <= m; ++d) {
    const std::uint64_t qd = ipow(ctx.q(), d);
    sum += ampbcn_closed(rest, static_cast<std::size_t>(qd - 1), T) * RatFunc(ctx.one(), T.constants().Gamma(qd));
  }
  return RecursionReport{m, ampbcn_closed(a, n, T), ampbcn_closed(head, n, T) * sum};
}

}  // namespace fmzv::charp
