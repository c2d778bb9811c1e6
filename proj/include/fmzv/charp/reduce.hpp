#pragma once

// Rewriting zeta_A(s; eps) with arbitrary integer entries as a k-linear
// combination of all-positive-index values plus a constant in k, and its
// per-prime verification.
//
// With w_i(d) = eps_i^d S_d(s_i), the component at P is
//   zeta(s)_P = sum_{deg P > d_1 > ... > d_r >= 0} prod_i w_i(d_i).
// If s_{M+1} <= 0 then w_{M+1}(d) = 0 for d >= N = N(-s_{M+1}). Splitting
// by the first position whose degree falls below N gives
//   zeta(s)_P = sum_{M'=0}^{M} Z_{>=N}(s_1..s_{M'})_P * c_{M'},
//   c_{M'} = sum_{N > d_{M'+1} > ... > d_r >= 0} prod_{i > M'} w_i(d_i) in k,
// valid once deg P >= N, and each head sum Z_{>=N} over degrees >= N is
// the full value minus the same decomposition of its low-degree part.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fmzv/charp/carlitz.hpp"
#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/fmzvp.hpp"
#include "fmzv/charp/quot.hpp"
#include "fmzv/charp/ratfunc.hpp"
#include "fmzv/index.hpp"

namespace fmzv::charp {

struct VanishingBound {
  unsigned s = 0;
  unsigned N = 1;
};

/// N(s) with S_d(-s) = 0 for every d >= N(s). The recurrence N(0) = 1,
/// N(s) = max{N(t) + 1 : t < s} is evaluated and checked against s + 1.
inline VanishingBound vanishing_bound(unsigned s) {
  std::vector<unsigned> N{1};
  for (unsigned k = 1; k <= s; ++k) {
    unsigned m = 0;
    for (unsigned t = 0; t < k; ++t) m = std::max(m, N[t] + 1);
    N.push_back(m);
  }
  if (N[s] != s + 1) throw std::logic_error("vanishing bound recurrence disagrees with s + 1");
  return VanishingBound{s, N[s]};
}

struct VanishingCheck {
  unsigned s = 0, N = 0;
  std::vector<std::pair<unsigned, bool>> degrees;  // (d, S_d(-s) == 0)
  bool holds() const {
    for (auto& [d, ok] : degrees)
      if (!ok) return false;
    return true;
  }
};

/// Exhaustive check of S_d(-s) = 0 for N(s) <= d <= N(s) + extra.
inline VanishingCheck vanishing_check(unsigned s, const FieldCtx& ctx, unsigned extra = 2,
                                      std::uint64_t budget = FieldCtx::default_enum_budget) {
  const auto vb = vanishing_bound(s);
  VanishingCheck out{s, vb.N, {}};
  for (unsigned d = vb.N; d <= vb.N + extra; ++d)
    out.degrees.emplace_back(d, power_sum_exact(ctx, d, -static_cast<int>(s), budget).is_zero());
  return out;
}

struct ZetaTerm {
  RatFunc coeff;
  Index index;
  SignTuple signs;
};

class ZetaCombination {
 public:
  explicit ZetaCombination(const FiniteField& f) : constant_(RatFunc::zero(f)), f_(&f) {}

  const std::vector<ZetaTerm>& terms() const { return terms_; }
  const RatFunc& constant() const { return constant_; }
  /// Smallest deg P for which the combination equals the input component.
  unsigned min_prime_degree() const { return min_deg_; }

  void add_term(const RatFunc& c, const Index& s, const SignTuple& eps) {
    if (c.is_zero()) return;
    if (s.depth() == 0) {
      constant_ += c;
      return;
    }
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
      if (it->index == s && it->signs == eps) {
        it->coeff += c;
        if (it->coeff.is_zero()) terms_.erase(it);
        return;
      }
    terms_.push_back(ZetaTerm{c, s, eps});
  }
  void add(const ZetaCombination& o, const RatFunc& scale) {
    add_term(o.constant_ * scale, Index{}, {});
    for (const auto& t : o.terms_) add_term(t.coeff * scale, t.index, t.signs);
    min_deg_ = std::max(min_deg_, o.min_deg_);
  }
  void require_degree(unsigned d) { min_deg_ = std::max(min_deg_, d); }

  /// Terms sorted by (depth, index, signs) so output is canonical.
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const ZetaTerm& a, const ZetaTerm& b) {
      if (a.index.depth() != b.index.depth()) return a.index.depth() < b.index.depth();
      if (a.index != b.index) return a.index < b.index;
      return a.signs < b.signs;
    });
  }

  bool is_constant() const { return terms_.empty(); }

  /// e.g. "ζ(1) - 1"; signs are shown only when some entry differs from 1.
  std::string str() const {
    std::string out;
    auto append = [&](const RatFunc& c, const std::string& body) {
      // Scalars +-1 print as a bare sign; other coefficients in parentheses.
      const bool scalar = c.is_polynomial() && c.num().is_constant();
      bool negative = false;
      std::string cs;
      if (scalar && c.num().leading() == FiniteField::one()) {
        cs = body.empty() ? "1" : "";
      } else if (scalar && f_->neg(c.num().leading()) == FiniteField::one()) {
        negative = true;
        cs = body.empty() ? "1" : "";
      } else {
        cs = scalar ? c.num().str("θ") : "(" + c.str() + ")";
      }
      if (out.empty())
        out = negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      out += cs;
      if (!body.empty()) out += (cs.empty() ? "" : "*") + body;
    };
    for (const auto& t : terms_) {
      bool plain = true;
      for (auto e : t.signs) plain = plain && e == FiniteField::one();
      std::string body = "ζ(" + t.index.csv() + (plain ? "" : "; " + signs_str(t.signs)) + ")";
      append(t.coeff, body);
    }
    if (!constant_.is_zero() || terms_.empty()) append(constant_, "");
    return out;
  }

 private:
  std::vector<ZetaTerm> terms_;
  RatFunc constant_;
  const FiniteField* f_;
  unsigned min_deg_ = 0;
};

namespace detail {

// sum_{bound > d_from > ... > d_last >= 0} prod eps_i^{d_i} S_{d_i}(s_i), exactly.
inline RatFunc bounded_tail(const Index& s, const SignTuple& eps, std::size_t from, std::size_t last_plus_one,
                            unsigned bound, const FieldCtx& ctx, std::map<std::pair<unsigned, int>, RatFunc>& cache,
                            std::uint64_t budget) {
  auto S = [&](unsigned d, int k) -> const RatFunc& {
    auto it = cache.find({d, k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(d, k), power_sum_exact(ctx, d, k, budget)).first;
    return it->second;
  };
  const FiniteField& F = ctx.field();
  // below[d]: sum over the inner entries with the next degree < d.
  std::vector<RatFunc> below(bound + 1, RatFunc::one(F));
  for (std::size_t k = last_plus_one; k-- > from;) {
    std::vector<RatFunc> next(bound + 1, RatFunc::zero(F));
    RatFunc acc = RatFunc::zero(F);
    for (unsigned d = 0; d <= bound; ++d) {
      next[d] = acc;
      if (d < bound && !below[d].is_zero()) {
        const RatFunc w = S(d, s[k]) * RatFunc(ctx.constant(F.pow(eps[k], d)));
        acc += w * below[d];
      }
    }
    below = std::move(next);
  }
  return below[bound];
}

struct Reducer {
  const FieldCtx& ctx;
  std::uint64_t budget;
  std::map<std::pair<unsigned, int>, RatFunc> cache;

  // Z_{>=N}(t; eps) for an all-positive t: degrees restricted to >= N.
  ZetaCombination head_sum(const Index& t, const SignTuple& eps, unsigned N) {
    ZetaCombination out(ctx.field());
    out.require_degree(N);
    if (t.depth() == 0) {
      out.add_term(RatFunc::one(ctx.field()), Index{}, {});
      return out;
    }
    out.add_term(RatFunc::one(ctx.field()), t, eps);
    for (std::size_t m = 0; m < t.depth(); ++m) {
      const RatFunc c = bounded_tail(t, eps, m, t.depth(), N, ctx, cache, budget);
      if (c.is_zero()) continue;
      const Index head = t.prefix(m);
      const SignTuple head_eps(eps.begin(), eps.begin() + static_cast<std::ptrdiff_t>(m));
      out.add(head_sum(head, head_eps, N), -c);
    }
    return out;
  }

  ZetaCombination reduce(const Index& s, const SignTuple& eps) {
    ZetaCombination out(ctx.field());
    std::size_t pos = s.depth();
    for (std::size_t i = 0; i < s.depth(); ++i)
      if (s[i] <= 0) {
        pos = i;
        break;
      }
    if (pos == s.depth()) {
      out.add_term(RatFunc::one(ctx.field()), s, eps);
      return out;
    }
    const unsigned N = vanishing_bound(static_cast<unsigned>(-s[pos])).N;
    out.require_degree(N);
    // M = pos entries precede the first non-positive one.
    for (std::size_t m = 0; m <= pos; ++m) {
      const RatFunc c = bounded_tail(s, eps, m, s.depth(), N, ctx, cache, budget);
      if (c.is_zero()) continue;
      const SignTuple head_eps(eps.begin(), eps.begin() + static_cast<std::ptrdiff_t>(m));
      out.add(head_sum(s.prefix(m), head_eps, N), c);
    }
    return out;
  }
};

}  // namespace detail

/// zeta_A(s; eps) as sum_k c_k zeta_A(t_k; eps_k) + c_0 with every t_k all-positive.
inline ZetaCombination reduce_index(const Index& s, const SignTuple& eps, const FieldCtx& ctx,
                                    std::uint64_t budget = FieldCtx::default_enum_budget) {
  if (s.depth() != eps.size()) throw std::invalid_argument("index and sign tuple differ in length");
  for (auto e : eps)
    if (e.code == 0 || !ctx.in_base(e)) throw std::invalid_argument("signs must be units of F_q");
  detail::Reducer red{ctx, budget, {}};
  ZetaCombination out = s.depth() == 0 ? [&] {
    ZetaCombination c(ctx.field());
    c.add_term(RatFunc::one(ctx.field()), Index{}, {});
    return c;
  }()
                                       : red.reduce(s, eps);
  out.canonicalize();
  return out;
}

struct ReductionPrimeResult {
  Poly P;
  bool excluded = false;
  std::string note;
  std::optional<Poly> original, combined;
  bool holds() const { return excluded || (original && combined && *original == *combined); }
};

struct ReductionReport {
  Index s;
  SignTuple eps;
  std::vector<ReductionPrimeResult> primes;
  bool holds() const {
    for (const auto& p : primes)
      if (!p.holds()) return false;
    return true;
  }
  std::size_t excluded_count() const {
    std::size_t n = 0;
    for (const auto& p : primes) n += p.excluded;
    return n;
  }
};

/// Evaluates a combination at P; nothing when P meets a coefficient denominator.
inline std::optional<Poly> evaluate_at(const ZetaCombination& z, const QuotCtx& Q) {
  auto acc = Q.reduce(z.constant());
  if (!acc) return std::nullopt;
  for (const auto& t : z.terms()) {
    const auto c = Q.reduce(t.coeff);
    if (!c) return std::nullopt;
    *acc = Q.add(*acc, Q.mul(*c, fmzv_p_component(t.index, t.signs, Q)));
  }
  return acc;
}

/// Compares zeta(s; eps)_P with the reduced combination at every monic
/// irreducible P of degree <= deg_bound. Primes below the combination's
/// minimal degree, or meeting a coefficient denominator, are excluded.
inline ReductionReport verify_reduction(const Index& s, const SignTuple& eps, const ZetaCombination& z,
                                        const FieldCtx& ctx, unsigned deg_bound) {
  ReductionReport rep{s, eps, {}};
  for (unsigned deg = 1; deg <= deg_bound; ++deg)
    for (const auto& P : ctx.monic_irreducibles(deg)) {
      ReductionPrimeResult pr{P, false, {}, std::nullopt, std::nullopt};
      const QuotCtx Q(ctx, P);
      pr.original = fmzv_p_component(s, eps, Q);
      if (deg < z.min_prime_degree()) {
        pr.excluded = true;
        pr.note = "deg P below the vanishing bound";
      } else if (auto v = evaluate_at(z, Q)) {
        pr.combined = *v;
      } else {
        pr.excluded = true;
        pr.note = "P divides a coefficient denominator";
      }
      rep.primes.push_back(std::move(pr));
    }
  return rep;
}

inline ReductionReport verify_reduction(const Index& s, const SignTuple& eps, const FieldCtx& ctx, unsigned deg_bound) {
  return verify_reduction(s, eps, reduce_index(s, eps, ctx), ctx, deg_bound);
}

}  // namespace fmzv::charp
