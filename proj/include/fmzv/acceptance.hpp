#pragma once

// Acceptance suites shared by the acceptance test binary and `fmzv selftest`.
// Reports are deterministic: no timings or thread counts enter the text.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fmzv/char0/fmzv.hpp"
#include "fmzv/char0/mpbn.hpp"
#include "fmzv/char0/stirling.hpp"
#include "fmzv/charp/anderson_thakur.hpp"
#include "fmzv/charp/carlitz.hpp"
#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/fmzvp.hpp"
#include "fmzv/charp/mpbcn.hpp"
#include "fmzv/charp/quot.hpp"
#include "fmzv/charp/reduce.hpp"
#include "fmzv/index.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/residue.hpp"

namespace fmzv::acceptance {

struct Config {
  unsigned jobs = 1;
  std::uint64_t seed = 20240517;
};

struct SuiteResult {
  int id = 0;
  std::string title;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t excluded = 0;
  std::string first_failure;
  std::vector<std::string> notes;
  double seconds = 0;        // wall time, never rendered in the report
  double limit_seconds = 0;  // runtime budget
  bool pass() const { return failures == 0 && checks > 0; }
  bool within_budget() const { return seconds <= limit_seconds; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
  void merge(const SuiteResult& o) {
    checks += o.checks;
    excluded += o.excluded;
    if (o.failures > 0 && failures == 0) first_failure = o.first_failure;
    failures += o.failures;
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

namespace detail {

template <class Fn>
SuiteResult timed(int id, std::string title, double limit, Fn&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.record(false, [&] { return std::string("exception: ") + e.what(); });
  }
  r.id = id;
  r.title = std::move(title);
  r.limit_seconds = limit;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Every tuple over `values` of length `r`, lexicographic.
inline std::vector<std::vector<int>> tuples(const std::vector<int>& values, std::size_t r) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out)
      for (int v : values) {
        next.push_back(p);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Index> indices(const std::vector<int>& values, std::size_t r_min, std::size_t r_max) {
  std::vector<Index> out;
  for (std::size_t r = r_min; r <= r_max; ++r)
    for (auto& t : tuples(values, r)) out.emplace_back(std::move(t));
  return out;
}

inline std::string gammas_str(const std::vector<charp::GfElem>& g) { return charp::signs_str(g); }

// Brute force sum over l > n_1 > ... > n_r > 0 of prod a_i^{n_i} / n_i^{s_i},
// enumerating every tuple explicitly.
inline ResidueInt brute_mpl(const Index& s, const std::vector<std::int64_t>& a, std::int64_t l) {
  ResidueInt total(0, l);
  std::vector<std::int64_t> n(s.depth());
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t below) {
    if (i == s.depth()) {
      ResidueInt term(1, l);
      for (std::size_t k = 0; k < n.size(); ++k) {
        ResidueInt nk(n[k], l);
        term *= ResidueInt(a[k], l).pow(n[k]) * (s[k] >= 0 ? nk.inverse().pow(s[k]) : nk.pow(-s[k]));
      }
      total += term;
      return;
    }
    for (std::int64_t v = 1; v < below; ++v) {
      n[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, l);
  return total;
}

// Fixed-seed sample of `k` entries; Fisher-Yates on raw engine output so
// the choice does not depend on the standard library's distributions.
template <class T>
std::vector<T> sample(std::vector<T> pool, std::size_t k, std::mt19937_64& rng) {
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng() % i]);
  pool.resize(std::min(k, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Cartesian product of per-position choices.
template <class T>
std::vector<std::vector<T>> product(const std::vector<std::vector<T>>& choices) {
  std::vector<std::vector<T>> out{{}};
  for (const auto& c : choices) {
    std::vector<std::vector<T>> next;
    for (const auto& p : out)
      for (const auto& x : c) {
        next.push_back(p);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

/// 1. ampbn_closed vs ampbn_series.
inline SuiteResult suite_mpbn(const Config& cfg) {
  using namespace char0;
  const std::size_t N = 12;
  const StirlingTable table(N + 1);
  const auto idx = detail::indices({-2, -1, 0, 1, 2, 3}, 1, 3);
  auto parts = parallel_map<SuiteResult>(idx.size(), cfg.jobs, [&](std::size_t i) {
    SuiteResult r;
    const Index& s = idx[i];
    for (const auto& eps : Signs::enumerate(s.depth())) {
      const auto ser = ampbn_series(s, eps, N);
      for (std::size_t n = 0; n <= N; ++n) {
        const BigRat c = ampbn_closed(s, eps, n, MpbnVariant::C, table);
        r.record(c == ser.C[n], [&] {
          return "C_" + std::to_string(n) + " s=" + s.str() + " eps=" + eps.str() + ": closed " + c.get_str() +
                 " series " + ser.C[n].get_str();
        });
        if (!eps.all_plus()) continue;
        const BigRat b = ampbn_closed(s, eps, n, MpbnVariant::B, table);
        r.record(b == ser.B[n], [&] {
          return "B_" + std::to_string(n) + " s=" + s.str() + ": closed " + b.get_str() + " series " + ser.B[n].get_str();
        });
      }
    }
    return r;
  });
  SuiteResult out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

/// 2. Generating-function duals for negative indices.
inline SuiteResult suite_genfun(const Config& cfg) {
  using namespace char0;
  std::vector<Signs> all;
  for (std::size_t r = 1; r <= 2; ++r)
    for (auto& e : Signs::enumerate(r)) all.push_back(e);
  auto reports = parallel_map<GenfunReport>(all.size(), cfg.jobs, [&](std::size_t i) {
    return genfun_dual_check(all[i], 6, std::vector<std::size_t>(all[i].size(), 3), 0);
  });
  SuiteResult out;
  for (const auto& rep : reports)
    out.record(rep.ok(), [&] { return "generating identity fails for eps=" + rep.eps.str(); });
  // Summation from s_i = 1 instead of 0, kept as information only.
  std::size_t agree = 0, total = 0;
  for (std::size_t r = 1; r <= 2; ++r) {
    ++total;
    agree += genfun_dual_check(Signs::all_plus(r), 6, std::vector<std::size_t>(r, 3), 1).ok();
  }
  out.notes.push_back("info: summing s_i from 1 instead of 0 (eps all +) agrees in " + std::to_string(agree) + "/" +
                      std::to_string(total) + " depths");
  return out;
}

/// 3. Stirling duality and the (l-1, m) congruence.
inline SuiteResult suite_stirling(const Config&) {
  using namespace char0;
  const StirlingTable table(23);
  SuiteResult out;
  for (std::int64_t l : primes_between(2, 23)) {
    for (std::int64_t n = 2; n < l; ++n)
      for (std::int64_t m = 1; m < n; ++m) {
        const BigInt a = table.first(n, m), b = table.second(l - m, l - n);
        const BigInt diff = a - b;
        out.record(mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(l)) != 0, [&] {
          return "duality fails at l=" + std::to_string(l) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
        });
      }
    for (std::int64_t m = 1; m < l; ++m) {
      BigInt v = factorial(static_cast<unsigned>(m)) * table.second(l - 1, m);
      if (m & 1) v = -v;
      const BigInt diff = v + 1;
      out.record(mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(l)) != 0, [&] {
        return "(l-1, m) congruence fails at l=" + std::to_string(l) + " m=" + std::to_string(m);
      });
    }
  }
  return out;
}

/// 4. Char-0 FMZV congruences and the finite polylogarithm specialization.
inline SuiteResult suite_fmzv0(const Config& cfg) {
  using namespace char0;
  const auto primes = primes_between(5, 31);
  const StirlingTable table(32);
  const auto idx = detail::indices({1, 2, 3}, 1, 3);
  struct Item {
    Index s;
    Signs eps;
  };
  std::vector<Item> items;
  for (const auto& s : idx)
    for (auto& e : Signs::enumerate(s.depth())) items.push_back({s, e});
  auto parts = parallel_map<SuiteResult>(items.size(), cfg.jobs, [&](std::size_t i) {
    SuiteResult r;
    const auto& [s, eps] = items[i];
    for (std::int64_t l : primes) {
      for (std::size_t rp = 0; rp <= 2; ++rp) {
        const auto rep = verify_0result(s, eps, rp, l, table);
        if (rep.exceptional()) {
          ++r.excluded;
          continue;
        }
        r.record(rep.holds(), [&] {
          return "congruence fails: s=" + s.str() + " eps=" + eps.str() + " r'=" + std::to_string(rp) +
                 " l=" + std::to_string(l) + " lhs=" + std::to_string(rep.lhs.value()) +
                 " rhs=" + std::to_string(rep.rhs->value());
        });
      }
      std::vector<std::int64_t> a(eps.entries().begin(), eps.entries().end());
      std::vector<ResidueInt> ar;
      for (auto x : a) ar.emplace_back(x, l);
      const ResidueInt oracle = detail::brute_mpl(s, a, l);
      r.record(finite_mpl_component(s, ar, l) == oracle && fmzv_component(s, eps, l) == oracle, [&] {
        return "polylog specialization fails: s=" + s.str() + " eps=" + eps.str() + " l=" + std::to_string(l);
      });
      if (eps.all_plus()) {
        std::vector<ResidueInt> ones(s.depth(), ResidueInt(1, l));
        r.record(finite_mpl_component(s, ones, l) == fmzv_component(s, l), [&] {
          return "polylog at 1 fails: s=" + s.str() + " l=" + std::to_string(l);
        });
      }
    }
    return r;
  });
  SuiteResult out;
  for (const auto& p : parts) out.merge(p);
  out.notes.push_back("primes " + std::to_string(primes.front()) + ".." + std::to_string(primes.back()) +
                      "; l dividing a denominator counted as excluded");
  return out;
}

/// 5. Carlitz constants, Anderson-Thakur polynomials, Stirling-Carlitz table.
inline SuiteResult suite_carlitz(const Config&) {
  using namespace charp;
  SuiteResult out;
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::uint64_t q = ctx.q();
    const std::string tag = "q=" + std::to_string(q) + " ";
    const CarlitzConstants K(ctx, 4);
    const Poly theta = ctx.theta();
    auto br = [&](unsigned n) { return theta.pow(ipow(q, n)) - theta; };
    for (unsigned n = 1; n <= 4; ++n) {
      Poly D = ctx.one(), L = ctx.one();
      for (unsigned i = 0; i < n; ++i) D *= br(n - i).pow(ipow(q, i));
      for (unsigned i = 1; i <= n; ++i) L *= br(i);
      if (n & 1) L = -L;
      out.record(K.D(n) == D && K.L(n) == L, [&] { return tag + "D_n or L_n product form fails at n=" + std::to_string(n); });
    }
    for (unsigned m = 1; m <= 2; ++m)
      for (unsigned n = 1; n <= 2; ++n)
        out.record(br(m + n) == br(m).pow(ipow(q, n)) + br(n), [&] {
          return tag + "bracket identity fails at m=" + std::to_string(m) + " n=" + std::to_string(n);
        });
    for (unsigned d = 0; d <= 3; ++d) {
      Poly prod = ctx.one();
      for (unsigned j = 0; j < d; ++j) prod *= K.D(j).pow(q - 1);
      out.record(K.Gamma(ipow(q, d)) == prod, [&] { return tag + "Gamma_{q^d} fails at d=" + std::to_string(d); });
    }
    const auto H = anderson_thakur(static_cast<unsigned>(q * q), ctx);
    for (unsigned n = 0; n + 1 < q; ++n)
      out.record(H[n].u.size() == 1 && H[n].u[0].is_one(), [&] { return tag + "H_n != 1 at n=" + std::to_string(n); });
    for (unsigned n = 1; n <= q * q; ++n)
      for (unsigned d = 0; d <= 2; ++d) {
        const auto rep = at_identity_check(H[n - 1], d, ctx);
        out.record(rep.holds(), [&] {
          return tag + "Anderson-Thakur identity fails at n=" + std::to_string(n) + " d=" + std::to_string(d);
        });
      }
    const std::size_t bound = static_cast<std::size_t>(ipow(q, 3) - 1);
    const StirlingCarlitzTable S(K, bound);
    const RatFunc zero = RatFunc::zero(ctx.field()), one = RatFunc::one(ctx.field());
    for (std::size_t n = 0; n <= bound; ++n)
      for (std::size_t m = n + 1; m <= bound; ++m)
        out.record(S(n, m) == zero, [&] { return tag + "Stirling-Carlitz nonzero above diagonal"; });
    for (unsigned a = 0; a <= 3; ++a)
      for (unsigned b = 0; b <= 3; ++b) {
        const auto n = static_cast<std::size_t>(ipow(q, a) - 1), m = static_cast<std::size_t>(ipow(q, b) - 1);
        out.record(S(n, m) == (a == b ? one : zero), [&] {
          return tag + "Stirling-Carlitz delta fails at (" + std::to_string(n) + "," + std::to_string(m) + ")";
        });
      }
  }
  return out;
}

/// 6. ampbcn_closed vs ampbcn_series, and the depth recursion.
inline SuiteResult suite_mpbcn(const Config& cfg) {
  using namespace charp;
  SuiteResult out;
  std::mt19937_64 rng(cfg.seed);
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::uint64_t q = ctx.q();
    const std::size_t N = static_cast<std::size_t>(q * q - 1);
    const SpecialTables T(ctx, N, 2);
    const auto units = ctx.ext_units();
    std::vector<AmpbcnArgs> work;
    for (const auto& s : detail::indices({1, 2}, 1, 2)) {
      std::vector<std::vector<GfElem>> choices;
      for (std::size_t i = 0; i < s.depth(); ++i)
        choices.push_back(q == 3 ? detail::sample(units, 4, rng) : units);
      for (const auto& g : detail::product(choices))
        for (const auto& j : T.selectors(s)) work.push_back({s, g, j});
    }
    auto parts = parallel_map<SuiteResult>(work.size(), cfg.jobs, [&](std::size_t i) {
      SuiteResult r;
      const auto& a = work[i];
      auto where = [&] {
        std::string j;
        for (auto x : a.j) j += (j.empty() ? "" : ",") + std::to_string(x);
        return "q=" + std::to_string(q) + " s=" + a.s.str() + " gamma=" + detail::gammas_str(a.gamma) + " j=(" + j + ")";
      };
      const auto ser = ampbcn_series(a, N, T);
      for (std::size_t n = 0; n <= N; ++n)
        r.record(ser[n] == ampbcn_closed(a, n, T), [&] { return where() + " n=" + std::to_string(n); });
      if (a.s.depth() >= 2)
        for (unsigned m = 1; m <= 2; ++m)
          r.record(recursion_check(a, m, T).holds(), [&] { return where() + " recursion m=" + std::to_string(m); });
      return r;
    });
    for (const auto& part : parts) out.merge(part);
    out.notes.push_back("q=" + std::to_string(q) + ": " + std::to_string(work.size()) + " (s, gamma, j) cases");
  }
  return out;
}

/// 7. Finite alternating MZVs against the polylogarithm and BC-number formulas.
inline SuiteResult suite_fmzvp(const Config& cfg) {
  using namespace charp;
  SuiteResult out;
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::uint64_t q = ctx.q();
    const std::string tag = "q=" + std::to_string(q) + " ";
    const SpecialTables T(ctx, static_cast<std::size_t>(q * q - 1), 2);
    // gamma^{q^d} = eps^d gamma for every root.
    for (auto e : ctx.base_units())
      for (auto g : gamma_roots(e, ctx))
        for (unsigned d = 0; d <= 6; ++d)
          out.record(ctx.field().pow(g, ipow(q, d)) == ctx.field().mul(ctx.field().pow(e, d), g), [&] {
            return tag + "root twist fails for eps=" + std::to_string(e.code) + " gamma=" + std::to_string(g.code);
          });
    std::vector<Poly> primes;
    for (unsigned deg = 1; deg <= 3; ++deg)
      for (auto& P : ctx.monic_irreducibles(deg)) primes.push_back(P);
    const auto idx = detail::indices({1, 2}, 1, 2);
    auto parts = parallel_map<SuiteResult>(primes.size(), cfg.jobs, [&](std::size_t pi) {
      SuiteResult r;
      const QuotCtx Q(ctx, primes[pi]);
      for (const auto& s : idx)
        for (const auto& eps : all_sign_tuples(s.depth(), ctx)) {
          std::vector<std::vector<GfElem>> gammas{gamma_roots_of(eps, ctx)};
          std::vector<GfElem> alt;
          for (auto e : eps) alt.push_back(gamma_roots(e, ctx).back());
          if (alt != gammas[0]) gammas.push_back(alt);
          for (const auto& g : gammas) {
            std::vector<FamzvCheckReport> reps{verify_famzv_mcpl(s, eps, g, Q, T)};
            for (std::size_t rp = 0; rp <= 1; ++rp) reps.push_back(verify_famzv_mpbcn(s, eps, g, rp, Q, T));
            for (const auto& rep : reps) {
              if (rep.excluded) {
                ++r.excluded;
                continue;
              }
              r.record(rep.holds(), [&] {
                return tag + rep.suite + " fails: P=" + rep.P.str("θ") + " s=" + s.str() + " eps=(" + signs_str(eps) +
                       ") gamma=(" + signs_str(g) + ") r'=" + std::to_string(rep.leading_ones);
              });
            }
          }
        }
      return r;
    });
    for (const auto& part : parts) out.merge(part);
    out.notes.push_back(tag + std::to_string(primes.size()) + " primes of degree <= 3");
  }
  return out;
}

/// 8. Vanishing of negative power sums and reduction to positive indices.
inline SuiteResult suite_reduce(const Config& cfg) {
  using namespace charp;
  SuiteResult out;
  for (unsigned s = 0; s <= 4; ++s) out.record(vanishing_bound(s).N == s + 1, [&] { return "N(s) != s+1"; });
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::string tag = "q=" + std::to_string(ctx.q()) + " ";
    for (unsigned s = 0; s <= 4; ++s)
      out.record(vanishing_check(s, ctx).holds(), [&] { return tag + "S_d(-s) nonzero for s=" + std::to_string(s); });
    struct Item {
      Index s;
      SignTuple eps;
    };
    std::vector<Item> items;
    for (const auto& s : detail::indices({-1, 0, 1, 2}, 0, 2))
      for (auto& e : all_sign_tuples(s.depth(), ctx)) items.push_back({s, e});
    auto parts = parallel_map<SuiteResult>(items.size(), cfg.jobs, [&](std::size_t i) {
      SuiteResult r;
      const auto& [s, eps] = items[i];
      const std::string where = tag + "s=" + s.str() + " eps=(" + signs_str(eps) + ")";
      const auto z = reduce_index(s, eps, ctx);
      bool positive = true;
      for (const auto& t : z.terms()) positive = positive && t.index.all_positive() && t.index.depth() <= s.depth();
      r.record(positive, [&] { return where + " reduction left a non-positive index"; });
      bool nonpositive = true;
      for (int x : s.entries()) nonpositive = nonpositive && x <= 0;
      if (nonpositive)
        r.record(z.is_constant() && z.constant().is_polynomial() && ctx.in_A(z.constant().num()),
                 [&] { return where + " constant not in A: " + z.str(); });
      const auto rep = verify_reduction(s, eps, z, ctx, 3);
      r.excluded += rep.excluded_count();
      r.record(rep.holds(), [&] { return where + " reduction mismatch: " + z.str(); });
      return r;
    });
    for (const auto& part : parts) out.merge(part);
  }
  return out;
}

struct Suite {
  int id;
  const char* title;
  double limit_seconds;
  SuiteResult (*run)(const Config&);
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {1, "dual-path MPBN (char 0)", 30, suite_mpbn},
      {2, "generating duals", 30, suite_genfun},
      {3, "Stirling congruences", 5, suite_stirling},
      {4, "char-0 FMZV congruences", 60, suite_fmzv0},
      {5, "Carlitz foundations", 60, suite_carlitz},
      {6, "dual-path AMPBCN", 180, suite_mpbcn},
      {7, "char-p FMZV theorems", 300, suite_fmzvp},
      {8, "index reduction", 120, suite_reduce},
  };
  return all;
}

inline SuiteResult run_suite(const Suite& s, const Config& cfg) {
  return detail::timed(s.id, s.title, s.limit_seconds, [&] { return s.run(cfg); });
}

inline std::vector<SuiteResult> run_all(const Config& cfg) {
  std::vector<SuiteResult> out;
  for (const auto& s : suites()) out.push_back(run_suite(s, cfg));
  return out;
}

/// Deterministic text report.
inline std::string render(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass() ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": checks=" << r.checks
       << " failures=" << r.failures << " excluded=" << r.excluded << "\n";
    if (!r.pass()) os << "  first counterexample: " << r.first_failure << "\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
  }
  return os.str();
}

}  // namespace fmzv::acceptance
