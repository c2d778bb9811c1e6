#pragma once

// Per-prime components of (alternating) finite multiple zeta values and of
// the finite multiple polylogarithm, all in Z/lZ.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fmzv/char0/mpbn.hpp"
#include "fmzv/char0/stirling.hpp"
#include "fmzv/index.hpp"
#include "fmzv/residue.hpp"

namespace fmzv::char0 {

struct FmzvComponent {
  std::int64_t prime;
  Index s;
  Signs eps;
  ResidueInt value;
};

namespace detail {

inline void require_prime(std::int64_t l) {
  if (!is_prime(l)) throw std::invalid_argument("modulus is not prime");
}

// n^{-s} in Z/lZ for 0 < n < l.
inline ResidueInt inv_power(std::int64_t n, int s, std::int64_t l) { return ResidueInt(n, l).pow(-s); }

// sum over l > n_1 > ... > n_r > 0 of prod a_i^{n_i} / n_i^{s_i}, by a
// running-prefix recursion from the innermost index outward.
inline ResidueInt nested_sum(const Index& s, const std::vector<ResidueInt>& a, std::int64_t l) {
  const std::size_t r = s.depth();
  // below[n] = sum of the inner (k+1..r) part with all inner indices < n.
  std::vector<ResidueInt> below(static_cast<std::size_t>(l) + 1, ResidueInt(1, l));
  for (std::size_t k = r; k-- > 0;) {
    std::vector<ResidueInt> next(static_cast<std::size_t>(l) + 1, ResidueInt(0, l));
    ResidueInt acc(0, l);
    for (std::int64_t n = 1; n <= l; ++n) {
      next[static_cast<std::size_t>(n)] = acc;
      if (n < l) acc += a[k].pow(n) * inv_power(n, s[k], l) * below[static_cast<std::size_t>(n)];
    }
    below = std::move(next);
  }
  return below[static_cast<std::size_t>(l)];
}

}  // namespace detail

/// zeta_A(s; eps)_l. Depth 0 gives 1; an empty summation range gives 0.
inline ResidueInt fmzv_component(const Index& s, const Signs& eps, std::int64_t l) {
  detail::require_prime(l);
  if (s.depth() != eps.size()) throw std::invalid_argument("index and sign tuple differ in length");
  std::vector<ResidueInt> a;
  for (int e : eps.entries()) a.emplace_back(e, l);
  return detail::nested_sum(s, a, l);
}

inline ResidueInt fmzv_component(const Index& s, std::int64_t l) {
  return fmzv_component(s, Signs::all_plus(s.depth()), l);
}

/// Finite multiple polylogarithm component with arguments a_1..a_r in Z/lZ.
inline ResidueInt finite_mpl_component(const Index& s, const std::vector<ResidueInt>& a, std::int64_t l) {
  detail::require_prime(l);
  if (a.size() != s.depth()) throw std::invalid_argument("argument count differs from depth");
  for (const auto& x : a)
    if (x.modulus() != l) throw std::invalid_argument("argument not reduced modulo l");
  return detail::nested_sum(s, a, l);
}

struct CongruenceReport {
  Index s;
  Signs eps;
  std::size_t leading_ones = 0;
  std::int64_t prime = 0;
  ResidueInt lhs{0, 2};
  std::optional<ResidueInt> rhs;  // empty: l divides the denominator of C
  BigRat c_value;
  bool exceptional() const { return !rhs.has_value(); }
  bool holds() const { return rhs.has_value() && *rhs == lhs; }
};

/// zeta_A(1^{r'}, s; 1^{r'}, eps)_l  vs  -C_{l-r'-2}^{(s_1-1, s_2, ...); eps} mod l.
/// With r' = 0 this is the depth-r congruence itself.
inline CongruenceReport verify_0result(const Index& s, const Signs& eps, std::size_t leading_ones, std::int64_t l,
                                       const StirlingTable& table) {
  detail::require_prime(l);
  if (l == 2) throw std::invalid_argument("congruence is stated for odd primes");
  if (s.depth() == 0) throw std::invalid_argument("congruence needs depth >= 1");
  if (static_cast<std::int64_t>(leading_ones) + 2 > l) throw std::invalid_argument("l - r' - 2 must be >= 0");
  CongruenceReport rep;
  rep.s = s;
  rep.eps = eps;
  rep.leading_ones = leading_ones;
  rep.prime = l;
  rep.lhs = fmzv_component(s.with_leading_ones(leading_ones), eps.with_leading_plus(leading_ones), l);
  const std::size_t n = static_cast<std::size_t>(l) - leading_ones - 2;
  rep.c_value = ampbn_closed(s.with_first_shifted(-1), eps, n, MpbnVariant::C, table);
  if (auto c = reduce_mod(rep.c_value, l)) rep.rhs = -*c;
  return rep;
}

}  // namespace fmzv::char0
