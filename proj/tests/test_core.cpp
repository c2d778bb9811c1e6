#include <gtest/gtest.h>

#include "fmzv/index.hpp"
#include "fmzv/multi_series.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/residue.hpp"
#include "fmzv/series.hpp"

using namespace fmzv;
using S = TruncSeries<BigRat>;

namespace {

S from(std::vector<BigRat> c) { return S(std::move(c)); }

// e^{cx} coefficients c^n/n!, written out directly.
S exp_oracle(std::size_t N, long c) {
  std::vector<BigRat> v;
  for (std::size_t n = 0; n <= N; ++n) v.push_back(rat_pow(BigInt(c), static_cast<int>(n)) / BigRat(factorial(n)));
  return from(v);
}

}  // namespace

TEST(Series, DifferenceOfSquares) {
  auto a = from({1, 1, 0}), b = from({1, -1, 0});
  EXPECT_EQ(a * b, from({1, 0, -1}));
}

TEST(Series, ExpTimesExpMinusIsOne) {
  EXPECT_EQ(exp_oracle(8, 1) * exp_oracle(8, -1), S::constant(8, BigRat(1)));
}

TEST(Series, DivisionBySelf) {
  auto x = S::variable(4, BigRat(0));
  const auto q = x / x;
  EXPECT_EQ(q.order(), 3u);  // one order lost to the valuation shift
  EXPECT_EQ(q, S::constant(3, BigRat(1)));
  const auto one_minus = S::constant(6, BigRat(1)) - exp_oracle(6, -1);
  EXPECT_EQ(one_minus / one_minus, S::constant(5, BigRat(1)));
}

TEST(Series, DivisionCheckedByMultiplyingBack) {
  const auto one_minus = S::constant(5, BigRat(1)) - exp_oracle(5, -1);
  auto x2 = S(5, BigRat(0));
  x2.set(2, BigRat(1));
  const auto q = x2 / one_minus;  // order 4
  EXPECT_EQ(q[0], 0);
  EXPECT_EQ(q[1], 1);
  EXPECT_EQ(q[2], BigRat(1, 2));
  EXPECT_EQ(q[3], BigRat(1, 12));
  EXPECT_EQ(series_mul(q, one_minus.truncated(4)), x2.truncated(4));
}

TEST(Series, InverseOfGeometric) {
  const auto inv = series_inverse(from({1, -1, 0, 0, 0}));
  EXPECT_EQ(inv, from({1, 1, 1, 1, 1}));
  EXPECT_THROW(series_inverse(from({0, 1})), not_invertible);
}

TEST(Series, Composition) {
  const auto one_minus = S::constant(5, BigRat(1)) - exp_oracle(5, -1);
  EXPECT_EQ(series_compose(S::variable(5, BigRat(0)), one_minus), one_minus);
  EXPECT_EQ(series_compose(from({0, 0, 1, 0}), from({0, 1, 1, 0})), from({0, 0, 1, 2}));
  // -log(1 - z) at z = 1 - e^{-x} is x.
  std::vector<BigRat> log_c{0};
  for (int k = 1; k <= 5; ++k) log_c.push_back(BigRat(1, k));
  EXPECT_EQ(series_compose(from(log_c), one_minus), S::variable(5, BigRat(0)));
  EXPECT_THROW(series_compose(from({0, 1}), from({1, 1})), std::domain_error);
}

TEST(Series, ExponentialKindRoundTrip) {
  const auto e = exp_oracle(6, 1);
  const auto ex = e.to_exponential();
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(ex[n], 1);
  EXPECT_EQ(ex.to_ordinary(), e);
  // Binomial convolution of e^x with itself is e^{2x}: coefficients 2^n.
  const auto sq = series_mul(ex, ex);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(sq[n], rat_pow(BigInt(2), static_cast<int>(n)));
  EXPECT_THROW(series_mul(ex, e), std::invalid_argument);
}

TEST(Series, PowerMatchesRepeatedProduct) {
  const auto a = from({1, 2, 3, 4, 5});
  EXPECT_EQ(series_pow(a, 3), a * a * a);
  EXPECT_EQ(series_pow(a, 0), S::constant(4, BigRat(1)));
}

TEST(MultiSeries, ProductAndInverse) {
  using M = MultiTruncSeries<BigRat>;
  const std::vector<std::size_t> orders{3, 2};
  const auto ex = M::from_univariate(orders, 0, exp_oracle(3, 1));
  const auto ey = M::from_univariate(orders, 1, exp_oracle(2, 1));
  const auto prod = ex * ey;
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 2; ++j) {
      std::vector<std::size_t> e{i, j};
      EXPECT_EQ(prod.coeff(e), BigRat(1) / BigRat(factorial(i) * factorial(j)));
    }
  const auto back = prod * prod.inverse();
  EXPECT_EQ(back, M::constant(orders, BigRat(1)));
}

TEST(Residue, Arithmetic) {
  ResidueInt a(3, 7), b(5, 7);
  EXPECT_EQ((a * b).value(), 1);
  EXPECT_EQ(a.inverse(), b);
  EXPECT_EQ(a.pow(-1), b);
  EXPECT_EQ(a.pow(6).value(), 1);
  EXPECT_EQ((-a).value(), 4);
  EXPECT_THROW(a + ResidueInt(1, 5), std::invalid_argument);
  EXPECT_THROW(ResidueInt(0, 7).inverse(), not_invertible);
}

TEST(Residue, ReduceRational) {
  EXPECT_EQ(reduce_mod(BigRat(1, 2), 7)->value(), 4);
  EXPECT_EQ(reduce_mod(BigRat(-3, 4), 5)->value(), 3);
  EXPECT_FALSE(reduce_mod(BigRat(1, 14), 7).has_value());
}

TEST(Residue, Primes) {
  EXPECT_EQ(primes_between(2, 23), (std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23}));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(31));
}

TEST(Index, Basics) {
  const Index s{2, -1, 3};
  EXPECT_EQ(s.str(), "(2,-1,3)");
  EXPECT_EQ(s.csv(), "2,-1,3");
  EXPECT_FALSE(s.all_positive());
  EXPECT_EQ(s.with_leading_ones(2), (Index{1, 1, 2, -1, 3}));
  EXPECT_EQ(s.with_first_shifted(-1), (Index{1, -1, 3}));
  EXPECT_EQ(s.prefix(1), Index{2});
  EXPECT_EQ(s.suffix_from(1), (Index{-1, 3}));
  EXPECT_EQ(Index{}.str(), "()");
}

TEST(Parallel, OrderIndependentOfThreads) {
  auto f = [](std::size_t i) { return static_cast<int>(i * i); };
  EXPECT_EQ(parallel_map<int>(50, 1, f), parallel_map<int>(50, 4, f));
  EXPECT_THROW(parallel_map<int>(10, 3, [](std::size_t i) -> int {
                 if (i == 7) throw std::runtime_error("x");
                 return 0;
               }),
               std::runtime_error);
}
