#include <gtest/gtest.h>

#include "fmzv/char0/fmzv.hpp"
#include "fmzv/char0/mpbn.hpp"
#include "fmzv/char0/stirling.hpp"

using namespace fmzv;
using namespace fmzv::char0;

TEST(Stirling, SmallValues) {
  const StirlingTable T(10);
  EXPECT_EQ(T.second(1, 2), 0);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(T.second(n, 1), 1);
  EXPECT_EQ(T.second(3, 2), 3);
  EXPECT_EQ(T.first(4, 2), 11);
  EXPECT_EQ(T.first(5, 3), 35);
  EXPECT_EQ(T.second(6, 3), 90);
  EXPECT_THROW(T.second(11, 1), std::out_of_range);
}

TEST(Stirling, RowSums) {
  const StirlingTable T(8);
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 0; n <= 8; ++n) {
    BigInt first = 0, second = 0;
    for (std::size_t m = 0; m <= n; ++m) {
      first += T.first(n, m);
      second += T.second(n, m);
    }
    EXPECT_EQ(first, factorial(static_cast<unsigned>(n)));
    EXPECT_EQ(second, bell[n]);
  }
}

TEST(Signs, Enumerate) {
  const auto all = Signs::enumerate(2);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0].str(), "(+,+)");
  EXPECT_EQ(all[1].str(), "(+,-)");
  EXPECT_EQ(all[3].str(), "(-,-)");
  EXPECT_THROW(Signs({1, 0}), std::invalid_argument);
}

TEST(Mpbn, DepthOneIsBernoulli) {
  const auto ser = ampbn_series(Index{1}, Signs::all_plus(1), 12);
  const BigRat bern[] = {1, BigRat(1, 2), BigRat(1, 6), 0, BigRat(-1, 30), 0, BigRat(1, 42), 0, BigRat(-1, 30), 0,
                         BigRat(5, 66), 0, BigRat(-691, 2730)};
  for (std::size_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(ser.B[n], bern[n]) << n;
    EXPECT_EQ(ser.C[n], n == 1 ? BigRat(-1, 2) : bern[n]) << n;
  }
}

// B_n^{(-k)} = sum_j (j!)^2 {n+1, j+1} {k+1, j+1}.
TEST(Mpbn, NegativeIndexClosedFormAndDuality) {
  const StirlingTable T(10);
  for (int k = 0; k <= 5; ++k) {
    const auto ser = ampbn_series(Index{-k}, Signs::all_plus(1), 6);
    for (std::size_t n = 0; n <= 6; ++n) {
      BigInt expect = 0;
      for (std::size_t j = 0; j <= std::min<std::size_t>(n, static_cast<std::size_t>(k)); ++j) {
        const BigInt f = factorial(static_cast<unsigned>(j));
        expect += f * f * T.second(n + 1, j + 1) * T.second(static_cast<std::size_t>(k) + 1, j + 1);
      }
      EXPECT_EQ(ser.B[n], BigRat(expect)) << "n=" << n << " k=" << k;
    }
  }
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= 5; ++k)
      EXPECT_EQ(ampbn_series(Index{-k}, Signs::all_plus(1), 5).B[static_cast<std::size_t>(n)],
                ampbn_series(Index{-n}, Signs::all_plus(1), 5).B[static_cast<std::size_t>(k)]);
}

TEST(Mpbn, ClosedMatchesSeriesOnExamples) {
  const StirlingTable T(8);
  const auto s1 = ampbn_series(Index{1}, Signs::all_plus(1), 4);
  EXPECT_EQ(ampbn_closed(Index{1}, Signs::all_plus(1), 1, MpbnVariant::C, T), s1.C[1]);
  EXPECT_EQ(ampbn_closed(Index{1}, Signs::all_plus(1), 0, MpbnVariant::C, T), BigRat(1));
  const Index s{2, 1};
  const Signs e({1, -1});
  const auto ser = ampbn_series(s, e, 6);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(ampbn_closed(s, e, n, MpbnVariant::C, T), ser.C[n]);
  EXPECT_THROW(ampbn_closed(s, e, 2, MpbnVariant::B, T), std::invalid_argument);
  EXPECT_THROW(ampbn_closed(s, e, 8, MpbnVariant::C, T), std::out_of_range);
}

TEST(Mpbn, GeneratingFunctionExamples) {
  EXPECT_TRUE(genfun_dual_check(Signs({1}), 6, {4}).ok());
  EXPECT_TRUE(genfun_dual_check(Signs({1, -1}), 5, {3, 3}).ok());
  EXPECT_TRUE(genfun_dual_check(Signs({-1}), 6, {4}).ok());
  // Starting the y-sums at 1 drops the s_i = 0 terms and breaks the identity.
  EXPECT_FALSE(genfun_dual_check(Signs({1}), 4, {3}, 1).ok());
}

TEST(Fmzv, Examples) {
  EXPECT_EQ(fmzv_component(Index{}, 7).value(), 1);
  EXPECT_EQ(fmzv_component(Index{1}, 5).value(), 0);
  // -1/1 + 1/2 mod 3.
  EXPECT_EQ(fmzv_component(Index{1}, Signs({-1}), 3).value(), 1);
  // Empty range: depth beyond l - 1.
  EXPECT_EQ(fmzv_component(Index{1, 1, 1}, 3).value(), 0);
  EXPECT_THROW(fmzv_component(Index{1}, 9), std::invalid_argument);
}

TEST(Fmzv, HarmonicSumsVanish) {
  for (std::int64_t l : primes_between(5, 31)) {
    EXPECT_EQ(fmzv_component(Index{1}, l).value(), 0);
    EXPECT_EQ(fmzv_component(Index{2}, l).value(), 0);
    EXPECT_EQ(fmzv_component(Index{1, 1}, l).value(), 0);
  }
}

TEST(Fmzv, FinitePolylog) {
  const std::int64_t l = 11;
  const Index s{2, 1};
  EXPECT_EQ(finite_mpl_component(s, {ResidueInt(1, l), ResidueInt(1, l)}, l), fmzv_component(s, l));
  EXPECT_EQ(finite_mpl_component(s, {ResidueInt(-1, l), ResidueInt(1, l)}, l), fmzv_component(s, Signs({-1, 1}), l));
  EXPECT_EQ(finite_mpl_component(s, {ResidueInt(0, l), ResidueInt(3, l)}, l).value(), 0);
  // Direct two-level sum for a = (2, 3).
  ResidueInt expect(0, l);
  for (std::int64_t a = 1; a < l; ++a)
    for (std::int64_t b = 1; b < a; ++b)
      expect += ResidueInt(2, l).pow(a) * ResidueInt(3, l).pow(b) * ResidueInt(a * a * b, l).inverse();
  EXPECT_EQ(finite_mpl_component(s, {ResidueInt(2, l), ResidueInt(3, l)}, l), expect);
}

TEST(Fmzv, CongruenceExamples) {
  const StirlingTable T(40);
  EXPECT_TRUE(verify_0result(Index{2}, Signs({1}), 0, 5, T).holds());
  EXPECT_TRUE(verify_0result(Index{2}, Signs({-1}), 1, 7, T).holds());
  const auto r = verify_0result(Index{1}, Signs({1}), 0, 5, T);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.lhs.value(), 0);
  EXPECT_THROW(verify_0result(Index{1}, Signs({1}), 0, 2, T), std::invalid_argument);
}

TEST(Fmzv, CongruenceSweepSmall) {
  const StirlingTable T(40);
  for (std::int64_t l : primes_between(5, 19))
    for (const auto& s : {Index{1}, Index{3}, Index{2, 1}, Index{1, 3}})
      for (const auto& e : Signs::enumerate(s.depth()))
        for (std::size_t rp = 0; rp <= 2; ++rp) {
          const auto rep = verify_0result(s, e, rp, l, T);
          if (!rep.exceptional()) EXPECT_TRUE(rep.holds()) << s.str() << e.str() << " r'=" << rp << " l=" << l;
        }
}
