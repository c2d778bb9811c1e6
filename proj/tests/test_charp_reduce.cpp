#include <gtest/gtest.h>

#include "fmzv/charp/reduce.hpp"

using namespace fmzv;
using namespace fmzv::charp;

TEST(Vanishing, BoundIsSPlusOne) {
  for (unsigned s = 0; s <= 6; ++s) EXPECT_EQ(vanishing_bound(s).N, s + 1);
}

TEST(Vanishing, NegativePowerSumsVanish) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    for (unsigned s = 0; s <= 4; ++s) EXPECT_TRUE(vanishing_check(s, ctx).holds()) << "q=" << p << " s=" << s;
    // S_d(-s) with d <= s need not vanish: S_0(0) = 1.
    EXPECT_TRUE(power_sum_exact(ctx, 0, 0).num().is_one());
  }
}

TEST(Reduce, IdentityOnPositive) {
  const FieldCtx ctx(2, 1);
  const auto z = reduce_index(Index{2}, {GfElem(1)}, ctx);
  ASSERT_EQ(z.terms().size(), 1u);
  EXPECT_EQ(z.terms()[0].index, Index{2});
  EXPECT_TRUE(z.constant().is_zero());
  EXPECT_EQ(z.str(), "ζ(2)");
  EXPECT_TRUE(verify_reduction(Index{2}, {GfElem(1)}, z, ctx, 3).holds());
}

TEST(Reduce, OneZero) {
  const FieldCtx c3(3, 1), c2(2, 1);
  EXPECT_EQ(reduce_index(Index{1, 0}, {GfElem(1), GfElem(1)}, c3).str(), "ζ(1) - 1");
  // In characteristic 2 the constant -1 is +1.
  const auto z = reduce_index(Index{1, 0}, {GfElem(1), GfElem(1)}, c2);
  EXPECT_EQ(z.str(), "ζ(1) + 1");
  const auto rep = verify_reduction(Index{1, 0}, {GfElem(1), GfElem(1)}, z, c2, 3);
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.excluded_count(), 0u);
}

TEST(Reduce, NonPositiveGivesConstantInA) {
  const FieldCtx ctx(3, 1);
  for (const auto& s : {Index{0, -1}, Index{-1}, Index{0}, Index{-1, -1}})
    for (const auto& e : all_sign_tuples(s.depth(), ctx)) {
      const auto z = reduce_index(s, e, ctx);
      EXPECT_TRUE(z.is_constant()) << s.str();
      EXPECT_TRUE(z.constant().is_polynomial());
      EXPECT_TRUE(ctx.in_A(z.constant().num()));
      EXPECT_TRUE(verify_reduction(s, e, z, ctx, 2).holds());
    }
}

TEST(Reduce, MixedSweep) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    for (const auto& s : {Index{-1, 2}, Index{2, -1}, Index{0, 1}, Index{1, -1}, Index{2, 0}})
      for (const auto& e : all_sign_tuples(s.depth(), ctx)) {
        const auto z = reduce_index(s, e, ctx);
        for (const auto& t : z.terms()) EXPECT_TRUE(t.index.all_positive());
        const auto rep = verify_reduction(s, e, z, ctx, 3);
        EXPECT_TRUE(rep.holds()) << "q=" << p << " s=" << s.str() << " eps=" << signs_str(e) << " -> " << z.str();
        // Exclusions only below the degree the combination needs.
        for (const auto& pr : rep.primes)
          if (pr.excluded) EXPECT_LT(static_cast<unsigned>(pr.P.degree()), z.min_prime_degree());
      }
  }
}

TEST(Reduce, DepthThree) {
  const FieldCtx ctx(2, 1);
  const Index s{1, 0, -1};
  const SignTuple e{GfElem(1), GfElem(1), GfElem(1)};
  const auto z = reduce_index(s, e, ctx);
  EXPECT_TRUE(verify_reduction(s, e, z, ctx, 4).holds());
}
