#include <gtest/gtest.h>

#include "fmzv/charp/anderson_thakur.hpp"
#include "fmzv/charp/mpbcn.hpp"

using namespace fmzv;
using namespace fmzv::charp;

TEST(AndersonThakur, SmallIndicesAreOne) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const auto H = anderson_thakur(ctx.q() - 1, ctx);
    for (const auto& h : H) {
      ASSERT_EQ(h.u.size(), 1u);
      EXPECT_TRUE(h.u[0].is_one());
    }
  }
}

// H_q = G_1(t, theta) + D_1(t) = 2 t^q - t - theta^q.
TEST(AndersonThakur, FirstNontrivial) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::uint64_t q = ctx.q();
    const auto H = anderson_thakur(static_cast<unsigned>(q), ctx);
    std::vector<Poly> expect(q + 1, ctx.zero());
    expect[0] = -ctx.theta().pow(q);
    expect[1] = -ctx.one();
    expect[q] = expect[q] + ctx.from_int(2);
    while (expect.back().is_zero()) expect.pop_back();
    EXPECT_EQ(H[q].u, expect) << "q=" << q;
  }
}

TEST(AndersonThakur, PowerSumIdentity) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::uint64_t q = ctx.q();
    const auto H = anderson_thakur(static_cast<unsigned>(q * q), ctx);
    for (unsigned n = 1; n <= q * q; ++n)
      for (unsigned d = 0; d <= 2; ++d) {
        const auto r = at_identity_check(H[n - 1], d, ctx);
        EXPECT_TRUE(r.holds()) << "q=" << q << " n=" << n << " d=" << d;
      }
  }
}

TEST(AndersonThakur, CoefficientsLieInA) {
  const FieldCtx ctx(2, 2);
  for (const auto& h : anderson_thakur(17, ctx))
    for (const auto& u : h.u) EXPECT_TRUE(ctx.in_A(u));
}

TEST(StirlingCarlitz, VanishingAndDelta) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::uint64_t q = ctx.q();
    const CarlitzConstants K(ctx, 3);
    const std::size_t bound = static_cast<std::size_t>(q * q * q - 1);
    const StirlingCarlitzTable S(K, bound);
    const auto zero = RatFunc::zero(ctx.field()), one = RatFunc::one(ctx.field());
    for (std::size_t n = 0; n <= bound; ++n)
      for (std::size_t m = n + 1; m <= bound; ++m) EXPECT_EQ(S(n, m), zero);
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; b <= 2; ++b)
        EXPECT_EQ(S(ipow(q, a) - 1, ipow(q, b) - 1), a == b ? one : zero);
    EXPECT_EQ(S(1, 1), one);
    EXPECT_EQ(S(0, 0), one);
  }
}

// Direct expansion: {n, 1}_C = Pi(n)/D_i when n = q^i, 0 otherwise.
TEST(StirlingCarlitz, FirstColumn) {
  const FieldCtx ctx(3, 1);
  const CarlitzConstants K(ctx, 3);
  const StirlingCarlitzTable S(K, 26);
  for (std::size_t n = 1; n <= 26; ++n) {
    const bool power = n == 1 || n == 3 || n == 9;
    if (power)
      EXPECT_EQ(S(n, 1), RatFunc(K.Pi(n), K.D(n == 1 ? 0 : n == 3 ? 1 : 2)));
    else
      EXPECT_TRUE(S(n, 1).is_zero()) << n;
  }
}

TEST(Mpbcn, ClosedMatchesSeries) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::size_t N = static_cast<std::size_t>(ctx.q() * ctx.q() - 1);
    const SpecialTables T(ctx, N, 3);
    for (const auto& s : {Index{1}, Index{3}, Index{1, 2}, Index{3, 1}})
      for (const auto& j : T.selectors(s)) {
        const AmpbcnArgs a{s, std::vector<GfElem>(s.depth(), ctx.field().one()), j};
        const auto ser = ampbcn_series(a, N, T);
        for (std::size_t n = 0; n <= N; ++n) EXPECT_EQ(ser[n], ampbcn_closed(a, n, T)) << s.str() << " n=" << n;
      }
  }
}

TEST(Mpbcn, DepthOneAtZero) {
  const FieldCtx ctx(2, 1);
  const SpecialTables T(ctx, 3, 1);
  const AmpbcnArgs a{Index{1}, {GfElem(1)}, {0}};
  EXPECT_EQ(ampbcn_closed(a, 0, T), RatFunc::one(ctx.field()));
}

TEST(Mpbcn, TwistedByRootOfMinusOne) {
  const FieldCtx ctx(3, 1);
  const SpecialTables T(ctx, 8, 2);
  GfElem g;
  for (auto x : ctx.ext_units())
    if (ctx.field().pow(x, 2) == ctx.field().neg(ctx.field().one())) g = x;
  ASSERT_NE(g.code, 0);
  const AmpbcnArgs a{Index{1, 2}, {g, GfElem(1)}, {0, 0}};
  EXPECT_TRUE(recursion_check(a, 1, T).holds());
  EXPECT_TRUE(recursion_check(a, 2, T).holds());
  const auto ser = ampbcn_series(a, 8, T);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(ser[n], ampbcn_closed(a, n, T));
}

TEST(Mpbcn, RecursionExamples) {
  const FieldCtx c2(2, 1);
  const SpecialTables T2(c2, 7, 2);
  EXPECT_TRUE(recursion_check({Index{1, 1}, {GfElem(1), GfElem(1)}, {0, 0}}, 1, T2).holds());
  EXPECT_TRUE(recursion_check({Index{1, 2, 1}, {GfElem(1), GfElem(1), GfElem(1)}, {0, 0, 0}}, 2, T2).holds());
  EXPECT_THROW(recursion_check({Index{1}, {GfElem(1)}, {0}}, 1, T2), std::invalid_argument);
}

TEST(Mpbcn, ArgumentValidation) {
  const FieldCtx ctx(3, 1);
  const SpecialTables T(ctx, 8, 2);
  EXPECT_THROW(ampbcn_closed({Index{0}, {GfElem(1)}, {0}}, 1, T), std::invalid_argument);
  EXPECT_THROW(ampbcn_closed({Index{1}, {GfElem(0)}, {0}}, 1, T), std::invalid_argument);
  EXPECT_THROW(ampbcn_closed({Index{1}, {GfElem(1)}, {1}}, 1, T), std::invalid_argument);
  EXPECT_THROW(ampbcn_closed({Index{1}, {GfElem(1)}, {0}}, 9, T), std::out_of_range);
}
