#include <gtest/gtest.h>

#include <functional>

#include "fmzv/charp/fmzvp.hpp"

using namespace fmzv;
using namespace fmzv::charp;

namespace {

// Nested sum over monic a_1, ..., a_r with deg P > deg a_1 > ... > deg a_r,
// every tuple enumerated explicitly.
Poly brute(const Index& s, const SignTuple& e, const QuotCtx& Q) {
  const auto& c = Q.field_ctx();
  Poly total = Q.zero();
  std::function<void(std::size_t, int, Poly)> rec = [&](std::size_t i, int below, Poly acc) {
    if (i == s.depth()) {
      total = Q.add(total, acc);
      return;
    }
    for (int d = 0; d < below; ++d)
      for (const auto& a : c.enumerate_monic(static_cast<unsigned>(d)))
        rec(i + 1, d, Q.mul(acc, Q.pow(a, -s[i]).scaled(c.field().pow(e[i], static_cast<std::uint64_t>(d)))));
  };
  rec(0, Q.degree(), Q.one());
  return total;
}

}  // namespace

TEST(Roots, Examples) {
  const FieldCtx c3(3, 1), c2(2, 1);
  EXPECT_EQ(gamma_root(GfElem(1), c3), GfElem(1));
  const auto r = gamma_roots(GfElem(2), c3);
  EXPECT_EQ(r.size(), 2u);
  for (auto g : r) EXPECT_EQ(c3.field().pow(g, 2), GfElem(2));
  EXPECT_EQ(gamma_roots(GfElem(1), c2), std::vector<GfElem>{GfElem(1)});
  EXPECT_EQ(all_sign_tuples(2, c2).size(), 1u);
  EXPECT_EQ(all_sign_tuples(2, c3).size(), 4u);
  EXPECT_THROW(gamma_roots(GfElem(3), c3), std::invalid_argument);
}

TEST(Roots, TwistRule) {
  const FieldCtx ctx(2, 2);
  const auto& f = ctx.field();
  for (auto e : ctx.base_units())
    for (auto g : gamma_roots(e, ctx))
      for (unsigned d = 0; d <= 6; ++d) EXPECT_EQ(f.pow(g, ipow(4, d)), f.mul(f.pow(e, d), g));
}

TEST(FmzvP, Examples) {
  const FieldCtx c2(2, 1), c3(3, 1);
  const QuotCtx lin(c3, c3.theta());
  EXPECT_TRUE(fmzv_p_component(Index{}, lin).is_one());
  EXPECT_TRUE(fmzv_p_component(Index{1}, {GfElem(2)}, lin).is_one());
  EXPECT_TRUE(fmzv_p_component(Index{1, 1}, {GfElem(1), GfElem(1)}, lin).is_zero());
  const QuotCtx q2(c2, c2.monic_irreducibles(2).front());
  EXPECT_EQ(fmzv_p_component(Index{1, 1}, {GfElem(1), GfElem(1)}, q2), brute(Index{1, 1}, {GfElem(1), GfElem(1)}, q2));
}

TEST(FmzvP, MatchesBruteForce) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    for (unsigned deg = 1; deg <= 3; ++deg)
      for (const auto& P : ctx.monic_irreducibles(deg)) {
        const QuotCtx Q(ctx, P);
        for (const auto& s : {Index{1}, Index{2}, Index{-1}, Index{0, 1}, Index{2, 1}, Index{-2, 3}})
          for (const auto& e : all_sign_tuples(s.depth(), ctx)) EXPECT_EQ(fmzv_p_component(s, e, Q), brute(s, e, Q));
      }
  }
}

TEST(Fcmpl, Examples) {
  const FieldCtx ctx(3, 1);
  const CarlitzConstants K(ctx, 3);
  const QuotCtx lin(ctx, ctx.theta() + ctx.one());
  EXPECT_EQ(fcmpl_component(Index{1}, {ctx.from_int(2)}, lin, K), ctx.from_int(2));
  const QuotCtx Q(ctx, ctx.monic_irreducibles(2).front());
  EXPECT_TRUE(fcmpl_component(Index{1, 2}, {ctx.zero(), ctx.one()}, Q, K).is_zero());
}

TEST(FamzvMcpl, Examples) {
  const FieldCtx c2(2, 1), c3(3, 1);
  const SpecialTables T2(c2, 7, 2), T3(c3, 8, 2);
  for (unsigned deg = 1; deg <= 3; ++deg)
    for (const auto& P : c2.monic_irreducibles(deg)) {
      const QuotCtx Q(c2, P);
      EXPECT_TRUE(verify_famzv_mcpl(Index{1}, {GfElem(1)}, {GfElem(1)}, Q, T2).holds());
    }
  for (unsigned deg = 1; deg <= 2; ++deg)
    for (const auto& P : c3.monic_irreducibles(deg)) {
      const QuotCtx Q(c3, P);
      const SignTuple e1{GfElem(2)}, e2{GfElem(2), GfElem(1)};
      EXPECT_TRUE(verify_famzv_mcpl(Index{1}, e1, gamma_roots_of(e1, c3), Q, T3).holds());
      EXPECT_TRUE(verify_famzv_mcpl(Index{2, 1}, e2, gamma_roots_of(e2, c3), Q, T3).holds());
    }
}

TEST(FamzvMpbcn, Examples) {
  const FieldCtx c2(2, 1), c3(3, 1);
  const SpecialTables T2(c2, 7, 2), T3(c3, 8, 2);
  for (unsigned deg = 1; deg <= 3; ++deg)
    for (const auto& P : c2.monic_irreducibles(deg)) {
      const QuotCtx Q(c2, P);
      EXPECT_TRUE(verify_famzv_mpbcn(Index{1}, {GfElem(1)}, {GfElem(1)}, 0, Q, T2).holds());
    }
  for (unsigned deg = 1; deg <= 2; ++deg)
    for (const auto& P : c3.monic_irreducibles(deg)) {
      const QuotCtx Q(c3, P);
      const SignTuple e{GfElem(2)};
      for (auto g : gamma_roots(GfElem(2), c3)) EXPECT_TRUE(verify_famzv_mpbcn(Index{1}, e, {g}, 1, Q, T3).holds());
    }
  const QuotCtx lin(c2, c2.theta());
  const auto r = verify_famzv_mpbcn(Index{1}, {GfElem(1)}, {GfElem(1)}, 0, lin, T2);
  ASSERT_TRUE(r.lhs && r.rhs);
  EXPECT_TRUE(r.lhs->is_one());
  EXPECT_TRUE(r.rhs->is_one());
}

TEST(FamzvMpbcn, WrongRootIsRejected) {
  const FieldCtx c3(3, 1);
  const SpecialTables T(c3, 8, 2);
  const QuotCtx Q(c3, c3.theta());
  EXPECT_THROW(verify_famzv_mcpl(Index{1}, {GfElem(2)}, {GfElem(1)}, Q, T), std::invalid_argument);
}
