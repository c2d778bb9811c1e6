#include <gtest/gtest.h>

#include "fmzv/charp/carlitz.hpp"
#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/quot.hpp"
#include "fmzv/charp/ratfunc.hpp"

using namespace fmzv;
using namespace fmzv::charp;

namespace {

// Number of monic irreducibles of degree d over F_q: (1/d) sum_{e | d} mu(d/e) q^e.
long gauss_count(long q, long d) {
  auto mu = [](long n) {
    int r = 1;
    for (long p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
      }
    return n > 1 ? -r : r;
  };
  long total = 0;
  for (long e = 1; e <= d; ++e)
    if (d % e == 0) {
      long pw = 1;
      for (long i = 0; i < e; ++i) pw *= q;
      total += mu(d / e) * pw;
    }
  return total / d;
}

void field_axioms(const FiniteField& f) {
  const auto all = f.elements();
  for (auto a : all) {
    EXPECT_EQ(f.add(a, f.neg(a)), FiniteField::zero());
    EXPECT_EQ(f.pow(a, f.order()), a);
    if (a.code) EXPECT_EQ(f.mul(a, f.inv(a)), FiniteField::one());
    for (auto b : all)
      for (auto c : all) EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
  }
}

}  // namespace

TEST(Gf, Axioms) {
  const FieldCtx c4(2, 2), c3(3, 1);
  field_axioms(c4.base_field());
  field_axioms(c3.field());
  EXPECT_EQ(c4.q_prime(), 64u);
  EXPECT_EQ(c3.q_prime(), 9u);
}

TEST(Gf, SubfieldIsFirstCodes) {
  for (auto pe : {std::pair{2u, 2u}, std::pair{3u, 1u}, std::pair{2u, 1u}}) {
    const FieldCtx ctx(pe.first, pe.second);
    const auto& f = ctx.field();
    for (auto a : ctx.base_units()) {
      EXPECT_EQ(f.pow(a, ctx.q()), a);
      for (auto b : ctx.base_units()) {
        EXPECT_TRUE(ctx.in_base(f.add(a, b)));
        EXPECT_TRUE(ctx.in_base(f.mul(a, b)));
      }
    }
    std::size_t fixed = 0;
    for (auto a : f.elements()) fixed += f.pow(a, ctx.q()) == a;
    EXPECT_EQ(fixed, ctx.q());
  }
}

TEST(Poly, DivisionAndGcd) {
  const FieldCtx ctx(3, 1);
  const auto& f = ctx.field();
  const Poly a = Poly::from_codes(f, {1, 2, 0, 1}), b = Poly::from_codes(f, {2, 1, 1});
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  const Poly g = Poly::from_codes(f, {1, 1});
  EXPECT_EQ(gcd(a * g, b * g), g.monic() * gcd(a, b));
  const auto [d, u, v] = ext_gcd(a, b);
  EXPECT_EQ(u * a + v * b, d);
}

TEST(Poly, FrobeniusIsPowerOnA) {
  const FieldCtx ctx(3, 1);
  for (const auto& a : ctx.enumerate_monic(2)) EXPECT_EQ(a.frobenius(3), a.pow(3));
  const FieldCtx c4(2, 2);
  for (const auto& a : c4.enumerate_monic(1)) EXPECT_EQ(a.frobenius(16), a.pow(16));
}

TEST(FieldCtx, Enumeration) {
  const FieldCtx c2(2, 1), c3(3, 1);
  EXPECT_EQ(c2.enumerate_monic(0), std::vector<Poly>{c2.one()});
  const auto d1 = c2.enumerate_monic(1);
  ASSERT_EQ(d1.size(), 2u);
  EXPECT_EQ(d1[0], c2.theta());
  EXPECT_EQ(d1[1], c2.theta() + c2.one());
  EXPECT_EQ(c3.enumerate_monic(2).size(), 9u);
  EXPECT_THROW(c3.enumerate_monic(5, 100), std::length_error);
}

TEST(FieldCtx, IrreducibleCounts) {
  for (auto pe : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}}) {
    const FieldCtx ctx(pe.first, pe.second);
    for (unsigned d = 1; d <= 3; ++d)
      EXPECT_EQ(static_cast<long>(ctx.monic_irreducibles(d).size()), gauss_count(static_cast<long>(ctx.q()), d))
          << "q=" << ctx.q() << " d=" << d;
  }
}

TEST(RatFunc, Normalization) {
  const FieldCtx ctx(3, 1);
  const Poly t = ctx.theta(), one = ctx.one();
  const RatFunc x(t * (t + one), (t + one).scaled(GfElem(2)));
  EXPECT_TRUE(x.den().is_one());
  EXPECT_EQ(x.num(), t.scaled(GfElem(2)));
  const RatFunc h(one, t);
  EXPECT_EQ(h + h + h, RatFunc::zero(ctx.field()));
  EXPECT_EQ(h * RatFunc(t), RatFunc::one(ctx.field()));
  EXPECT_EQ(h.pow(-2), RatFunc(t * t));
  EXPECT_THROW(RatFunc::zero(ctx.field()).inverse(), not_invertible);
}

TEST(Quot, UnitsAndInverse) {
  const FieldCtx ctx(2, 1);
  const Poly P = Poly::from_codes(ctx.field(), {1, 1, 0, 1});
  const QuotCtx Q(ctx, P);
  for (unsigned d = 0; d < 3; ++d)
    for (const auto& a : ctx.enumerate_monic(d)) EXPECT_TRUE(Q.mul(a, Q.inv(a)).is_one());
  EXPECT_FALSE(Q.is_unit(P));
  EXPECT_THROW(QuotCtx(ctx, Poly::from_codes(ctx.field(), {1, 0, 1})), std::invalid_argument);
}

TEST(Carlitz, ProductDefinitions) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const std::uint64_t q = ctx.q();
    const CarlitzConstants K(ctx, 3);
    const Poly t = ctx.theta();
    EXPECT_TRUE(K.D(0).is_one());
    EXPECT_TRUE(K.L(0).is_one());
    for (unsigned n = 1; n <= 3; ++n) {
      EXPECT_EQ(K.bracket(n), t.pow(ipow(q, n)) - t);
      Poly D = ctx.one();
      for (unsigned i = 0; i < n; ++i) D *= K.bracket(n - i).pow(ipow(q, i));
      EXPECT_EQ(K.D(n), D);
      // D_n is the product of all monic polynomials of degree n.
      Poly monics = ctx.one();
      for (const auto& a : ctx.enumerate_monic(n)) monics *= a;
      if (n <= 2) EXPECT_EQ(K.D(n), monics);
    }
    // Pi(n) from base-q digits: n = 1 + q gives D_0 D_1.
    EXPECT_EQ(K.Pi(1 + q), K.D(1));
    EXPECT_EQ(K.Pi((q - 1) * q + 1), K.D(1).pow(q - 1));
    EXPECT_EQ(K.Gamma(1), ctx.one());
    EXPECT_THROW(K.Gamma(0), std::out_of_range);
  }
}

TEST(Carlitz, PowerSums) {
  for (unsigned p : {2u, 3u}) {
    const FieldCtx ctx(p, 1);
    const CarlitzConstants K(ctx, 2);
    EXPECT_EQ(power_sum_exact(ctx, 1, 1), RatFunc(ctx.one(), K.L(1)));
    for (unsigned d = 0; d <= 2; ++d)
      for (int s = -2; s <= 3; ++s) {
        RatFunc direct = RatFunc::zero(ctx.field());
        for (const auto& a : ctx.enumerate_monic(d)) direct += RatFunc(a).pow(-s);
        EXPECT_EQ(power_sum_exact(ctx, d, s), direct) << "d=" << d << " s=" << s;
      }
  }
}

TEST(Quot, PowerSumsModP) {
  const FieldCtx ctx(3, 1);
  for (const auto& P : ctx.monic_irreducibles(3)) {
    const QuotCtx Q(ctx, P);
    for (unsigned d = 0; d < 3; ++d)
      for (int s = -2; s <= 4; ++s) EXPECT_EQ(Q.power_sum_mod(d, s), *Q.reduce(power_sum_exact(ctx, d, s)));
    EXPECT_THROW(Q.power_sum_mod(3, 1), std::domain_error);
  }
}
