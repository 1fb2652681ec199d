#include <gtest/gtest.h>

#include "c3k/closed_forms.hpp"
#include "c3k/errors.hpp"
#include "c3k/series.hpp"
#include "c3k/theorems.hpp"

using namespace c3k;

namespace {

SeriesSpec unit(BigRational z, int a = 2) {
  SeriesSpec s;
  s.z = z;
  s.a = a;
  return s;
}

}  // namespace

TEST(Binomial, Values) {
  EXPECT_EQ(binom_3k_k(1), 3);
  EXPECT_EQ(binom_3k_k(2), 15);
  EXPECT_EQ(binom_3k_k(3), 84);
  EXPECT_EQ(binom_3k_k(10), BigInt("30045015"));
}

TEST(Classify, Kinds) {
  const auto ctx = make_context(30, 1);
  auto c = classify(unit(BigRational(8, 3)), ctx);
  EXPECT_EQ(c.kind, ConvergenceKind::Geometric);
  EXPECT_LE(abs(c.rho - Real(BigRational(32, 81), ctx.bits())), Real::pow10(-25, ctx.bits()));
  EXPECT_EQ(classify(unit(BigRational(27, 4)), ctx).kind, ConvergenceKind::BoundaryPositive);
  EXPECT_EQ(classify(unit(BigRational(-27, 4)), ctx).kind, ConvergenceKind::BoundaryAlternating);
  EXPECT_EQ(classify(unit(BigRational(-5832, 361)), ctx).kind, ConvergenceKind::DivergentFormal);
  SeriesSpec fibw = unit(BigRational(54, 25));
  fibw.weight = Weight::fib(1);
  EXPECT_EQ(classify(fibw, ctx).kind, ConvergenceKind::Geometric);
}

TEST(PartialSum, HandSums) {
  const auto ctx = make_context(30, 10);
  const auto bits = ctx.bits();
  EXPECT_LE(abs(partial_sum(unit(BigRational(8, 3)), 1, ctx) - Real(BigRational(8, 9), bits)),
            Real::pow10(-28, bits));
  const Real two = Real(BigRational(8, 9), bits) + Real(BigRational(64, 540), bits);
  EXPECT_LE(abs(partial_sum(unit(BigRational(8, 3)), 2, ctx) - two), Real::pow10(-28, bits));
}

TEST(PartialSum, BracketsTheoremValue) {
  const auto ctx = make_context(40, 200);
  const SeriesSpec s = unit(BigRational(27, 5));
  const Real ps = partial_sum(s, 200, ctx);
  const Real tb = tail_bound(s, 200, ctx);
  const Real rhs = theorem_rhs(TheoremParams::with_r(Family::THM1_FIB, 1), ctx);
  EXPECT_LE(abs(ps - rhs), tb + Real::pow10(-38, ctx.bits()));
}

TEST(TailBound, Sizes) {
  const auto ctx = make_context(30, 100);
  EXPECT_LT(tail_bound(unit(BigRational(8, 3)), 50, ctx), Real::pow10(-20, ctx.bits()));
  EXPECT_GT(tail_bound(unit(BigRational(20, 3)), 100, ctx), Real::pow10(-2, ctx.bits()));
  EXPECT_TRUE(tail_bound(unit(BigRational(0)), 10, ctx).is_zero());
}

TEST(SumToDigits, Italy) {
  const auto ctx = make_context(50, 1'000'000);
  SumResult r = sum_to_digits(unit(BigRational(8, 3)), 40, ctx);
  const Real oracle = eval_expr(Expr::parse("pi^2/6 - log(3)^2/2"), ctx);
  EXPECT_LE(abs(r.value - oracle), Real::pow10(-40, ctx.bits()));
  EXPECT_LE(abs(r.value - oracle), r.tail);
}

TEST(SumToDigits, SlowCaseBudget) {
  const auto ctx = make_context(50, 1'000'000);
  SumResult r = sum_to_digits(unit(BigRational(20, 3)), 40, ctx);
  EXPECT_LE(r.terms_used, 12000);
  const Real rhs = batir_rhs(Real(BigRational(20, 3), ctx.bits()), ctx);
  EXPECT_LE(abs(r.value - rhs), r.tail + Real::pow10(-45, ctx.bits()));
}

TEST(SumToDigits, Alternating) {
  const auto ctx = make_context(20, 1'000'000);
  SumResult r = sum_to_digits(unit(BigRational(-1)), 20, ctx);
  EXPECT_EQ(r.value.to_string(3), "-0.318");
}

TEST(SumToDigits, Errors) {
  const auto ctx = make_context(30, 64);
  EXPECT_THROW(sum_to_digits(unit(BigRational(27, 4)), 30, ctx), NotGeometric);
  EXPECT_THROW(sum_to_digits(unit(BigRational(26, 4)), 30, ctx), MaxTermsExceeded);
}

TEST(Boundary, PositiveAndAlternating) {
  const auto ctx = make_context(20, 1'000'000);
  const Real pos = sum_boundary(unit(BigRational(27, 4)), 10, ctx);
  const Real want = eval_expr(Expr::parse("2*pi^2/3 - 2*log(2)^2"), ctx);
  EXPECT_LE(abs(pos - want), Real::pow10(-10, ctx.bits()));
  const Real alt = sum_boundary(unit(BigRational(-27, 4)), 10, ctx);
  const Real alt_rhs = batir_rhs(Real(BigRational(-27, 4), ctx.bits()), ctx);
  EXPECT_LE(abs(alt - alt_rhs), Real::pow10(-10, ctx.bits()));
}

TEST(Boundary, Unsupported) {
  const auto ctx = make_context(20, 1'000'000);
  EXPECT_THROW(sum_boundary(unit(BigRational(27, 4), 0), 10, ctx), Unsupported);
}

TEST(Weights, FibonacciWeightMatchesExplicitSum) {
  const auto ctx = make_context(30, 64);
  SeriesSpec s = unit(BigRational(54, 25));
  s.weight = Weight::fib(1);
  const Real ps = partial_sum(s, 20, ctx);
  Real manual(ctx.bits());
  Real zk(1L, ctx.bits());
  for (long k = 1; k <= 20; ++k) {
    zk *= Real(BigRational(54, 25), ctx.bits());
    manual += zk * fib(k) / (Real(k * k, ctx.bits()) * Real(binom_3k_k(k), ctx.bits()));
  }
  EXPECT_LE(abs(ps - manual), Real::pow10(-35, ctx.bits()));
}
