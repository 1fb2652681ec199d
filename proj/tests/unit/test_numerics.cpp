#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "c3k/context.hpp"
#include "c3k/errors.hpp"
#include "c3k/expr.hpp"
#include "c3k/real.hpp"
#include "c3k/verifier.hpp"

using namespace c3k;

TEST(Context, WorkingDigits) {
  EXPECT_EQ(make_context(50, 100000).working_digits, 65);
  EXPECT_EQ(make_context(10, 10).working_digits, 21);
  EXPECT_EQ(make_context(30, 1).working_digits, 40);
  EXPECT_GE(make_context(30, 1).bits(), 133);
}

TEST(Context, GoldenRatio) {
  const auto ctx = make_context(30, 1);
  const Real a = golden_ratio(ctx);
  const Real b = golden_conjugate(ctx);
  EXPECT_EQ(a.to_string(30), "1.61803398874989484820458683437");
  EXPECT_LE(abs(a * b + 1), epsilon(ctx));
  EXPECT_LE(abs(a + b - 1), epsilon(ctx));
}

TEST(Real, ToStringFormats) {
  EXPECT_EQ(Real(0L, 64).to_string(5), "0");
  EXPECT_EQ(Real(-12L, 64).to_string(4), "-12.00");
  EXPECT_EQ(Real::pow10(-3, 64).to_string(3), "0.00100");
  EXPECT_EQ(Real::nan(64).to_string(3), "nan");
}

TEST(Expr, CubeRootIsSignPreserving) {
  const auto ctx = make_context(30, 1);
  EXPECT_EQ(eval_expr(Expr::parse("cbrt(-8)"), ctx).to_string(4), "-2.000");
}

TEST(Expr, BoundaryValue) {
  const auto ctx = make_context(30, 1);
  Expr e = Expr::rational(BigRational(2, 3)) * pow(Expr::pi(), 2) - Expr::integer(2) * pow(log(Expr::integer(2)), 2);
  EXPECT_EQ(eval_expr(e, ctx).to_string(9), "5.61883024");
}

TEST(Expr, ItalyValue) {
  const auto ctx = make_context(30, 1);
  EXPECT_EQ(eval_expr(Expr::parse("pi^2/6 - log(3)^2/2"), ctx).to_string(9), "1.04145959");
}

TEST(Expr, ParseRoundTrip) {
  const char* cases[] = {"2*sqrt(3)*pi/7 - 2/7*log(3)", "-(6*sqrt(6)/7)**2", "atan(sqrt(3)/(2*cbrt(2) - 1))",
                         "alpha^5 - 1/alpha", "-27/4"};
  const auto ctx = make_context(40, 1);
  for (const char* c : cases) {
    Expr e = Expr::parse(c);
    Expr again = Expr::parse(e.to_string());
    EXPECT_EQ(eval_expr(e, ctx), eval_expr(again, ctx)) << c;
  }
}

TEST(Expr, JsonRoundTrip) {
  Expr e = Expr::parse("6*atan(sqrt(3)/(2*cbrt(3+2*sqrt(2))+1))^2 - 1/2*log(2)^2");
  nlohmann::json j = e.to_json();
  EXPECT_EQ(Expr::from_json(j), e);
  EXPECT_EQ(Expr::from_json(j).to_json().dump(), j.dump());
  Expr big = Expr::rational(BigRational(BigInt("123456789012345678901234567890"), BigInt(7)));
  EXPECT_TRUE(big.to_json()["args"][0].is_string());
}

TEST(Expr, DomainErrors) {
  const auto ctx = make_context(30, 1);
  EXPECT_THROW(eval_expr(Expr::parse("log(0)"), ctx), DomainError);
  EXPECT_THROW(eval_expr(Expr::parse("sqrt(-1)"), ctx), DomainError);
  EXPECT_THROW(eval_expr(Expr::parse("1/(2-2)"), ctx), DomainError);
  EXPECT_THROW(Expr::parse("2 +"), ParseError);
  EXPECT_THROW(Expr::parse("foo(2)"), ParseError);
}

TEST(MatchedDigits, RelativeAndAbsolute) {
  const mpfr_prec_t bits = 200;
  const Real one(1L, bits);
  EXPECT_EQ(matched_digits(one, one, 30), 30);
  EXPECT_EQ(matched_digits(one + Real::pow10(-12, bits) * 3, one, 30), 11);
  // |rhs| < 1: absolute difference
  const Real small = Real::pow10(-20, bits);
  EXPECT_EQ(matched_digits(small * 3, small, 30), 19);
  EXPECT_EQ(matched_digits(Real::nan(bits), one, 30), 0);
  EXPECT_EQ(matched_digits(one * 5, one, 30), 0);
}
