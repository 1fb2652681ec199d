#include <gtest/gtest.h>

#include <string>

#include "c3k/closed_forms.hpp"
#include "c3k/errors.hpp"
#include "c3k/series.hpp"

using namespace c3k;

namespace {

const PrecisionContext& ctx40() {
  static const PrecisionContext c = make_context(40, 1);
  return c;
}

Real num(const char* text) { return eval_expr(Expr::parse(text), ctx40()); }

Real R(long v) { return Real(v, ctx40().bits()); }

void expect_close(const Real& a, const Real& b, int digits = 38) {
  EXPECT_LE(abs(a - b), Real::pow10(-digits, ctx40().bits()) * max(abs(b), R(1)))
      << a.to_string(45) << " vs " << b.to_string(45);
}

}  // namespace

TEST(Phi, Values) {
  expect_close(phi(num("27/4"), ctx40()), R(1));
  expect_close(phi(R(6), ctx40()), num("cbrt(2)"));
  EXPECT_THROW(phi(R(7), ctx40()), DomainError);
  EXPECT_THROW(phi(R(0), ctx40()), DomainError);
}

TEST(Batir, KnownValues) {
  expect_close(batir_rhs(num("27/4"), ctx40()), num("2*pi^2/3 - 2*log(2)^2"));
  expect_close(batir_rhs(num("8/3"), ctx40()), num("pi^2/6 - log(3)^2/2"));
}

TEST(ALevel, Values) {
  expect_close(A_rhs({R(8), R(1)}, ctx40()), num("pi^2/6 - log(3)^2/2"));
  expect_close(A_rhs({R(5), R(5)}, ctx40()), num("2*pi^2/3 - 2*log(2)^2"));
  const Real x = num("-3 - 2*sqrt(2)");
  expect_close(A_rhs({x, R(1)}, ctx40()), batir_rhs(num("-27/4"), ctx40()), 36);
}

TEST(BLevel, Values) {
  expect_close(B_rhs({R(8), R(1)}, ctx40()), num("2*sqrt(3)*pi/7 - 2/7*log(3)"));
  expect_close(B_rhs({R(8), R(-1)}, ctx40()), num("4*sqrt(3)/9*atan(sqrt(3)/5) - 2/3*log(7)"));
}

TEST(CLevel, Values) {
  expect_close(C_rhs({R(8), R(1)}, ctx40()), num("32/49 + 74*sqrt(3)*pi/343 - 18/343*log(3)"));
  expect_close(C_rhs({R(8), num("1/8")}, ctx40()),
               num("256/3969 + 68120*sqrt(3)/250047*atan(sqrt(3)/7) - 1300/27783*log(25/13)"));
}

TEST(Windows, Rejections) {
  EXPECT_THROW(check_window(Level::B, {R(1), R(1)}, ctx40()), SingularInput);
  EXPECT_THROW(check_window(Level::A, {R(1), R(2)}, ctx40()), DomainError);
  EXPECT_THROW(check_window(Level::B, {R(-1), R(2)}, ctx40()), DomainError);
  EXPECT_NO_THROW(check_window(Level::A, {R(1), R(1)}, ctx40()));
  EXPECT_NO_THROW(check_window(Level::C, {R(27), R(8)}, ctx40()));
}

TEST(ALevel, Homogeneous) {
  const Real base = A_rhs({R(27), R(8)}, ctx40());
  for (long t : {2L, 10L, 1000L}) expect_close(A_rhs({R(27 * t), R(8 * t)}, ctx40()), base);
}

TEST(Trig, Values) {
  const Real pi6 = num("pi/6");
  expect_close(trig_rhs(TrigVariant::D, pi6, ctx40()),
               num("6*atan(sqrt(3)/(2*cbrt(3) - 1))^2 - 1/2*log(4/(cbrt(3) + 1)^3)^2"));
  expect_close(trig_rhs(TrigVariant::D, num("pi/4"), ctx40()), num("2*pi^2/3 - 2*log(2)^2"));
  expect_close(trig_argument(TrigVariant::D, pi6, ctx40()), num("81/16"));
  expect_close(trig_argument(TrigVariant::E, num("pi/12"), ctx40()), num("-27/4/3"));
  EXPECT_THROW(trig_rhs(TrigVariant::E, num("pi/3"), ctx40()), DomainError);
}

TEST(Trig, AgreesWithSeries) {
  const auto ctx = make_context(30, 1'000'000);
  for (auto v : {TrigVariant::D, TrigVariant::E, TrigVariant::F}) {
    for (const char* x : {"pi/12", "pi/8"}) {
      // E at pi/8 is the alternating boundary z = -27/4
      if (v == TrigVariant::E && std::string(x) == "pi/8") continue;
      const Real arg = trig_argument(v, eval_expr(Expr::parse(x), ctx), ctx);
      // a = 1 for F, 2 for D and E
      const int a = v == TrigVariant::F ? 1 : 2;
      Real sum(ctx.bits());
      Real zk(1L, ctx.bits());
      for (long k = 1; k <= 400; ++k) {
        zk *= arg;
        Real term = zk / Real(binom_3k_k(k), ctx.bits());
        for (int i = 0; i < a; ++i) term /= k;
        sum += term;
      }
      const Real rhs = trig_rhs(v, eval_expr(Expr::parse(x), ctx), ctx);
      EXPECT_LE(abs(sum - rhs), Real::pow10(-28, ctx.bits())) << static_cast<int>(v) << " " << x;
    }
  }
}

TEST(Symbolic, MatchesNumeric) {
  const Expr x = Expr::integer(8);
  const Expr y = Expr::integer(1);
  expect_close(eval_expr(A_expr(x, y), ctx40()), A_rhs({R(8), R(1)}, ctx40()));
  expect_close(eval_expr(B_expr(x, y), ctx40()), B_rhs({R(8), R(1)}, ctx40()));
  expect_close(eval_expr(C_expr(x, y), ctx40()), C_rhs({R(8), R(1)}, ctx40()));
  expect_close(eval_expr(batir_expr(Expr::integer(6)), ctx40()), batir_rhs(R(6), ctx40()));
}
