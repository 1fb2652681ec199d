#include <gtest/gtest.h>

#include "c3k/context.hpp"
#include "c3k/errors.hpp"
#include "c3k/sequences.hpp"

using namespace c3k;

TEST(Fib, Values) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(10), 55);
  EXPECT_EQ(fib(-2), -1);
  EXPECT_EQ(fib(-5), 5);
  EXPECT_EQ(fib(100), BigInt("354224848179261915075"));
}

TEST(Fib, MatchesRecurrence) {
  BigInt a = 0;
  BigInt b = 1;
  for (long n = 0; n < 300; ++n) {
    ASSERT_EQ(fib(n), a) << n;
    BigInt c = a + b;
    a = b;
    b = c;
  }
}

TEST(Lucas, Values) {
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(6), 18);
  EXPECT_EQ(lucas(-3), -4);
  for (long n = -40; n <= 40; ++n) EXPECT_EQ(lucas(n), fib(n - 1) + fib(n + 1)) << n;
}

TEST(Horadam, ReducesToKnownSequences) {
  EXPECT_EQ(horadam(5, {1, 1, 0, 1}), 5);
  EXPECT_EQ(horadam(4, {1, 1, 2, 1}), 7);
  EXPECT_EQ(horadam(3, {2, 1, 0, 1}), 5);
  for (long n = 0; n < 30; ++n) {
    EXPECT_EQ(horadam(n, {1, 1, 0, 1}), fib(n));
    EXPECT_EQ(horadam(n, {1, 1, 2, 1}), lucas(n));
  }
}

TEST(Horadam, Companion) {
  const HoradamParams pell{2, 1, 0, 1};
  EXPECT_EQ(horadam_companion(0, pell), 2);
  EXPECT_EQ(horadam_companion(1, pell), 2);
  EXPECT_EQ(horadam_companion(2, pell), 6);
  for (long n = 0; n < 20; ++n) EXPECT_EQ(horadam_companion(n, {1, 1, 0, 1}), lucas(n));
}

TEST(Horadam, RejectsNonRealRoots) { EXPECT_THROW(validate(HoradamParams{1, -1, 0, 1}), InvalidParams); }

TEST(Horadam, Roots) {
  const auto ctx = make_context(30, 1);
  const auto r = horadam_roots({1, 1, 0, 1}, ctx);
  EXPECT_LE(abs(r.alpha - golden_ratio(ctx)), epsilon(ctx));
  EXPECT_LE(abs(r.alpha * r.beta + 1), epsilon(ctx));
}

TEST(FLIdentities, SpotChecks) {
  const auto ctx = make_context(30, 1);
  EXPECT_TRUE(check_fl_identity(FLIdentity::F3, 7, 3, ctx));
  EXPECT_TRUE(check_fl_identity(FLIdentity::F6, 4, 2, ctx));
  EXPECT_TRUE(check_fl_identity(FLIdentity::F1, 0, 5, ctx));
  EXPECT_TRUE(check_fl_identity(FLIdentity::LEMMA1, -2, 5, ctx));
}

TEST(FLIdentities, ExhaustiveSmallRange) {
  const auto ctx = make_context(30, 1);
  for (auto id : {FLIdentity::F3, FLIdentity::F4, FLIdentity::F5, FLIdentity::F6, FLIdentity::F7, FLIdentity::F8,
                  FLIdentity::LEMMA1, FLIdentity::LEMMA2}) {
    for (long n = -12; n <= 12; ++n) {
      for (long m = -12; m <= 12; ++m) ASSERT_TRUE(check_fl_identity(id, n, m, ctx)) << to_string(id) << n << "," << m;
    }
  }
  for (long r = -20; r <= 20; ++r) {
    ASSERT_TRUE(check_fl_identity(FLIdentity::F1, 0, r, ctx)) << r;
    ASSERT_TRUE(check_fl_identity(FLIdentity::F2, 0, r, ctx)) << r;
  }
}

TEST(FLIdentities, Names) {
  EXPECT_EQ(parse_fl_identity("F4"), FLIdentity::F4);
  EXPECT_EQ(parse_fl_identity("LEMMA2"), FLIdentity::LEMMA2);
  EXPECT_FALSE(parse_fl_identity("F9").has_value());
}
