#include "c3k/sequences.hpp"

#include <array>
#include <string>
#include <utility>

#include "c3k/errors.hpp"

namespace c3k {

namespace {

int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// (F_n, F_{n+1}) for n >= 0 by fast doubling.
std::pair<BigInt, BigInt> fib_pair(unsigned long n) {
  BigInt a = 0;
  BigInt b = 1;
  int top = 0;
  while ((n >> top) > 1) ++top;
  if (n == 0) return {a, b};
  for (int bit = top; bit >= 0; --bit) {
    BigInt c = a * (2 * b - a);
    BigInt d = a * a + b * b;
    if ((n >> bit) & 1UL) {
      a = d;
      b = c + d;
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b};
}

unsigned long magnitude(long n) {
  return n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
}

// `floor` is the magnitude of the largest term that cancelled on the way.
bool close(const Real& lhs, const Real& rhs, const PrecisionContext& ctx, const Real& floor = Real(0L, 64)) {
  Real scale = max(max(abs(lhs), abs(rhs)), abs(floor));
  Real diff = abs(lhs - rhs);
  if (scale.is_zero()) return diff.is_zero();
  return diff <= scale * epsilon(ctx);
}

}  // namespace

BigInt fib(long n) {
  const unsigned long j = magnitude(n);
  BigInt f = fib_pair(j).first;
  if (n < 0 && j % 2 == 0) f = -f;
  return f;
}

BigInt lucas(long n) {
  const unsigned long j = magnitude(n);
  auto [f, g] = fib_pair(j);
  BigInt l = 2 * g - f;
  if (n < 0 && j % 2 == 1) l = -l;
  return l;
}

void validate(const HoradamParams& h) {
  if (h.discriminant() <= 0) {
    throw InvalidParams("Horadam parameters need p^2 + 4q > 0 (got " + h.discriminant().get_str() + ")");
  }
}

HoradamRoots horadam_roots(const HoradamParams& h, const PrecisionContext& ctx) {
  validate(h);
  const auto bits = ctx.bits();
  Real p(h.p, bits);
  Real delta = sqrt(Real(h.discriminant(), bits));
  Real alpha = (p + delta) / 2;
  Real beta = (p - delta) / 2;
  Real a(h.a, bits);
  Real b(h.b, bits);
  Real A = b - a * beta;
  Real B = b - a * alpha;
  return {std::move(delta), std::move(alpha), std::move(beta), std::move(A), std::move(B)};
}

BigInt horadam(long n, const HoradamParams& h) {
  if (n < 0) throw InvalidParams("horadam index must be >= 0");
  BigInt x = h.a;
  BigInt y = h.b;
  for (long i = 0; i < n; ++i) {
    BigInt next = h.p * y + h.q * x;
    x = std::move(y);
    y = std::move(next);
  }
  return x;
}

BigInt horadam_companion(long n, const HoradamParams& h) {
  return horadam(n, HoradamParams{h.p, h.q, BigInt(2), h.p});
}

namespace {

constexpr std::array<std::string_view, 10> kIdentityNames{"F1", "F2", "F3", "F4", "F5",
                                                          "F6", "F7", "F8", "LEMMA1", "LEMMA2"};

}  // namespace

std::string_view to_string(FLIdentity id) { return kIdentityNames[static_cast<std::size_t>(id)]; }

std::optional<FLIdentity> parse_fl_identity(std::string_view name) {
  for (std::size_t i = 0; i < kIdentityNames.size(); ++i) {
    if (kIdentityNames[i] == name) return static_cast<FLIdentity>(i);
  }
  return std::nullopt;
}

bool check_fl_identity(FLIdentity id, long n, long m, const PrecisionContext& ctx) {
  switch (id) {
    case FLIdentity::F3:
      return fib(n) * fib(n) + neg_one_pow(n + m - 1) * fib(m) * fib(m) == fib(n - m) * fib(n + m);
    case FLIdentity::F4:
      return fib(n + m) + neg_one_pow(m) * fib(n - m) == lucas(m) * fib(n);
    case FLIdentity::F5:
      return fib(n + m) + neg_one_pow(m - 1) * fib(n - m) == fib(m) * lucas(n);
    case FLIdentity::F6:
      return lucas(n) * fib(m) + fib(n) * lucas(m) == 2 * fib(n + m);
    case FLIdentity::F7:
      return lucas(n + m) + neg_one_pow(m) * lucas(n - m) == lucas(m) * lucas(n);
    case FLIdentity::F8:
      return lucas(n + m) + neg_one_pow(m - 1) * lucas(n - m) == 5 * fib(m) * fib(n);
    default: break;
  }

  const auto bits = ctx.bits();
  const Real alpha = golden_ratio(ctx);
  const Real beta = golden_conjugate(ctx);
  const Real root5 = sqrt(Real(5, bits));
  switch (id) {
    case FLIdentity::F1: {
      const long r = m;
      const long s = neg_one_pow(r + 1);
      Real f(fib(r), bits);
      bool ok = close(pow(alpha, 2 * r) + s, pow(alpha, r) * f * root5, ctx);
      return ok && close(pow(beta, 2 * r) + s, -(pow(beta, r) * f * root5), ctx);
    }
    case FLIdentity::F2: {
      const long r = m;
      const long s = neg_one_pow(r);
      Real l(lucas(r), bits);
      bool ok = close(pow(alpha, 2 * r) + s, pow(alpha, r) * l, ctx);
      return ok && close(pow(beta, 2 * r) + s, pow(beta, r) * l, ctx);
    }
    case FLIdentity::LEMMA1: {
      const long p = n;
      const long q = m;
      const Real big = Real(fib(p), bits) * pow(alpha, q);
      const Real fpq(fib(p + q), bits);
      return close(big - fpq, -(pow(beta, p) * Real(fib(q), bits)), ctx, max(abs(big), abs(fpq)));
    }
    case FLIdentity::LEMMA2: {
      const long p = n;
      const long q = m;
      const Real fpq(fib(p + q), bits);
      const Real small = pow(beta, q) * Real(fib(p), bits);
      return close(fpq - small, pow(alpha, p) * Real(fib(q), bits), ctx, max(abs(fpq), abs(small)));
    }
    default: break;
  }
  return false;
}

}  // namespace c3k
