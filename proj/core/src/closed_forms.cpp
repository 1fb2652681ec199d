#include "c3k/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "c3k/errors.hpp"

namespace c3k {

namespace {

Real tolerance(const PrecisionContext& ctx) {
  return Real::pow10(-(ctx.working_digits - 5), ctx.bits());
}

Real root3(mpfr_prec_t bits) { return sqrt(Real(3, bits)); }

Real checked_log(const Real& v, const char* where) {
  if (!(v > 0)) throw DomainError(std::string("log argument is not positive in ") + where);
  return log(v);
}

Real checked_div(const Real& n, const Real& d, const char* where) {
  if (d.is_zero()) throw DomainError(std::string("division by zero in ") + where);
  return n / d;
}

struct Roots {
  Real cx;
  Real cy;
  Real at;  // atan(sqrt3 cy / (2 cx - cy))
  Real lg;  // log((x+y)/(cx+cy)^3)
};

Roots roots(const XYPair& p, const char* where) {
  const auto bits = std::max(p.x.precision(), p.y.precision());
  Real cx = cbrt(p.x);
  Real cy = cbrt(p.y);
  Real at = atan(checked_div(root3(bits) * cy, 2 * cx - cy, where));
  Real lg = checked_log(checked_div(p.x + p.y, pow(cx + cy, 3), where), where);
  return {cx, cy, at, lg};
}

}  // namespace

int exponent_of(Level level) {
  switch (level) {
    case Level::A: return 2;
    case Level::B: return 1;
    case Level::C: return 0;
  }
  return 2;
}

void check_window(Level level, const XYPair& pair, const PrecisionContext& ctx) {
  if (pair.y.is_zero()) throw DomainError("y = 0 is outside the identity's domain");
  const auto bits = ctx.bits();
  const Real tol = tolerance(ctx);
  Real ratio = pair.x / pair.y;
  Real w = 3 + 2 * sqrt(Real(2, bits));  // (1+sqrt2)^2
  const bool negative_ok = ratio <= -(w * (1 - tol));
  if (level == Level::A) {
    if (ratio >= 1 - tol || negative_ok) return;
  } else {
    if (abs(ratio - 1) <= tol) throw SingularInput("x = y is singular for the (B)/(C) identities");
    if (ratio > 1 || negative_ok) return;
  }
  throw DomainError("x/y = " + ratio.to_string(12) + " lies outside the validity window");
}

Real phi(const Real& z, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  if (z.is_zero()) throw DomainError("phi(z) is undefined at z = 0");
  Real disc = 81 - 12 * z;
  if (disc < 0) {
    if (disc < -tolerance(ctx) * 81) throw DomainError("phi(z) needs z <= 27/4, got " + z.to_string(12));
    disc = Real(0L, bits);
  }
  Real rad = (27 - 2 * z + 3 * sqrt(disc)) / (2 * z);
  return cbrt(rad);
}

Real batir_rhs(const Real& z, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  Real f = phi(z, ctx);
  Real at = atan(checked_div(root3(bits), 2 * f - 1, "batir"));
  Real lg = checked_log(checked_div(pow(f, 3) + 1, pow(f + 1, 3), "batir"), "batir");
  return 6 * sqr(at) - sqr(lg) / 2;
}

Real A_rhs(const XYPair& pair, const PrecisionContext& ctx) {
  check_window(Level::A, pair, ctx);
  Roots r = roots(pair, "identity A");
  return 6 * sqr(r.at) - sqr(r.lg) / 2;
}

Real B_rhs(const XYPair& pair, const PrecisionContext& ctx) {
  check_window(Level::B, pair, ctx);
  const auto bits = ctx.bits();
  Roots r = roots(pair, "identity B");
  Real cxy = cbrt(pair.x * pair.y);
  Real inner = 2 * root3(bits) * (r.cx + r.cy) * r.at + (r.cx - r.cy) * r.lg;
  return cxy / (pair.x - pair.y) * inner;
}

Real C_rhs(const XYPair& pair, const PrecisionContext& ctx) {
  check_window(Level::C, pair, ctx);
  const auto bits = ctx.bits();
  Roots r = roots(pair, "identity C");
  const Real& x = pair.x;
  const Real& y = pair.y;
  Real cxy = cbrt(x * y);
  Real cx2 = sqr(r.cx);
  Real cy2 = sqr(r.cy);
  Real cx4 = sqr(cx2);
  Real cy4 = sqr(cy2);
  Real d = x - y;
  Real lead = 4 * x * y / sqr(d);
  Real at_coef = 2 * root3(bits) * (2 * cxy * (cx2 + cy2) + cx4 + cy4);
  Real lg_coef = 2 * cxy * (cx2 - cy2) - cx4 + cy4;
  return lead + cxy / 3 * (x + y) / pow(d, 3) * (at_coef * r.at - lg_coef * r.lg);
}

Real xy_rhs(Level level, const XYPair& pair, const PrecisionContext& ctx) {
  switch (level) {
    case Level::A: return A_rhs(pair, ctx);
    case Level::B: return B_rhs(pair, ctx);
    case Level::C: return C_rhs(pair, ctx);
  }
  return A_rhs(pair, ctx);
}

// ---------------------------------------------------------------- symbolic

namespace {

Expr I(long v) { return Expr::integer(v); }
Expr Q(long n, long d) { return Expr::rational(BigRational(n, d)); }

Expr atan_part(const Expr& cx, const Expr& cy) { return atan(sqrt(I(3)) * cy / (I(2) * cx - cy)); }
Expr log_part(const Expr& x, const Expr& y, const Expr& cx, const Expr& cy) {
  return log((x + y) / pow(cx + cy, 3));
}

}  // namespace

Expr A_expr(const Expr& x, const Expr& y) {
  Expr cx = cbrt(x);
  Expr cy = cbrt(y);
  return I(6) * pow(atan_part(cx, cy), 2) - Q(1, 2) * pow(log_part(x, y, cx, cy), 2);
}

Expr B_expr(const Expr& x, const Expr& y) {
  Expr cx = cbrt(x);
  Expr cy = cbrt(y);
  Expr inner = I(2) * sqrt(I(3)) * (cx + cy) * atan_part(cx, cy) + (cx - cy) * log_part(x, y, cx, cy);
  return cbrt(x * y) / (x - y) * inner;
}

Expr C_expr(const Expr& x, const Expr& y) {
  Expr cx = cbrt(x);
  Expr cy = cbrt(y);
  Expr cxy = cbrt(x * y);
  Expr cx2 = pow(cx, 2);
  Expr cy2 = pow(cy, 2);
  Expr cx4 = pow(cx, 4);
  Expr cy4 = pow(cy, 4);
  Expr at_coef = I(2) * sqrt(I(3)) * (I(2) * cxy * (cx2 + cy2) + cx4 + cy4);
  Expr lg_coef = I(2) * cxy * (cx2 - cy2) - cx4 + cy4;
  Expr body = at_coef * atan_part(cx, cy) - lg_coef * log_part(x, y, cx, cy);
  return I(4) * x * y / pow(x - y, 2) + cxy / I(3) * (x + y) / pow(x - y, 3) * body;
}

Expr batir_expr(const Expr& z) {
  Expr f = cbrt((I(27) - I(2) * z + I(3) * sqrt(I(81) - I(12) * z)) / (I(2) * z));
  return I(6) * pow(atan(sqrt(I(3)) / (I(2) * f - I(1))), 2) -
         Q(1, 2) * pow(log((pow(f, 3) + I(1)) / pow(f + I(1), 3)), 2);
}

// ---------------------------------------------------------------- trig

Real trig_argument(TrigVariant variant, const Real& x, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  Real q(BigRational(27, 4), bits);
  if (variant == TrigVariant::E) return -(q * sqr(tan(2 * x)));
  return q * sqr(sin(2 * x));
}

Real trig_rhs(TrigVariant variant, const Real& x, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  const Real tol = tolerance(ctx);
  const Real quarter = pi(bits) / 4;
  const Real eighth = pi(bits) / 8;
  if (!(x > 0)) throw DomainError("trig identities need x > 0");
  switch (variant) {
    case TrigVariant::D:
      if (x > quarter * (1 + tol)) throw DomainError("identity D needs x <= pi/4");
      break;
    case TrigVariant::E:
      if (x > eighth * (1 + tol)) throw DomainError("identity E needs x <= pi/8");
      break;
    case TrigVariant::F:
      if (!(x < quarter * (1 - tol))) throw DomainError("identity F needs x < pi/4");
      break;
  }
  const Real r3 = root3(bits);
  Real s = sin(x);
  Real cot2 = sqr(cos(x) / s);
  Real csc2 = 1 / sqr(s);
  Real c = cbrt(cot2);
  switch (variant) {
    case TrigVariant::D: {
      Real at = atan(r3 / (2 * c - 1));
      Real lg = log(csc2 / pow(c + 1, 3));
      return 6 * sqr(at) - sqr(lg) / 2;
    }
    case TrigVariant::E: {
      Real at = atan(r3 / (2 * c + 1));
      Real lg = checked_log(csc2 * cos(2 * x) / pow(c - 1, 3), "identity E");
      return 6 * sqr(at) - sqr(lg) / 2;
    }
    case TrigVariant::F: {
      Real k = sqr(s) / cos(2 * x);
      Real at = atan(r3 / (2 * c - 1));
      Real lg = log(csc2 / pow(c + 1, 3));
      return 2 * r3 * k * c * (c + 1) * at + k * c * (c - 1) * lg;
    }
  }
  return Real::nan(bits);
}

}  // namespace c3k
