#pragma once

#include "c3k/context.hpp"
#include "c3k/expr.hpp"
#include "c3k/real.hpp"

namespace c3k {

struct XYPair {
  Real x;
  Real y;
};

// Differentiation level of the (x,y) identities: A sums 1/k^2, B 1/k, C 1.
enum class Level { A, B, C };

int exponent_of(Level level);  // 2, 1, 0

// x/y >= 1 or x/y <= -(1+sqrt 2)^2 for A; x/y > 1 strictly for B and C.
// Throws DomainError (SingularInput for x == y at B/C).
void check_window(Level level, const XYPair& pair, const PrecisionContext& ctx);

Real phi(const Real& z, const PrecisionContext& ctx);
Real batir_rhs(const Real& z, const PrecisionContext& ctx);

Real A_rhs(const XYPair& pair, const PrecisionContext& ctx);
Real B_rhs(const XYPair& pair, const PrecisionContext& ctx);
Real C_rhs(const XYPair& pair, const PrecisionContext& ctx);
Real xy_rhs(Level level, const XYPair& pair, const PrecisionContext& ctx);

// Symbolic counterparts, for display and for the builtin catalog.
Expr A_expr(const Expr& x, const Expr& y);
Expr B_expr(const Expr& x, const Expr& y);
Expr C_expr(const Expr& x, const Expr& y);
Expr batir_expr(const Expr& z);

// D: sum (27/4 sin^2 2x)^k / (k^2 C), x in (0, pi/4]
// E: sum (-27/4 tan^2 2x)^k / (k^2 C), x in (0, pi/8]
// F: sum (27/4 sin^2 2x)^k / (k C), x in (0, pi/4)
enum class TrigVariant { D, E, F };

Real trig_rhs(TrigVariant variant, const Real& x, const PrecisionContext& ctx);
// Series argument for the variant at x.
Real trig_argument(TrigVariant variant, const Real& x, const PrecisionContext& ctx);

}  // namespace c3k
