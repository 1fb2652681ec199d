#include "c3k/context.hpp"

#include <cmath>
#include <string>

#include "c3k/errors.hpp"

namespace c3k {

mpfr_prec_t PrecisionContext::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits * 3.3219280948873623)) + 8;
}

PrecisionContext make_context(int target_digits, long max_expected_terms, int guard_digits) {
  if (target_digits < 1) {
    throw InvalidParams("target_digits must be >= 1, got " + std::to_string(target_digits));
  }
  if (max_expected_terms < 1) {
    throw InvalidParams("max_expected_terms must be >= 1");
  }
  if (guard_digits < 1) throw InvalidParams("guard_digits must be >= 1");
  int log_terms = 0;
  const auto n = static_cast<unsigned long long>(max_expected_terms);
  for (unsigned long long p = 1; p < n; p *= 10) ++log_terms;
  PrecisionContext ctx;
  ctx.target_digits = target_digits;
  ctx.guard_digits = guard_digits;
  ctx.working_digits = target_digits + guard_digits + log_terms;
  ctx.max_expected_terms = max_expected_terms;
  return ctx;
}

Real golden_ratio(const PrecisionContext& ctx) {
  Real five(5, ctx.bits());
  return (sqrt(five) + 1) / 2;
}

Real golden_conjugate(const PrecisionContext& ctx) {
  Real five(5, ctx.bits());
  return (1 - sqrt(five)) / 2;
}

Real pi(const PrecisionContext& ctx) { return pi(ctx.bits()); }

Real epsilon(const PrecisionContext& ctx) {
  return Real::pow10(-ctx.target_digits, ctx.bits());
}

}  // namespace c3k
