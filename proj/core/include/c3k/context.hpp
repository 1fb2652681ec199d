#pragma once

#include <mpfr.h>

#include "c3k/real.hpp"

namespace c3k {

// Decimal digit budget. Immutable once built.
struct PrecisionContext {
  int target_digits = 30;
  int guard_digits = 10;
  int working_digits = 40;
  long max_expected_terms = 1;

  // Binary precision carrying working_digits decimal digits.
  mpfr_prec_t bits() const;
};

// working = target + guard + ceil(log10(max_expected_terms)).
PrecisionContext make_context(int target_digits, long max_expected_terms, int guard_digits = 10);

Real golden_ratio(const PrecisionContext& ctx);
Real golden_conjugate(const PrecisionContext& ctx);
Real pi(const PrecisionContext& ctx);

// 10^-target_digits at working precision.
Real epsilon(const PrecisionContext& ctx);

}  // namespace c3k
