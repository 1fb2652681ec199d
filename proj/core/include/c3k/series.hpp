#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "c3k/context.hpp"
#include "c3k/expr.hpp"
#include "c3k/real.hpp"
#include "c3k/sequences.hpp"

namespace c3k {

struct Weight {
  enum class Kind { Unit, Fib, Lucas, Horadam };

  Kind kind = Kind::Unit;
  long m = 0;
  std::optional<HoradamParams> horadam;

  static Weight unit() { return {}; }
  static Weight fib(long m) { return {Kind::Fib, m, std::nullopt}; }
  static Weight lucas(long m) { return {Kind::Lucas, m, std::nullopt}; }
  static Weight horadam_weight(long m, HoradamParams h) { return {Kind::Horadam, m, std::move(h)}; }
};

std::string describe(const Weight& w);

using SeriesArgument = std::variant<BigRational, Expr>;

// sum_{k>=1} z^k w(k) / (k^a C(3k,k))
struct SeriesSpec {
  SeriesArgument z;
  int a = 2;
  Weight weight;
  std::string label;
};

Real argument_value(const SeriesSpec& spec, mpfr_prec_t bits);
std::string describe_argument(const SeriesSpec& spec);

enum class ConvergenceKind { Geometric, BoundaryPositive, BoundaryAlternating, DivergentFormal };

std::string_view to_string(ConvergenceKind kind);
std::optional<ConvergenceKind> parse_convergence(std::string_view name);

struct ConvergenceClass {
  ConvergenceKind kind = ConvergenceKind::Geometric;
  Real rho;  // limiting |term ratio| = |z| g 4/27
};

BigInt binom_3k_k(long k);

ConvergenceClass classify(const SeriesSpec& spec, const PrecisionContext& ctx);

Real partial_sum(const SeriesSpec& spec, long K, const PrecisionContext& ctx);

// Certified bound on |sum_{k>K} term_k| (truncation only). Infinity when the
// ratio bound cannot yet be shown below 1 at this K.
Real tail_bound(const SeriesSpec& spec, long K, const PrecisionContext& ctx);

struct SumResult {
  Real value;
  long terms_used = 0;
  Real tail;  // truncation bound plus accumulated roundoff allowance
};

SumResult sum_to_digits(const SeriesSpec& spec, int digits, const PrecisionContext& ctx);

struct BoundaryOptions {
  long direct_terms = 1'000'000;  // positive boundary: terms summed before the asymptotic tail
  int max_digits = 12;
};

// Value correct to `digits`, certified by agreement of two independent
// estimates. terms_used reports the direct terms (positive) or the
// acceleration order (alternating); tail is the claimed accuracy.
SumResult sum_boundary_detailed(const SeriesSpec& spec, int digits, const PrecisionContext& ctx,
                                const BoundaryOptions& opts = {});

Real sum_boundary(const SeriesSpec& spec, int digits, const PrecisionContext& ctx,
                  const BoundaryOptions& opts = {});

}  // namespace c3k
