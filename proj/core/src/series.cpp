#include "c3k/series.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "c3k/errors.hpp"
#include "term_stream.hpp"

namespace c3k {

std::string describe(const Weight& w) {
  switch (w.kind) {
    case Weight::Kind::Unit: return "1";
    case Weight::Kind::Fib: return "F(" + std::to_string(w.m) + "k)";
    case Weight::Kind::Lucas: return "L(" + std::to_string(w.m) + "k)";
    case Weight::Kind::Horadam: {
      std::string s = "W(" + std::to_string(w.m) + "k";
      if (w.horadam) {
        const auto& h = *w.horadam;
        s += "; p=" + h.p.get_str() + ",q=" + h.q.get_str() + ",a=" + h.a.get_str() + ",b=" + h.b.get_str();
      }
      return s + ")";
    }
  }
  return "?";
}

Real argument_value(const SeriesSpec& spec, mpfr_prec_t bits) {
  if (const auto* q = std::get_if<BigRational>(&spec.z)) return Real(*q, bits);
  return eval_expr(std::get<Expr>(spec.z), bits);
}

std::string describe_argument(const SeriesSpec& spec) {
  if (const auto* q = std::get_if<BigRational>(&spec.z)) return q->get_str();
  return std::get<Expr>(spec.z).to_string();
}

namespace {

constexpr std::array<std::string_view, 4> kConvergenceNames{"geometric", "boundary-positive",
                                                            "boundary-alternating", "divergent-formal"};

}  // namespace

std::string_view to_string(ConvergenceKind kind) {
  return kConvergenceNames[static_cast<std::size_t>(kind)];
}

std::optional<ConvergenceKind> parse_convergence(std::string_view name) {
  for (std::size_t i = 0; i < kConvergenceNames.size(); ++i) {
    if (kConvergenceNames[i] == name) return static_cast<ConvergenceKind>(i);
  }
  return std::nullopt;
}

BigInt binom_3k_k(long k) {
  if (k < 1) throw InvalidParams("binom_3k_k needs k >= 1");
  BigInt c = 3;
  for (long j = 1; j < k; ++j) {
    const auto uj = static_cast<unsigned long>(j);
    c *= BigInt(3 * uj + 1) * (3 * uj + 2) * (3 * uj + 3);
    BigInt den = BigInt(uj + 1) * (2 * uj + 1) * (2 * uj + 2);
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
  }
  return c;
}

ConvergenceClass classify(const SeriesSpec& spec, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  Real z = argument_value(spec, bits);
  detail::Envelope env = detail::envelope(spec.weight, bits);
  ConvergenceClass out;
  out.rho = abs(z) * env.g * 4 / 27;
  const Real tol = Real::pow10(-6, bits);
  if (out.rho < 1 - tol) {
    out.kind = ConvergenceKind::Geometric;
  } else if (out.rho > 1 + tol) {
    out.kind = ConvergenceKind::DivergentFormal;
  } else {
    const int s = z.sign() * env.sign;
    out.kind = s < 0 ? ConvergenceKind::BoundaryAlternating : ConvergenceKind::BoundaryPositive;
  }
  return out;
}

Real partial_sum(const SeriesSpec& spec, long K, const PrecisionContext& ctx) {
  if (K < 1) throw InvalidParams("partial_sum needs K >= 1");
  detail::TermStream ts(spec, ctx.bits());
  Real s(ctx.bits());
  for (long k = 1; k <= K; ++k) {
    ts.advance();
    s += ts.term();
  }
  return s;
}

namespace {

// Tail bound given the stream positioned at k = K.
Real tail_from_state(const detail::TermStream& ts, int a, const detail::Envelope& env, const Real& rho) {
  const auto bits = ts.z().precision();
  const long K = ts.k();
  if (env.c.is_zero() || ts.z().is_zero()) return Real(0L, bits);

  Real zg = abs(ts.z()) * env.g;
  Real rho_hat = rho;
  for (long j = K + 1; j <= K + 32; ++j) {
    Real ratio = zg;
    detail::apply_binomial_step(ratio, j);
    for (int i = 0; i < a; ++i) {
      ratio *= j;
      ratio /= j + 1;
    }
    rho_hat = max(rho_hat, ratio);
  }
  rho_hat *= 1 + Real::pow10(-(static_cast<long>(bits) / 4), bits);
  if (!(rho_hat < 1)) return Real::infinity(bits);

  // envelope term K+1: c |r_{K+1}| g^{K+1} / (K+1)^a
  Real u = abs(ts.ratio_part()) * abs(ts.z());
  detail::apply_binomial_step(u, K);
  u *= env.c;
  u *= pow(env.g, K + 1);
  for (int i = 0; i < a; ++i) u /= K + 1;
  return u / (1 - rho_hat);
}

}  // namespace

Real tail_bound(const SeriesSpec& spec, long K, const PrecisionContext& ctx) {
  if (K < 1) throw InvalidParams("tail_bound needs K >= 1");
  const auto bits = ctx.bits();
  Real z = argument_value(spec, bits);
  detail::Envelope env = detail::envelope(spec.weight, bits);
  if (z.is_zero() || env.c.is_zero()) return Real(0L, bits);
  ConvergenceClass cls = classify(spec, ctx);
  if (cls.kind != ConvergenceKind::Geometric) {
    throw NotGeometric("tail bound needs a geometric series, class is " + std::string(to_string(cls.kind)));
  }
  detail::TermStream ts(z, spec.a, spec.weight);
  for (long k = 1; k <= K; ++k) ts.advance();
  return tail_from_state(ts, spec.a, env, cls.rho);
}

SumResult sum_to_digits(const SeriesSpec& spec, int digits, const PrecisionContext& ctx) {
  if (digits < 1) throw InvalidParams("digits must be >= 1");
  const auto bits = ctx.bits();
  Real z = argument_value(spec, bits);
  ConvergenceClass cls = classify(spec, ctx);
  if (cls.kind != ConvergenceKind::Geometric) {
    throw NotGeometric("direct summation needs a geometric series, class is " +
                       std::string(to_string(cls.kind)));
  }
  detail::Envelope env = detail::envelope(spec.weight, bits);
  detail::TermStream ts(z, spec.a, spec.weight);
  const Real goal = Real::pow10(-digits, bits);
  Real unit_round(1L, bits);
  mpfr_div_2ui(unit_round.get(), unit_round.get(), static_cast<unsigned long>(bits), MPFR_RNDN);

  Real sum(bits);
  Real abs_sum(bits);
  long K = std::min<long>(64, ctx.max_expected_terms);
  for (;;) {
    while (ts.k() < K) {
      ts.advance();
      sum += ts.term();
      abs_sum += abs(ts.term());
    }
    Real tail = tail_from_state(ts, spec.a, env, cls.rho);
    tail += unit_round * abs_sum * (8 * (K + 1));
    if (tail < goal) return {sum, K, tail};
    if (K >= ctx.max_expected_terms) {
      throw MaxTermsExceeded("tail still " + tail.to_string(3) + " after " + std::to_string(K) +
                             " terms (limit " + std::to_string(ctx.max_expected_terms) + ")");
    }
    // The stream is incremental, so checking every eighth is cheap and keeps
    // the overshoot past the needed K under 13%.
    K = std::min(K + std::max<long>(64, K / 8), ctx.max_expected_terms);
  }
}

}  // namespace c3k
