#include "term_stream.hpp"

#include <utility>

#include "c3k/errors.hpp"

namespace c3k::detail {

WeightStream::WeightStream(const Weight& w) {
  switch (w.kind) {
    case Weight::Kind::Unit:
      unit_ = true;
      cur_ = 1;
      return;
    case Weight::Kind::Fib:
      unit_ = false;
      cur_ = 0;
      nxt_ = fib(w.m);
      v_ = lucas(w.m);
      q_ = (w.m % 2 == 0) ? 1 : -1;
      return;
    case Weight::Kind::Lucas:
      unit_ = false;
      cur_ = 2;
      nxt_ = lucas(w.m);
      v_ = lucas(w.m);
      q_ = (w.m % 2 == 0) ? 1 : -1;
      return;
    case Weight::Kind::Horadam: {
      if (!w.horadam) throw InvalidParams("Horadam weight without parameters");
      if (w.m < 0) throw InvalidParams("Horadam weight index must be >= 0");
      const HoradamParams& h = *w.horadam;
      unit_ = false;
      cur_ = h.a;
      nxt_ = horadam(w.m, h);
      v_ = horadam_companion(w.m, h);
      BigInt mq = -h.q;
      mpz_pow_ui(q_.get_mpz_t(), mq.get_mpz_t(), static_cast<unsigned long>(w.m));
      return;
    }
  }
}

void WeightStream::next() {
  if (unit_) return;
  BigInt n = v_ * nxt_ - q_ * cur_;
  cur_ = std::move(nxt_);
  nxt_ = std::move(n);
}

Envelope envelope(const Weight& w, mpfr_prec_t bits) {
  Envelope e{Real(1, bits), Real(1, bits), 1};
  switch (w.kind) {
    case Weight::Kind::Unit: return e;
    case Weight::Kind::Fib:
    case Weight::Kind::Lucas: {
      if (w.kind == Weight::Kind::Lucas) e.c = Real(2, bits);
      if (w.m == 0) {
        if (w.kind == Weight::Kind::Fib) e.c = Real(0L, bits);
        return e;
      }
      const long am = w.m < 0 ? -w.m : w.m;
      Real alpha = (sqrt(Real(5, bits)) + 1) / 2;
      e.g = pow(alpha, am);
      // dominant root: alpha^m for m > 0, beta^m = (-alpha)^|m| for m < 0
      e.sign = (w.m < 0 && am % 2 == 1) ? -1 : 1;
      return e;
    }
    case Weight::Kind::Horadam: {
      if (!w.horadam) throw InvalidParams("Horadam weight without parameters");
      const HoradamParams& h = *w.horadam;
      validate(h);
      Real p(h.p, bits);
      Real delta = sqrt(Real(h.discriminant(), bits));
      Real ar = (p + delta) / 2;
      Real br = (p - delta) / 2;
      Real A = Real(h.b, bits) - Real(h.a, bits) * br;
      Real B = Real(h.b, bits) - Real(h.a, bits) * ar;
      Real slack = 1 + Real::pow10(-20, bits);
      e.c = (abs(A) + abs(B)) / delta * slack;
      const bool alpha_dominant = abs(ar) >= abs(br);
      const Real& dom = alpha_dominant ? ar : br;
      e.g = pow(abs(dom), w.m);
      e.sign = (dom.sign() < 0 && w.m % 2 == 1) ? -1 : 1;
      return e;
    }
  }
  return e;
}

void apply_binomial_step(Real& x, long k) {
  const auto uk = static_cast<unsigned long>(k);
  if (uk < 400'000'000UL) {
    mpfr_mul_ui(x.get(), x.get(), 2UL * (uk + 1) * (2 * uk + 1), MPFR_RNDN);
    mpfr_div_ui(x.get(), x.get(), 3UL * (3 * uk + 1) * (3 * uk + 2), MPFR_RNDN);
  } else {
    mpfr_mul_ui(x.get(), x.get(), 2UL * (uk + 1), MPFR_RNDN);
    mpfr_mul_ui(x.get(), x.get(), 2 * uk + 1, MPFR_RNDN);
    mpfr_div_ui(x.get(), x.get(), 3UL * (3 * uk + 1), MPFR_RNDN);
    mpfr_div_ui(x.get(), x.get(), 3 * uk + 2, MPFR_RNDN);
  }
}

TermStream::TermStream(const SeriesSpec& spec, mpfr_prec_t bits)
    : TermStream(argument_value(spec, bits), spec.a, spec.weight) {}

TermStream::TermStream(const Real& z, int a, const Weight& w)
    : z_(z), a_(a), weight_(w), r_(1, z.precision()), term_(z.precision()) {
  if (a < 0 || a > 2) throw InvalidParams("series exponent a must be 0, 1 or 2");
}

void TermStream::advance() {
  mpfr_mul(r_.get(), r_.get(), z_.get(), MPFR_RNDN);
  apply_binomial_step(r_, k_);
  ++k_;
  weight_.next();
  mpfr_set(term_.get(), r_.get(), MPFR_RNDN);
  if (!weight_.unit()) mpfr_mul_z(term_.get(), term_.get(), weight_.value().get_mpz_t(), MPFR_RNDN);
  const auto uk = static_cast<unsigned long>(k_);
  if (a_ == 1) {
    mpfr_div_ui(term_.get(), term_.get(), uk, MPFR_RNDN);
  } else if (a_ == 2) {
    if (uk < 4'000'000'000UL) {
      mpfr_div_ui(term_.get(), term_.get(), uk * uk, MPFR_RNDN);
    } else {
      mpfr_div_ui(term_.get(), term_.get(), uk, MPFR_RNDN);
      mpfr_div_ui(term_.get(), term_.get(), uk, MPFR_RNDN);
    }
  }
}

}  // namespace c3k::detail
