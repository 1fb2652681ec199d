#include "c3k/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "c3k/errors.hpp"

namespace c3k {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, kRnd);
}

Real::Real(const BigInt& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), kRnd);
}

Real::Real(const BigRational& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}

Real Real::from_decimal(std::string_view text, mpfr_prec_t prec) {
  Real r(prec);
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, kRnd);
  if (end == s.c_str() || *end != '\0') {
    throw ParseError("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::nan(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_nan(r.v_);
  return r;
}

Real Real::infinity(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_inf(r.v_, 1);
  return r;
}

Real Real::pow10(long e, mpfr_prec_t prec) {
  Real r(10, prec);
  mpfr_pow_si(r.v_, r.v_, e, kRnd);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, kRnd);
}

// Moved-from objects keep a null limb pointer, as mpreal does.
Real::Real(Real&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (v_[0]._mpfr_d == nullptr) {
      mpfr_init2(v_, other.precision());
    } else if (precision() != other.precision()) {
      mpfr_set_prec(v_, other.precision());
    }
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    std::swap(v_[0], other.v_[0]);
  }
  return *this;
}

Real::~Real() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

long Real::floor_log10_abs() const {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, v_, kRnd);
  mpfr_log10(t, t, MPFR_RNDD);
  mpfr_floor(t, t);
  long out = mpfr_get_si(t, MPFR_RNDD);
  mpfr_clear(t);
  return out;
}

std::string Real::to_string(int sig_digits) const {
  if (is_nan()) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  sig_digits = std::max(sig_digits, 1);
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(sig_digits), v_, kRnd);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  const long sci = static_cast<long>(e10) - 1;
  std::string out = sign;
  if (sci >= -6 && sci < sig_digits) {
    if (sci >= 0) {
      out += digits.substr(0, static_cast<size_t>(sci) + 1);
      if (static_cast<size_t>(sci) + 1 < digits.size()) {
        out += '.';
        out += digits.substr(static_cast<size_t>(sci) + 1);
      }
    } else {
      out += "0.";
      out.append(static_cast<size_t>(-sci - 1), '0');
      out += digits;
    }
    return out;
  }
  out += digits[0];
  if (digits.size() > 1) {
    out += '.';
    out += digits.substr(1);
  }
  out += 'e';
  out += std::to_string(sci);
  return out;
}

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, kRnd); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, kRnd); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, kRnd); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, kRnd); return *this; }
Real& Real::operator+=(long o) { mpfr_add_si(v_, v_, o, kRnd); return *this; }
Real& Real::operator-=(long o) { mpfr_sub_si(v_, v_, o, kRnd); return *this; }
Real& Real::operator*=(long o) { mpfr_mul_si(v_, v_, o, kRnd); return *this; }
Real& Real::operator/=(long o) { mpfr_div_si(v_, v_, o, kRnd); return *this; }
Real& Real::operator*=(const BigInt& o) { mpfr_mul_z(v_, v_, o.get_mpz_t(), kRnd); return *this; }
Real& Real::operator/=(const BigInt& o) { mpfr_div_z(v_, v_, o.get_mpz_t(), kRnd); return *this; }

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), kRnd);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), kRnd);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), kRnd);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), kRnd);
  return r;
}

Real operator+(const Real& a, long b) { Real r(a); r += b; return r; }
Real operator-(const Real& a, long b) { Real r(a); r -= b; return r; }
Real operator*(const Real& a, long b) { Real r(a); r *= b; return r; }
Real operator/(const Real& a, long b) { Real r(a); r /= b; return r; }
Real operator+(long a, const Real& b) { return b + a; }
Real operator*(long a, const Real& b) { return b * a; }
Real operator*(const Real& a, const BigInt& b) { Real r(a); r *= b; return r; }

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), kRnd);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.get(), a, b.get(), kRnd);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), kRnd);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator<(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.get(), b) < 0; }
bool operator>(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.get(), b) > 0; }
bool operator<=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.get(), b) <= 0; }
bool operator>=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.get(), b) >= 0; }

#define C3K_UNARY(name, fn)                   \
  Real name(const Real& x) {                  \
    Real r(x.precision());                    \
    fn(r.get(), x.get(), kRnd);               \
    return r;                                 \
  }

C3K_UNARY(abs, mpfr_abs)
C3K_UNARY(sqrt, mpfr_sqrt)
C3K_UNARY(cbrt, mpfr_cbrt)
C3K_UNARY(log, mpfr_log)
C3K_UNARY(exp, mpfr_exp)
C3K_UNARY(atan, mpfr_atan)
C3K_UNARY(sin, mpfr_sin)
C3K_UNARY(cos, mpfr_cos)
C3K_UNARY(tan, mpfr_tan)
C3K_UNARY(sqr, mpfr_sqr)

#undef C3K_UNARY

Real pow(const Real& x, long e) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, kRnd);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

}  // namespace c3k
