#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace c3k {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Owning wrapper around an mpfr_t. Binary operations round to the larger of
// the two operand precisions; assignment adopts the source precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(long v, mpfr_prec_t prec);
  Real(const BigInt& v, mpfr_prec_t prec);
  Real(const BigRational& v, mpfr_prec_t prec);

  static Real from_decimal(std::string_view text, mpfr_prec_t prec);
  static Real nan(mpfr_prec_t prec);
  static Real infinity(mpfr_prec_t prec);
  // 10^e
  static Real pow10(long e, mpfr_prec_t prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // floor(log10 |x|); undefined for zero, NaN or infinity.
  long floor_log10_abs() const;

  // Decimal rendering with `sig_digits` significant digits. Plain positional
  // notation for moderate exponents, "d.ddde-45" style otherwise.
  std::string to_string(int sig_digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real& operator*=(const BigInt& o);
  Real& operator/=(const BigInt& o);

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);
Real operator*(const Real& a, const BigInt& b);
Real operator-(const Real& a);

bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator<(const Real& a, long b);
bool operator>(const Real& a, long b);
bool operator<=(const Real& a, long b);
bool operator>=(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);  // real branch, cbrt(-x) = -cbrt(x)
Real log(const Real& x);
Real exp(const Real& x);
Real atan(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real pow(const Real& x, long e);
Real sqr(const Real& x);
Real max(const Real& a, const Real& b);

Real pi(mpfr_prec_t prec);

}  // namespace c3k
