#pragma once

#include "c3k/series.hpp"

namespace c3k::detail {

// Exact weights x_j = X_{m j} via x_{j+1} = V x_j - Q x_{j-1}, where V and Q
// are the sum and product of the m-th powers of the characteristic roots.
class WeightStream {
 public:
  explicit WeightStream(const Weight& w);

  bool unit() const { return unit_; }
  const BigInt& value() const { return cur_; }  // x_j
  void next();

 private:
  bool unit_ = true;
  BigInt cur_;
  BigInt nxt_;
  BigInt v_;
  BigInt q_;
};

// |w(k)| <= c g^k for all k >= 0; `sign` is the sign of the dominant root's
// m-th power (decides positive vs alternating at the boundary).
struct Envelope {
  Real c;
  Real g;
  int sign = 1;
};

Envelope envelope(const Weight& w, mpfr_prec_t bits);

// Walks the terms z^k w(k) / (k^a C(3k,k)) for k = 1, 2, ...
class TermStream {
 public:
  TermStream(const SeriesSpec& spec, mpfr_prec_t bits);
  TermStream(const Real& z, int a, const Weight& w);

  void advance();

  long k() const { return k_; }
  const Real& z() const { return z_; }
  const Real& ratio_part() const { return r_; }  // z^k / C(3k,k)
  const Real& term() const { return term_; }

 private:
  Real z_;
  int a_;
  WeightStream weight_;
  long k_ = 0;
  Real r_;
  Real term_;
};

// Multiplies x by C(3k,k)/C(3k+3,k+1) = 2(k+1)(2k+1) / (3(3k+1)(3k+2)).
void apply_binomial_step(Real& x, long k);

}  // namespace c3k::detail
