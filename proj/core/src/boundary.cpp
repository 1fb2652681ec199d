// Summation on the circle |z| g = 27/4.
//
// Positive side: direct sum to K, then the tail from
//   C(3k,k) = (27/4)^k sqrt(3/(4 pi k)) exp(E(1/k)),
//   E(u) = sum_j B_2j/(2j(2j-1)) (3^(1-2j) - 1 - 2^(1-2j)) u^(2j-1),
// so term_k = sqrt(4 pi/3) k^(1/2-a) sum_i e_i k^-i with e = coefficients of
// exp(-E), and sum_{k>K} k^-s is a Hurwitz zeta tail (Euler-Maclaurin).
//
// Alternating side: Cohen, Rodriguez Villegas, Zagier, "Convergence
// acceleration of alternating series", Exp. Math. 9 (2000), algorithm 1.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "c3k/errors.hpp"
#include "c3k/series.hpp"
#include "term_stream.hpp"

namespace c3k {

namespace {

constexpr int kExpansionOrder = 12;  // e_0 .. e_12
constexpr int kEulerMaclaurinTerms = 8;

const std::vector<BigRational>& bernoulli_table() {
  static const std::vector<BigRational> table = [] {
    constexpr int n_max = 2 * (kEulerMaclaurinTerms + kExpansionOrder) + 2;
    std::vector<BigRational> b(n_max + 1);
    b[0] = 1;
    for (int m = 1; m <= n_max; ++m) {
      BigRational acc = 0;
      BigInt binom = 1;  // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        acc += BigRational(binom) * b[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      b[m] = -acc / (m + 1);
      b[m].canonicalize();
    }
    return b;
  }();
  return table;
}

// Coefficients of exp(-E(u)) in powers of u.
const std::vector<BigRational>& stirling_coefficients() {
  static const std::vector<BigRational> e = [] {
    const auto& B = bernoulli_table();
    std::vector<BigRational> h(kExpansionOrder + 1);
    for (int j = 1; 2 * j - 1 <= kExpansionOrder; ++j) {
      BigInt p3;
      BigInt p2;
      mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(2 * j - 1));
      mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(2 * j - 1));
      BigRational bracket = BigRational(1, 1) / BigRational(p3) - 1 - BigRational(1, 1) / BigRational(p2);
      BigRational c = B[2 * j] / BigRational(2 * j * (2 * j - 1)) * bracket;
      c.canonicalize();
      h[2 * j - 1] = -c;
    }
    std::vector<BigRational> out(kExpansionOrder + 1);
    out[0] = 1;
    for (int i = 1; i <= kExpansionOrder; ++i) {
      BigRational acc = 0;
      for (int j = 1; j <= i; ++j) acc += j * h[j] * out[i - j];
      out[i] = acc / i;
      out[i].canonicalize();
    }
    return out;
  }();
  return e;
}

// sum_{k >= N} k^-s for s > 1.
Real hurwitz_tail(const Real& s, long N) {
  const auto bits = s.precision();
  const auto& B = bernoulli_table();
  Real n(N, bits);
  Real log_n = log(n);
  Real n_pow_minus_s = exp(-(s * log_n));
  Real out = n_pow_minus_s * n / (s - 1) + n_pow_minus_s / 2;
  Real rising = s;            // (s)_{2j-1}
  Real npow = n_pow_minus_s / n;  // N^(-s-2j+1)
  Real fact(2L, bits);        // (2j)!
  for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
    out += Real(B[2 * j], bits) / fact * rising * npow;
    rising *= s + (2 * j - 1);
    rising *= s + 2 * j;
    npow /= n;
    npow /= n;
    fact *= (2 * j + 1);
    fact *= (2 * j + 2);
  }
  return out;
}

Real asymptotic_tail(int a, long first, mpfr_prec_t bits) {
  const auto& e = stirling_coefficients();
  Real acc(bits);
  for (int i = 0; i <= kExpansionOrder; ++i) {
    Real s = Real(2 * a - 1 + 2 * i, bits) / 2;
    acc += Real(e[i], bits) * hurwitz_tail(s, first);
  }
  return sqrt(pi(bits) * 4 / 3) * acc;
}

SumResult positive_boundary(const SeriesSpec& spec, int digits, const PrecisionContext& ctx,
                            const BoundaryOptions& opts) {
  if (spec.a != 2) {
    throw Unsupported("positive boundary needs a = 2 (terms decay like k^(" +
                      std::to_string(2 * (1 - spec.a) + 1) + "/2) otherwise)");
  }
  const auto bits = ctx.bits();
  const long K = std::max<long>(opts.direct_terms, 64);
  const long half = K / 2;
  detail::TermStream ts(spec, bits);
  Real sum(bits);
  Real sum_half(bits);
  for (long k = 1; k <= K; ++k) {
    ts.advance();
    sum += ts.term();
    if (k == half) sum_half = sum;
  }
  Real value = sum + asymptotic_tail(spec.a, K + 1, bits);
  Real check = sum_half + asymptotic_tail(spec.a, half + 1, bits);
  if (!(abs(value - check) <= Real::pow10(-(digits + 2), bits))) {
    throw Unsupported("boundary tail estimates disagree by " + abs(value - check).to_string(3));
  }
  Real claim = Real::pow10(-digits, bits) * max(abs(value), Real(1, bits));
  return {value, K, claim};
}

// sum_{j>=0} (-1)^j b[j]
Real crvz(const std::vector<Real>& b, mpfr_prec_t bits) {
  const long n = static_cast<long>(b.size());
  Real d = pow(3 + sqrt(Real(8, bits)), n);
  d = (d + 1 / d) / 2;
  Real bb(-1, bits);
  Real c = -d;
  Real s(bits);
  for (long k = 0; k < n; ++k) {
    c = bb - c;
    s += c * b[static_cast<std::size_t>(k)];
    bb *= (k + n) * (k - n) * 2;
    bb /= (2 * k + 1) * (k + 1);
  }
  return s / d;
}

SumResult alternating_boundary(const SeriesSpec& spec, int digits, const PrecisionContext& ctx) {
  if (spec.a < 1) throw Unsupported("alternating boundary needs a in {1, 2}");
  const auto bits = ctx.bits();
  const long n1 = static_cast<long>(std::ceil(1.31 * (digits + 3))) + 4;
  const long n2 = n1 + 12;
  Real z = argument_value(spec, bits);
  detail::TermStream ts(abs(z), spec.a, spec.weight);
  std::vector<Real> mags;
  mags.reserve(static_cast<std::size_t>(n2));
  for (long k = 1; k <= n2; ++k) {
    ts.advance();
    mags.push_back(ts.term());
  }
  // sum_{k>=1} (-1)^k |t_k| = -sum_{j>=0} (-1)^j |t_{j+1}|
  std::vector<Real> first(mags.begin(), mags.begin() + n1);
  Real v1 = -crvz(first, bits);
  Real v2 = -crvz(mags, bits);
  if (!(abs(v1 - v2) <= Real::pow10(-(digits + 1), bits))) {
    throw Unsupported("alternating acceleration unstable: orders " + std::to_string(n1) + " and " +
                      std::to_string(n2) + " differ by " + abs(v1 - v2).to_string(3));
  }
  Real claim = Real::pow10(-digits, bits) * max(abs(v2), Real(1, bits));
  return {v2, n2, claim};
}

}  // namespace

SumResult sum_boundary_detailed(const SeriesSpec& spec, int digits, const PrecisionContext& ctx,
                                const BoundaryOptions& opts) {
  if (digits < 1) throw InvalidParams("digits must be >= 1");
  ConvergenceClass cls = classify(spec, ctx);
  if (cls.kind == ConvergenceKind::Geometric || cls.kind == ConvergenceKind::DivergentFormal) {
    throw Unsupported("boundary summation needs a boundary class, got " + std::string(to_string(cls.kind)));
  }
  if (digits > opts.max_digits) {
    throw Unsupported("boundary summation supports at most " + std::to_string(opts.max_digits) +
                      " digits, requested " + std::to_string(digits));
  }
  if (spec.weight.kind != Weight::Kind::Unit) {
    throw Unsupported("boundary summation supports unit weights only");
  }
  if (cls.kind == ConvergenceKind::BoundaryPositive) return positive_boundary(spec, digits, ctx, opts);
  return alternating_boundary(spec, digits, ctx);
}

Real sum_boundary(const SeriesSpec& spec, int digits, const PrecisionContext& ctx,
                  const BoundaryOptions& opts) {
  return sum_boundary_detailed(spec, digits, ctx, opts).value;
}

}  // namespace c3k
