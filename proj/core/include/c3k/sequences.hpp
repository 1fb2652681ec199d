#pragma once

#include <optional>
#include <string_view>

#include "c3k/context.hpp"
#include "c3k/real.hpp"

namespace c3k {

BigInt fib(long n);
BigInt lucas(long n);

// W_0 = a, W_1 = b, W_n = p W_{n-1} + q W_{n-2}.
struct HoradamParams {
  BigInt p{1};
  BigInt q{1};
  BigInt a{0};
  BigInt b{1};

  BigInt discriminant() const { return p * p + 4 * q; }
  // A*B = b^2 - a b p - a^2 q, exact.
  BigInt ab_product() const { return b * b - a * b * p - a * a * q; }
};

// Throws InvalidParams unless p^2 + 4q > 0.
void validate(const HoradamParams& h);

struct HoradamRoots {
  Real delta;
  Real alpha;  // (p + delta) / 2
  Real beta;   // (p - delta) / 2
  Real A;      // b - a beta
  Real B;      // b - a alpha
};

HoradamRoots horadam_roots(const HoradamParams& h, const PrecisionContext& ctx);

BigInt horadam(long n, const HoradamParams& h);

// V_n = alpha*^n + beta*^n; V_0 = 2, V_1 = p.
BigInt horadam_companion(long n, const HoradamParams& h);

enum class FLIdentity { F1, F2, F3, F4, F5, F6, F7, F8, LEMMA1, LEMMA2 };

std::string_view to_string(FLIdentity id);
std::optional<FLIdentity> parse_fl_identity(std::string_view name);

// F1/F2 read m_or_r as r and ignore n (both the alpha and beta forms are
// checked). F3..F8 take (n, m). LEMMA1/LEMMA2 take (p, q) = (n, m).
bool check_fl_identity(FLIdentity id, long n, long m_or_r, const PrecisionContext& ctx);

}  // namespace c3k
