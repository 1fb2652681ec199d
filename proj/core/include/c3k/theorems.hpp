#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "c3k/context.hpp"
#include "c3k/real.hpp"
#include "c3k/sequences.hpp"
#include "c3k/series.hpp"

namespace c3k {

enum class Family {
  THM1_FIB,
  THM1_LUC,
  COR2_FIB,
  COR2_LUC,
  THM3_V1,
  THM3_V2,
  THM3_V3,
  THM3_V4,
  THM3_V5,
  THM3_V6,
  THM4_FIB,
  THM4_LUC,
  COR5_FIB,
  COR5_LUC,
  THM6_FIB,
  THM6_LUC,
  THM7_FIB,
  THM7_LUC,
  THM9_FIB,
  THM9_LUC,
  THM10_FIB,
  THM10_LUC,
  HORADAM_A2,
  HORADAM_A1,
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

// Which integer parameters a family reads.
enum class ParamShape { R, NM, PQ, HoradamR };
ParamShape shape_of(Family f);

struct TheoremParams {
  Family family = Family::THM1_FIB;
  long r = 0;
  long n = 0;
  long m = 0;
  long p = 0;
  long q = 0;
  std::optional<HoradamParams> horadam;  // HORADAM_* only

  static TheoremParams with_r(Family f, long r);
  static TheoremParams with_nm(Family f, long n, long m);
  static TheoremParams with_pq(Family f, long p, long q);
  static TheoremParams with_horadam(Family f, HoradamParams h, long r);
};

// "THM7_FIB(p=-2,q=5)"
std::string describe(const TheoremParams& params);

nlohmann::json to_json(const TheoremParams& params);
TheoremParams theorem_params_from_json(const nlohmann::json& j);

// Family side conditions, y != 0 and the A window for Theorem 3, and
// |z| g 4/27 <= 1. Throws InvalidParams naming the constraint.
void validate(const TheoremParams& params);

// Theorem 3 substitution table.
std::pair<BigInt, BigInt> thm3_pair(Family variant, long n, long m);

// The plain series sum_k z^k w(k) / (k^a C(3k,k)) the family evaluates.
// Sign factors such as (-1)^{(k-1)(r-1)} in the Theorem 6 statements are
// folded into z and the returned right-hand side.
SeriesSpec theorem_lhs_spec(const TheoremParams& params);

Real theorem_rhs(const TheoremParams& params, const PrecisionContext& ctx);

// The closed form without validate(); may be formal (divergent series) or
// throw DomainError.
Real theorem_rhs_formal(const TheoremParams& params, const PrecisionContext& ctx);

enum class Branch { Alpha, Beta };

// Closed forms of the unit-weight series at z alpha^m and z beta^m
// (m = 2p+q); (alpha - beta)/sqrt5 and alpha + beta give THM7_FIB / THM7_LUC.
Real thm7_intermediate(const TheoremParams& params, Branch branch, const PrecisionContext& ctx);

// Horadam generalization, a = 2 or a = 1.
Real horadam_rhs(const HoradamParams& h, long r, int a, const PrecisionContext& ctx);

}  // namespace c3k
