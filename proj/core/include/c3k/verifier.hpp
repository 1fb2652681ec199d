#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c3k/closed_forms.hpp"
#include "c3k/registry.hpp"
#include "c3k/series.hpp"
#include "c3k/theorems.hpp"

namespace c3k {

enum class Status { Pass, Fail, SkippedDivergent, PassBoundaryReduced };

std::string_view to_string(Status s);  // "PASS", "FAIL", ...
bool is_success(Status s);             // anything but FAIL

struct VerificationReport {
  std::string identity_id;
  std::optional<TheoremParams> params;
  int target_digits = 0;
  Real lhs_value;
  Real rhs_value;
  int matched_digits = 0;
  long terms_used = 0;
  Real tail;
  Status status = Status::Fail;
  std::chrono::milliseconds elapsed{0};
  std::string diagnostic;  // empty on success
};

struct VerifyOptions {
  long max_terms = 1'000'000;
  unsigned jobs = 0;  // 0: hardware concurrency
  BoundaryOptions boundary;
};

// floor(-log10 of the difference), relative when |rhs| >= 1 and absolute
// otherwise, clamped to [0, cap]. Equal values give cap.
int matched_digits(const Real& lhs, const Real& rhs, int cap);

// Working context: target digits + 10.
VerificationReport verify(const IdentityRecord& record, int digits, const VerifyOptions& opts = {});

struct SuiteSummary {
  int digits = 0;
  int pass = 0;     // PASS and PASS_BOUNDARY_REDUCED
  int fail = 0;
  int skipped = 0;  // SKIPPED_DIVERGENT
  std::vector<VerificationReport> reports;  // sorted by id
};

SuiteSummary verify_all(const Catalog& catalog, int digits, const VerifyOptions& opts = {});

// Inclusive ranges. An empty m range means m in [1, n].
struct ParamGrid {
  std::pair<long, long> r{1, 1};
  std::pair<long, long> n{2, 2};
  std::optional<std::pair<long, long>> m;
  std::vector<std::pair<long, long>> pq;
  std::optional<HoradamParams> horadam;
};

std::vector<TheoremParams> expand_grid(Family family, const ParamGrid& grid);

// Invalid points are reported as FAIL with the violated constraint.
std::vector<VerificationReport> sweep_points(const std::vector<TheoremParams>& points, int digits,
                                             const VerifyOptions& opts = {});
std::vector<VerificationReport> sweep(Family family, const ParamGrid& grid, int digits,
                                      const VerifyOptions& opts = {});

enum class DiffLevel { A_to_B, B_to_C };

std::string_view to_string(DiffLevel level);

// Compares the upper closed form against x(x+y)/(y-x) d/dx of the lower one
// by central differences with h = 10^-floor(digits/3). PASS at >= digits/3
// matched digits. Throws DomainError when x +- h leaves the window.
VerificationReport differential_check(DiffLevel level, const Real& x, const Real& y, int digits);

}  // namespace c3k
