#include "c3k/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "c3k/errors.hpp"

namespace c3k {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::SkippedDivergent: return "SKIPPED_DIVERGENT";
    case Status::PassBoundaryReduced: return "PASS_BOUNDARY_REDUCED";
  }
  return "FAIL";
}

bool is_success(Status s) { return s != Status::Fail; }

int matched_digits(const Real& lhs, const Real& rhs, int cap) {
  if (lhs.is_nan() || rhs.is_nan() || !lhs.is_finite() || !rhs.is_finite()) return 0;
  Real diff = abs(lhs - rhs);
  if (diff.is_zero()) return cap;
  if (abs(rhs) >= 1) diff /= abs(rhs);
  // floor(-log10 d) = -(floor(log10 d) + 1) unless d is an exact power of ten
  long e = diff.floor_log10_abs();
  long d = -e - 1;
  if (diff == Real::pow10(e, diff.precision())) d = -e;
  return static_cast<int>(std::clamp<long>(d, 0, cap));
}

namespace {

using Clock = std::chrono::steady_clock;

// 12 significant digits without trailing zeros, for ids.
std::string short_number(const Real& v) {
  std::string s = v.to_string(12);
  if (s.find('.') == std::string::npos || s.find('e') != std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

void finish(VerificationReport& r, Clock::time_point start) {
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

}  // namespace

VerificationReport verify(const IdentityRecord& record, int digits, const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerificationReport r;
  r.identity_id = record.id;
  r.target_digits = digits;
  if (const auto* p = std::get_if<TheoremParams>(&record.rhs)) r.params = *p;

  if (digits < 5) throw InvalidParams("verification needs digits >= 5");
  const PrecisionContext ctx = make_context(digits + 10, opts.max_terms);
  const auto bits = ctx.bits();
  r.lhs_value = Real::nan(bits);
  r.rhs_value = Real::nan(bits);
  r.tail = Real::nan(bits);

  const ConvergenceKind kind = record.convergence.kind;
  if (kind == ConvergenceKind::DivergentFormal) {
    r.status = Status::SkippedDivergent;
    try {
      r.rhs_value = record_rhs(record, ctx);
    } catch (const Error&) {
    }
    r.diagnostic = "|z| g 4/27 = " + record.convergence.rho.to_string(6) + " > 1; series diverges";
    finish(r, start);
    return r;
  }

  const bool boundary = kind != ConvergenceKind::Geometric;
  const int goal = boundary ? std::min(digits, 10) : digits;
  try {
    SumResult s = boundary ? sum_boundary_detailed(record.lhs, goal, ctx, opts.boundary)
                           : sum_to_digits(record.lhs, digits + 2, ctx);
    r.lhs_value = s.value;
    r.terms_used = s.terms_used;
    r.tail = s.tail;
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.diagnostic = std::string("lhs: ") + e.what();
    finish(r, start);
    return r;
  }

  try {
    r.rhs_value = record_rhs(record, ctx);
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.diagnostic = std::string("rhs: ") + e.what();
    finish(r, start);
    return r;
  }

  // Budget for evaluating the closed form at the working precision.
  r.tail += Real::pow10(-(ctx.target_digits + 5), bits) * max(abs(r.rhs_value), Real(1, bits));
  r.matched_digits = matched_digits(r.lhs_value, r.rhs_value, goal);
  const Real diff = abs(r.lhs_value - r.rhs_value);
  const bool bracket = diff <= 3 * r.tail;
  const bool enough = r.matched_digits >= goal - 2;
  if (bracket && enough) {
    r.status = boundary ? Status::PassBoundaryReduced : Status::Pass;
  } else {
    r.status = Status::Fail;
    r.diagnostic = "|lhs - rhs| = " + diff.to_string(3) + ", tail = " + r.tail.to_string(3) + ", matched " +
                   std::to_string(r.matched_digits) + " of " + std::to_string(goal) + " digits";
  }
  finish(r, start);
  return r;
}

namespace {

unsigned worker_count(unsigned requested, std::size_t tasks) {
  unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

template <class Task>
void parallel_for(std::size_t count, unsigned jobs, Task task) {
  const unsigned workers = worker_count(jobs, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

void sort_reports(std::vector<VerificationReport>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return a.identity_id < b.identity_id; });
}

VerificationReport failed_point(const TheoremParams& p, int digits, const std::string& why) {
  VerificationReport r;
  r.identity_id = describe(p);
  r.params = p;
  r.target_digits = digits;
  r.lhs_value = Real::nan(64);
  r.rhs_value = Real::nan(64);
  r.tail = Real::nan(64);
  r.status = Status::Fail;
  // validate() messages already lead with the id
  const std::string prefix = r.identity_id + ": ";
  r.diagnostic = why.rfind(prefix, 0) == 0 ? why.substr(prefix.size()) : why;
  return r;
}

}  // namespace

SuiteSummary verify_all(const Catalog& catalog, int digits, const VerifyOptions& opts) {
  SuiteSummary s;
  s.digits = digits;
  s.reports.resize(catalog.size());
  parallel_for(catalog.size(), opts.jobs, [&](std::size_t i) { s.reports[i] = verify(catalog[i], digits, opts); });
  sort_reports(s.reports);
  for (const auto& r : s.reports) {
    if (r.status == Status::Fail) {
      ++s.fail;
    } else if (r.status == Status::SkippedDivergent) {
      ++s.skipped;
    } else {
      ++s.pass;
    }
  }
  return s;
}

std::vector<TheoremParams> expand_grid(Family family, const ParamGrid& grid) {
  std::vector<TheoremParams> out;
  switch (shape_of(family)) {
    case ParamShape::R:
      for (long r = grid.r.first; r <= grid.r.second; ++r) out.push_back(TheoremParams::with_r(family, r));
      break;
    case ParamShape::NM:
      for (long n = grid.n.first; n <= grid.n.second; ++n) {
        const long lo = grid.m ? grid.m->first : 1;
        const long hi = grid.m ? grid.m->second : n;
        for (long m = lo; m <= hi; ++m) out.push_back(TheoremParams::with_nm(family, n, m));
      }
      break;
    case ParamShape::PQ:
      for (const auto& [p, q] : grid.pq) out.push_back(TheoremParams::with_pq(family, p, q));
      break;
    case ParamShape::HoradamR:
      for (long r = grid.r.first; r <= grid.r.second; ++r) {
        out.push_back(TheoremParams::with_horadam(family, grid.horadam.value_or(HoradamParams{}), r));
      }
      break;
  }
  return out;
}

std::vector<VerificationReport> sweep_points(const std::vector<TheoremParams>& points, int digits,
                                             const VerifyOptions& opts) {
  std::vector<VerificationReport> out(points.size());
  VerifyOptions inner = opts;
  parallel_for(points.size(), opts.jobs, [&](std::size_t i) {
    const auto start = Clock::now();
    try {
      IdentityRecord rec = instantiate(points[i].family, points[i]);
      out[i] = verify(rec, digits, inner);
    } catch (const Error& e) {
      out[i] = failed_point(points[i], digits, e.what());
      finish(out[i], start);
    }
  });
  return out;
}

std::vector<VerificationReport> sweep(Family family, const ParamGrid& grid, int digits, const VerifyOptions& opts) {
  return sweep_points(expand_grid(family, grid), digits, opts);
}

std::string_view to_string(DiffLevel level) { return level == DiffLevel::A_to_B ? "A_to_B" : "B_to_C"; }

VerificationReport differential_check(DiffLevel level, const Real& x0, const Real& y0, int digits) {
  const auto start = Clock::now();
  if (digits < 3) throw InvalidParams("differential check needs digits >= 3");
  const PrecisionContext ctx = make_context(digits + 10, 64);
  const auto bits = ctx.bits();
  Real x = x0;
  Real y = y0;
  mpfr_prec_round(x.get(), bits, MPFR_RNDN);
  mpfr_prec_round(y.get(), bits, MPFR_RNDN);
  const Level lower = level == DiffLevel::A_to_B ? Level::A : Level::B;
  const Level upper = level == DiffLevel::A_to_B ? Level::B : Level::C;
  const long h_exp = digits / 3;
  const Real h = Real::pow10(-h_exp, bits);

  // x == y raises SingularInput here; the shifted points must stay inside.
  check_window(upper, {x, y}, ctx);
  check_window(upper, {x + h, y}, ctx);
  check_window(upper, {x - h, y}, ctx);

  VerificationReport r;
  r.identity_id = "diff-" + std::string(to_string(level)) + "(" + short_number(x) + "," + short_number(y) + ")";
  r.target_digits = static_cast<int>(h_exp);
  r.lhs_value = xy_rhs(upper, {x, y}, ctx);
  Real deriv = (xy_rhs(lower, {x + h, y}, ctx) - xy_rhs(lower, {x - h, y}, ctx)) / (2 * h);
  r.rhs_value = x * (x + y) / (y - x) * deriv;
  r.matched_digits = matched_digits(r.lhs_value, r.rhs_value, digits);
  r.tail = Real::pow10(-h_exp, bits) * max(abs(r.rhs_value), Real(1, bits));
  r.terms_used = 0;
  r.status = r.matched_digits >= h_exp ? Status::Pass : Status::Fail;
  if (r.status == Status::Fail) {
    r.diagnostic = "central difference agrees to " + std::to_string(r.matched_digits) + " digits, need " +
                   std::to_string(h_exp);
  }
  finish(r, start);
  return r;
}

}  // namespace c3k
