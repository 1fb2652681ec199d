#include "c3k/theorems.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#include "c3k/closed_forms.hpp"
#include "c3k/errors.hpp"

namespace c3k {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  ParamShape shape;
};

constexpr std::array<FamilyInfo, 24> kFamilies{{
    {Family::THM1_FIB, "THM1_FIB", ParamShape::R},
    {Family::THM1_LUC, "THM1_LUC", ParamShape::R},
    {Family::COR2_FIB, "COR2_FIB", ParamShape::R},
    {Family::COR2_LUC, "COR2_LUC", ParamShape::R},
    {Family::THM3_V1, "THM3_V1", ParamShape::NM},
    {Family::THM3_V2, "THM3_V2", ParamShape::NM},
    {Family::THM3_V3, "THM3_V3", ParamShape::NM},
    {Family::THM3_V4, "THM3_V4", ParamShape::NM},
    {Family::THM3_V5, "THM3_V5", ParamShape::NM},
    {Family::THM3_V6, "THM3_V6", ParamShape::NM},
    {Family::THM4_FIB, "THM4_FIB", ParamShape::R},
    {Family::THM4_LUC, "THM4_LUC", ParamShape::R},
    {Family::COR5_FIB, "COR5_FIB", ParamShape::R},
    {Family::COR5_LUC, "COR5_LUC", ParamShape::R},
    {Family::THM6_FIB, "THM6_FIB", ParamShape::R},
    {Family::THM6_LUC, "THM6_LUC", ParamShape::R},
    {Family::THM7_FIB, "THM7_FIB", ParamShape::PQ},
    {Family::THM7_LUC, "THM7_LUC", ParamShape::PQ},
    {Family::THM9_FIB, "THM9_FIB", ParamShape::PQ},
    {Family::THM9_LUC, "THM9_LUC", ParamShape::PQ},
    {Family::THM10_FIB, "THM10_FIB", ParamShape::PQ},
    {Family::THM10_LUC, "THM10_LUC", ParamShape::PQ},
    {Family::HORADAM_A2, "HORADAM_A2", ParamShape::HoradamR},
    {Family::HORADAM_A1, "HORADAM_A1", ParamShape::HoradamR},
}};

const FamilyInfo& info(Family f) { return kFamilies[static_cast<std::size_t>(f)]; }

bool is_thm3(Family f) {
  return f == Family::THM3_V1 || f == Family::THM3_V2 || f == Family::THM3_V3 || f == Family::THM3_V4 ||
         f == Family::THM3_V5 || f == Family::THM3_V6;
}

bool is_lucas(Family f) {
  switch (f) {
    case Family::THM1_LUC:
    case Family::COR2_LUC:
    case Family::THM4_LUC:
    case Family::COR5_LUC:
    case Family::THM6_LUC:
    case Family::THM7_LUC:
    case Family::THM9_LUC:
    case Family::THM10_LUC: return true;
    default: return false;
  }
}

int exponent_a(Family f) {
  switch (f) {
    case Family::THM4_FIB:
    case Family::THM4_LUC:
    case Family::COR5_FIB:
    case Family::COR5_LUC:
    case Family::THM9_FIB:
    case Family::THM9_LUC:
    case Family::HORADAM_A1: return 1;
    case Family::THM6_FIB:
    case Family::THM6_LUC:
    case Family::THM10_FIB:
    case Family::THM10_LUC: return 0;
    default: return 2;
  }
}

long sgn_pow(long e) { return (e % 2 == 0) ? 1 : -1; }  // (-1)^e

[[noreturn]] void invalid(const TheoremParams& params, const std::string& why) {
  throw InvalidParams(describe(params) + ": " + why);
}

BigInt ipow(const BigInt& base, long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

// z for the r-parameterized unit-weight families.
BigRational r_family_argument(Family f, long r) {
  const bool cor = f == Family::COR2_FIB || f == Family::COR2_LUC || f == Family::COR5_FIB ||
                   f == Family::COR5_LUC;
  const long idx = cor ? 3 * r : r;
  if (is_lucas(f)) {
    BigInt l = lucas(idx);
    BigRational z(BigInt(27 * sgn_pow(r)), l * l);
    z.canonicalize();
    return z;
  }
  BigInt fr = fib(idx);
  BigRational z(BigInt(27 * sgn_pow(r - 1)), 5 * fr * fr);
  z.canonicalize();
  return z;
}

// -27 F_p F_{p+q} / F_q^2
BigRational pq_argument(long p, long q) {
  BigInt fq = fib(q);
  BigRational z(-27 * fib(p) * fib(p + q), fq * fq);
  z.canonicalize();
  return z;
}

BigRational horadam_argument(const HoradamParams& h, long r) {
  BigInt w = horadam(r, h);
  BigRational z(27 * sgn_pow(r - 1) * h.ab_product() * ipow(h.q, r), h.discriminant() * w * w);
  z.canonicalize();
  return z;
}

Real cube(const Real& x) { return x * x * x; }

}  // namespace

std::string_view to_string(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& fi : kFamilies) {
    if (fi.name == name) return fi.family;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& fi : kFamilies) out.push_back(fi.family);
    return out;
  }();
  return v;
}

ParamShape shape_of(Family f) { return info(f).shape; }

TheoremParams TheoremParams::with_r(Family f, long r) {
  TheoremParams t;
  t.family = f;
  t.r = r;
  return t;
}

TheoremParams TheoremParams::with_nm(Family f, long n, long m) {
  TheoremParams t;
  t.family = f;
  t.n = n;
  t.m = m;
  return t;
}

TheoremParams TheoremParams::with_pq(Family f, long p, long q) {
  TheoremParams t;
  t.family = f;
  t.p = p;
  t.q = q;
  return t;
}

TheoremParams TheoremParams::with_horadam(Family f, HoradamParams h, long r) {
  TheoremParams t;
  t.family = f;
  t.r = r;
  t.horadam = std::move(h);
  return t;
}

std::string describe(const TheoremParams& params) {
  std::string s(to_string(params.family));
  switch (shape_of(params.family)) {
    case ParamShape::R: return s + "(r=" + std::to_string(params.r) + ")";
    case ParamShape::NM: return s + "(n=" + std::to_string(params.n) + ",m=" + std::to_string(params.m) + ")";
    case ParamShape::PQ: return s + "(p=" + std::to_string(params.p) + ",q=" + std::to_string(params.q) + ")";
    case ParamShape::HoradamR: {
      s += "(";
      if (params.horadam) {
        const auto& h = *params.horadam;
        s += "p=" + h.p.get_str() + ",q=" + h.q.get_str() + ",a=" + h.a.get_str() + ",b=" + h.b.get_str() + ",";
      }
      return s + "r=" + std::to_string(params.r) + ")";
    }
  }
  return s;
}

nlohmann::json to_json(const TheoremParams& params) {
  nlohmann::json j;
  j["family"] = std::string(to_string(params.family));
  switch (shape_of(params.family)) {
    case ParamShape::R: j["r"] = params.r; break;
    case ParamShape::NM:
      j["n"] = params.n;
      j["m"] = params.m;
      break;
    case ParamShape::PQ:
      j["p"] = params.p;
      j["q"] = params.q;
      break;
    case ParamShape::HoradamR:
      j["r"] = params.r;
      if (params.horadam) {
        const auto& h = *params.horadam;
        j["horadam"] = {{"p", h.p.get_str()}, {"q", h.q.get_str()}, {"a", h.a.get_str()}, {"b", h.b.get_str()}};
      }
      break;
  }
  return j;
}

namespace {

BigInt json_bigint(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing integer field \"") + key + "\"");
  const auto& v = j.at(key);
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    BigInt out;
    if (out.set_str(v.get<std::string>(), 10) != 0) {
      throw ParseError(std::string("field \"") + key + "\" is not an integer");
    }
    return out;
  }
  throw ParseError(std::string("field \"") + key + "\" is not an integer");
}

long json_long(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  }
  return j.at(key).get<long>();
}

}  // namespace

TheoremParams theorem_params_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw ParseError("theorem parameters need a \"family\" string");
  }
  const std::string name = j.at("family").get<std::string>();
  auto fam = parse_family(name);
  if (!fam) throw ParseError("unknown family \"" + name + "\"");
  switch (shape_of(*fam)) {
    case ParamShape::R: return TheoremParams::with_r(*fam, json_long(j, "r"));
    case ParamShape::NM: return TheoremParams::with_nm(*fam, json_long(j, "n"), json_long(j, "m"));
    case ParamShape::PQ: return TheoremParams::with_pq(*fam, json_long(j, "p"), json_long(j, "q"));
    case ParamShape::HoradamR: {
      if (!j.contains("horadam")) throw ParseError("Horadam family needs a \"horadam\" object");
      const auto& h = j.at("horadam");
      HoradamParams hp{json_bigint(h, "p"), json_bigint(h, "q"), json_bigint(h, "a"), json_bigint(h, "b")};
      return TheoremParams::with_horadam(*fam, hp, json_long(j, "r"));
    }
  }
  throw ParseError("unknown family \"" + name + "\"");
}

std::pair<BigInt, BigInt> thm3_pair(Family variant, long n, long m) {
  const long s = sgn_pow(m);
  switch (variant) {
    case Family::THM3_V1: {
      BigInt fn = fib(n);
      BigInt fm = fib(m);
      return {fn * fn, sgn_pow(n + m - 1) * fm * fm};
    }
    case Family::THM3_V2: return {fib(n + m), s * fib(n - m)};
    case Family::THM3_V3: return {fib(n + m), -s * fib(n - m)};
    case Family::THM3_V4: return {lucas(n) * fib(m), lucas(m) * fib(n)};
    case Family::THM3_V5: return {lucas(n + m), s * lucas(n - m)};
    case Family::THM3_V6: return {lucas(n + m), -s * lucas(n - m)};
    default: throw InvalidParams(std::string(to_string(variant)) + " is not a Theorem 3 variant");
  }
}

SeriesSpec theorem_lhs_spec(const TheoremParams& params) {
  SeriesSpec spec;
  spec.a = exponent_a(params.family);
  spec.label = describe(params);
  const Family f = params.family;
  switch (shape_of(f)) {
    case ParamShape::R: spec.z = r_family_argument(f, params.r); break;
    case ParamShape::NM: {
      auto [x, y] = thm3_pair(f, params.n, params.m);
      BigInt s = x + y;
      if (s == 0) invalid(params, "x + y = 0");
      BigRational z(27 * x * y, s * s);
      z.canonicalize();
      spec.z = z;
      break;
    }
    case ParamShape::PQ: {
      spec.z = pq_argument(params.p, params.q);
      const long m = 2 * params.p + params.q;
      spec.weight = is_lucas(f) ? Weight::lucas(m) : Weight::fib(m);
      break;
    }
    case ParamShape::HoradamR: {
      if (!params.horadam) invalid(params, "missing Horadam parameters");
      validate(*params.horadam);
      BigInt w = horadam(params.r, *params.horadam);
      if (w == 0 || params.horadam->discriminant() == 0) invalid(params, "W_r = 0");
      spec.z = horadam_argument(*params.horadam, params.r);
      break;
    }
  }
  return spec;
}

void validate(const TheoremParams& params) {
  const Family f = params.family;
  switch (f) {
    case Family::THM1_FIB:
    case Family::THM4_FIB:
    case Family::THM6_FIB:
    case Family::COR2_FIB:
    case Family::COR5_FIB:
    case Family::COR2_LUC:
    case Family::COR5_LUC:
      if (params.r < 1) invalid(params, "requires r >= 1");
      break;
    case Family::THM1_LUC:
      if (params.r < 0) invalid(params, "requires r >= 0");
      if (params.r == 1) invalid(params, "27/L_1^2 = 27 exceeds the radius 27/4; requires r != 1");
      break;
    case Family::THM4_LUC:
    case Family::THM6_LUC:
      if (params.r < 1) invalid(params, "requires r >= 1");
      if (params.r == 1) invalid(params, "27/L_1^2 = 27 exceeds the radius 27/4; requires r >= 2");
      break;
    case Family::THM3_V1:
      if (!(params.n > params.m && params.m >= 1)) invalid(params, "requires n > m >= 1");
      break;
    case Family::THM3_V2:
    case Family::THM3_V3:
    case Family::THM3_V5:
    case Family::THM3_V6:
      if (!(params.n >= params.m && params.m >= 1)) invalid(params, "requires n >= m >= 1");
      break;
    case Family::THM3_V4: {
      if (params.n < 1 || params.m < 1) invalid(params, "requires n, m >= 1");
      BigInt lhs = lucas(params.n) * fib(params.m);
      BigInt rhs = fib(params.n) * lucas(params.m);
      if (!(lhs > rhs)) {
        invalid(params, "requires L_n F_m > F_n L_m (got " + lhs.get_str() + " <= " + rhs.get_str() + ")");
      }
      break;
    }
    case Family::THM7_FIB:
    case Family::THM7_LUC:
    case Family::THM9_FIB:
    case Family::THM9_LUC:
    case Family::THM10_FIB:
    case Family::THM10_LUC:
      if (params.p > -2) invalid(params, "requires p <= -2");
      if (params.q < 4) invalid(params, "requires q >= 4");
      if (params.q <= std::labs(params.p) + 1) invalid(params, "requires q > |p| + 1");
      break;
    case Family::HORADAM_A2:
    case Family::HORADAM_A1: {
      if (!params.horadam) invalid(params, "missing Horadam parameters");
      const auto& h = *params.horadam;
      if (!(h.discriminant() > 0)) invalid(params, "requires p^2 + 4q > 0");
      if (params.r < 0) invalid(params, "requires r >= 0");
      if (h.q == 0) invalid(params, "requires q != 0");
      if (h.ab_product() == 0) invalid(params, "requires A B != 0");
      if (horadam(params.r, h) == 0) invalid(params, "requires W_r != 0");
      break;
    }
  }

  if (is_thm3(f)) {
    auto [x, y] = thm3_pair(f, params.n, params.m);
    if (y == 0) invalid(params, "y = 0");
    if (x + y == 0) invalid(params, "x + y = 0");
    const PrecisionContext ctx = make_context(30, 64);
    try {
      check_window(Level::A, {Real(x, ctx.bits()), Real(y, ctx.bits())}, ctx);
    } catch (const DomainError& e) {
      invalid(params, e.what());
    }
  }

  SeriesSpec spec = theorem_lhs_spec(params);
  const PrecisionContext ctx = make_context(30, 64);
  ConvergenceClass cls = classify(spec, ctx);
  if (cls.kind == ConvergenceKind::DivergentFormal) {
    invalid(params, "|z| * 4/27 = " + cls.rho.to_string(6) + " exceeds 1 (z = " + describe_argument(spec) + ")");
  }
}

// ---------------------------------------------------------------- evaluators

namespace {

struct Golden {
  Real r3, r5, al, be;
  explicit Golden(mpfr_prec_t bits)
      : r3(sqrt(Real(3, bits))),
        r5(sqrt(Real(5, bits))),
        al((r5 + 1) / 2),
        be((1 - r5) / 2) {}
};

Real thm1(bool luc, long r, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  Golden g(bits);
  const long s = sgn_pow(r);
  Real ar = pow(g.al, r);
  Real c = cbrt(sqr(ar));
  if (!luc) {
    Real at = atan(g.r3 / (2 * c + s));
    Real lg = log(g.r5 * ar * Real(fib(r), bits) / cube(c - s));
    return 6 * sqr(at) - sqr(lg) / 2;
  }
  Real at = atan(g.r3 / (2 * c - s));
  Real lg = log(ar * Real(lucas(r), bits) / cube(c + s));
  return 6 * sqr(at) - sqr(lg) / 2;
}

Real cor2(bool luc, long r, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  Golden g(bits);
  Real ar = pow(g.al, r);
  if (!luc) {
    Real at = atan(g.r3 / (sqr(ar) + ar * Real(lucas(r), bits)));
    BigInt fr = fib(r);
    Real lg = log(Real(BigRational(fib(3 * r), 5 * fr * fr * fr), bits));
    return 6 * sqr(at) - sqr(lg) / 2;
  }
  Real at = atan(g.r3 / (sqr(ar) + g.r5 * ar * Real(fib(r), bits)));
  BigInt lr = lucas(r);
  Real lg = log(Real(BigRational(lucas(3 * r), lr * lr * lr), bits));
  return 6 * sqr(at) - sqr(lg) / 2;
}

Real thm4(bool luc, long r, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  Golden g(bits);
  const long s = sgn_pow(r);
  Real ar = pow(g.al, r);
  Real c = cbrt(sqr(ar));
  Real c1 = cbrt(ar);
  if (!luc) {
    Real at = atan(g.r3 / (2 * c + s));
    Real lg = log(g.r5 * ar * Real(fib(r), bits) / cube(c - s));
    Real body = 2 * g.r3 * (c - s) * at - s * (c + s) * lg;
    return body / (c1 * Real(lucas(r), bits));
  }
  Real at = atan(g.r3 / (2 * c - s));
  Real lg = log(ar * Real(lucas(r), bits) / cube(c + s));
  Real body = 2 * g.r3 * (c + s) * at + s * (c - s) * lg;
  return g.r5 * body / (5 * c1 * Real(fib(r), bits));
}

Real cor5(bool luc, long r, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  Golden g(bits);
  const long s = sgn_pow(r);
  Real ar = pow(g.al, r);
  Real r15 = g.r3 * g.r5;
  Real fr(fib(r), bits);
  Real lr(lucas(r), bits);
  Real f3r(fib(3 * r), bits);
  Real l3r(lucas(3 * r), bits);
  if (!luc) {
    Real at = atan(g.r3 / (ar * (ar + lr)));
    Real lg = log(f3r / (5 * cube(fr)));
    return 2 * r15 * fr / l3r * at - s * lr / l3r * lg;
  }
  Real at = atan(g.r3 / (ar * (ar + g.r5 * fr)));
  Real lg = log(l3r / cube(lr));
  return 2 * r15 / 5 * lr / f3r * at + s * fr / f3r * lg;
}

// Returns the plain series value (the displayed theorem times its sign factor).
Real thm6(bool luc, long r, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  Golden g(bits);
  const long s = sgn_pow(r);
  Real r15 = g.r3 * g.r5;
  Real ar = pow(g.al, r);
  Real br = pow(g.be, r);
  Real a2 = cbrt(sqr(ar));
  Real b2 = cbrt(sqr(br));
  Real a4 = sqr(a2);
  Real b4 = sqr(b2);
  Real fr(fib(r), bits);
  Real lr(lucas(r), bits);
  if (!luc) {
    Real at = atan(g.r3 / (2 * a2 + s));
    Real lg = log(g.r5 * ar * fr / cube(a2 - s));
    Real k = fr / cube(lr);
    Real v = 4 / sqr(lr) + 2 * r15 / 3 * k * (2 * (a2 + b2) - s * (a4 + b4)) * at +
             s * g.r5 / 3 * k * (2 * (a2 - b2) + s * (a4 - b4)) * lg;
    return sgn_pow(r - 1) * v;
  }
  Real at = atan(g.r3 / (2 * a2 - s));
  Real lg = log(lr / cube(cbrt(ar) + cbrt(br)));
  Real k = lr / cube(fr);
  Real v = 4 / (5 * sqr(fr)) + 2 * r15 / 75 * k * (2 * (a2 + b2) + s * (a4 + b4)) * at -
           s * g.r5 / 75 * k * (2 * (a2 - b2) - s * (a4 - b4)) * lg;
  return sgn_pow(r) * v;
}

Real thm3(const TheoremParams& params, const PrecisionContext& ctx) {
  auto [x, y] = thm3_pair(params.family, params.n, params.m);
  return A_rhs({Real(x, ctx.bits()), Real(y, ctx.bits())}, ctx);
}

// Shared pieces of the (p,q) families.
struct PQ {
  Golden g;
  Real fp, fpq, fq;
  long sp, sq;
  Real aq;  // alpha^q
  Real bq;  // beta^q

  PQ(long p, long q, mpfr_prec_t bits)
      : g(bits),
        fp(fib(p), bits),
        fpq(fib(p + q), bits),
        fq(fib(q), bits),
        sp(sgn_pow(p)),
        sq(sgn_pow(q)),
        aq(pow(g.al, q)),
        bq(pow(g.be, q)) {}
};

struct Thm7Parts {
  Real at1, at2, l1, l2;
};

Thm7Parts thm7_parts(long p, long q, const PQ& c) {
  const Golden& g = c.g;
  Real cfp = cbrt(c.fp);
  Real cfpq = cbrt(c.fpq);
  Real at1 = atan(g.r3 * cfpq / (2 * cbrt(c.aq * c.fp) + cfpq));
  Real at2 = atan(g.r3 * cfp / (2 * cbrt(c.aq * c.fpq) + c.sq * cfp));
  Real ap = pow(g.al, p);
  Real apq = pow(g.al, p + q);
  Real l1 = log(c.sp * c.fq / cube(cbrt(ap * c.fpq) - cbrt(apq * c.fp)));
  Real l2 = log(apq * c.fq / cube(cbrt(c.aq * c.fpq) - c.sq * cfp));
  return {at1, at2, l1, l2};
}

Real thm7(bool luc, long p, long q, const PrecisionContext& ctx) {
  PQ c(p, q, ctx.bits());
  Thm7Parts t = thm7_parts(p, q, c);
  if (!luc) {
    return 6 / c.g.r5 * (sqr(t.at1) - sqr(t.at2)) - c.g.r5 / 10 * (sqr(t.l1) - sqr(t.l2));
  }
  return 6 * (sqr(t.at1) + sqr(t.at2)) - (sqr(t.l1) + sqr(t.l2)) / 2;
}

// atan pieces in the form used by Theorems 9 and 10.
std::pair<Real, Real> thm9_atans(const PQ& c) {
  Real cfp = cbrt(c.fp);
  Real cfpq = cbrt(c.fpq);
  Real at1 = atan(c.g.r3 * cfpq / (2 * cbrt(c.aq * c.fp) + cfpq));
  Real at2 = atan(c.g.r3 * cfp / (2 * c.sq * cbrt(c.aq * c.fpq) + cfp));
  return {at1, at2};
}

Real thm9(bool luc, long p, long q, const PrecisionContext& ctx) {
  PQ c(p, q, ctx.bits());
  const Golden& g = c.g;
  auto [at1, at2] = thm9_atans(c);
  auto A = [&](const Real& sq_pow, int sign) {
    return cbrt(sq_pow) * (cbrt(sq_pow * c.fp) + sign * cbrt(c.fpq)) / (sq_pow * c.fp + c.fpq);
  };
  Real am_a = A(c.aq, -1);
  Real am_b = A(c.bq, -1);
  Real ap_a = A(c.aq, 1);
  Real ap_b = A(c.bq, 1);
  Real la = log(pow(g.be, p) * c.fq / cube(cbrt(c.fpq) - cbrt(c.aq * c.fp)));
  Real lb = log(pow(g.al, p) * c.fq / cube(cbrt(c.fpq) - cbrt(c.bq * c.fp)));
  Real k = cbrt(c.fp * c.fpq);
  if (!luc) return (2 * g.r3 * (am_a * at1 + am_b * at2) - (ap_a * la - ap_b * lb)) * k / g.r5;
  return (2 * g.r3 * (am_a * at1 - am_b * at2) - (ap_a * la + ap_b * lb)) * k;
}

Real thm10(bool luc, long p, long q, const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  PQ c(p, q, bits);
  const Golden& g = c.g;
  auto [at1, at2] = thm9_atans(c);
  Thm7Parts t = thm7_parts(p, q, c);
  const Real& l1 = t.l1;
  const Real& l2 = t.l2;
  auto Bs = [&](const Real& s, int sg) {
    Real sq_pow = pow(s, q);
    Real lead = cbrt(pow(s, q - 3 * p)) / cube(sq_pow * c.fp + c.fpq);
    Real inner = cbrt(pow(sq_pow, 4) * pow(c.fp, 4)) + sg * cbrt(pow(c.fpq, 4)) -
                 sg * 2 * cbrt(sq_pow * c.fp * c.fpq) * (cbrt(sqr(sq_pow) * sqr(c.fp)) + sg * cbrt(sqr(c.fpq)));
    return lead * inner;
  };
  Real den = sqr(c.fpq + c.aq * c.fp) * sqr(c.fpq + c.bq * c.fp);
  Real c22 = cbrt(sqr(c.fpq) * sqr(c.fp));
  Real r15 = g.r3 * g.r5;
  Real k = c.fq * cbrt(c.fp * c.fpq) * c.sp;
  if (!luc) {
    Real v = 4 * sgn_pow(p - 1) * c22 * (sqr(c.fpq) - c.sq * sqr(c.fp)) / den -
             2 * r15 / 15 * (Bs(g.al, 1) * at1 + Bs(g.be, 1) * at2) +
             g.r5 / 15 * (Bs(g.al, -1) * l1 - Bs(g.be, -1) * l2);
    return v * k;
  }
  Real lq(lucas(q), bits);
  Real v = 4 * sgn_pow(p - q - 1) * c22 / c.fq * (sqr(c.fp) * lq + c.sq * sqr(c.fpq) * lq + 4 * c.fp * c.fpq) / den -
           2 / g.r3 * (Bs(g.al, 1) * at1 - Bs(g.be, 1) * at2) + (Bs(g.al, -1) * l1 + Bs(g.be, -1) * l2) / 3;
  return v * k;
}

}  // namespace

Real horadam_rhs(const HoradamParams& h, long r, int a, const PrecisionContext& ctx) {
  if (a != 1 && a != 2) throw InvalidParams("Horadam generalization needs a = 1 or a = 2");
  const auto bits = ctx.bits();
  HoradamRoots hr = horadam_roots(h, ctx);
  const Real r3 = sqrt(Real(3, bits));
  Real q(h.q, bits);
  Real qr = pow(q, r);
  Real mqr = pow(-q, r);
  Real a2r = pow(hr.alpha, 2 * r);
  Real w(horadam(r, h), bits);
  Real u = cbrt(hr.A * a2r);
  Real v = cbrt(hr.B * mqr);
  Real at = atan(r3 * cbrt(hr.B * qr) / (2 * u + v));
  Real lg_arg = pow(hr.alpha, r) * hr.delta * w / cube(u - v);
  if (!(lg_arg > 0)) throw DomainError("Horadam log argument is not positive");
  Real lg = log(lg_arg);
  if (a == 2) return 6 * sqr(at) - sqr(lg) / 2;
  Real pref = (hr.A * a2r + hr.B * mqr) / cbrt(hr.A * hr.B * a2r * qr);
  if (pref.is_zero()) throw DomainError("Horadam prefactor vanishes");
  return (2 * r3 * (u - v) * at - sgn_pow(r) * (u + v) * lg) / pref;
}

Real theorem_rhs(const TheoremParams& params, const PrecisionContext& ctx) {
  validate(params);
  return theorem_rhs_formal(params, ctx);
}

Real theorem_rhs_formal(const TheoremParams& params, const PrecisionContext& ctx) {
  const Family f = params.family;
  if (shape_of(f) == ParamShape::HoradamR && !params.horadam) throw InvalidParams("Horadam family needs p,q,a,b");
  const bool luc = is_lucas(f);
  switch (f) {
    case Family::THM1_FIB:
    case Family::THM1_LUC: return thm1(luc, params.r, ctx);
    case Family::COR2_FIB:
    case Family::COR2_LUC: return cor2(luc, params.r, ctx);
    case Family::THM4_FIB:
    case Family::THM4_LUC: return thm4(luc, params.r, ctx);
    case Family::COR5_FIB:
    case Family::COR5_LUC: return cor5(luc, params.r, ctx);
    case Family::THM6_FIB:
    case Family::THM6_LUC: return thm6(luc, params.r, ctx);
    case Family::THM7_FIB:
    case Family::THM7_LUC: return thm7(luc, params.p, params.q, ctx);
    case Family::THM9_FIB:
    case Family::THM9_LUC: return thm9(luc, params.p, params.q, ctx);
    case Family::THM10_FIB:
    case Family::THM10_LUC: return thm10(luc, params.p, params.q, ctx);
    case Family::HORADAM_A2: return horadam_rhs(*params.horadam, params.r, 2, ctx);
    case Family::HORADAM_A1: return horadam_rhs(*params.horadam, params.r, 1, ctx);
    default: return thm3(params, ctx);
  }
}

Real thm7_intermediate(const TheoremParams& params, Branch branch, const PrecisionContext& ctx) {
  TheoremParams p = params;
  if (p.family != Family::THM7_FIB && p.family != Family::THM7_LUC) p.family = Family::THM7_FIB;
  validate(p);
  PQ c(p.p, p.q, ctx.bits());
  Thm7Parts t = thm7_parts(p.p, p.q, c);
  if (branch == Branch::Alpha) return 6 * sqr(t.at1) - sqr(t.l1) / 2;
  return 6 * sqr(t.at2) - sqr(t.l2) / 2;
}

}  // namespace c3k
