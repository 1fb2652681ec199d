#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "c3k/errors.hpp"
#include "c3k/registry.hpp"

using namespace c3k;

namespace {

long count_tag(const Catalog& c, const char* tag) {
  return std::count_if(c.begin(), c.end(), [&](const auto& r) { return r.has_tag(tag); });
}

}  // namespace

TEST(Catalog, Builtin) {
  const Catalog& c = builtin_catalog();
  EXPECT_EQ(c.size(), 79U);
  EXPECT_EQ(count_tag(c, "batir-positive"), 9);
  EXPECT_EQ(count_tag(c, "batir-alternating"), 9);
  EXPECT_EQ(count_tag(c, "xy-block"), 23);
  EXPECT_EQ(count_tag(c, "divergent-formal"), 4);
  ASSERT_NE(find_record(c, "eq-italy"), nullptr);
  EXPECT_EQ(find_record(c, "nope"), nullptr);
  EXPECT_EQ(find_record(c, "eq-27-4")->convergence.kind, ConvergenceKind::BoundaryPositive);
  EXPECT_EQ(find_record(c, "alt-27-4")->convergence.kind, ConvergenceKind::BoundaryAlternating);
  EXPECT_EQ(find_record(c, "xy-27-neg8-a2")->convergence.kind, ConvergenceKind::DivergentFormal);
}

TEST(Catalog, ConvergenceTagsMatchClassify) {
  const auto ctx = make_context(30, 64);
  for (const auto& r : builtin_catalog()) EXPECT_EQ(classify(r.lhs, ctx).kind, r.convergence.kind) << r.id;
  EXPECT_NO_THROW(check_catalog(builtin_catalog()));
}

TEST(Catalog, IrrationalArgumentsStayExact) {
  const auto* r = find_record(builtin_catalog(), "xy-8-neg1-a2");
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(std::holds_alternative<Expr>(r->lhs.z));
}

TEST(Catalog, FileMatchesBuiltin) {
  std::ifstream in(C3K_CATALOG_PATH);
  ASSERT_TRUE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  Catalog c = parse_catalog(ss.str());
  ASSERT_EQ(c.size(), builtin_catalog().size());
  EXPECT_EQ(catalog_to_json(c).dump(), catalog_to_json(builtin_catalog()).dump());
}

TEST(Catalog, JsonRoundTrip) {
  const std::string once = catalog_to_json(builtin_catalog()).dump();
  const std::string twice = catalog_to_json(parse_catalog(once)).dump();
  EXPECT_EQ(once, twice);
}

TEST(Catalog, Errors) {
  EXPECT_THROW(parse_catalog("{"), CatalogError);
  EXPECT_THROW(parse_catalog(R"({"records": 3})"), CatalogError);
  const char* dup = R"([{"id":"a","lhs":{"z":"8/3","a":2},"rhs":"pi^2/6 - log(3)^2/2"},
                       {"id":"a","lhs":{"z":"1","a":2},"rhs":"1"}])";
  EXPECT_THROW(parse_catalog(dup), CatalogError);
  const char* wrong_class = R"([{"id":"b","lhs":{"z":"8/3","a":2},"rhs":"1","convergence":"divergent-formal"}])";
  EXPECT_THROW(parse_catalog(wrong_class), CatalogError);
  const char* bad_weight = R"([{"id":"c","lhs":{"z":"1","weight":{"kind":"tribonacci"}},"rhs":"1"}])";
  EXPECT_THROW(parse_catalog(bad_weight), CatalogError);
}

TEST(Catalog, MinimalRecord) {
  Catalog c = parse_catalog(R"([{"id":"t","lhs":{"z":"8/3","a":2},"rhs":"pi^2/6 - log(3)^2/2"}])");
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].convergence.kind, ConvergenceKind::Geometric);
  const auto ctx = make_context(30, 1);
  EXPECT_EQ(record_rhs(c[0], ctx).to_string(8), "1.0414596");
}

TEST(Scan, PerfectSquares) {
  const std::vector<BigRational> nine = {BigRational(27, 4), BigRational(20, 3), BigRational(77, 12),
                                         BigRational(6),     BigRational(65, 12), BigRational(14, 3),
                                         BigRational(15, 4), BigRational(8, 3),   BigRational(17, 12)};
  EXPECT_EQ(scan_perfect_square(8), nine);
  EXPECT_EQ(scan_perfect_square(9), nine);
  EXPECT_EQ(scan_perfect_square(0), std::vector<BigRational>{BigRational(27, 4)});
  auto v = scan_perfect_square(8);
  EXPECT_TRUE(std::is_sorted(v.rbegin(), v.rend()));
}

TEST(Instantiate, Records) {
  EXPECT_THROW(instantiate(Family::THM1_LUC, TheoremParams::with_r(Family::THM1_LUC, 1)), InvalidParams);
  EXPECT_THROW(instantiate(Family::THM3_V4, TheoremParams::with_nm(Family::THM3_V4, 5, 2)), InvalidParams);
  IdentityRecord r = instantiate(Family::THM7_FIB, TheoremParams::with_pq(Family::THM7_FIB, -2, 5));
  EXPECT_EQ(r.id, "THM7_FIB(p=-2,q=5)");
  EXPECT_EQ(std::get<BigRational>(r.lhs.z), BigRational(54, 25));
  EXPECT_EQ(r.lhs.weight.kind, Weight::Kind::Fib);
  EXPECT_EQ(r.convergence.kind, ConvergenceKind::Geometric);
  EXPECT_TRUE(r.has_tag("instantiated"));
}
