#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "c3k/context.hpp"
#include "c3k/expr.hpp"
#include "c3k/series.hpp"
#include "c3k/theorems.hpp"

namespace c3k {

using RecordRhs = std::variant<Expr, TheoremParams>;

struct IdentityRecord {
  std::string id;
  std::string citation;
  SeriesSpec lhs;
  RecordRhs rhs;
  std::string validity;
  ConvergenceClass convergence;
  std::vector<std::string> tags;

  bool has_tag(std::string_view tag) const;
};

using Catalog = std::vector<IdentityRecord>;

// Parsed once from the embedded catalog.json.
const Catalog& builtin_catalog();

// Accepts {"records": [...]} or a bare array. Checks the result.
Catalog parse_catalog(std::string_view json_text);
Catalog load_catalog(const std::filesystem::path& path);

nlohmann::json to_json(const IdentityRecord& record);
nlohmann::json catalog_to_json(const Catalog& catalog);

// Unique ids; stored convergence (when given) equals classify(lhs).
// Throws CatalogError.
void check_catalog(const Catalog& catalog);

const IdentityRecord* find_record(const Catalog& catalog, std::string_view id);

// z = (81 - t^2)/12 for t = 0..t_max with z > 0, in that (decreasing) order.
std::vector<BigRational> scan_perfect_square(long t_max);

// Throws InvalidParams from validate(). params.family is replaced by family.
IdentityRecord instantiate(Family family, TheoremParams params);

Real record_rhs(const IdentityRecord& record, const PrecisionContext& ctx);
std::string describe_rhs(const IdentityRecord& record);

}  // namespace c3k
