#include "c3k/registry.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "c3k/errors.hpp"

namespace c3k {

namespace detail {
extern const std::string_view kBuiltinCatalogJson;
}

bool IdentityRecord::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

namespace {

using json = nlohmann::json;

PrecisionContext check_context() { return make_context(30, 64); }

bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool digits = false;
  bool slash = false;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return false;
    }
  }
  return digits;
}

SeriesArgument parse_argument(const json& j, const std::string& id) {
  if (j.is_number_integer()) return BigRational(BigInt(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (looks_rational(s)) {
      if (s[0] == '+') s.erase(0, 1);
      BigRational q;
      if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw CatalogError(id + ": bad rational \"" + s + "\"");
      q.canonicalize();
      return q;
    }
    return Expr::parse(s);
  }
  if (j.is_object()) return Expr::from_json(j);
  throw CatalogError(id + ": lhs.z must be a rational string or an expression");
}

BigInt field_bigint(const json& j, const char* key, const std::string& id) {
  if (!j.contains(key)) throw CatalogError(id + ": weight is missing \"" + key + "\"");
  const json& v = j.at(key);
  BigInt out;
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  if (v.is_string() && out.set_str(v.get<std::string>(), 10) == 0) return out;
  throw CatalogError(id + ": weight field \"" + key + "\" is not an integer");
}

Weight parse_weight(const json& j, const std::string& id) {
  if (j.is_null()) return Weight::unit();
  if (!j.is_object() || !j.contains("kind")) throw CatalogError(id + ": weight needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  const long m = j.value("m", 0L);
  if (kind == "unit") return Weight::unit();
  if (kind == "fib") return Weight::fib(m);
  if (kind == "lucas") return Weight::lucas(m);
  if (kind == "horadam") {
    HoradamParams h{field_bigint(j, "p", id), field_bigint(j, "q", id), field_bigint(j, "a", id),
                    field_bigint(j, "b", id)};
    return Weight::horadam_weight(m, h);
  }
  throw CatalogError(id + ": unknown weight kind \"" + kind + "\"");
}

json weight_json(const Weight& w) {
  switch (w.kind) {
    case Weight::Kind::Unit: return json{{"kind", "unit"}};
    case Weight::Kind::Fib: return json{{"kind", "fib"}, {"m", w.m}};
    case Weight::Kind::Lucas: return json{{"kind", "lucas"}, {"m", w.m}};
    case Weight::Kind::Horadam: {
      json j{{"kind", "horadam"}, {"m", w.m}};
      if (w.horadam) {
        j["p"] = w.horadam->p.get_str();
        j["q"] = w.horadam->q.get_str();
        j["a"] = w.horadam->a.get_str();
        j["b"] = w.horadam->b.get_str();
      }
      return j;
    }
  }
  return json{{"kind", "unit"}};
}

RecordRhs parse_rhs(const json& j, const std::string& id) {
  if (j.is_string()) return Expr::parse(j.get<std::string>());
  if (j.is_object() && j.contains("family")) {
    json merged = j.value("params", json::object());
    merged["family"] = j.at("family");
    return theorem_params_from_json(merged);
  }
  if (j.is_object()) return Expr::from_json(j);
  throw CatalogError(id + ": rhs must be an expression or a family reference");
}

IdentityRecord parse_record(const json& j, const PrecisionContext& ctx) {
  if (!j.is_object()) throw CatalogError("catalog record must be an object");
  if (!j.contains("id") || !j.at("id").is_string()) throw CatalogError("catalog record without a string \"id\"");
  IdentityRecord r;
  r.id = j.at("id").get<std::string>();
  try {
    r.citation = j.value("citation", "");
    r.validity = j.value("validity", "");
    if (!j.contains("lhs")) throw CatalogError(r.id + ": missing lhs");
    const json& lhs = j.at("lhs");
    if (!lhs.contains("z")) throw CatalogError(r.id + ": missing lhs.z");
    r.lhs.z = parse_argument(lhs.at("z"), r.id);
    r.lhs.a = lhs.value("a", 2);
    if (r.lhs.a < 0 || r.lhs.a > 2) throw CatalogError(r.id + ": lhs.a must be 0, 1 or 2");
    r.lhs.weight = parse_weight(lhs.value("weight", json()), r.id);
    r.lhs.label = r.id;
    if (!j.contains("rhs")) throw CatalogError(r.id + ": missing rhs");
    r.rhs = parse_rhs(j.at("rhs"), r.id);
    for (const auto& t : j.value("tags", json::array())) r.tags.push_back(t.get<std::string>());
    r.convergence = classify(r.lhs, ctx);
    if (j.contains("convergence")) {
      const std::string stored = j.at("convergence").get<std::string>();
      auto kind = parse_convergence(stored);
      if (!kind) throw CatalogError(r.id + ": unknown convergence \"" + stored + "\"");
      if (*kind != r.convergence.kind) {
        throw CatalogError(r.id + ": convergence is stored as " + stored + " but the argument classifies as " +
                           std::string(to_string(r.convergence.kind)));
      }
    }
  } catch (const CatalogError&) {
    throw;
  } catch (const std::exception& e) {
    throw CatalogError(r.id + ": " + e.what());
  }
  return r;
}

}  // namespace

Catalog parse_catalog(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  const json* records = &doc;
  if (doc.is_object()) {
    if (!doc.contains("records")) throw CatalogError("catalog object needs a \"records\" array");
    records = &doc.at("records");
  }
  if (!records->is_array()) throw CatalogError("catalog records must be an array");
  const PrecisionContext ctx = check_context();
  Catalog out;
  out.reserve(records->size());
  for (const auto& j : *records) out.push_back(parse_record(j, ctx));
  check_catalog(out);
  return out;
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = parse_catalog(detail::kBuiltinCatalogJson);
  return catalog;
}

nlohmann::json to_json(const IdentityRecord& r) {
  json lhs;
  if (const auto* q = std::get_if<BigRational>(&r.lhs.z)) {
    lhs["z"] = q->get_num().get_str() + "/" + q->get_den().get_str();
  } else {
    lhs["z"] = std::get<Expr>(r.lhs.z).to_json();
  }
  lhs["a"] = r.lhs.a;
  lhs["weight"] = weight_json(r.lhs.weight);
  json rhs;
  if (const auto* e = std::get_if<Expr>(&r.rhs)) {
    rhs = e->to_json();
  } else {
    json params = to_json(std::get<TheoremParams>(r.rhs));
    rhs["family"] = params.at("family");
    params.erase("family");
    rhs["params"] = params;
  }
  return json{{"id", r.id},
              {"citation", r.citation},
              {"lhs", lhs},
              {"rhs", rhs},
              {"validity", r.validity},
              {"convergence", std::string(to_string(r.convergence.kind))},
              {"tags", r.tags}};
}

nlohmann::json catalog_to_json(const Catalog& catalog) {
  json records = json::array();
  for (const auto& r : catalog) records.push_back(to_json(r));
  return json{{"version", 1}, {"records", records}};
}

void check_catalog(const Catalog& catalog) {
  std::set<std::string_view> seen;
  const PrecisionContext ctx = check_context();
  for (const auto& r : catalog) {
    if (r.id.empty()) throw CatalogError("record with empty id");
    if (!seen.insert(r.id).second) throw CatalogError("duplicate record id \"" + r.id + "\"");
    ConvergenceClass cls = classify(r.lhs, ctx);
    if (cls.kind != r.convergence.kind) {
      throw CatalogError(r.id + ": convergence " + std::string(to_string(r.convergence.kind)) +
                         " does not match classify() = " + std::string(to_string(cls.kind)));
    }
  }
}

const IdentityRecord* find_record(const Catalog& catalog, std::string_view id) {
  for (const auto& r : catalog) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::vector<BigRational> scan_perfect_square(long t_max) {
  if (t_max < 0) throw InvalidParams("t_max must be >= 0");
  std::vector<BigRational> out;
  for (long t = 0; t <= t_max; ++t) {
    BigRational z(BigInt(81) - BigInt(t) * t, BigInt(12));
    z.canonicalize();
    if (z > 0) out.push_back(z);
  }
  return out;
}

IdentityRecord instantiate(Family family, TheoremParams params) {
  params.family = family;
  validate(params);
  IdentityRecord r;
  r.id = describe(params);
  r.citation = "instantiated family " + std::string(to_string(family));
  r.lhs = theorem_lhs_spec(params);
  r.rhs = params;
  r.validity = "family side conditions";
  r.convergence = classify(r.lhs, check_context());
  r.tags = {"instantiated", std::string(to_string(family))};
  return r;
}

Real record_rhs(const IdentityRecord& record, const PrecisionContext& ctx) {
  if (const auto* e = std::get_if<Expr>(&record.rhs)) return eval_expr(*e, ctx);
  return theorem_rhs(std::get<TheoremParams>(record.rhs), ctx);
}

std::string describe_rhs(const IdentityRecord& record) {
  if (const auto* e = std::get_if<Expr>(&record.rhs)) return e->to_string();
  return describe(std::get<TheoremParams>(record.rhs));
}

}  // namespace c3k
