#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "c3k/errors.hpp"

namespace c3k::cli {

namespace {

using json = nlohmann::json;

struct Config {
  int digits = 30;
  long max_terms = 1'000'000;
  std::string format = "md";
  std::string out;
  std::string catalog;
  unsigned jobs = 0;
};

// Thrown for bad flag values found after CLI11 has parsed.
struct UsageError : Error {
  using Error::Error;
};

Format format_of(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Md;
}

std::pair<long, long> parse_range(const std::string& flag, const std::string& s) {
  const auto colon = s.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    const std::string a = s.substr(0, colon);
    const std::string b = s.substr(colon + 1);
    long lo = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    long hi = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    if (lo > hi) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(flag + ": expected lo:hi with lo <= hi, got \"" + s + "\"");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

// "p,q;p,q" or repeated flags.
std::vector<std::pair<long, long>> parse_pq(const std::vector<std::string>& items) {
  std::vector<std::pair<long, long>> out;
  for (const auto& item : items) {
    for (const auto& pair : split(item, ';')) {
      auto parts = split(pair, ',');
      try {
        if (parts.size() != 2) throw std::invalid_argument(pair);
        out.emplace_back(std::stol(parts[0]), std::stol(parts[1]));
      } catch (const std::logic_error&) {
        throw UsageError("--pq: expected p,q pairs, got \"" + pair + "\"");
      }
    }
  }
  return out;
}

HoradamParams parse_horadam(const std::string& s) {
  auto parts = split(s, ',');
  HoradamParams h;
  if (parts.size() != 4 || h.p.set_str(parts[0], 10) != 0 || h.q.set_str(parts[1], 10) != 0 ||
      h.a.set_str(parts[2], 10) != 0 || h.b.set_str(parts[3], 10) != 0) {
    throw UsageError("--horadam: expected p,q,a,b integers, got \"" + s + "\"");
  }
  return h;
}

Weight parse_weight_flag(const std::string& s) {
  if (s == "unit") return Weight::unit();
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    const std::string kind = s.substr(0, colon);
    try {
      long m = std::stol(s.substr(colon + 1));
      if (kind == "fib") return Weight::fib(m);
      if (kind == "lucas") return Weight::lucas(m);
    } catch (const std::logic_error&) {
    }
  }
  throw UsageError("--weight: expected unit, fib:m or lucas:m, got \"" + s + "\"");
}

Real parse_real(const std::string& flag, const std::string& text, mpfr_prec_t bits) {
  try {
    return eval_expr(Expr::parse(text), bits);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string value_string(const Real& v, int digits) { return v.to_string(std::max(digits, 1)); }

// Boundary sums are only good to about 12 digits.
int display_digits(const VerificationReport& r) {
  return r.status == Status::PassBoundaryReduced ? std::min(r.target_digits, 12) : r.target_digits;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("--out: cannot open " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

const Catalog& load(const Config& cfg, std::optional<Catalog>& storage) {
  if (cfg.catalog.empty()) return builtin_catalog();
  try {
    storage = load_catalog(cfg.catalog);
  } catch (const CatalogError& e) {
    throw UsageError(std::string("--catalog: ") + e.what());
  }
  return *storage;
}

VerifyOptions options_of(const Config& cfg) {
  VerifyOptions o;
  o.max_terms = cfg.max_terms;
  o.jobs = cfg.jobs;
  return o;
}

int emit_reports(const Config& cfg, std::vector<VerificationReport> reports, std::ostream& out) {
  SuiteSummary s = summarize(std::move(reports), cfg.digits);
  Output o(cfg.out, out);
  *o << render(s, format_of(cfg.format));
  return s.fail == 0 ? kOk : kFailed;
}

int cmd_list(const Config& cfg, std::ostream& out) {
  std::optional<Catalog> storage;
  const Catalog& cat = load(cfg, storage);
  Output o(cfg.out, out);
  switch (format_of(cfg.format)) {
    case Format::Json:
      *o << catalog_to_json(cat).dump(2) << "\n";
      break;
    case Format::Csv:
      *o << "id,convergence,a,z,tags\n";
      for (const auto& r : cat) {
        std::string tags;
        for (const auto& t : r.tags) tags += (tags.empty() ? "" : ";") + t;
        *o << csv_field(r.id) << "," << to_string(r.convergence.kind) << "," << r.lhs.a << ","
           << csv_field(describe_argument(r.lhs)) << "," << csv_field(tags) << "\n";
      }
      break;
    case Format::Md:
      *o << "| id | convergence | a | z | rhs |\n|---|---|---|---|---|\n";
      for (const auto& r : cat) {
        *o << "| " << md_cell(r.id) << " | " << to_string(r.convergence.kind) << " | " << r.lhs.a << " | "
           << md_cell(describe_argument(r.lhs)) << " | " << md_cell(describe_rhs(r)) << " |\n";
      }
      *o << "\n" << cat.size() << " records\n";
      break;
  }
  return kOk;
}

struct EvalArgs {
  std::string expr;
  std::string id;
  std::string z;
  int a = 2;
  std::string weight = "unit";
};

int cmd_eval(const Config& cfg, const EvalArgs& ea, std::ostream& out) {
  const int given = !ea.expr.empty() + !ea.id.empty() + !ea.z.empty();
  if (given != 1) throw UsageError("eval: give exactly one of --expr, --id, --z");
  const PrecisionContext ctx = make_context(cfg.digits, cfg.max_terms);
  json j;
  std::vector<std::pair<std::string, std::string>> rows;
  if (!ea.expr.empty()) {
    Expr e;
    try {
      e = Expr::parse(ea.expr);
    } catch (const ParseError& ex) {
      throw UsageError(std::string("--expr: ") + ex.what());
    }
    const std::string v = value_string(eval_expr(e, ctx), cfg.digits);
    rows = {{"expr", e.to_string()}, {"value", v}};
  } else {
    SeriesSpec spec;
    const IdentityRecord* rec = nullptr;
    std::optional<Catalog> storage;
    if (!ea.id.empty()) {
      rec = find_record(load(cfg, storage), ea.id);
      if (rec == nullptr) throw UsageError("--id: unknown identity \"" + ea.id + "\"");
      spec = rec->lhs;
    } else {
      try {
        spec.z = Expr::parse(ea.z);
      } catch (const ParseError& ex) {
        throw UsageError(std::string("--z: ") + ex.what());
      }
      if (ea.a < 0 || ea.a > 2) throw UsageError("--a: must be 0, 1 or 2");
      spec.a = ea.a;
      spec.weight = parse_weight_flag(ea.weight);
    }
    const ConvergenceClass cls = classify(spec, ctx);
    rows.emplace_back("z", describe_argument(spec));
    rows.emplace_back("convergence", std::string(to_string(cls.kind)));
    if (cls.kind == ConvergenceKind::Geometric) {
      SumResult s = sum_to_digits(spec, cfg.digits, ctx);
      rows.emplace_back("lhs", value_string(s.value, cfg.digits));
      rows.emplace_back("terms_used", std::to_string(s.terms_used));
      rows.emplace_back("tail", s.tail.to_string(6));
    } else if (cls.kind != ConvergenceKind::DivergentFormal) {
      SumResult s = sum_boundary_detailed(spec, std::min(cfg.digits, 10), ctx);
      rows.emplace_back("lhs", value_string(s.value, std::min(cfg.digits, 12)));
      rows.emplace_back("terms_used", std::to_string(s.terms_used));
      rows.emplace_back("tail", s.tail.to_string(6));
    }
    if (rec != nullptr) {
      rows.emplace_back("rhs_expr", describe_rhs(*rec));
      rows.emplace_back("rhs", value_string(record_rhs(*rec, ctx), cfg.digits));
    }
  }
  Output o(cfg.out, out);
  switch (format_of(cfg.format)) {
    case Format::Json:
      for (const auto& [k, v] : rows) j[k] = v;
      j["digits"] = cfg.digits;
      *o << j.dump(2) << "\n";
      break;
    case Format::Csv:
      *o << "key,value\n";
      for (const auto& [k, v] : rows) *o << k << "," << csv_field(v) << "\n";
      break;
    case Format::Md:
      for (const auto& [k, v] : rows) *o << k << ": " << v << "\n";
      break;
  }
  return kOk;
}

int cmd_verify(const Config& cfg, const std::string& id, std::ostream& out) {
  std::optional<Catalog> storage;
  const Catalog& cat = load(cfg, storage);
  const IdentityRecord* rec = find_record(cat, id);
  if (rec == nullptr) throw UsageError("--id: unknown identity \"" + id + "\"");
  return emit_reports(cfg, {verify(*rec, cfg.digits, options_of(cfg))}, out);
}

int cmd_verify_all(const Config& cfg, std::ostream& out) {
  std::optional<Catalog> storage;
  const Catalog& cat = load(cfg, storage);
  SuiteSummary s = verify_all(cat, cfg.digits, options_of(cfg));
  return emit_reports(cfg, std::move(s.reports), out);
}

struct SweepArgs {
  std::string family;
  std::string r;
  std::string n;
  std::string m;
  std::vector<std::string> pq;
  std::string horadam;
};

int cmd_sweep(const Config& cfg, const SweepArgs& sa, std::ostream& out) {
  auto family = parse_family(sa.family);
  if (!family) throw UsageError("--family: unknown family \"" + sa.family + "\"");
  ParamGrid grid;
  const ParamShape shape = shape_of(*family);
  if (shape == ParamShape::R || shape == ParamShape::HoradamR) {
    if (sa.r.empty()) throw UsageError("--r: required for " + sa.family);
    grid.r = parse_range("--r", sa.r);
  }
  if (shape == ParamShape::NM) {
    if (sa.n.empty()) throw UsageError("--n: required for " + sa.family);
    grid.n = parse_range("--n", sa.n);
    if (!sa.m.empty()) grid.m = parse_range("--m", sa.m);
  }
  if (shape == ParamShape::PQ) {
    grid.pq = parse_pq(sa.pq);
    if (grid.pq.empty()) throw UsageError("--pq: required for " + sa.family);
  }
  if (shape == ParamShape::HoradamR) {
    if (sa.horadam.empty()) throw UsageError("--horadam: required for " + sa.family);
    grid.horadam = parse_horadam(sa.horadam);
  }
  const std::size_t points = expand_grid(*family, grid).size();
  if (points > 10000) throw UsageError("sweep: grid has " + std::to_string(points) + " points, limit 10000");
  return emit_reports(cfg, sweep(*family, grid, cfg.digits, options_of(cfg)), out);
}

int cmd_scan(const Config& cfg, long t_max, std::ostream& out) {
  if (t_max < 0) throw UsageError("--t-max: must be >= 0");
  auto values = scan_perfect_square(t_max);
  Output o(cfg.out, out);
  auto str = [](const BigRational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
  };
  switch (format_of(cfg.format)) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& q : values) arr.push_back(str(q));
      *o << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      *o << "z\n";
      for (const auto& q : values) *o << str(q) << "\n";
      break;
    case Format::Md:
      for (const auto& q : values) *o << str(q) << "\n";
      break;
  }
  return kOk;
}

int cmd_check_derivatives(const Config& cfg, const std::string& level, const std::string& xs, const std::string& ys,
                          std::ostream& out) {
  DiffLevel lv;
  if (level == "A_to_B") {
    lv = DiffLevel::A_to_B;
  } else if (level == "B_to_C") {
    lv = DiffLevel::B_to_C;
  } else {
    throw UsageError("--level: expected A_to_B or B_to_C, got \"" + level + "\"");
  }
  const mpfr_prec_t bits = make_context(cfg.digits + 10, 64).bits();
  const Real x = parse_real("--x", xs, bits);
  const Real y = parse_real("--y", ys, bits);
  VerificationReport r;
  try {
    r = differential_check(lv, x, y, cfg.digits);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--x/--y: ") + e.what());
  }
  return emit_reports(cfg, {r}, out);
}

}  // namespace

SuiteSummary summarize(std::vector<VerificationReport> reports, int digits) {
  SuiteSummary s;
  s.digits = digits;
  std::stable_sort(reports.begin(), reports.end(),
                   [](const auto& a, const auto& b) { return a.identity_id < b.identity_id; });
  for (const auto& r : reports) {
    if (r.status == Status::Fail) {
      ++s.fail;
    } else if (r.status == Status::SkippedDivergent) {
      ++s.skipped;
    } else {
      ++s.pass;
    }
  }
  s.reports = std::move(reports);
  return s;
}

nlohmann::json report_json(const VerificationReport& r) {
  json j{{"id", r.identity_id},
         {"status", std::string(to_string(r.status))},
         {"matched_digits", r.matched_digits},
         {"lhs", value_string(r.lhs_value, display_digits(r))},
         {"rhs", value_string(r.rhs_value, display_digits(r))},
         {"terms_used", r.terms_used},
         {"tail", r.tail.to_string(6)},
         {"elapsed_ms", static_cast<long long>(r.elapsed.count())}};
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  if (r.params) j["params"] = to_json(*r.params);
  return j;
}

nlohmann::json suite_json(const SuiteSummary& s) {
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(report_json(r));
  return json{{"suite", {{"digits", s.digits}, {"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}}},
              {"reports", reports}};
}

std::string md_value(const Real& v, int digits) {
  if (digits <= 25 || !v.is_finite()) return v.to_string(digits);
  std::string s = v.to_string(25);
  const auto e = s.find('e');
  if (e == std::string::npos) return s + "…";
  return s.insert(e, "…");
}

std::string render(const SuiteSummary& s, Format format) {
  std::ostringstream o;
  switch (format) {
    case Format::Json:
      o << suite_json(s).dump(2) << "\n";
      break;
    case Format::Csv:
      o << "id,status,matched_digits,terms_used,tail,elapsed_ms\n";
      for (const auto& r : s.reports) {
        o << csv_field(r.identity_id) << "," << to_string(r.status) << "," << r.matched_digits << "," << r.terms_used
          << "," << r.tail.to_string(6) << "," << r.elapsed.count() << "\n";
      }
      break;
    case Format::Md:
      o << "| id | status | matched | lhs | rhs | terms | tail | ms |\n";
      o << "|---|---|---|---|---|---|---|---|\n";
      for (const auto& r : s.reports) {
        o << "| " << md_cell(r.identity_id) << " | " << to_string(r.status) << " | " << r.matched_digits << " | "
          << md_value(r.lhs_value, display_digits(r)) << " | " << md_value(r.rhs_value, display_digits(r)) << " | "
          << r.terms_used << " | " << r.tail.to_string(3) << " | " << r.elapsed.count() << " |\n";
      }
      o << "\ndigits " << s.digits << ": " << s.pass << " pass, " << s.fail << " fail, " << s.skipped
        << " skipped\n";
      for (const auto& r : s.reports) {
        if (r.status == Status::Fail) o << "- " << r.identity_id << ": " << r.diagnostic << "\n";
      }
      break;
  }
  return o.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Verify closed forms of series with central binomial coefficients C(3k,k)", "c3k"};
  app.require_subcommand(1);
  app.add_option("--digits", cfg.digits, "target decimal digits")->check(CLI::Range(5, 1000));
  app.add_option("--max-terms", cfg.max_terms, "term budget per series")->check(CLI::Range(64L, 1'000'000'000L));
  app.add_option("--format", cfg.format, "md, json or csv")->check(CLI::IsMember({"md", "json", "csv"}));
  app.add_option("--out", cfg.out, "write output here instead of stdout");
  app.add_option("--catalog", cfg.catalog, "catalog JSON overriding the builtin one");
  app.add_option("--jobs", cfg.jobs, "parallel verifications (0: all cores)");

  auto* list = app.add_subcommand("list", "list catalog records");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate an expression, a record or a series");
  eval->add_option("--expr", ea.expr, "closed-form expression, e.g. 'pi^2/6 - log(3)^2/2'");
  eval->add_option("--id", ea.id, "catalog record id");
  eval->add_option("--z", ea.z, "series argument");
  eval->add_option("--a", ea.a, "power of k in the denominator (0, 1, 2)");
  eval->add_option("--weight", ea.weight, "unit, fib:m or lucas:m");

  std::string verify_id;
  auto* ver = app.add_subcommand("verify", "verify one catalog record");
  ver->add_option("--id", verify_id, "catalog record id")->required();

  auto* all = app.add_subcommand("verify-all", "verify every catalog record");

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "verify a theorem family over a parameter grid");
  sw->add_option("--family", sa.family, "THM1_FIB, THM3_V4, THM7_LUC, HORADAM_A2, ...")->required();
  sw->add_option("--r", sa.r, "r range lo:hi");
  sw->add_option("--n", sa.n, "n range lo:hi");
  sw->add_option("--m", sa.m, "m range lo:hi (default 1:n)");
  sw->add_option("--pq", sa.pq, "p,q pairs separated by ';'");
  sw->add_option("--horadam", sa.horadam, "p,q,a,b");

  long t_max = 8;
  auto* scan = app.add_subcommand("scan", "arguments z = (81 - t^2)/12 with 27 - 4z a square");
  scan->add_option("--t-max", t_max, "largest t");

  std::string level = "A_to_B";
  std::string xs;
  std::string ys;
  auto* der = app.add_subcommand("check-derivatives", "central-difference check between identity levels");
  der->add_option("--level", level, "A_to_B or B_to_C");
  der->add_option("--x", xs, "x")->required();
  der->add_option("--y", ys, "y")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "c3k: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*list) return cmd_list(cfg, out);
    if (*eval) return cmd_eval(cfg, ea, out);
    if (*ver) return cmd_verify(cfg, verify_id, out);
    if (*all) return cmd_verify_all(cfg, out);
    if (*sw) return cmd_sweep(cfg, sa, out);
    if (*scan) return cmd_scan(cfg, t_max, out);
    if (*der) return cmd_check_derivatives(cfg, level, xs, ys, out);
  } catch (const UsageError& e) {
    err << "c3k: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "c3k: " << e.what() << "\n";
    return kFailed;
  }
  err << "c3k: no command\n";
  return kUsage;
}

}  // namespace c3k::cli
