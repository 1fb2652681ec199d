#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "c3k/verifier.hpp"

namespace c3k::cli {

enum class Format { Md, Json, Csv };

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

SuiteSummary summarize(std::vector<VerificationReport> reports, int digits);

nlohmann::json report_json(const VerificationReport& r);
nlohmann::json suite_json(const SuiteSummary& s);
std::string render(const SuiteSummary& s, Format format);

// Value shown in Markdown: at most 25 significant digits, "…" when cut.
std::string md_value(const Real& v, int digits);

}  // namespace c3k::cli
