#pragma once

#include <terrace/distribution.hpp>
#include <terrace/frechet.hpp>
#include <terrace/marginals.hpp>
#include <terrace/oracle.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace terrace::cli {

using Json = nlohmann::ordered_json;

struct RenderOptions {
  bool exact = false;  ///< "9/20" instead of "0.45"
  int digits = 6;
};

std::string render(const Rational& v, const RenderOptions& opts);

/// "0.45,0.40" or "9/20,2/5"; events are named x1..xN.
MarginalSet parse_inline(std::string_view list);

/// {"events": [...], "probabilities": ["0.45", "2/5", ...]}; "events" may be omitted.
MarginalSet parse_marginals_json(const Json& doc);
MarginalSet read_marginals_file(const std::filesystem::path& path);

/// Comma-separated labels; an empty string yields no labels.
std::vector<std::string> split_list(std::string_view list);

/// One output row per subset: indicator string, member labels, p-, p*, p+.
struct BoundsRow {
  std::string subset;
  std::vector<std::string> labels;
  Rational lower;
  Rational star;
  Rational upper;

  friend bool operator==(const BoundsRow&, const BoundsRow&) = default;
};

std::vector<BoundsRow> make_rows(const BoundaryDistributions& bounds, const PowerSetMap& star);

Json rows_json(const std::vector<BoundsRow>& rows, const RenderOptions& opts);
/// {"N": n, "rows": [...]}
Json bounds_json(std::size_t n, const std::vector<BoundsRow>& rows, const RenderOptions& opts);
/// Header subset,labels,lower,star,upper; labels joined by '+'.
std::string bounds_csv(const std::vector<BoundsRow>& rows, const RenderOptions& opts);

/// Reads back the output of bounds_json. Throws Error(Parse) on malformed input.
std::vector<BoundsRow> parse_bounds_json(const Json& doc);

Json report_json(const VerificationReport& report, const RenderOptions& opts, bool witnesses);

}  // namespace terrace::cli
