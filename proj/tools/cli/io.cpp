#include "cli/io.hpp"

#include <terrace/errors.hpp>
#include <terrace/projections.hpp>

#include <fstream>
#include <sstream>

namespace terrace::cli {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

Rational parse_field(const Json& v, const std::string& where) {
  if (!v.is_string()) parse_error(where + " must be a string such as \"0.45\" or \"9/20\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    parse_error(where + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string render(const Rational& v, const RenderOptions& opts) {
  return opts.exact ? v.to_fraction() : v.to_decimal(opts.digits);
}

std::vector<std::string> split_list(std::string_view list) {
  std::vector<std::string> out;
  if (list.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = list.find(',', start);
    auto item = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

MarginalSet parse_inline(std::string_view list) {
  const auto items = split_list(list);
  if (items.empty()) parse_error("probability list is empty");
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      probs.push_back(Rational::parse(items[i]));
    } catch (const Error& e) {
      parse_error("probabilities[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return MarginalSet::numbered(std::move(probs));
}

MarginalSet parse_marginals_json(const Json& doc) {
  if (!doc.is_object()) parse_error("input must be a JSON object");
  if (!doc.contains("probabilities") || !doc["probabilities"].is_array()) {
    parse_error("field 'probabilities' must be an array");
  }
  const auto& arr = doc["probabilities"];
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    probs.push_back(parse_field(arr[i], "probabilities[" + std::to_string(i) + "]"));
  }
  if (!doc.contains("events")) return MarginalSet::numbered(std::move(probs));

  const auto& ev = doc["events"];
  if (!ev.is_array()) parse_error("field 'events' must be an array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (!ev[i].is_string()) parse_error("events[" + std::to_string(i) + "] must be a string");
    labels.push_back(ev[i].get<std::string>());
  }
  return MarginalSet(EventSet::make(std::move(labels)), std::move(probs));
}

MarginalSet read_marginals_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return parse_marginals_json(doc);
}

std::vector<BoundsRow> make_rows(const BoundaryDistributions& bounds, const PowerSetMap& star) {
  const std::size_t n = bounds.events.size();
  std::vector<BoundsRow> rows;
  rows.reserve(power_set_size(n));
  for (auto x : subset_iter(n)) {
    rows.push_back({indicator_string(x, n), bounds.events.labels_of(x), bounds.lower[x], star[x], bounds.upper[x]});
  }
  return rows;
}

Json rows_json(const std::vector<BoundsRow>& rows, const RenderOptions& opts) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back({{"subset", r.subset},
                   {"labels", r.labels},
                   {"lower", render(r.lower, opts)},
                   {"star", render(r.star, opts)},
                   {"upper", render(r.upper, opts)}});
  }
  return arr;
}

Json bounds_json(std::size_t n, const std::vector<BoundsRow>& rows, const RenderOptions& opts) {
  return {{"N", n}, {"rows", rows_json(rows, opts)}};
}

std::string bounds_csv(const std::vector<BoundsRow>& rows, const RenderOptions& opts) {
  std::ostringstream os;
  os << "subset,labels,lower,star,upper\n";
  for (const auto& r : rows) {
    os << r.subset << ',' << join(r.labels, '+') << ',' << render(r.lower, opts) << ',' << render(r.star, opts)
       << ',' << render(r.upper, opts) << '\n';
  }
  return os.str();
}

std::vector<BoundsRow> parse_bounds_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    parse_error("bounds document must contain a 'rows' array");
  }
  std::vector<BoundsRow> rows;
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    const auto& r = doc["rows"][i];
    const std::string where = "rows[" + std::to_string(i) + "]";
    if (!r.is_object() || !r.contains("subset") || !r["subset"].is_string() || !r.contains("labels")) {
      parse_error(where + " is missing 'subset' or 'labels'");
    }
    BoundsRow row;
    row.subset = r["subset"].get<std::string>();
    for (const auto& l : r["labels"]) {
      if (!l.is_string()) parse_error(where + ".labels must hold strings");
      row.labels.push_back(l.get<std::string>());
    }
    for (const char* key : {"lower", "star", "upper"}) {
      if (!r.contains(key)) parse_error(where + " is missing '" + key + "'");
    }
    row.lower = parse_field(r["lower"], where + ".lower");
    row.star = parse_field(r["star"], where + ".star");
    row.upper = parse_field(r["upper"], where + ".upper");
    rows.push_back(std::move(row));
  }
  return rows;
}

Json report_json(const VerificationReport& report, const RenderOptions& opts, bool witnesses) {
  const auto& m = report.marginals;
  const std::size_t n = m.size();
  Json probs = Json::array();
  for (const auto& p : m.probs()) probs.push_back(render(p, opts));

  std::size_t equalities = 0;
  Json rows = Json::array();
  for (const auto& r : report.records) {
    equalities += static_cast<std::size_t>(r.lower_matches()) + static_cast<std::size_t>(r.upper_matches());
    Json row = {{"subset", indicator_string(r.subset, n)},
                {"labels", m.events().labels_of(r.subset)},
                {"closed_form_lower", render(r.closed_form_lower, opts)},
                {"lp_min", render(r.lp_min, opts)},
                {"closed_form_upper", render(r.closed_form_upper, opts)},
                {"lp_max", render(r.lp_max, opts)}};
    if (witnesses) {
      Json wmin = Json::array();
      Json wmax = Json::array();
      for (const auto& v : r.witness_min.values().values()) wmin.push_back(render(v, opts));
      for (const auto& v : r.witness_max.values().values()) wmax.push_back(render(v, opts));
      row["witness_min"] = std::move(wmin);
      row["witness_max"] = std::move(wmax);
    }
    rows.push_back(std::move(row));
  }
  return {{"events", m.events().labels()},
          {"probabilities", std::move(probs)},
          {"verdict", report.pass ? "pass" : "fail"},
          {"comparisons", 2 * report.records.size()},
          {"equalities", equalities},
          {"rows", std::move(rows)}};
}

}  // namespace terrace::cli
