#include "cli/commands.hpp"

#include "cli/io.hpp"
#include "cli/svg.hpp"

#include <terrace/oracle.hpp>
#include <terrace/projections.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

namespace terrace::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return kExitParse;
    case ErrorCode::Infeasible:
      return kExitVerification;
    default:
      return kExitValidation;
  }
}

namespace {

struct InputOptions {
  std::string probs;
  std::string input;

  void attach(CLI::App& cmd) {
    auto* p = cmd.add_option("-p,--probs", probs, "Comma-separated probabilities, e.g. 0.45,0.40 or 9/20,2/5");
    auto* i = cmd.add_option("-i,--input", input, "JSON file {\"events\": [...], \"probabilities\": [...]}");
    p->excludes(i);
  }

  bool given() const { return !probs.empty() || !input.empty(); }

  MarginalSet load() const {
    if (!input.empty()) return read_marginals_file(input);
    if (probs.empty()) throw Error(ErrorCode::Parse, "one of --probs or --input is required");
    return parse_inline(probs);
  }
};

struct OutputOptions {
  std::string format = "json";
  bool exact = false;
  int digits = 6;

  void attach(CLI::App& cmd, bool with_format) {
    if (with_format) {
      cmd.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    }
    cmd.add_flag("--exact", exact, "Print values as exact fractions such as 9/20");
    cmd.add_option("--digits", digits, "Fractional digits for decimal output")->check(CLI::Range(0, 60));
  }

  RenderOptions render() const { return {exact, digits}; }
};

void emit_rows(std::ostream& out, const OutputOptions& o, std::size_t n, const std::vector<BoundsRow>& rows) {
  if (o.format == "csv") {
    out << bounds_csv(rows, o.render());
  } else {
    out << bounds_json(n, rows, o.render()).dump(2) << '\n';
  }
}

int cmd_bounds(const InputOptions& in, const OutputOptions& o, bool general, std::ostream& out) {
  const auto m = in.load();
  const auto bounds = boundary_distributions(m, general ? BoundPath::General : BoundPath::Auto);
  const auto star = independent_epd(m);
  emit_rows(out, o, m.size(), make_rows(bounds, star.values()));
  return kExitOk;
}

struct VerifyOptions {
  std::size_t random = 0;
  std::size_t n = 5;
  std::size_t n_max = 0;
  bool half_rare = false;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool witnesses = false;
};

int cmd_verify(const InputOptions& in, const OutputOptions& o, const VerifyOptions& v, std::ostream& out,
               std::ostream& err) {
  std::vector<MarginalSet> instances;
  if (v.random > 0) {
    if (in.given()) throw Error(ErrorCode::Parse, "--random cannot be combined with --probs or --input");
    std::mt19937_64 sizes(v.seed);
    for (std::size_t k = 0; k < v.random; ++k) {
      std::size_t n = v.n;
      if (v.n_max > 0) n = 2 + static_cast<std::size_t>(sizes() % (std::max<std::size_t>(v.n_max, 2) - 1));
      instances.push_back(random_marginals(n, v.seed + k, v.half_rare));
    }
  } else {
    instances.push_back(in.load());
  }

  Json reports = Json::array();
  std::size_t passed = 0;
  std::optional<std::string> counterexample;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto report = verify_bounds(instances[k], v.workers);
    if (report.pass) {
      ++passed;
    } else if (!counterexample) {
      const auto* bad = report.first_mismatch();
      const std::size_t n = instances[k].size();
      counterexample = "sharpness mismatch in instance " + std::to_string(k) + " at subset " +
                       indicator_string(bad->subset, n) + ": lower " + bad->closed_form_lower.to_fraction() +
                       " vs lp_min " + bad->lp_min.to_fraction() + ", upper " +
                       bad->closed_form_upper.to_fraction() + " vs lp_max " + bad->lp_max.to_fraction();
    }
    reports.push_back(report_json(report, o.render(), v.witnesses));
  }
  Json doc = {{"instances", instances.size()},
              {"passed", passed},
              {"failed", instances.size() - passed},
              {"reports", std::move(reports)}};
  out << doc.dump(2) << '\n';
  if (counterexample) {
    err << "error: " << *counterexample << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_figure(const InputOptions& in, const FigureSpec& spec, const std::string& path, std::ostream& out) {
  const auto m = in.load();
  const auto svg = render_figure(m, spec);
  if (path.empty() || path == "-") {
    out << svg;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  file << svg;
  file.close();
  if (!file) throw std::ios_base::failure("failed writing '" + path + "'");
  return kExitOk;
}

int cmd_phenomenon(const InputOptions& in, const OutputOptions& o, const std::string& kept_list,
                   std::ostream& out) {
  const auto m = in.load();
  SubsetIndex kept;
  for (const auto& label : split_list(kept_list)) {
    const auto i = m.events().find(label);
    if (!i) throw Error(ErrorCode::UnknownLabel, "unknown event label '" + label + "' in --kept");
    kept = kept | SubsetIndex::singleton(*i);
  }
  const auto pm = PhenomenonMap::keeping(m.size(), kept);
  const auto transformed = pm.transform(m);
  const auto bounds = boundary_distributions(m);
  const BoundaryDistributions renumbered{transformed.events(), apply_phenomenon(bounds.lower, pm),
                                         apply_phenomenon(bounds.upper, pm)};
  const auto star = apply_phenomenon(independent_epd(m).values(), pm);
  const auto rows = make_rows(renumbered, star);

  if (o.format == "csv") {
    out << "# kept=" << kept_list << '\n';
    out << "event,probability\n";
    for (std::size_t i = 0; i < transformed.size(); ++i) {
      out << transformed.events().label(i) << ',' << render(transformed.prob(i), o.render()) << '\n';
    }
    out << bounds_csv(rows, o.render());
    return kExitOk;
  }
  Json probs = Json::array();
  for (const auto& p : transformed.probs()) probs.push_back(render(p, o.render()));
  Json doc = {{"kept", m.events().labels_of(kept)},
              {"complemented", m.events().labels_of(pm.complemented())},
              {"events", transformed.events().labels()},
              {"probabilities", std::move(probs)},
              {"N", m.size()},
              {"rows", rows_json(rows, o.render())}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frechet bounds of the 1st kind for sets of events"};
  app.name("terrace");
  app.require_subcommand(1);

  InputOptions bounds_in;
  OutputOptions bounds_out;
  bool general = false;
  auto* bounds = app.add_subcommand("bounds", "Lower/upper boundary distributions and the independent e.p.d.");
  bounds_in.attach(*bounds);
  bounds_out.attach(*bounds, true);
  bounds->add_flag("--general", general, "Force the general formulas even for half-rare input");

  InputOptions verify_in;
  OutputOptions verify_out;
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Check every bound against an exact LP over joint distributions");
  verify_in.attach(*verify);
  verify_out.attach(*verify, false);
  verify->add_option("--random", vopts.random, "Number of random marginal sets to verify");
  auto* n_opt = verify->add_option("--n", vopts.n, "Event count of random instances")->check(CLI::Range(1, 6));
  verify->add_option("--n-max", vopts.n_max, "Draw the event count uniformly from 2..n-max")
      ->check(CLI::Range(2, 6))
      ->excludes(n_opt);
  verify->add_flag("--half-rare", vopts.half_rare, "Generate half-rare random instances");
  verify->add_option("--seed,--seeds", vopts.seed, "Base seed; instance k uses seed + k");
  verify->add_option("--workers", vopts.workers, "Threads per instance")->check(CLI::Range(1, 256));
  verify->add_flag("--witnesses", vopts.witnesses, "Include witness joint distributions");

  InputOptions figure_in;
  FigureSpec spec;
  std::string figure_path;
  auto* figure = app.add_subcommand("figure", "Render the bound intervals as SVG");
  figure_in.attach(*figure);
  figure->add_option("-o,--out", figure_path, "Output SVG path (stdout when omitted)");
  figure->add_option("--width", spec.width_px, "Width in px")->check(CLI::Range(120, 20000));
  figure->add_option("--height", spec.height_px, "Height in px")->check(CLI::Range(120, 20000));

  InputOptions phen_in;
  OutputOptions phen_out;
  std::string kept;
  auto* phen = app.add_subcommand("phenomenon", "Complement events outside --kept and renumber the bounds");
  phen_in.attach(*phen);
  phen_out.attach(*phen, true);
  phen->add_option("--kept", kept, "Comma-separated labels of events kept uncomplemented")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(bounds_in, bounds_out, general, out);
    if (verify->parsed()) return cmd_verify(verify_in, verify_out, vopts, out, err);
    if (figure->parsed()) return cmd_figure(figure_in, spec, figure_path, out);
    if (phen->parsed()) return cmd_phenomenon(phen_in, phen_out, kept, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitParse;
}

}  // namespace terrace::cli
