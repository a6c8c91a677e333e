#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "cli/svg.hpp"

#include <terrace/errors.hpp>
#include <terrace/projections.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace terrace::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("terrace_test_" + name);
}

TEST(CliBounds, DoubletJson) {
  const auto r = run_cli({"bounds", "-p", "0.45,0.40"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["N"], 2);
  ASSERT_EQ(doc["rows"].size(), 4u);
  const auto& row = doc["rows"][1];
  EXPECT_EQ(row["subset"], "10");
  EXPECT_EQ(row["labels"], Json::array({"x1"}));
  EXPECT_EQ(row["lower"], "0.05");
  EXPECT_EQ(row["star"], "0.27");
  EXPECT_EQ(row["upper"], "0.45");
}

TEST(CliBounds, PentapletHasZeroLowerBounds) {
  const auto r = run_cli({"bounds", "-p", "0.45,0.40,0.35,0.30,0.25"});
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 32u);
  for (const auto& row : doc["rows"]) EXPECT_EQ(row["lower"], "0");
}

TEST(CliBounds, CsvFormat) {
  const auto r = run_cli({"bounds", "-p", "9/20,2/5", "--format", "csv", "--exact"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "subset,labels,lower,star,upper\n"
            "00,,3/20,33/100,11/20\n"
            "10,x1,1/20,27/100,9/20\n"
            "01,x2,0,11/50,2/5\n"
            "11,x1+x2,0,9/50,2/5\n");
}

TEST(CliBounds, GeneralFlagGivesSameTable) {
  EXPECT_EQ(run_cli({"bounds", "-p", "0.45,0.40,0.2"}).out, run_cli({"bounds", "-p", "0.45,0.40,0.2", "--general"}).out);
}

TEST(CliBounds, JsonInputFile) {
  const auto path = temp_path("input.json");
  std::ofstream(path) << R"({"events": ["rain", "wind"], "probabilities": ["0.45", "2/5"]})";
  const auto r = run_cli({"bounds", "-i", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["rows"][3]["labels"], Json::array({"rain", "wind"}));
  EXPECT_EQ(doc["rows"][0]["lower"], "0.15");
  std::filesystem::remove(path);
}

TEST(CliBounds, ErrorExitCodes) {
  auto r = run_cli({"bounds", "-p", "1.2"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("ProbabilityOutOfRange"), std::string::npos);

  r = run_cli({"bounds", "-p", "0.4,abc"});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("probabilities[1]"), std::string::npos);

  EXPECT_EQ(run_cli({"bounds"}).code, kExitParse);
  EXPECT_EQ(run_cli({"bounds", "-p", "0.4", "--format", "xml"}).code, kExitParse);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(run_cli({"bounds", "-i", "/nonexistent/input.json"}).code, kExitIo);

  const auto path = temp_path("bad.json");
  std::ofstream(path) << R"({"probabilities": [0.45, 0.4]})";
  r = run_cli({"bounds", "-i", path.string()});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("probabilities[0]"), std::string::npos);
  std::ofstream(path) << R"({"events": ["a", "a"], "probabilities": ["0.1", "0.2"]})";
  EXPECT_EQ(run_cli({"bounds", "-i", path.string()}).code, kExitValidation);
  std::ofstream(path) << "{not json";
  EXPECT_EQ(run_cli({"bounds", "-i", path.string()}).code, kExitParse);
  std::filesystem::remove(path);
}

TEST(CliBounds, HelpExitsCleanly) {
  const auto r = run_cli({"bounds", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--probs"), std::string::npos);
}

TEST(CliBoundsProperty, ExactJsonRoundTrips) {
  for (const char* probs : {"0.45,0.40", "1/3,2/7,0.9", "0,1,0.5,0.125", "0.45,0.40,0.35,0.30,0.25,0.20,0.15"}) {
    const auto r = run_cli({"bounds", "-p", probs, "--exact"});
    ASSERT_EQ(r.code, 0);
    const auto doc = Json::parse(r.out);
    const auto rows = parse_bounds_json(doc);
    const auto m = parse_inline(probs);
    const auto b = boundary_distributions(m);
    const auto star = independent_epd(m);
    ASSERT_EQ(rows, make_rows(b, star.values()));
    EXPECT_EQ(bounds_json(m.size(), rows, {true, 6}).dump(2) + "\n", r.out);
  }
}

TEST(CliBoundsProperty, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"bounds", "-p", "0.45,0.40"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  const std::vector<std::string> v{"verify", "-p", "0.7,0.4,0.2", "--witnesses", "--workers", "3"};
  EXPECT_EQ(run_cli(v).out, run_cli(v).out);
}

TEST(CliVerify, SingleInstances) {
  for (const char* probs : {"0.45,0.40", "0.7,0.4"}) {
    const auto r = run_cli({"verify", "-p", probs});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(doc["passed"], 1);
    EXPECT_EQ(doc["reports"][0]["verdict"], "pass");
    EXPECT_EQ(doc["reports"][0]["equalities"], 8);
  }
}

TEST(CliVerify, RandomSweep) {
  const auto r = run_cli({"verify", "--random", "12", "--n", "4", "--half-rare", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["instances"], 12);
  EXPECT_EQ(doc["passed"], 12);
  EXPECT_EQ(doc["reports"][0]["rows"].size(), 16u);

  const auto mixed = run_cli({"verify", "--random", "6", "--n-max", "4", "--seeds", "9"});
  ASSERT_EQ(mixed.code, 0) << mixed.err;
  EXPECT_EQ(Json::parse(mixed.out)["failed"], 0);
}

TEST(CliVerify, WitnessesAreFeasibleJoints) {
  const auto r = run_cli({"verify", "-p", "0.45,0.40", "--witnesses", "--exact"});
  ASSERT_EQ(r.code, 0);
  const auto row = Json::parse(r.out)["reports"][0]["rows"][0];
  EXPECT_EQ(row["lp_max"], "11/20");
  ASSERT_EQ(row["witness_max"].size(), 4u);
  EXPECT_EQ(row["witness_max"][0], "11/20");
}

TEST(CliVerify, Errors) {
  EXPECT_EQ(run_cli({"verify", "-p", "0.1,0.1,0.1,0.1,0.1,0.1,0.1"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"verify", "--random", "3", "-p", "0.1"}).code, kExitParse);
  EXPECT_EQ(run_cli({"verify", "--random", "3", "--n", "9"}).code, kExitParse);
}

// ---- figure -----------------------------------------------------------------

namespace pt = boost::property_tree;

struct Bar {
  double red_y, red_h, blue_y, blue_h;
};

struct ParsedSvg {
  std::vector<Bar> bars;
  std::vector<double> grid_y;
  std::size_t rects = 0;
  std::vector<std::string> labels;
};

ParsedSvg parse_svg(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);  // throws on malformed XML
  ParsedSvg out;
  const auto& svg = tree.get_child("svg");
  for (const auto& [tag, node] : svg) {
    if (tag == "line" && node.get<std::string>("<xmlattr>.class") == "grid") {
      out.grid_y.push_back(node.get<double>("<xmlattr>.y1"));
    }
    if (tag == "rect") ++out.rects;
    if (tag != "g") continue;
    Bar bar{};
    for (const auto& [child_tag, child] : node) {
      if (child_tag == "rect") {
        ++out.rects;
        const auto cls = child.get<std::string>("<xmlattr>.class");
        const auto y = child.get<double>("<xmlattr>.y");
        const auto h = child.get<double>("<xmlattr>.height");
        (cls == "red" ? bar.red_y : bar.blue_y) = y;
        (cls == "red" ? bar.red_h : bar.blue_h) = h;
      }
      if (child_tag == "text") out.labels.push_back(child.data());
    }
    out.bars.push_back(bar);
  }
  return out;
}

TEST(CliFigure, DoubletGeometry) {
  const auto r = run_cli({"figure", "-p", "0.45,0.40", "--width", "400", "--height", "300"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto svg = parse_svg(r.out);
  ASSERT_EQ(svg.bars.size(), 4u);
  EXPECT_EQ(svg.rects, 8u);
  EXPECT_EQ(svg.labels, (std::vector<std::string>{"00", "10", "01", "11"}));
  ASSERT_EQ(svg.grid_y.size(), 5u);

  // Grid lines at 0 and 1 fix the vertical scale.
  const double y0 = svg.grid_y.front();
  const double y1 = svg.grid_y.back();
  for (std::size_t k = 1; k < 5; ++k) EXPECT_NEAR(svg.grid_y[k - 1] - svg.grid_y[k], (y0 - y1) / 4, 1e-3);
  auto value_at = [&](double y) { return (y0 - y) / (y0 - y1); };

  const auto& b = svg.bars[1];  // subset "10": red 0.05 -> 0.27, blue 0.27 -> 0.45
  EXPECT_NEAR(value_at(b.red_y + b.red_h), 0.05, 1e-5);
  EXPECT_NEAR(value_at(b.red_y), 0.27, 1e-5);
  EXPECT_NEAR(value_at(b.blue_y), 0.45, 1e-5);
}

TEST(CliFigure, RedTopEqualsBlueBottomExactly) {
  const auto r = run_cli({"figure", "-p", "1/3,2/7,0.45,0.9"});
  ASSERT_EQ(r.code, 0);
  auto milli = [](double v) { return std::llround(v * 1000); };
  for (const auto& b : parse_svg(r.out).bars) EXPECT_EQ(milli(b.red_y), milli(b.blue_y) + milli(b.blue_h));
}

TEST(CliFigure, SingleEventIsFullyDetermined) {
  const auto svg = parse_svg(run_cli({"figure", "-p", "0.3"}).out);
  ASSERT_EQ(svg.bars.size(), 2u);
  for (const auto& b : svg.bars) {
    EXPECT_EQ(b.red_h, 0.0);
    EXPECT_EQ(b.blue_h, 0.0);
  }
}

TEST(CliFigure, WritesFileAndReportsIoErrors) {
  const auto path = temp_path("fig.svg");
  ASSERT_EQ(run_cli({"figure", "-p", "0.45,0.40", "--out", path.string()}).code, 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(parse_svg(buf.str()).rects, 8u);
  std::filesystem::remove(path);

  EXPECT_EQ(run_cli({"figure", "-p", "0.45,0.40", "--out", "/nonexistent-dir/x.svg"}).code, kExitIo);
  EXPECT_EQ(run_cli({"figure", "-p", "0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1"}).code, kExitValidation);
}

// ---- phenomenon -------------------------------------------------------------

TEST(CliPhenomenon, KeepingAllEventsIsIdentity) {
  const auto r = run_cli({"phenomenon", "-p", "0.45,0.40", "--kept", "x1,x2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["probabilities"], Json::array({"0.45", "0.4"}));
  EXPECT_EQ(doc["rows"], Json::parse(run_cli({"bounds", "-p", "0.45,0.40"}).out)["rows"]);
}

TEST(CliPhenomenon, EmptyKeptSetComplementsEverything) {
  const auto r = run_cli({"phenomenon", "-p", "0.45,0.40", "--kept", "", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["probabilities"], Json::array({"11/20", "3/5"}));
  EXPECT_EQ(doc["events"], Json::array({"x1^c", "x2^c"}));
  EXPECT_EQ(doc["complemented"], Json::array({"x1", "x2"}));
  // Renumbered bounds equal the bounds computed directly on the complemented marginals.
  const auto direct = Json::parse(run_cli({"bounds", "-p", "11/20,3/5", "--exact"}).out);
  for (std::size_t k = 0; k < 4; ++k) {
    for (const char* key : {"lower", "star", "upper"}) EXPECT_EQ(doc["rows"][k][key], direct["rows"][k][key]);
  }
  // The old empty set (lower 3/20) now sits at "11".
  EXPECT_EQ(doc["rows"][3]["lower"], "3/20");
}

TEST(CliPhenomenon, UnknownLabel) {
  const auto r = run_cli({"phenomenon", "-p", "0.45,0.40", "--kept", "x9"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("x9"), std::string::npos);
}

TEST(CliPhenomenon, CsvOutput) {
  const auto r = run_cli({"phenomenon", "-p", "0.45,0.40", "--kept", "x2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x1^c,0.55\n"), std::string::npos);
  EXPECT_NE(r.out.find("subset,labels,lower,star,upper\n"), std::string::npos);
}

}  // namespace
}  // namespace terrace::cli
