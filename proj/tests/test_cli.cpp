#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "predraw/cli.hpp"
#include "predraw/geometry.hpp"

using namespace predraw;
namespace fix = predraw::testfix;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fix::fixture_path(name); }

std::string temp_json(const std::string& stem) {
  return (std::filesystem::temp_directory_path() /
          ("predraw_" + stem + "_" + std::to_string(::getpid()) + ".json"))
      .string();
}

}  // namespace

TEST_CASE("validate reports counts and exits cleanly") {
  RunResult r = run({"validate", fx("nf7.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("points: 7") != std::string::npos);
  CHECK(r.out.find("incidences: 18") != std::string::npos);
}

TEST_CASE("input errors exit with code 2 and a diagnostic") {
  CHECK(run({"validate", "/nonexistent.json"}).code == cli::kExitInputError);
  CHECK(run({"nonsense"}).code == cli::kExitInputError);
  CHECK(run({}).code == cli::kExitInputError);

  const std::string bad = temp_json("bad");
  {
    std::ofstream f(bad);
    f << R"({"d": 2, "points": ["p0"], "hyperplanes": ["h0"],
             "incidences": [["p9", "h0"]]})";
  }
  RunResult r = run({"validate", bad});
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.err.find("p9") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("matroid emits the report in both formats") {
  RunResult text = run({"matroid", fx("g1.json")});
  CHECK(text.code == cli::kExitOk);
  CHECK(text.out.find("basis: true") != std::string::npos);

  RunResult js = run({"matroid", fx("fano.json"), "--format", "json"});
  CHECK(js.code == cli::kExitOk);
  auto doc = nlohmann::ordered_json::parse(js.out);
  CHECK(doc["independent"] == false);
  CHECK(doc["violating_subset"].size() == 21);
  CHECK(doc["version"].is_string());
  const int rank = doc["generic_rank"].get<int>();
  CHECK(rank < 21);  // dependent rows
  CHECK(doc["generic_corank"] == 21 - rank);
}

TEST_CASE("purecond prints the canonical polynomial") {
  RunResult g1 = run({"purecond", fx("g1.json")});
  CHECK(g1.code == cli::kExitOk);
  CHECK(g1.out.find("polynomial: 1") != std::string::npos);

  RunResult dg4 = run({"purecond", fx("dg4.json")});
  CHECK(dg4.out.find("f_h0*g_h3 - g_h0*f_h3") != std::string::npos);

  RunResult nb = run({"purecond", fx("triangle.json")});
  CHECK(nb.code == cli::kExitInputError);
  CHECK(nb.err.find("basis") != std::string::npos);
}

TEST_CASE("purecond --pin does not change the canonical output") {
  RunResult a = run({"purecond", fx("nf7.json"), "--pin", "p0"});
  RunResult b = run({"purecond", fx("nf7.json"), "--pin", "p3"});
  const auto poly_line = [](const std::string& s) {
    const auto pos = s.find("polynomial:");
    return s.substr(pos);
  };
  CHECK(poly_line(a.out) == poly_line(b.out));
}

TEST_CASE("eval signals a vanishing pure condition with exit 10") {
  RunResult zero =
      run({"eval", fx("nf7.json"), "--normals", fx("medial.json")});
  CHECK(zero.code == cli::kExitVanishes);
  CHECK(zero.out.find("value: 0") != std::string::npos);

  RunResult nonzero =
      run({"eval", fx("nf7.json"), "--normals", fx("nf7_generic.json")});
  CHECK(nonzero.code == cli::kExitOk);
  CHECK(nonzero.out.find("value: 216") != std::string::npos);

  RunResult missing = run({"eval", fx("nf7.json")});
  CHECK(missing.code == cli::kExitInputError);
}

TEST_CASE("separate normals win over embedded ones") {
  // Geometry document embedding the generic normals, overridden by the
  // medial normals file on the command line.
  GeometryDocument doc = fix::load_document("nf7.json");
  doc.normals = fix::nf7_generic_normals();
  const std::string path = temp_json("embedded");
  {
    std::ofstream f(path);
    f << serialize_document(doc);
  }
  RunResult embedded = run({"eval", path});
  CHECK(embedded.code == cli::kExitOk);  // generic normals: nonzero
  RunResult overridden = run({"eval", path, "--normals", fx("medial.json")});
  CHECK(overridden.code == cli::kExitVanishes);
  std::remove(path.c_str());
}

TEST_CASE("realize emits exact rational redrawings") {
  RunResult r = run({"realize", fx("nf7.json"), "--normals",
                     fx("medial.json"), "--pin", "p6", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["kernel_dimension"] == 1);
  CHECK(doc["redrawings"].size() == 1);
  CHECK(doc["redrawings"][0]["classification"] == "proper");
  // Every rational in the payload reparses.
  for (const auto& [p, vec] :
       doc["redrawings"][0]["coordinates"].items()) {
    for (const auto& entry : vec)
      CHECK_NOTHROW(parse_rational(entry.get<std::string>()));
  }
}

TEST_CASE("invariance summarises the property checks") {
  RunResult r = run({"invariance", fx("dg4.json"), "--trials", "5",
                     "--assignments", "5", "--seed", "3", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["basis"] == true);
  CHECK(doc["pin"]["all_equal"] == true);
  CHECK(doc["sl"]["dets_equal"] == true);
  CHECK(doc["rank"]["all_equal"] == true);
  CHECK(doc["seed"] == 3);
}

TEST_CASE("overconstrained reports rank and feasibility") {
  RunResult r = run({"overconstrained", fx("pappus.json"), "--normals",
                     fx("pappus_feasible.json"), "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["feasible"] == true);
  CHECK(doc["pinned_rank"] <= 26);
  CHECK(doc["full_column_rank"] == 27);

  RunResult basis = run({"overconstrained", fx("nf7.json"), "--normals",
                         fx("medial.json")});
  CHECK(basis.code == cli::kExitInputError);
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::vector<std::vector<std::string>> invocations = {
      {"purecond", fx("nf7.json"), "--bracket", "--format", "json"},
      {"matroid", fx("pappus.json"), "--seed", "7", "--format", "json"},
      {"realize", fx("nf7.json"), "--normals", fx("medial.json"), "--format",
       "json"},
  };
  for (const auto& argv : invocations) {
    RunResult a = run(argv);
    RunResult b = run(argv);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("validate output round-trips through the parsers") {
  RunResult r = run({"validate", fx("pappus_sub.json"), "--format", "json"});
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["points"] == 9);
  CHECK(doc["hyperplanes"] == 8);
  CHECK(doc["incidences"] == 24);
}

TEST_CASE("help and version are available") {
  CHECK(run({"--version"}).code == cli::kExitOk);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
