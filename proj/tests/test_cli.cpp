#include <doctest.h>

#include "satake/cli.hpp"
#include "satake/cli_json.hpp"
#include "satake/hecke.hpp"
#include "satake/mvcells.hpp"
#include "satake/vinberg.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace satake;
using satake::cli::Json;

namespace {

struct Result {
  int code;
  std::string text;
  Json json() const { return Json::parse(text); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = cli::run(args, out);
  return {code, out.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("mv-cells example") {
  const Result r = run({"mv-cells", "--group", "PGL2", "--mu", "3", "--nu", "1", "--sign", "minus", "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = r.json();
  CHECK(j["cells"] == Json::parse(R"([{"A":0,"Gm":1}])"));
  CHECK(j["dim"] == 1);
  CHECK(j["top_cells"] == 1);
  const CellList c = cli::cell_list_from_json(j);
  CHECK(c.cells == mv_decomposition(RootDatum::preset("PGL2"), {3}, {1}, Orbit::Minus).cells);
  CHECK(cli::cell_list_to_json(c)["poly"] == j["poly"]);
}

TEST_CASE("hecke mul by the unit") {
  const Result r = run({"hecke", "mul", "--group", "GL2", "--mu", "1,0", "--lambda", "0,0"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(cli::hecke_from_json(r.json()) == HeckeElement::basis({1, 0}));
}

TEST_CASE("satake diagram and vinberg check") {
  Result r = run({"satake", "diagram", "--group", "PGL2", "--q", "5", "--max-height", "6"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.json()["ok"] == true);
  CHECK(r.json()["cases"].get<int>() > 0);
  r = run({"vinberg", "check", "--group", "PGL2", "--mu", "3", "--twist", "0"});
  CHECK(r.json()["extends"] == true);
  r = run({"vinberg", "check", "--group", "PGL2", "--mu", "3", "--twist", "1"});
  CHECK(r.json()["extends"] == false);
  CHECK(cli::graded_from_json(r.json()["character"]) == tate_twist(ic_class(RootDatum::preset("PGL2"), {3}, 0), 1));
}

TEST_CASE("json round trips") {
  const RootDatum g = RootDatum::preset("SO5");
  const HeckeElement h = hecke_multiply(g, HeckeElement::basis({1, 0}), HeckeElement::basis({0, 1}));
  CHECK(cli::hecke_from_json(cli::hecke_to_json(h)) == h);
  const SphericalFunction s = satake_classical(g, h);
  CHECK(cli::spherical_from_json(cli::spherical_to_json(s)) == s);
  const VinbergClass v = psi(g, h);
  CHECK(cli::vinberg_class_from_json(cli::vinberg_class_to_json(v)) == v);
  const GradedCharacter c = character(g, v);
  CHECK(cli::graded_from_json(cli::graded_to_json(c)) == c);
  const LaurentPoly half = LaurentPoly::half_power(3) - LaurentPoly::q_power(-1);
  CHECK(cli::poly_from_json(cli::poly_to_json(half)) == half);
  const Json text = Json::parse(run({"vinberg", "psi", "--group", "SO5", "--mu", "1,0"}).text);
  CHECK(cli::vinberg_class_from_json(text["class"]) == psi(g, HeckeElement::basis({1, 0})));
}

TEST_CASE("other commands run") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"rootdata", "--group", "G2"},
           {"rootdata", "--group", "SL3", "--mu", "1,1", "--table"},
           {"galleries", "--group", "SL3", "--mu", "1,1", "--limit", "3"},
           {"galleries", "--group", "PGL2", "--mu", "2", "--contributing-only"},
           {"mv-cells", "--group", "Sp4", "--mu", "1,1"},
           {"deodhar", "--group", "SL3", "--word", "1,2,1", "--x", "e", "--q", "2", "--oracle"},
           {"deodhar", "--group", "SL3", "--word", "1,2", "--x", "e", "--parabolic", "1"},
           {"hecke", "basis", "--group", "PGL2", "--mu", "2", "--oracle"},
           {"satake", "transform", "--group", "SL3", "--mu", "1,1"},
           {"satake", "transform", "--group", "PGL2", "--mu", "1", "--q", "4"},
           {"oracle", "conv", "--group", "PGL2", "--mu", "1", "--lambda", "1", "--q", "3"},
           {"oracle", "conv", "--group", "PGL2", "--mu", "1", "--lambda", "1", "--nu", "0", "--q", "3"},
           {"oracle", "schubert", "--group", "GL2", "--mu", "2,0", "--q", "2"},
           {"oracle", "semiinfinite", "--group", "PGL2", "--mu", "2", "--nu", "0", "--sign", "minus", "--q", "3"},
           {"oracle", "flag", "--group", "Sp4", "--y", "1,2", "--x", "e", "--q", "2"},
           {"report", "pgl2", "--max-mu", "3"},
       }) {
    CAPTURE(args.front());
    const Result r = run(args);
    CHECK(r.code == cli::kExitOk);
    CHECK(!r.text.empty());
  }
  const Json d = run({"deodhar", "--group", "SL3", "--word", "1,2,1", "--x", "e", "--q", "2", "--oracle"}).json();
  CHECK(d["count"] == d["oracle_count"]);
  CHECK(run({"report", "pgl2"}).json()["ok"] == true);
  CHECK(run({"oracle", "semiinfinite", "--group", "PGL2", "--mu", "2", "--nu", "0", "--sign", "minus", "--q", "3"})
            .json()["count"] == 2);
}

TEST_CASE("exit codes and error objects") {
  Result r = run({"mv-cells", "--group", "PGL2", "--mu", "-1"});
  CHECK(r.code == cli::kExitInvalid);
  CHECK(r.json()["kind"] == "validation");
  r = run({"mv-cells", "--group", "NOPE", "--mu", "1"});
  CHECK(r.code == cli::kExitInvalid);
  r = run({"frobnicate"});
  CHECK(r.code == cli::kExitInvalid);
  CHECK(r.json()["kind"] == "usage");
  r = run({"mv-cells", "--group", "PGL2"});
  CHECK(r.code == cli::kExitInvalid);
  r = run({"oracle", "schubert", "--group", "GL2", "--mu", "40,0", "--q", "9"});
  CHECK(r.code == cli::kExitBudget);
  CHECK(r.json()["kind"] == "budget");
  r = run({"oracle", "conv", "--group", "SL3", "--mu", "1,0", "--lambda", "1,0"});
  CHECK(r.code == cli::kExitInvalid);
  r = run({"--help"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.text.find("mv-cells") != std::string::npos);
}

TEST_CASE("custom datum file") {
  const auto path = std::filesystem::temp_directory_path() / "satake-test-datum.json";
  {
    std::ofstream out(path);
    out << RootDatum::preset("SO5").to_json();
  }
  const Result r = run({"rootdata", "--datum", path.string()});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.json()["weyl_order"] == 8);
  std::filesystem::remove(path);
}

}
