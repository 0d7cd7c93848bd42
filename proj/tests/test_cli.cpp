#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reduktor/cli.hpp"
#include "reduktor/parse.hpp"

using namespace reduktor;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() /
              ("reduktor_cli_" + name);
  std::ofstream f(path);
  f << content;
  return path.string();
}

const char* kQuadricPair =
    "field 32003\nvars x, y, z\nideal x^2, x*z + y^2\n";
const char* kQuadricLexInitial =
    "field 32003\nvars x, y, z\nideal x^2, x*z, x*y^2, y^4\n";
const char* kMonomialCurve =
    "field 32003\nvars x1, x2, x3\n"
    "ideal x1^3, x2^5, x1*x2, x1*x3, x2*x3\n";
const char* kPinchPoint =
    "field 32003\nvars U, V, W\nideal U^2 + V^2, V*W\nsubideal U, V\n";

}  // namespace

TEST_CASE("problem files round-trip through printing") {
  const std::string text =
      "field 101\nvars x, y, z\norder weight:3,-1,0\n"
      "ideal x^2 - (y - z)*x, 2*x*(y + z)^2 - y^3*z, -x*y*z\n"
      "subideal x, y\n";
  auto pf = parse_problem(text);
  auto printed = problem_to_text(pf);
  auto pf2 = parse_problem(printed);

  CHECK(pf2.characteristic == 101);
  REQUIRE(pf2.order.has_value());
  CHECK(pf2.order->kind() == OrderKind::weight);
  CHECK(pf2.order->weights() == std::vector<long long>{3, -1, 0});
  REQUIRE(pf2.ideal.size() == pf.ideal.size());
  REQUIRE(pf2.subideal.size() == pf.subideal.size());

  auto ring = make_ring(PrimeField(101), pf.vars);
  const auto order = MonomialOrder::grevlex();
  for (std::size_t i = 0; i < pf.ideal.size(); ++i)
    CHECK(poly_to_string(ring, eval_expr(ring, pf.ideal[i], order)) ==
          poly_to_string(ring, eval_expr(ring, pf2.ideal[i], order)));
  for (std::size_t i = 0; i < pf.subideal.size(); ++i)
    CHECK(poly_to_string(ring, eval_expr(ring, pf.subideal[i], order)) ==
          poly_to_string(ring, eval_expr(ring, pf2.subideal[i], order)));

  // printing is idempotent once canonicalized
  CHECK(problem_to_text(pf2) == printed);
}

TEST_CASE("big reduction numbers of the deformation-sensitive pair") {
  auto file = write_temp("pair.txt", kQuadricPair);
  auto initial = write_temp("pair_ini.txt", kQuadricLexInitial);

  auto r1 = run({"brnum", file, "--mode", "symbolic"});
  REQUIRE(r1.code == 0);
  auto j1 = Json::parse(r1.out);
  CHECK(j1["schema"] == "reduktor/1");
  CHECK(j1["results"]["br"] == 2);

  auto r2 = run({"brnum", initial, "--mode", "symbolic"});
  REQUIRE(r2.code == 0);
  auto j2 = Json::parse(r2.out);
  CHECK(j2["results"]["br"] == 3);

  // the degeneration strictly increases the big reduction number here
  CHECK(j1["results"]["br"].get<int>() < j2["results"]["br"].get<int>());

  SUBCASE("byte determinism across reruns") {
    auto again = run({"brnum", file, "--mode", "symbolic"});
    CHECK(again.out == r1.out);
    CHECK(again.code == r1.code);
  }
}

TEST_CASE("spectrum of the running monomial example") {
  auto file = write_temp("curve.txt", kMonomialCurve);
  auto r = run({"spectrum", file});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["results"]["spectrum"] == Json::array({1, 2, 4}));
  CHECK(j["results"]["r"] == 1);
  CHECK(j["results"]["br"] == 4);
  CHECK(j["results"]["exact"] == true);
  CHECK(j["results"]["mode"] == "symbolic");

  SUBCASE("pretty mode renders a table") {
    auto p = run({"spectrum", file, "--pretty"});
    REQUIRE(p.code == 0);
    CHECK(p.out.find("spectrum: [1, 2, 4]") != std::string::npos);
    CHECK(p.out.find('{') == std::string::npos);
  }

  SUBCASE("explicit strata through rq") {
    auto probe = [&](const std::string& alpha) {
      return Json::parse(run({"rq", file, "--alpha", alpha}).out);
    };
    CHECK(probe("1,1,1")["results"]["r"] == 1);
    CHECK(probe("0,1,1")["results"]["r"] == 2);
    CHECK(probe("0,0,1")["results"]["r"] == 4);
    auto miss = probe("1,1,0");
    CHECK(miss["results"]["is_reduction"] == false);
    CHECK(miss["results"]["r"].is_null());

    auto noe = Json::parse(run({"noether", file, "--alpha", "1,1,0"}).out);
    CHECK(noe["results"]["noether"] == false);
  }
}

TEST_CASE("reduction number methods agree") {
  auto file = write_temp("curve2.txt", kMonomialCurve);
  auto r = run({"rnum", file, "--method", "both", "--seed", "11"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["results"]["r"] == 1);
  CHECK(j["results"]["agree"] == true);
  CHECK(j["results"]["r_matrix"] == j["results"]["r_subst"]);
  CHECK(j["seed"] == 11);
}

TEST_CASE("initial ideals and gin through the command surface") {
  auto file = write_temp("pair3.txt", kQuadricPair);

  auto lex = Json::parse(
      run({"ini", file, "--order", "lex", "--vasconcelos", "--seed", "5"})
          .out);
  CHECK(lex["results"]["initial"] ==
        Json::array({"x*y^2", "x*z", "x^2", "y^4"}));
  CHECK(lex["results"]["vasconcelos"]["holds"] == true);
  CHECK(lex["results"]["vasconcelos"]["r_source"] == 2);
  CHECK(lex["results"]["vasconcelos"]["r_initial"] == 3);

  auto weighted = Json::parse(
      run({"ini", file, "--order", "weight:3,1,1"}).out);
  CHECK(weighted["results"]["initial"] == lex["results"]["initial"]);

  // spaces around the entries are fine
  auto spaced = Json::parse(
      run({"ini", file, "--order", "weight: 3, 1, 1"}).out);
  CHECK(spaced["results"]["initial"] == lex["results"]["initial"]);

  auto g5 = Json::parse(run({"gin", file, "--seed", "5"}).out);
  auto g9 = Json::parse(run({"gin", file, "--seed", "9"}).out);
  CHECK(g5["results"]["gin"] == g9["results"]["gin"]);

  SUBCASE("the file's own order directive is honored") {
    auto ordered = write_temp(
        "pair_ordered.txt",
        "field 32003\nvars x, y, z\norder lex\nideal x^2, x*z + y^2\n");
    auto j = Json::parse(run({"ini", ordered}).out);
    CHECK(j["results"]["order"] == "lex");
    CHECK(j["results"]["initial"] == lex["results"]["initial"]);
  }
}

TEST_CASE("core command reports the full sandwich") {
  auto file = write_temp("pinch.txt", kPinchPoint);
  auto r = run({"core", file, "--witness", "U*W", "--seed", "3"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  const auto& res = j["results"];
  CHECK(res["spread"] == 1);
  CHECK(res["big_reduction"] == 1);
  CHECK(res["fiber_kernel"] == Json::array({"y1^2 + y2^2"}));
  CHECK(res["testing_ideal"] == Json::array({"u1^2 + u2^2"}));
  CHECK(res["power"] == res["middle"]);
  CHECK(res["middle"] == res["sampled_core"]);
  CHECK(res["power_in_middle"] == true);
  CHECK(res["middle_equals_sampled"] == true);
  CHECK(res["stabilized"] == true);
  CHECK(res["witness"]["member"] == true);
  CHECK(res["witness"]["certificate"] == "u1");

  SUBCASE("--subideal overrides and refutations are decisive") {
    auto plain = write_temp("pinch_plain.txt",
                            "field 32003\nvars U, V, W\n"
                            "ideal U^2 + V^2, V*W\n");
    auto w = Json::parse(run({"core", plain, "--subideal", "U, V",
                              "--witness", "U"})
                             .out);
    CHECK(w["results"]["witness"]["member"] == false);
    CHECK(w["results"]["witness"]["certificate"].is_null());
  }
}

TEST_CASE("corpus checks hold and are reproducible") {
  auto a1 = run({"corpus", "--count", "8", "--check", "agreement", "--seed",
                 "7"});
  REQUIRE(a1.code == 0);
  auto j = Json::parse(a1.out);
  CHECK(j["results"]["violations"] == 0);
  CHECK(j["results"]["instances"].size() == 8);
  for (const auto& row : j["results"]["instances"])
    CHECK(row["agree"] == true);

  auto a2 = run({"corpus", "--count", "8", "--check", "agreement", "--seed",
                 "7"});
  CHECK(a2.out == a1.out);

  auto v = Json::parse(run({"corpus", "--count", "6", "--check",
                            "vasconcelos", "--seed", "3"})
                           .out);
  CHECK(v["results"]["violations"] == 0);
  for (const auto& row : v["results"]["instances"])
    for (const auto& c : row["checks"])
      CHECK(c["holds"] == true);

  SUBCASE("profiles keep their structural promises") {
    auto m = Json::parse(run({"corpus", "--count", "4", "--check",
                              "agreement", "--seed", "2", "--profile",
                              "monomial"})
                             .out);
    for (const auto& row : m["results"]["instances"]) {
      CHECK(row["profile"] == "monomial");
      for (const auto& gen : row["ideal"]) {
        auto s = gen.get<std::string>();
        CHECK(s.find('+') == std::string::npos);
        CHECK(s.find('-') == std::string::npos);
      }
    }
    auto ci = Json::parse(run({"corpus", "--count", "4", "--check",
                               "agreement", "--seed", "2", "--profile",
                               "complete-intersection"})
                              .out);
    for (const auto& row : ci["results"]["instances"])
      CHECK(row["codim_ok"] == true);
  }

  SUBCASE("count zero is an empty report") {
    auto z = Json::parse(run({"corpus", "--count", "0"}).out);
    CHECK(z["results"]["violations"] == 0);
    CHECK(z["results"]["instances"].empty());
  }
}

TEST_CASE("seed resolution order") {
  setenv("REDUKTOR_SEED", "123", 1);
  auto env = Json::parse(run({"corpus", "--count", "1"}).out);
  CHECK(env["seed"] == 123);
  auto flag = Json::parse(run({"corpus", "--count", "1", "--seed", "9"}).out);
  CHECK(flag["seed"] == 9);
  setenv("REDUKTOR_SEED", "not-a-number", 1);
  CHECK(run({"corpus", "--count", "1"}).code == 2);
  unsetenv("REDUKTOR_SEED");
  auto bare = Json::parse(run({"corpus", "--count", "1"}).out);
  CHECK(bare["seed"] == 1);
}

TEST_CASE("rational coefficients stay exact") {
  auto file = write_temp("rat.txt", "field 0\nvars x, y\nideal x^2\n");
  auto r = run({"rnum", file, "--method", "matrix", "--trials", "1"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["inputs"]["field"] == 0);
  CHECK(j["results"]["r"] == 1);
  REQUIRE(!j["warnings"].empty());
  CHECK(j["warnings"][0].get<std::string>().find("rational") !=
        std::string::npos);
}

TEST_CASE("exit codes separate failure classes") {
  SUBCASE("usage errors") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"rnum"}).code == 2);  // missing file
    CHECK(run({"rnum", "/nonexistent/path/x.txt"}).code == 2);
  }

  SUBCASE("malformed problem files carry positions") {
    auto bad = write_temp("bad.txt", "vars x\nideal x + + y\n");
    auto r = run({"rnum", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2, column 11") != std::string::npos);
  }

  SUBCASE("semantic rejections") {
    auto inhom = write_temp("inhom.txt", "vars x\nideal x^2 + x\n");
    CHECK(run({"rnum", inhom}).code == 2);
    auto constant = write_temp("const.txt", "vars x\nideal x^0\n");
    CHECK(run({"rnum", constant}).code == 2);
    auto composite = write_temp("composite.txt", "field 6\nvars x\nideal x\n");
    CHECK(run({"rnum", composite}).code == 2);
    auto file = write_temp("curve3.txt", kMonomialCurve);
    CHECK(run({"rq", file, "--alpha", "1,2"}).code == 2);
  }

  SUBCASE("resource budgets exit with 3") {
    auto wide = write_temp("wide.txt",
                           "field 32003\nvars x, y, z\nsubideal x, y, z\n");
    auto r = run({"core", wide});
    CHECK(r.code == 3);
    CHECK(r.err.find("budget") != std::string::npos);
  }
}
