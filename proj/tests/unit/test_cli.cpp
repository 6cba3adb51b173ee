#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "hrl/cli/app.hpp"
#include "hrl/cli/parse.hpp"
#include "hrl/cli/report.hpp"
#include "hrl/error.hpp"

using namespace hrl;
using hrl::cli::parse_poly;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::size_t error_position(const std::string& src) {
  try {
    parse_poly(src);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << src);
  return 0;
}

}  // namespace

TEST_CASE("parse_poly grammar") {
  CHECK(parse_poly("-x^2+2x") == RatPoly{0, 2, -1});
  CHECK(parse_poly("x^4-8x^3+21x^2-14x-16") == RatPoly{-16, -14, 21, -8, 1});
  CHECK(parse_poly("((x-1))*(x+1)") == RatPoly{-1, 0, 1});
  CHECK(parse_poly(" 5 x ^ 2 - 1 ") == RatPoly{-1, 0, 5});
  CHECK(parse_poly("1/2x^2") == RatPoly::monomial(Rational(1, 2), 2));
  CHECK(parse_poly("3(x+1)^2") == RatPoly{3, 6, 3});
  CHECK(parse_poly("x(x-1)") == RatPoly{0, -1, 1});
  CHECK(parse_poly("-(x-1)") == RatPoly{1, -1});
  CHECK(parse_poly("2^3") == RatPoly{8});
  CHECK(parse_poly("x^0") == RatPoly{1});
  CHECK(parse_poly("x*-2") == RatPoly{0, -2});
  CHECK(parse_poly("6/8") == RatPoly::constant(Rational(3, 4)));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("") == 0);
  CHECK(error_position("x+") == 2);
  CHECK(error_position("x^-1") == 2);
  CHECK(error_position("x/2") == 1);
  CHECK(error_position("(x+1)/2") == 5);
  CHECK(error_position("1/0") == 2);
  CHECK(error_position("(x+1") == 4);
  CHECK(error_position("y+1") == 0);
  CHECK(error_position("x 2") == 2);
  CHECK(error_position("x^99999") == 2);
  CHECK_THROWS_AS(parse_poly("x^1.5"), ParseError);
  CHECK_THROWS_AS(cli::parse_poly_list("x;;1"), ParseError);
  CHECK(cli::parse_poly_list("x;1;x^2").size() == 3);
}

TEST_CASE("render and parse round-trip") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(1 + i % 7));
    std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
    for (auto& v : c) {
      v = Rational(num(rng), den(rng));
      v.canonicalize();
    }
    const RatPoly p(c);
    CHECK(parse_poly(to_string(p)) == p);
  }
  for (const auto& e : testing::example_pairs()) {
    CHECK(parse_poly(to_string(e.q1)) == e.q1);
    CHECK(parse_poly(to_string(e.q2)) == e.q2);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "--q1", "x-1", "--q2", "x-1"}).code == cli::kValidationFailure);
  const Result shared = run({"check", "--q1", "x-1", "--q2", "x-1"});
  CHECK(shared.err.find("coprime") != std::string::npos);
  CHECK(run({"check", "--q1", "x+", "--q2", "x"}).code == cli::kParseFailure);
  CHECK(run({"check", "--q1", "3", "--q2", "x"}).code == cli::kValidationFailure);
  CHECK(run({"check", "--q1", "x", "--q2", "0"}).code == cli::kValidationFailure);
  CHECK(run({"check", "--q", "x;1;x"}).code == cli::kValidationFailure);
  CHECK(run({"frobnicate"}).code == cli::kParseFailure);
  CHECK(run({"zeros", "--q1", "x", "--q2", "1"}).code == cli::kParseFailure);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"curve", "--q1", "x", "--q2", "1", "--window", "1,0,0,1", "--cloud", "0"}).code == cli::kParseFailure);
}

TEST_CASE("check report") {
  const Result r = run({"check", "--q1", "x^2-2x-5", "--q2", "x^2"});
  REQUIRE(r.code == 0);
  const auto doc = cli::Json::parse(r.out);
  CHECK(doc["schema_version"] == cli::kSchemaVersion);
  CHECK(doc["verdict"]["overall"] == "pass");
  CHECK(doc["support_text"] == "[-2.23606797749979, -1] ∪ [2.23606797749979, 5]");
  CHECK(doc["support"][0]["lo"]["defining"] == "x^2-5");
  CHECK(doc["support"][1]["hi"]["exact"] == "5");
  CHECK(doc["input"]["q1"] == "x^2-2x-5");
  CHECK_FALSE(doc.contains("timings"));

  const Result e2 = run({"check", "--q1", "2x^2-8x+6", "--q2", "-5x^3+37x^2-43x-21"});
  const auto d2 = cli::Json::parse(e2.out);
  const auto& cond_d = d2["verdict"]["conditions"][3];
  CHECK(cond_d["id"] == "D");
  CHECK(cond_d["status"] == "fail");
  CHECK(std::fabs(cond_d["witness"]["value_estimate"].get<double>() - 3.50783) < 1e-4);
}

TEST_CASE("subcommands produce documents") {
  const Result z = run({"zeros", "--q1", "x^2-2x-5", "--q2", "x^2", "-n", "6"});
  REQUIRE(z.code == 0);
  const auto zd = cli::Json::parse(z.out);
  CHECK(zd["count"] == 12);
  CHECK(zd["max_imag_deviation"] == 0.0);
  const Result ze = run({"zeros", "--q1", "x^2-2x-5", "--q2", "x^2", "-n", "6", "--method", "expand"});
  CHECK(cli::Json::parse(ze.out)["count"] == 12);

  const Result g = run({"gen", "--q", "x;1;x^2", "-n", "3"});
  REQUIRE(g.code == 0);
  const auto gd = cli::Json::parse(g.out);
  CHECK(gd["order"] == 3);
  CHECK(gd["sequence"][1]["poly"] == "-x");
  const Result gs = run({"gen", "--q", "x;1;x^2", "-n", "3", "--method", "series"});
  CHECK(cli::Json::parse(gs.out)["sequence"] == gd["sequence"]);

  const Result s = run({"sweep", "--q1", "x^2+1", "--q2", "x^2+6", "--grid", "3"});
  REQUIRE(s.code == 0);
  const auto sd = cli::Json::parse(s.out);
  CHECK(sd["all_real"] == false);
  CHECK(sd["grid"].size() == 3);

  const Result v = run({"verify", "--q1", "x^2-2x-5", "--q2", "x^2", "--n-max", "8"});
  REQUIRE(v.code == 0);
  const auto vd = cli::Json::parse(v.out);
  CHECK(vd["empirically_real"] == true);
  CHECK(vd["consistent"] == true);
  const Result v1 = run({"verify", "--q1", "-x^2+2x", "--q2", "5x^2-1", "--n-max", "8"});
  CHECK(cli::Json::parse(v1.out)["consistent"] == true);

  const Result c = run({"curve", "--q1", "x^2+5x+3", "--q2", "5x^2-1", "--resolution", "64", "--cloud", "5"});
  REQUIRE(c.code == 0);
  CHECK(cli::Json::parse(c.out)["components"][0]["classification"] == "real-axis");
}

TEST_CASE("files are written atomically and identically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hrl_cli_test";
  fs::create_directories(dir);
  const std::string svg = (dir / "c.svg").string(), csv = (dir / "c.csv").string(), js = (dir / "c.json").string();
  const std::vector<std::string> args = {"curve", "--q1", "x^2+1", "--q2", "x^2+6", "--resolution", "96",
                                         "--svg", svg, "--csv", csv, "--json", js};
  REQUIRE(run(args).code == 0);
  const std::string a_svg = slurp(svg), a_csv = slurp(csv), a_js = slurp(js);
  REQUIRE(run(args).code == 0);
  CHECK(a_svg == slurp(svg));
  CHECK(a_csv == slurp(csv));
  CHECK(a_js == slurp(js));
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() != ".tmp");
  fs::remove_all(dir);
}
