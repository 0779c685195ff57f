#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rlab/cli.hpp"
#include "rlab/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = rlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kF312 = R"({"breakpoints":[0,0.2,0.5,1],"values":[3,1,2]})";
const std::string kChiQuarter = R"({"breakpoints":[0,0.25,1],"values":[1,0]})";
const std::string kChi35 = R"({"breakpoints":[0,0.3,0.5,1],"values":[0,1,0]})";

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("norm of the quarter indicator") {
  const auto r = run({"norm", "--spec", R"({"kind":"lorentz_pq","p":2,"q":2})", "--fn", kChiQuarter});
  CHECK(r.code == 0);
  CHECK(r.out == "0.5\n");
}

TEST_CASE("norm reads function files") {
  const auto path = std::filesystem::temp_directory_path() / "rlab_cli_chi_quarter.json";
  std::ofstream(path) << kChiQuarter;
  const auto r = run({"norm", "--spec", R"({"kind":"lorentz_pq","p":2,"q":2})", "--fn", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "0.5\n");
  std::filesystem::remove(path);
}

TEST_CASE("grand norm as JSON") {
  const auto r = run({"norm", "--spec", R"({"kind":"grand_lorentz_pq","p":2,"q":2})", "--fn",
                      R"({"breakpoints":[0,1],"values":[1]})", "--format", "json", "--grid", "512"});
  REQUIRE(r.code == 0);
  const auto j = rlab::io::parse(r.out, "out");
  CHECK(j["value"].get<double>() == doctest::Approx(1.0));
  CHECK(j["endpoint_limit"] == true);
  CHECK(j["grid"] == 512);
}

TEST_CASE("rearrange emits the sorted function and round-trips") {
  const auto r = run({"rearrange", "--fn", kF312});
  REQUIRE(r.code == 0);
  const auto f = rlab::io::step_from_json(rlab::io::parse(r.out, "out"));
  CHECK(f == rlab::make_step({0, 0.2, 0.7, 1}, {3, 2, 1}));
  const auto again = run({"rearrange", "--fn", r.out});
  CHECK(again.out == r.out);
}

TEST_CASE("maximal samples") {
  const auto r = run({"maximal", "--fn", kChi35, "--x", "0.2,0.4,0.8"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(rows[1][1] == 1.0);
  CHECK(rows[2][1] == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("embed-probe ratios grow per decade") {
  const auto r = run({"embed-probe", "--p", "2", "--q", "2", "--r", "4", "--s", "4", "--a-list", "1e-1,1e-2,1e-3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# grid=", 0) == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i][3] / rows[i - 1][3] == doctest::Approx(std::pow(10.0, 0.25)).epsilon(0.15));
}

TEST_CASE("embed-check variants") {
  auto r = run({"embed-check", "--condition", "wholds", "--p", "2", "--q", "3"});
  REQUIRE(r.code == 0);
  auto j = rlab::io::parse(r.out, "out");
  CHECK(j["holds"] == true);
  CHECK(j["condition_value"].get<double>() == doctest::Approx(1.0));

  r = run({"embed-check", "--condition", "domination", "--mu", R"({"density":{"breakpoints":[0,0.5,1],"values":[0,1]}})",
           "--nu", R"({"density":{"breakpoints":[0,1],"values":[1]}})"});
  REQUIRE(r.code == 0);
  j = rlab::io::parse(r.out, "out");
  CHECK(j["condition_value"] == "inf");
  CHECK(j["holds"] == false);

  r = run({"embed-check", "--source", R"({"kind":"grand_lebesgue","p":2})", "--target",
           R"({"kind":"grand_lebesgue","p":2})", "--corpus", "5", "--seed", "4", "--grid", "64"});
  REQUIRE(r.code == 0);
  j = rlab::io::parse(r.out, "out");
  CHECK(j["empirical_constant"] == 1.0);
  CHECK(j["seed"] == 4);
  CHECK(j["corpus"] == "corpus-v1");

  r = run({"embed-check", "--condition", "wholds", "--p", "3", "--q", "2"});
  CHECK(r.code == 1);
}

TEST_CASE("eps-profile CSV records the grid and the sup") {
  const auto r = run({"eps-profile", "--fn", R"({"breakpoints":[0,0.01,1],"values":[1,0]})", "--spec",
                      R"({"kind":"grand_lorentz_pq","p":2,"q":2})", "--grid", "256"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# grid=256") != std::string::npos);
  CHECK(r.out.find("# endpoint_limit=false") != std::string::npos);
  CHECK(csv_rows(r.out).size() == 256);
}

TEST_CASE("mollify-sweep columns and determinism") {
  const std::vector<std::string> args{"mollify-sweep", "--fn", kChi35, "--spec",
                                      R"({"kind":"lambda_grand","p":2,"weight":{"power_weight":{"alpha":0}}})",
                                      "--t-list", "0.2,0.1", "--n", "512", "--grid", "128"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("t,err,conv_norm,maximal_norm,ratio\n") != std::string::npos);
  const auto rows = csv_rows(a.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][1] < rows[0][1]);
  CHECK(rows[0][4] <= 1.0);
}

TEST_CASE("output files") {
  const auto path = std::filesystem::temp_directory_path() / "rlab_cli_out.csv";
  const auto r = run({"maximal", "--fn", kChi35, "--samples", "5", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "x,maximal");
  std::filesystem::remove(path);
}

TEST_CASE("exit codes for malformed input") {
  const std::vector<std::vector<std::string>> bad{
      {"norm", "--spec", R"({"kind":"bogus","p":2})", "--fn", kF312},
      {"norm", "--spec", R"({"kind":"lorentz_pq","p":2)", "--fn", kF312},
      {"norm", "--spec", R"({"kind":"lorentz_pq","p":0.5})", "--fn", kF312},
      {"norm", "--spec", R"({"kind":"lorentz_pq","p":2})", "--fn", R"({"breakpoints":[0,1,0.5],"values":[1,1]})"},
      {"norm", "--spec", R"({"kind":"lorentz_pq","p":2})", "--fn", "/nonexistent/f.json"},
      {"norm", "--fn", kF312},
      {"frobnicate"},
      {},
      {"maximal", "--fn", kF312, "--x", "0.1,abc"},
      {"mollify-sweep", "--fn", kF312, "--spec", R"({"kind":"grand_lebesgue","p":2})", "--kernel", R"({"kind":"gauss"})"},
      {"eps-profile", "--fn", kF312, "--spec", R"({"kind":"lorentz_pq","p":2})"},
      {"embed-probe", "--p", "2", "--q", "2", "--r", "1.5", "--s", "4"},
  };
  for (const auto& args : bad) {
    const auto r = run(args);
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mollify-sweep") != std::string::npos);
}
