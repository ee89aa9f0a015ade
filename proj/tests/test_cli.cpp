#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "minpaths/cli.hpp"

using minpaths::run_cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "minpaths");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST_CASE("chain piped into enumerate") {
  Run gen = run({"gen", "chain", "--n", "4", "--k", "2"});
  REQUIRE(gen.code == 0);
  Run e = run({"enumerate", "-", "--source", "0", "--dest", "3"}, gen.out);
  REQUIRE(e.code == 0);
  auto rows = lines(e.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "# schema=1");
  CHECK(rows[1] == "w0,w1,witnesses");
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 10);

  Run oracle = run({"enumerate", "--source", "0", "--dest", "3", "--method", "oracle"}, gen.out);
  CHECK(oracle.out == e.out);

  Run all = run({"enumerate", "--source", "0", "--dest", "3", "--mode", "all-minimal"}, gen.out);
  CHECK(all.code == 0);
  CHECK(lines(all.out).size() == 10);
}

TEST_CASE("witness output") {
  auto dir = std::filesystem::temp_directory_path() / "minpaths_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "w.jsonl").string();
  Run gen = run({"gen", "theorem2", "--n", "3"});
  Run e = run({"enumerate", "--source", "0", "--dest", "2", "--mode", "all-minimal",
               "--witnesses", path},
              gen.out);
  REQUIRE(e.code == 0);
  std::ifstream f(path);
  std::size_t count = 0;
  for (std::string line; std::getline(f, line);) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["source"] == 0);
    CHECK(j["target"] == 2);
    CHECK(j["weight"].size() == 3);
    ++count;
  }
  // 3 direct + 9 two-hop routes.
  CHECK(count == 12);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bounds") {
  Run text = run({"bounds", "--n", "4", "--k", "3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("48") != std::string::npos);
  Run csv = run({"bounds", "--n", "4", "--k", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("# schema=1\n", 0) == 0);
  CHECK(csv.out.find("26") != std::string::npos);
  CHECK(run({"bounds", "--n", "1", "--k", "2"}).code == 2);
  CHECK(run({"bounds", "--n", "4", "--k", "2", "--format", "xml"}).code == 1);
}

TEST_CASE("unreachable destination gives an empty table") {
  Run e = run({"enumerate", "--source", "1", "--dest", "0"}, "2 1\n0 1 0 1\n");
  CHECK(e.code == 0);
  CHECK(lines(e.out).size() == 2);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"enumerate", "--source", "0"}, "2 1\n0 1 0 1\n").code == 1);
  CHECK(run({"--help"}).code == 0);

  Run bad = run({"enumerate", "--source", "0", "--dest", "1"}, "2 1\n0 1 0 -1\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"enumerate", "--source", "0", "--dest", "5"}, "2 1\n0 1 0 1\n").code == 2);
  CHECK(run({"enumerate", "missing-file.txt", "--source", "0", "--dest", "1"}).code == 2);
  CHECK(run({"gen", "chain", "--n", "3", "--k", "2", "--rule", "explicit", "--weights",
             "1"}).code == 2);
}

TEST_CASE("colour gaps warn but enumerate") {
  Run e = run({"enumerate", "--source", "0", "--dest", "1"}, "2 3\n0 1 0 1\n0 1 2 2\n");
  CHECK(e.code == 0);
  CHECK(e.err.find("warning") != std::string::npos);
  CHECK(lines(e.out).size() == 4);
}

TEST_CASE("canonicalize round trip") {
  Run c = run({"canonicalize"}, "2 2\n0 1 0 5\n0 1 1 2\n");
  REQUIRE(c.code == 0);
  CHECK(c.out.find("1 0 0 10") != std::string::npos);
  CHECK(c.out.find("1 0 1 10") != std::string::npos);
  Run again = run({"canonicalize"}, c.out);
  CHECK(again.code == 0);
}

TEST_CASE("check reports compliance") {
  Run gen = run({"gen", "chain", "--n", "4", "--k", "2"});
  Run c = run({"check", "--source", "0", "--dest", "3"}, gen.out);
  CHECK(c.code == 0);
  CHECK(c.out.find("8") != std::string::npos);
}

TEST_CASE("experiment and delta") {
  Run e = run({"experiment", "--n", "4", "--trials", "50", "--seed", "1"});
  REQUIRE(e.code == 0);
  auto rows = lines(e.out);
  CHECK(rows.size() == 52);
  CHECK(rows[1] == "trial,count,r_tot,bound_value");
  auto summary = nlohmann::json::parse(e.err);
  CHECK(summary["trials"] == 50);
  CHECK(summary.contains("mean_count"));
  CHECK(run({"experiment", "--n", "4", "--trials", "50", "--seed", "1"}).out == e.out);

  std::string graph = "3 2\n0 1 0 1\n1 2 0 1\n0 2 0 3\n0 1 1 1\n1 2 1 1\n0 2 1 3\n";
  Run d = run({"delta", "--source", "0", "--dest", "2", "--r-grid", "0,0.5,1,1.5"}, graph);
  REQUIRE(d.code == 0);
  auto table = lines(d.out);
  REQUIRE(table.size() == 6);
  CHECK(table[2].rfind("0,1,", 0) == 0);
  Run points = run({"delta", "--source", "0", "--dest", "2", "--points", "4"}, graph);
  CHECK(points.out == d.out);
  CHECK(run({"delta", "--source", "0", "--dest", "2", "--r-grid", "2"}, graph).code == 2);
}

TEST_CASE("generators are deterministic") {
  std::vector<std::string> args{"gen", "random", "--n", "5", "--k", "3", "--density", "0.7",
                                "--seed", "17"};
  CHECK(run(args).out == run(args).out);
  Run x = run({"gen", "extremal", "--attempts", "50", "--seed", "3"});
  CHECK(x.code == 0);
  CHECK(x.out == run({"gen", "extremal", "--attempts", "50", "--seed", "3"}).out);
  CHECK(run({"--scale-digits", "3", "gen", "intro", "--which", "three", "--weights",
             "1,1,3,1,1,3"}).code == 0);
}
