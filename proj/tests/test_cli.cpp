#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "niche/io.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("nichegraph-cli-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" NICHEGRAPH_BIN "\" " + args + " >\"" + (scratch() / "stdout.txt").string() +
                          "\" 2>\"" + (scratch() / "stderr.txt").string() + "\"";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("witness subcommand") {
  const auto out = scratch() / "w";
  CHECK(run("witness --n 8 --dot --out " + q(out)) == 0);
  for (const char* name : {"witness-n8-points.json", "witness-n8-niche.json", "witness-n8-certificate.json",
                           "witness-n8.dot"}) {
    CHECK(fs::exists(out / name));
  }
  const auto first = slurp(out / "witness-n8-certificate.json");
  CHECK(run("witness --n 8 --dot --out " + q(out)) == 0);
  CHECK(slurp(out / "witness-n8-certificate.json") == first);
  CHECK(niche::io::parse_point_file(slurp(out / "witness-n8-points.json")).size() == 16);

  const auto env_out = scratch() / "env";
  CHECK(run("witness --n 6", "NICHEGRAPH_OUT=" + q(env_out)) == 0);
  CHECK(fs::exists(env_out / "witness-n6-niche.json"));
  CHECK(run("witness --n 5 --out " + q(out)) == 3);

  CHECK(run("witness --n 3 --out " + q(out)) == 2);
  CHECK(run("witness --out " + q(out)) == 2);
}

TEST_CASE("derive and check") {
  const auto pts = scratch() / "pts.json";
  {
    std::ofstream(pts) << R"({"format":"dpo-points/1","points":[{"x":"0","y":"0"},{"x":"1","y":"2"},{"x":"2","y":"1"},{"x":"3","y":"3"}]})";
  }
  const auto g = scratch() / "g.json";
  CHECK(run("derive --input " + q(pts) + " --graph niche --out " + q(g) + " --dot") == 0);
  CHECK(fs::exists(scratch() / "g.dot"));
  const auto parsed = niche::io::parse_graph_file(slurp(g));
  CHECK(parsed.graph.edges().size() == 5);

  CHECK(run("check --input " + q(pts) + " --property interval --graph competition") == 0);
  CHECK(run("check --input " + q(g) + " --property triangle-free") == 1);
  const auto report = nlohmann::json::parse(slurp(scratch() / "stdout.txt"));
  CHECK(report["holds"] == false);
  CHECK(report["certificate"]["triangle"].size() == 3);
  CHECK(run("check --input " + q(pts) + " --property bogus") == 2);
  CHECK(run("derive --input " + q(scratch() / "missing.json") + " --out " + q(g)) == 2);

  const auto w = scratch() / "w8";
  REQUIRE(run("witness --n 8 --out " + q(w)) == 0);
  CHECK(run("check --input " + q(w / "witness-n8-points.json") + " --property interval") == 1);
  const auto hole = nlohmann::json::parse(slurp(scratch() / "stdout.txt"));
  CHECK(hole["certificate"]["hole"].size() >= 4);
  CHECK(run("check --input " + q(w / "witness-n8-niche.json") + " --property chordal") == 1);
}

TEST_CASE("suite and search") {
  const int rc = run("suite --seed 1 --trials 200 --thirds");
  CHECK(rc == 1);  // three-chains trip the staircase check
  const auto a = slurp(scratch() / "stdout.txt");
  CHECK(run("suite --seed 1 --trials 200 --thirds --serial") == rc);
  CHECK(slurp(scratch() / "stdout.txt") == a);

  const auto r1 = scratch() / "s1.jsonl";
  const auto r2 = scratch() / "s2.jsonl";
  CHECK(run("search --seed 3 --trials 500 --out " + q(r1)) == 0);
  CHECK(run("search --seed 3 --trials 500 --serial --out " + q(r2)) == 0);
  CHECK(slurp(r1) == slurp(r2));
  CHECK(slurp(r1).find("\"kind\":\"summary\"") != std::string::npos);
  CHECK(run("search --trials 5 --out " + q(scratch() / "no" / "such" / "dir.jsonl")) == 2);
  CHECK(run("frobnicate") == 2);
}
