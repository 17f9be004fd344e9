#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>

#include "asdimlab/cli.hpp"

using namespace asdim;

namespace {

RunResult run(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> args;
  for (std::string w; in >> w;) args.push_back(w);
  return run_cli(args);
}

/// Values of `key` in section order.
std::vector<std::string> values(const std::string& report, const std::string& key) {
  std::vector<std::string> out;
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + "=", 0) == 0) out.push_back(line.substr(key.size() + 1));
  return out;
}

}  // namespace

TEST_CASE("cover on the broom") {
  const auto r = run("cover --space broom:120 --r 1 --ell 0");
  CHECK(r.exit_code == kExitOk);
  const auto mult = values(r.out, "max_mult");
  REQUIRE(mult.size() == 1);
  CHECK(std::stoi(mult[0]) <= 2);
  CHECK(values(r.out, "observed_D") == std::vector<std::string>{"1"});
  CHECK(values(r.out, "asdim_upper") == std::vector<std::string>{"1"});
  CHECK(values(r.out, "premises_verified") == std::vector<std::string>{"y"});
  CHECK(r.out.find("annulus n=12 ") != std::string::npos);
}

TEST_CASE("calculator output") {
  const auto r = run("asdim --surface 0,6");
  CHECK(r.exit_code == kExitOk);
  CHECK(r.out.find("asdim Mod(S_{0,6}) : lower=3 upper=3 exact=y") != std::string::npos);
  CHECK(r.out.find("provenance ") != std::string::npos);
  CHECK(run("asdim --surface 3,0").out.find("upper=unknown") != std::string::npos);
  CHECK(run("asdim --braid 2").exit_code == kExitUsage);
  CHECK(run("asdim --artin affine-A,4").out.find("lower=3 upper=3 exact=y") != std::string::npos);
  CHECK(run("asdim").exit_code == kExitUsage);
}

TEST_CASE("property B on the grid is a measurement") {
  const auto r = run("propb --space grid:8 --ell 0 --rmax 3");
  CHECK(r.exit_code == kExitOk);
  CHECK(values(r.out, "k_source") == std::vector<std::string>{"2delta"});
  CHECK(std::stoull(values(r.out, "observed_D").at(0)) > 1);
  const auto strict = run("propb --space grid:8 --ell 0 --k 0 --rmax 3");
  CHECK(strict.exit_code == kExitOk);
  CHECK(values(strict.out, "clause") == std::vector<std::string>{"fails"});
}

TEST_CASE("a1 pipeline") {
  const auto ok = pipeline_a1("broom:400", 1);
  CHECK(ok.exit_code == kExitOk);
  CHECK(values(ok.out, "all_pass") == std::vector<std::string>{"y"});
  CHECK(values(ok.out, "variation_bound") == std::vector<std::string>{"25/1"});
  const auto small = run("a1 --space broom:40 --r 1");
  CHECK(small.exit_code == kExitScope);
  CHECK(small.err.find("scope too small") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  for (const auto* line : {"a1 --space broom:400 --r 1 --seed 3", "delta --space grid:7 --budget 300 --seed 9",
                           "propb --space tree:3,7 --ell 0 --rmax 2 --pair-budget 100 --samples 40 --seed 5"}) {
    const auto a = run(line);
    const auto b = run(line);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == kExitUsage);
  CHECK(run("cover --space broom:10").exit_code == kExitUsage);
  CHECK(run("cover --space moon:3 --r 1 --ell 0").exit_code == kExitUsage);
  CHECK(run("cover --space broom:x --r 1 --ell 0").exit_code == kExitUsage);
  CHECK(run("cover --space grid:6 --r 1 --ell 0").exit_code == kExitUsage);  // ell < 10 delta
  CHECK(run("cover --space broom:10 --r 0 --ell 0").exit_code == kExitUsage);
  CHECK(run("delta --space file:/nonexistent/graph").exit_code == kExitUsage);
  CHECK(run("delta --space broom:4 --family bogus").exit_code == kExitUsage);
  CHECK(run("probe --D 2 --radius 1").exit_code == kExitUsage);
  CHECK(run("probe --space broom:5 --D 2 --radius 1 --center 99").exit_code == kExitUsage);
  CHECK(run("--help").exit_code == kExitOk);
}

TEST_CASE("gen round trip through a file") {
  const auto path = (std::filesystem::temp_directory_path() / "asdimlab_cli_test.graph").string();
  const auto g = run("gen --space farey:4 --labels --out " + path);
  CHECK(g.exit_code == kExitOk);
  const auto direct = run("delta --space farey:4");
  const auto loaded = run("delta --space file:" + path);
  CHECK(loaded.exit_code == kExitOk);
  CHECK(values(direct.out, "delta") == values(loaded.out, "delta"));
  CHECK(values(direct.out, "edges") == values(loaded.out, "edges"));
  const auto text = run("gen --space farey:1 --labels").out;
  CHECK(text.find("# label 0 ") != std::string::npos);
  CHECK(text.find("1/0") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("probes") {
  const auto f = run("probe --family farey --params 25,50 --D 2 --radius 2");
  CHECK(f.out.find("capacity D=2 param=25 card=") != std::string::npos);
  CHECK(values(f.out, "verdict") == std::vector<std::string>{"UNBOUNDED-TREND"});
  const auto t = run("probe --family tree:4 --params 4,5,6 --D 2 --radius 3");
  CHECK(values(t.out, "verdict") == std::vector<std::string>{"BOUNDED"});
  const auto b = run("probe --space broom:10 --D 2 --radius 1 --rays 3");
  CHECK(values(b.out, "points") == std::vector<std::string>{"8"});
  CHECK(values(b.out, "discrete_at_2D") == std::vector<std::string>{"y"});
  CHECK(run("delta --space farey:8").out.find("safe_radius=") != std::string::npos);
}
