#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include "doctest.h"
#include "dmimo/schemes.hpp"
#include "sweep.hpp"

using namespace dmimo;
using namespace dmimo::cli;

namespace {

constexpr double inf = kUnlimited;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DMIMO_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture_cli(const std::string& args) {
  const std::string cmd = std::string(DMIMO_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("dmimo_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

SweepGrid single_point() {
  return SweepGrid{{0.6}, {10.0}, {inf}, {inf}, {kAllSchemes.begin(), kAllSchemes.end()}, false};
}

}  // namespace

TEST_CASE("axis parsing") {
  CHECK(parse_axis("1,2,3", false) == std::vector<double>{1, 2, 3});
  const auto range = parse_axis("0:1:40", false);
  CHECK(range.size() == 41);
  CHECK(range.back() == 40.0);
  CHECK(parse_axis("0:0.1:0.3", false).size() == 4);
  CHECK(std::isinf(parse_axis("inf", true)[0]));
  CHECK_THROWS_AS(parse_axis("inf", false), ValidationError);
  CHECK_THROWS_AS(parse_axis("abc", false), ValidationError);
  CHECK_THROWS_AS(parse_axis("1:0:3", false), ValidationError);
  CHECK_THROWS_AS(parse_axis("", false), ValidationError);

  bool all = false;
  CHECK(parse_scheme_list("all", &all).size() == 9);
  CHECK(all);
  CHECK(parse_scheme_list("im,qw-dc", &all) == std::vector<Scheme>{Scheme::IM, Scheme::QW_DC});
  CHECK_FALSE(all);
  CHECK_THROWS_AS(parse_scheme_list("IM,nope"), ValidationError);
}

TEST_CASE("dB conversion") {
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(db_to_linear(20.0) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("single point with unlimited links yields nine rows") {
  const auto rows = run_sweep(single_point());
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].scheme == kAllSchemes[i]);
  CHECK(rows[1].rate == doctest::Approx(std::log2(12.0)));
}

TEST_CASE("validation") {
  auto grid = single_point();
  grid.schemes.clear();
  CHECK_THROWS_AS(run_sweep(grid), ValidationError);

  grid = single_point();
  grid.alpha2_values = {1.2};
  CHECK_THROWS_AS(run_sweep(grid), ValidationError);

  grid = single_point();
  grid.cprime_values = {4.0};
  grid.schemes = {Scheme::IM};
  CHECK_THROWS_WITH_AS(run_sweep(grid), doctest::Contains("--cprime inf"), ValidationError);

  grid = single_point();
  grid.alpha2_values = {1.0};
  grid.schemes = {Scheme::QW};
  CHECK_THROWS_WITH_AS(run_sweep(grid), doctest::Contains("1/(1-alpha^2)"), ValidationError);

  // "all" skips what does not apply instead of failing
  grid = single_point();
  grid.c_values = {4.0};
  grid.cprime_values = {4.0};
  grid.skip_inapplicable = true;
  CHECK(run_sweep(grid).size() == 5);
}

TEST_CASE("row order is deterministic across thread counts") {
  SweepGrid grid{{0.0, 0.6, 0.3}, {0.0, 20.0, 10.0}, {4.0, inf}, {inf, 2.0},
                 {kAllSchemes.begin(), kAllSchemes.end()}, true};
  const auto one = run_sweep(grid, 1);
  const auto many = run_sweep(grid, 7);
  CHECK(one == many);
  for (std::size_t i = 1; i < one.size(); ++i) {
    const auto& a = one[i - 1];
    const auto& b = one[i];
    CHECK(std::tie(a.alpha2, a.p_db, a.c, a.cprime, a.scheme) <
          std::tie(b.alpha2, b.p_db, b.c, b.cprime, b.scheme));
  }
  std::ostringstream x, y;
  write_csv(x, one);
  write_csv(y, many);
  CHECK(x.str() == y.str());
}

TEST_CASE("JSON round trip is exact") {
  SweepGrid grid{{0.3, 0.6}, {0.0, 13.0}, {4.0, inf}, {3.0, inf},
                 {kAllSchemes.begin(), kAllSchemes.end()}, true};
  const auto rows = run_sweep(grid);
  std::stringstream ss;
  write_json(ss, rows);
  CHECK(read_json(ss) == rows);
}

TEST_CASE("CSV formatting") {
  CHECK(format_number(inf) == "inf");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(std::log2(12.0)) == "3.58496250072");
  std::ostringstream os;
  write_csv(os, run_sweep(single_point()));
  const std::string text = os.str();
  CHECK(text.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(text.find("\n0.6,10,inf,inf,IM,3.58496250072,") != std::string::npos);
}

TEST_CASE("figure2 dataset properties") {
  const auto rows = figure2_rows();
  CHECK(rows.size() == 41 * 9);

  std::map<std::tuple<double, Scheme>, double> rate;
  for (const auto& r : rows) rate[{r.p_db, r.scheme}] = r.rate;
  const auto spec = ChannelSpec::from_alpha2(0.6);

  for (int db = 0; db <= 40; ++db) {
    const double p = db_to_linear(db);
    const double ub = upper_bound(spec, {p, 4.0, 4.0}).rate;
    for (const auto& r : rows) {
      if (r.p_db == db) CHECK(r.rate <= ub + 1e-9);
    }
    if (rate_nc(spec, p) >= 4.0) CHECK(rate[{double(db), Scheme::IM}] == 4.0);
    else CHECK(rate[{double(db), Scheme::IM}] < 4.0);
    // DC beats EC except at the lowest SNRs, where it is marginally worse
    if (db >= 3) CHECK(rate[{double(db), Scheme::DC}] >= rate[{double(db), Scheme::EC}]);
  }
  CHECK(rate[{0.0, Scheme::DC}] < rate[{0.0, Scheme::EC}]);
  CHECK(rate[{40.0, Scheme::DC}] - rate[{40.0, Scheme::EC}] > 0.2);

  const std::string readme = figure2_readme();
  CHECK(readme.find("369 rows") != std::string::npos);
}

TEST_CASE("CLI: single-point evaluation") {
  const auto out =
      capture_cli("--alpha2 0.6 --snr-db 10 --c inf --cprime inf --scheme IM");
  CHECK(out.find("IM,3.58496250072") != std::string::npos);
  CHECK(capture_cli("--alpha2 0 --snr-db 0 --scheme UB").find("UB,1,") != std::string::npos);
  CHECK(capture_cli("--alpha2 0.6 --snr-db 20 --c 10 --cprime 10 --scheme UB")
            .find("UB,6.67948009951,6.67948009951,true") != std::string::npos);
}

TEST_CASE("CLI: exit codes") {
  CHECK(run_cli("--alpha2 0.6 --snr-db 10 --scheme all") == 0);
  CHECK(run_cli("--alpha2 1.5 --snr-db 10 --scheme UB") == 2);
  CHECK(run_cli("--alpha2 0.6 --snr-db 10 --scheme bogus") == 2);
  CHECK(run_cli("--alpha2 1 --snr-db 10 --scheme QW") == 2);
  CHECK(run_cli("--alpha2 0.6 --snr-db 10 --cprime 4 --scheme IM") == 2);
  CHECK(run_cli("--alpha2 0.6 --snr-db 10 --format xml") == 2);
  CHECK(run_cli("--snr-db 10") == 2);
  CHECK(run_cli("sweep --alpha2 0.6 --snr-db 10") == 2);
  CHECK(run_cli("sweep --alpha2 0.6 --snr-db 10 --out /nonexistent/dir/x.csv") == 3);
  CHECK(run_cli("figure2 --out /proc/no_such_dir") == 3);
}

TEST_CASE("CLI: sweep and figure2 output is byte-identical across runs") {
  const auto dir = scratch_dir("determinism");
  const std::string args = "sweep --alpha2 0,0.6 --snr-db 0:5:20 --c 4,inf --cprime 4,inf --scheme all --out ";
  REQUIRE(run_cli(args + (dir / "a.csv").string()) == 0);
  REQUIRE(run_cli(args + (dir / "b.csv").string()) == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));

  REQUIRE(run_cli(args + (dir / "a.json").string() + " --format json") == 0);
  std::ifstream json(dir / "a.json");
  const auto rows = read_json(json);
  // per (alpha2, P): 5 at (4,4), 7 at (4,inf), 7 at (inf,4), 9 at (inf,inf)
  CHECK(rows.size() == 2 * 5 * 28);

  REQUIRE(run_cli("figure2 --out " + (dir / "f1").string()) == 0);
  REQUIRE(run_cli("figure2 --out " + (dir / "f2").string()) == 0);
  CHECK(slurp(dir / "f1" / "figure2.csv") == slurp(dir / "f2" / "figure2.csv"));
  CHECK(slurp(dir / "f1" / "README.md") == figure2_readme());
  std::filesystem::remove_all(dir);
}
