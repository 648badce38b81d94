#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "livsic/io.hpp"
#include "livsic/scenario.hpp"
#include "oracles/frozen.hpp"

using namespace livsic;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("livsic_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(LIVSIC_CLI_PATH) + " " + args + " --out " + out.string() + " > " +
                          (out / "console.txt").string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("dimension of the middle-third Cantor set") {
  TempDir dir("dim");
  CHECK(run("run cantor-third dimension", dir.path) == 0);
  const auto report = read_json_file((dir.path / "dimension.json").string());
  REQUIRE(report.size() == 2);
  for (const auto& [side, value] : report.items()) {
    INFO(side);
    const auto d = dimension_from_json(value);
    CHECK_THAT(d.delta, Catch::Matchers::WithinAbs(oracle::bowen_third, 1e-10));
  }
  const auto summary = read_json_file((dir.path / "summary.json").string());
  CHECK(summary["scenario"] == "cantor-third");
  CHECK(summary["exit_code"] == 0);
  REQUIRE(summary["tasks"].size() == 1);
  CHECK(summary["tasks"][0]["task"] == "dimension");
  CHECK(summary["tasks"][0]["status"] == "ok");
  CHECK(summary["tasks"][0]["worst_residual"].get<double>() < 1e-10);
}

TEST_CASE("horseshoe runs the default pipeline") {
  TempDir dir("horseshoe");
  CHECK(run("run horseshoe gibbs synthesize dimension eigenvalues livsic --p-max 8", dir.path) == 0);
  for (const char* f : {"measures.csv", "synthesis_u.csv", "synthesis_s.csv", "eigen_u.csv", "realization_u.csv"})
    CHECK(fs::exists(dir.path / f));
  std::ifstream in(dir.path / "eigen_u.csv");
  const auto rows = read_eigen_csv(in);
  CHECK(rows.size() == 71);
  for (const auto& r : rows) CHECK(r.residual < 1e-9);
}

TEST_CASE("a perturbed solenoid is rejected") {
  TempDir dir("perturbed");
  const auto sc = builtin("golden-anosov");
  auto sigma = solenoid_from_realization(realize(sc, Side::u, sc.gibbs(), 8), sc.sys().boundary);
  for (auto& [key, v] : sigma.values) v *= 1.1;
  write_json_file((dir.path / "sigma.json").string(), to_json(sigma));
  CHECK(run("run golden-anosov solenoid-check", dir.path) == 0);
  CHECK(run("run golden-anosov solenoid-check --solenoid " + (dir.path / "sigma.json").string(), dir.path) == 3);
  std::ifstream in(dir.path / "residuals.csv");
  double worst = 0.0;
  for (const auto& r : read_residuals_csv(in)) worst = std::max(worst, r.residual);
  CHECK(worst > 1e-3);
}

TEST_CASE("usage errors") {
  TempDir dir("errors");
  CHECK(run("run no-such-scenario gibbs", dir.path) == 2);
  CHECK(run("run horseshoe frobnicate", dir.path) == 2);
  CHECK(run("run horseshoe gibbs --depth 17", dir.path) == 2);
  CHECK(run("run horseshoe gibbs --p-max 0", dir.path) == 2);
  CHECK(run("run horseshoe gibbs --format xml", dir.path) != 0);
  CHECK(run("run da-attractor-toy gibbs --tol 1e-30", dir.path) == 3);
  CHECK(run("run horseshoe dual", dir.path) == 4);
  const auto listing = dir.path / "list.txt";
  CHECK(std::system((std::string(LIVSIC_CLI_PATH) + " list > " + listing.string()).c_str()) == 0);
  const auto listed = slurp(listing);
  for (const auto& name : builtin_names()) CHECK(listed.find(name) != std::string::npos);
}

TEST_CASE("output is deterministic") {
  TempDir a("det_a"), b("det_b");
  const std::string args = "run da-attractor-toy gibbs solenoid-check synthesize eigenvalues --depth 6";
  CHECK(run(args, a.path) == 0);
  CHECK(run(args, b.path) == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a.path)) {
    if (e.path().filename() == "console.txt") continue;
    INFO(e.path().filename());
    CHECK(slurp(e.path()) == slurp(b.path / e.path().filename()));
    ++files;
  }
  CHECK(files >= 5);
}

TEST_CASE("json tables") {
  TempDir dir("json");
  CHECK(run("run cantor-third gibbs eigenvalues --format json --p-max 4", dir.path) == 0);
  const auto eig = read_json_file((dir.path / "eigen_u.json").string());
  REQUIRE(eig.is_array());
  CHECK(eig.size() == 8);
  CHECK(eig[0]["period"].is_number_integer());
  CHECK(eig[0]["orbit"].is_string());
  for (const auto& row : eig) CHECK(row["residual"].get<double>() < 1e-9);
  const auto m = read_json_file((dir.path / "measures.json").string());
  CHECK(m.size() > 0);
  CHECK(m[0]["word"].is_string());
}
