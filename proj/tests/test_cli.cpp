#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// End-to-end checks of the CLI binary. CLI_BIN is injected by the build.

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("plasmon subcommand") {
  const auto r = run("plasmon --lambda 0.16666666666666666");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("lambda,k") == 0);                 // CSV header mandatory
  CHECK(r.out.find("-1.9999999999999998") != std::string::npos);
}

TEST_CASE("tune subcommand and range failure") {
  const auto ok = run("tune --n 1 --m 0 --target 0.3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("L_star,achieved_lambda,residual") == 0);
  const auto bad = run("tune --n 1 --m 1 --target 0.4");
  CHECK(bad.exit_code != 0);
}

TEST_CASE("numeric parse errors are fatal") {
  CHECK(run("tune --n 1 --m 0 --target zebra").exit_code != 0);
  CHECK(run("prolate-eigs --L 2.0 --nmax x").exit_code != 0);
  CHECK(run("no-such-command").exit_code != 0);
  CHECK(run("limit-symbol --which bogus --xi-max 1 --steps 2").exit_code != 0);
}

TEST_CASE("prolate-eigs emits one row per mode") {
  const auto r = run("prolate-eigs --R 2 --nmax 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,m,lambda") == 0);
  int rows = -1;   // minus the header
  for (char c : r.out)
    if (c == '\n') ++rows;
  CHECK(rows == 2 + 3);   // (1,0),(1,1),(2,0),(2,1),(2,2)
}

TEST_CASE("sphere-check passes at N = 200") {
  const auto r = run("sphere-check --N 200");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,eigenvalue,reference,abs_error") == 0);
}

TEST_CASE("limit-symbol CSV") {
  const auto r = run("limit-symbol --which l0 --xi-max 1 --steps 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("xi,symbol") == 0);
  CHECK(r.out.find("\n0,0.5") != std::string::npos);
}

TEST_CASE("determinism: identical command, identical bytes") {
  const auto a = run("half-property --L 1.5 --nmax 6");
  const auto b = run("half-property --L 1.5 --nmax 6");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("discretize cache: hit returns the stored payload byte-for-byte") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "npspec-cli-test-cache";
  fs::remove_all(dir);
  setenv("NPSPEC_CACHE_DIR", dir.c_str(), 1);
  const std::string cmd = "discretize --family prolate --R 2 --N 64";
  const auto first = run(cmd);
  CHECK(first.exit_code == 0);
  CHECK(fs::exists(dir));
  int files = 0;
  for (auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  CHECK(files == 1);
  const auto second = run(cmd);
  CHECK(second.out == first.out);
  // a different key writes a second record
  run("discretize --family prolate --R 3 --N 64");
  files = 0;
  for (auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  CHECK(files == 2);
  unsetenv("NPSPEC_CACHE_DIR");
  fs::remove_all(dir);
}

TEST_CASE("config file overrides defaults and rejects junk") {
  namespace fs = std::filesystem;
  const fs::path cfg = fs::temp_directory_path() / "npspec-test.cfg";
  {
    std::ofstream out(cfg);
    out << "# comment\ndefault_N = 48\neps = 0.05\n";
  }
  const auto ok = run("--config " + cfg.string() +
                      " density-scan --family prolate --r-list 2 --lambda-grid 0.4 --eps 0.2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"N\": 48") != std::string::npos);

  {
    std::ofstream out(cfg);
    out << "no_such_key = 1\n";
  }
  CHECK(run("--config " + cfg.string() + " plasmon --lambda 0.1").exit_code != 0);
  fs::remove(cfg);
}

TEST_CASE("density-scan coverage flag and exit code") {
  // prolate family cannot cover negative targets: exit 3
  const auto r = run("density-scan --family prolate --r-list 2 --lambda-grid -0.3 --eps 0.02 --N 64");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("\"all_covered\": false") != std::string::npos);
}

TEST_CASE("quasimode CSV over an R list") {
  const auto r = run("quasimode --family flat --lambda -0.3 --sigma 0.3 --r-list 50,100");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("R,residual,sidewall") == 0);
  int rows = -1;
  for (char c : r.out)
    if (c == '\n') ++rows;
  CHECK(rows == 2);
}
