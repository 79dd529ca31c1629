#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcubic/primes.hpp"
#include "qcubic/report.hpp"

using namespace qcubic;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QCUBIC_BIN) + " " + args + " 2>/dev/null";
  RunResult r;
  std::FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, sep);) out.push_back(tok);
  return out;
}

}  // namespace

TEST_CASE("count: forced unit-point value through the CLI") {
  const RunResult r = run("count --field -1 --bound 1 --backend oracle");
  REQUIRE(r.status == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == count_report_csv_header(ReportStyle::Count));
  const auto cells = split(lines[1], ',');
  REQUIRE(cells.size() == 7);
  CHECK(cells[0] == "-1");
  CHECK(cells[2] == "oracle");
  CHECK(cells[3] == "16");
}

TEST_CASE("count: sub-unit bound yields zero") {
  const RunResult r = run("count --field -1 --bound 0.5 --backend torsor9");
  REQUIRE(r.status == 0);
  const auto cells = split(split(r.out, '\n')[1], ',');
  CHECK(cells[3] == "0");
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run("count --field -5 --bound 10").status != 0);
  CHECK(run("count --field -1 --bound 10 --backend nonsense").status != 0);
  CHECK(run("compare --field -1 --bounds 100,10").status != 0);
  CHECK(run("constant --field -1 --euler-bound 1").status != 0);
  CHECK(run("definitely-not-a-subcommand").status != 0);
}

TEST_CASE("constant: single-factor Euler product and byte-identical reruns") {
  const RunResult a = run("constant --field -1 --euler-bound 2 --format json");
  REQUIRE(a.status == 0);
  CHECK(a.out.find("\"euler_partial\":0.037109375") != std::string::npos);
  CHECK(a.out.find("\"alpha\":\"1/25920\"") != std::string::npos);

  const RunResult b = run("constant --field -1 --euler-bound 2 --format json");
  CHECK(a.out == b.out);

  const RunResult c = run("constant --field -3 --euler-bound 100000 --format json");
  REQUIRE(c.status == 0);
  CHECK(c.out.find("\"alpha\":\"1/25920\"") != std::string::npos);
}

TEST_CASE("CSV and JSON serializations parse to the same fields") {
  const RunResult csv = run("count --field -2 --bound 20 --format csv");
  const RunResult json = run("count --field -2 --bound 20 --format json");
  REQUIRE(csv.status == 0);
  REQUIRE(json.status == 0);

  const auto lines = split(csv.out, '\n');
  const auto keys = split(lines[0], ',');
  const auto cells = split(lines[1], ',');
  REQUIRE(keys.size() == cells.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == "elapsed_ms") continue;  // timing varies between runs
    std::string quoted_key = "\"" + keys[i] + "\":";
    const auto pos = json.out.find(quoted_key);
    REQUIRE(pos != std::string::npos);
    std::string jval;
    for (std::size_t k = pos + quoted_key.size();
         k < json.out.size() && json.out[k] != ',' && json.out[k] != '}'; ++k)
      jval += json.out[k];
    const std::string want =
        keys[i] == "backend" ? "\"" + cells[i] + "\"" : cells[i];
    CHECK(jval == want);
  }
}

TEST_CASE("compare: counts are non-decreasing and ratios positive") {
  const RunResult r =
      run("compare --field -1 --bounds 10,50,100,200 --backend torsor9");
  REQUIRE(r.status == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() >= 5);
  CHECK(lines[0] == count_report_csv_header(ReportStyle::Compare));
  long long prev = -1;
  for (std::size_t i = 1; i < 5; ++i) {
    const auto cells = split(lines[i], ',');
    REQUIRE(cells.size() == 8);
    const long long count = std::stoll(cells[3]);
    const double ratio = std::stod(cells[5]);
    const double inv_log = std::stod(cells[6]);
    CHECK(count >= prev);
    CHECK(ratio > 0.0);
    CHECK(inv_log > 0.0);
    prev = count;
  }
}

TEST_CASE("primes subcommand writes a cache the library can read back") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qcubic_cli_cache";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const RunResult r =
      run("primes --field -1 --bound 500 --cache-dir " + dir.string());
  REQUIRE(r.status == 0);

  const Field Fi = make_field(-1);
  const auto cached = read_prime_cache(prime_cache_path(dir, Fi), Fi);
  REQUIRE(cached.has_value());
  CHECK(cached->bound == 500);
  CHECK(cached->primes == primes_up_to(Fi, 500));
  fs::remove_all(dir);
}

TEST_CASE("volume subcommand prints the exact rational") {
  const RunResult r = run("volume");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("1/2880") != std::string::npos);
}

TEST_CASE("output flag writes the same report to a file") {
  namespace fs = std::filesystem;
  const fs::path file = fs::temp_directory_path() / "qcubic_out.csv";
  fs::remove(file);
  const RunResult r = run("count --field -1 --bound 5 --output " + file.string());
  REQUIRE(r.status == 0);
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find(count_report_csv_header(ReportStyle::Count)) == 0);
  fs::remove(file);
}
