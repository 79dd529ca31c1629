// Command-line frontend: point counts on x0^3 = x1 x2 x3 over the nine
// imaginary quadratic fields of class number 1, predicted leading constants,
// and the exact-identity selftest.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qcubic/constant.hpp"
#include "qcubic/counting.hpp"
#include "qcubic/factorization.hpp"
#include "qcubic/field.hpp"
#include "qcubic/moebius_poly.hpp"
#include "qcubic/primes.hpp"
#include "qcubic/report.hpp"
#include "qcubic/torsor.hpp"

namespace {

using namespace qcubic;

struct OutputSink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

long double parse_bound(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long double v = std::stold(s, &pos);
    if (pos == s.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--bound", "not a nonnegative number: " + s);
}

int default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::string cache_dir_from(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("QCUBIC_CACHE_DIR")) return env;
  return {};
}

std::uint64_t run_backend(const Field& F, const std::string& backend,
                          long double bound, int workers) {
  if (backend == "torsor9") return count_torsor9(F, bound, workers);
  if (backend == "oracle") return count_divisor_oracle(F, bound, workers);
  throw CLI::ValidationError("--backend", "unknown backend: " + backend);
}

CountReport make_report(const Field& F, const std::string& backend,
                        long double bound, std::uint64_t euler_bound,
                        int workers) {
  CountReport r;
  r.field_n = F.n;
  r.bound = bound;
  r.backend = backend;
  r.euler_bound = euler_bound;

  const auto t0 = std::chrono::steady_clock::now();
  r.count = run_backend(F, backend, bound, workers);
  const auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  const ConstantBreakdown c = leading_constant(F, euler_bound);
  const long double lg = logl(bound);
  const long double pred = c.c_value * bound * powl(lg, 6);
  if (pred > 0) {
    r.predicted = pred;
    r.ratio = static_cast<long double>(r.count) / pred;
  }
  r.inv_log_bound = lg > 0 ? 1.0L / lg : 0.0L;
  return r;
}

int selftest(const std::string& level) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::printf("[%s] %s\n", ok ? "ok" : "FAIL", name.c_str());
    if (!ok) ++failures;
  };

  check("alpha = 1/25920", alpha_value() == Rational(1, 25920));
  check("polytope volume = 1/2880", polytope_volume() == Rational(1, 2880));

  const Poly a_red = moebius_polynomial_reduced();
  const Poly a_dir = moebius_polynomial_direct();
  const Poly a_ref = poly_mul(poly_pow(Poly{1, -1}, 7), Poly{1, 7, 1});
  Poly a_ref10 = a_ref;
  a_ref10.resize(10, 0);
  check("moebius polynomial: reduced == direct == (1-x)^7 (1+7x+x^2)",
        a_red == a_dir && a_red == a_ref10);

  {
    bool ok = true;
    std::mt19937_64 rng(2026);
    const Field Fi = make_field(-1), F11 = make_field(-11);
    for (const Field* Fp : {&Fi, &F11}) {
      for (int trial = 0; trial < 100 && ok; ++trial) {
        TorsorTuple t;
        // radius 2 keeps the cubed coordinate-0 product within 64 bits
        for (auto& z : t.y) {
          do {
            z = QuadInt{static_cast<std::int64_t>(rng() % 5) - 2,
                        static_cast<std::int64_t>(rng() % 5) - 2};
          } while (is_zero(z));
        }
        const auto x = psi2(*Fp, t);
        const QuadInt lhs = mul(*Fp, mul(*Fp, x[0], x[0]), x[0]);
        const QuadInt rhs = mul(*Fp, mul(*Fp, x[1], x[2]), x[3]);
        ok = ok && lhs == rhs;
      }
    }
    check("cube identity for psi2 on random tuples", ok);
  }

  {
    bool ok = true;
    for (const int n : kAdmissibleFields) {
      const Field F = make_field(n);
      const std::uint64_t expect =
          static_cast<std::uint64_t>(F.w) * static_cast<std::uint64_t>(F.w);
      ok = ok && count_torsor9(F, 1, 1) == expect &&
           count_divisor_oracle(F, 1, 1) == expect;
    }
    check("unit points: N(1) = w^2 for all nine fields, both backends", ok);
  }

  {
    bool ok = true;
    const std::vector<long double> bounds =
        level == "full" ? std::vector<long double>{5, 10, 50, 100, 500}
                        : std::vector<long double>{5, 10, 50};
    for (const int n : kAdmissibleFields) {
      const Field F = make_field(n);
      for (const long double b : bounds)
        ok = ok && count_torsor9(F, b, default_workers()) ==
                       count_divisor_oracle(F, b, default_workers());
    }
    check("backend equality across all fields", ok);
  }

  {
    const Field Fi = make_field(-1), F3 = make_field(-3);
    bool ok = circle_count(Fi, 1) == 4 && circle_count(F3, 1) == 6 &&
              circle_count(Fi, 0.5L) == 0;
    // lattice count vs area within the fitted sqrt error
    for (const int n : kAdmissibleFields) {
      const Field F = make_field(n);
      const long double main1e3 = 2.0L * 3.14159265358979323846L / F.delta() * 1e3L;
      const long double k =
          2.0L * fabsl(static_cast<long double>(circle_count(F, 1e3L)) - main1e3) /
          sqrtl(1e3L);
      const long double main1e5 = 2.0L * 3.14159265358979323846L / F.delta() * 1e5L;
      ok = ok && fabsl(static_cast<long double>(circle_count(F, 1e5L)) - main1e5) <=
                     std::max(k, 1.0L) * sqrtl(1e5L);
    }
    check("circle counts and growth", ok);
  }

  check("euler factor at q=1/2 is 19/512",
        euler_factor(0.5L) == 19.0L / 512.0L);

  {
    const Field Fi = make_field(-1);
    const long double bmax = level == "full" ? 5 : 3;
    bool ok = true;
    for (long double b = 1; b <= bmax; ++b)
      ok = ok && count_moebius_inversion_tiny(Fi, b) == count_torsor9(Fi, b, 1);
    check("small-bound moebius-inversion counter agrees", ok);
  }

  std::printf("%s\n", failures == 0 ? "selftest: all checks passed"
                                    : "selftest: FAILURES");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point counts and predicted constants for the cubic surface "
               "x0^3 = x1 x2 x3 over imaginary quadratic fields"};
  app.require_subcommand(1);

  int field_n = -1;
  std::string bound_str = "100";
  std::string bounds_str;
  std::string backend = "torsor9";
  std::uint64_t euler_bound = 10'000;
  std::string format = "csv";
  std::string output;
  int workers = default_workers();
  std::string cache_dir_flag;
  std::string level = "fast";

  auto add_common = [&](CLI::App* cmd, bool with_backend) {
    cmd->add_option("--field", field_n, "field parameter n (one of the nine)")
        ->check([](const std::string& s) {
          try {
            return is_admissible_field(std::stoi(s))
                       ? std::string{}
                       : std::string{"not a class-number-1 imaginary quadratic field: " + s};
          } catch (...) {
            return std::string{"not an integer: " + s};
          }
        });
    cmd->add_option("--euler-bound", euler_bound,
                    "norm bound for the Euler product");
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", output, "write to this file instead of stdout");
    cmd->add_option("--workers", workers, "worker threads for the counting loops");
    cmd->add_option("--cache-dir", cache_dir_flag,
                    "prime cache directory (or env QCUBIC_CACHE_DIR)");
    if (with_backend)
      cmd->add_option("--backend", backend, "torsor9 or oracle")
          ->check(CLI::IsMember({"torsor9", "oracle"}));
  };

  auto* cmd_count = app.add_subcommand("count", "count points of height <= B");
  add_common(cmd_count, true);
  cmd_count->add_option("--bound", bound_str, "height bound B");

  auto* cmd_constant =
      app.add_subcommand("constant", "predicted leading constant breakdown");
  add_common(cmd_constant, false);

  auto* cmd_compare = app.add_subcommand(
      "compare", "empirical counts against the prediction over several bounds");
  add_common(cmd_compare, true);
  cmd_compare->add_option("--bounds", bounds_str,
                          "comma-separated ascending height bounds");

  auto* cmd_primes =
      app.add_subcommand("primes", "sieve canonical primes and write the cache");
  add_common(cmd_primes, false);
  cmd_primes->add_option("--bound", bound_str, "norm bound");

  auto* cmd_volume =
      app.add_subcommand("volume", "exact volume of the height polytope");

  auto* cmd_selftest = app.add_subcommand("selftest", "run the exact-identity suite");
  cmd_selftest->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string cache_dir = cache_dir_from(cache_dir_flag);

    if (cmd_volume->parsed()) {
      const Rational v = polytope_volume();
      std::printf("%s (= %.12Lg)\n", v.str().c_str(), v.value());
      return 0;
    }
    if (cmd_selftest->parsed()) return selftest(level);

    const Field F = make_field(field_n);
    OutputSink sink;
    sink.open(output);

    if (cmd_count->parsed()) {
      const long double bound = parse_bound(bound_str);
      const CountReport r = make_report(F, backend, bound, euler_bound, workers);
      if (format == "csv")
        sink.stream() << count_report_csv_header(ReportStyle::Count) << "\n"
                      << count_report_csv_row(r, ReportStyle::Count) << "\n";
      else
        sink.stream() << count_report_json(r, ReportStyle::Count) << "\n";
      return 0;
    }

    if (cmd_constant->parsed()) {
      if (!cache_dir.empty())  // warm the sieve through the file cache
        primes_up_to_cached(F, euler_bound, cache_dir);
      const ConstantBreakdown b = leading_constant(F, euler_bound);
      if (format == "csv")
        sink.stream() << breakdown_csv_header() << "\n"
                      << breakdown_csv_row(b) << "\n";
      else
        sink.stream() << breakdown_json(b) << "\n";
      return 0;
    }

    if (cmd_compare->parsed()) {
      std::vector<long double> bounds;
      std::stringstream ss(bounds_str);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) bounds.push_back(parse_bound(tok));
      if (bounds.empty())
        throw CLI::ValidationError("--bounds", "no bounds given");
      for (std::size_t i = 1; i < bounds.size(); ++i)
        if (!(bounds[i - 1] < bounds[i]))
          throw CLI::ValidationError("--bounds", "bounds must be ascending");

      const bool csv = format == "csv";
      if (csv)
        sink.stream() << count_report_csv_header(ReportStyle::Compare) << "\n";
      else
        sink.stream() << "[\n";
      for (std::size_t i = 0; i < bounds.size(); ++i) {
        const CountReport r =
            make_report(F, backend, bounds[i], euler_bound, workers);
        if (csv)
          sink.stream() << count_report_csv_row(r, ReportStyle::Compare) << "\n";
        else
          sink.stream() << "  " << count_report_json(r, ReportStyle::Compare)
                        << (i + 1 < bounds.size() ? ",\n" : "\n");
        sink.stream().flush();
      }
      if (!csv) sink.stream() << "]\n";
      return 0;
    }

    if (cmd_primes->parsed()) {
      const long double bound = parse_bound(bound_str);
      const std::uint64_t X = static_cast<std::uint64_t>(bound);
      const std::string dir = cache_dir.empty() ? "." : cache_dir;
      const auto primes = primes_up_to_cached(F, X, dir);
      std::fprintf(stderr, "wrote %zu primes of norm <= %llu to %s\n",
                   primes.size(), static_cast<unsigned long long>(X),
                   prime_cache_path(dir, F).string().c_str());
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
