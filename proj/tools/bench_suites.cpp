#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "contactgeo/models.hpp"
#include "contactgeo/suites.hpp"

using contactgeo::Exec;
using contactgeo::ModelInstance;
using contactgeo::SuiteConfig;
using contactgeo::SuiteResult;

namespace {

double run_ms(const ModelInstance& m, const std::string& suite,
              const SuiteConfig& cfg, Exec exec, SuiteResult& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = contactgeo::run_suite(m, suite, cfg, exec);
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Bitwise agreement: the parallel path must reproduce the serial reduction
// exactly, not merely within tolerance.
bool identical(const SuiteResult& a, const SuiteResult& b) {
  if (a.checks.size() != b.checks.size() || a.pass != b.pass) return false;
  for (size_t i = 0; i < a.checks.size(); ++i) {
    const auto& ca = a.checks[i];
    const auto& cb = b.checks[i];
    if (ca.id != cb.id || ca.max_value != cb.max_value ||
        ca.mean_value != cb.mean_value || ca.pass != cb.pass)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Times every suite serially and OpenMP-parallel on one model and "
      "checks that both modes produce bitwise identical results."};

  std::string model = "heisenberg";
  int points = 256;
  std::uint64_t seed = 42;

  app.add_option("--model", model, "heisenberg, flat-kahler, or sphere")
      ->check(CLI::IsMember({"heisenberg", "flat-kahler", "sphere"}));
  app.add_option("--points", points, "sample points per suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random stream seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    ModelInstance m = contactgeo::model_by_name(model);
    SuiteConfig cfg;
    cfg.points = points;
    cfg.seed = seed;

    std::printf("model %s, %d points per suite\n", m.name.c_str(), points);
    std::printf("%-26s %12s %12s %9s  %s\n", "suite", "serial ms",
                "parallel ms", "speedup", "bitwise");

    bool all_identical = true;
    double tot_serial = 0.0, tot_parallel = 0.0;
    for (const std::string& s : contactgeo::suites_for(m)) {
      SuiteResult rs, rp;
      double ms_s = run_ms(m, s, cfg, Exec::serial, rs);
      double ms_p = run_ms(m, s, cfg, Exec::parallel, rp);
      bool same = identical(rs, rp);
      all_identical = all_identical && same;
      tot_serial += ms_s;
      tot_parallel += ms_p;
      std::printf("%-26s %12.1f %12.1f %8.2fx  %s\n", s.c_str(), ms_s, ms_p,
                  ms_s / ms_p, same ? "identical" : "DIVERGED");
    }
    std::printf("%-26s %12.1f %12.1f %8.2fx  %s\n", "total", tot_serial,
                tot_parallel, tot_serial / tot_parallel,
                all_identical ? "identical" : "DIVERGED");
    return all_identical ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
