#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "contactgeo/errors.hpp"
#include "contactgeo/report.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verifies the structure and curvature identity catalog of the "
      "complex Heisenberg model and its control geometries."};

  std::string model = "heisenberg";
  std::string suites = "all";
  int points = 64;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::string format = "json";
  std::string out;

  app.add_option("--model", model, "heisenberg, flat-kahler, or sphere")
      ->check(CLI::IsMember({"heisenberg", "flat-kahler", "sphere"}));
  app.add_option("--suites", suites,
                 "comma-separated suite ids, or 'all' for every suite the "
                 "model supports");
  app.add_option("--points", points, "sample points per suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random stream seed");
  app.add_option("--tol", tol, "base residual tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out, "report file path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  contactgeo::RunConfig cfg;
  cfg.model = model;
  cfg.suites = split_csv(suites);
  cfg.points = points;
  cfg.seed = seed;
  cfg.tol = tol;
  cfg.format = format == "text" ? contactgeo::ReportFormat::text
                                : contactgeo::ReportFormat::json;
  cfg.out = out;
  cfg.exec = contactgeo::Exec::parallel;
  if (cfg.suites.empty()) {
    std::cerr << "no suites requested\n";
    return 2;
  }

  try {
    contactgeo::RunReport rep = contactgeo::run_verification(cfg);
    std::string body = cfg.format == contactgeo::ReportFormat::json
                           ? contactgeo::render_json(rep)
                           : contactgeo::render_text(rep);
    if (cfg.out.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) {
        std::cerr << "cannot open " << cfg.out << " for writing\n";
        return 2;
      }
      f << body;
    }
    return rep.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
