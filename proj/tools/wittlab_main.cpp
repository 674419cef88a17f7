#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wittlab/checks.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "wittlab: exact verification of enveloping-algebra identities for the\n"
      "vector fields on the line and their density modules"};

  std::vector<std::string> suites;
  std::vector<std::string> lambdas;
  std::string format = "text";
  bool fail_fast = false, list = false;
  int max_degree = 3, max_weight = 8;

  app.add_option("--suite", suites,
                 "suite to run (repeatable); one of core, u2, u3, dims, thm-i0, thm-i2, "
                 "thm-il, related-sw, related-bf, sl2-verma, all");
  app.add_option("--max-degree", max_degree, "filtration degree cutoff (>= 2)")
      ->capture_default_str();
  app.add_option("--max-weight", max_weight, "weight cutoff (>= max-degree)")
      ->capture_default_str();
  app.add_option("--lambda", lambdas,
                 "density parameter sample p/q (repeatable, replaces the defaults 2, -1, 1/2, 1/3)");
  app.add_option("--format", format, "output format: text or json")->capture_default_str();
  app.add_flag("--fail-fast", fail_fast, "stop after the first failing check");
  app.add_flag("--list", list, "list registered checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list) {
    wittlab::print_check_list(std::cout);
    return 0;
  }

  wittlab::RunConfig cfg;
  cfg.suites = suites;
  cfg.max_degree = max_degree;
  cfg.max_weight = max_weight;
  cfg.fail_fast = fail_fast;
  try {
    if (format == "text") {
      cfg.format = wittlab::RunConfig::Format::text;
    } else if (format == "json") {
      cfg.format = wittlab::RunConfig::Format::json;
    } else {
      throw wittlab::ConfigError("unknown format '" + format + "'");
    }
    if (!lambdas.empty()) {
      cfg.lambda_samples.clear();
      for (const auto& s : lambdas) cfg.lambda_samples.push_back(wittlab::Rat::parse(s));
    }
    wittlab::validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  std::cerr << "running " << (cfg.suites.empty() ? std::string("all suites")
                                                 : std::to_string(cfg.suites.size()) +
                                                       " selected suite(s)")
            << " at degree <= " << cfg.max_degree << ", weight <= " << cfg.max_weight << "\n";

  const auto reports = wittlab::run_checks(cfg);
  if (cfg.format == wittlab::RunConfig::Format::json)
    wittlab::print_json(std::cout, reports, cfg);
  else
    wittlab::print_text(std::cout, reports);
  return wittlab::exit_code(reports);
}
