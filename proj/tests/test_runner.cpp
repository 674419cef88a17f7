#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "wittlab/checks.hpp"

using namespace wittlab;

TEST_CASE("registry contains the pinned check ids") {
  std::vector<std::string> ids;
  for (const auto& def : check_registry()) ids.push_back(def.id());
  for (const char* want : {"u2/ad-Z-eq-Q", "related-sw/g-to-Qe2", "thm-il/machine-conditions"})
    CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
  // Ids are unique.
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  // Every check belongs to a known suite.
  for (const auto& def : check_registry()) {
    const auto& names = suite_names();
    CHECK(std::find(names.begin(), names.end(), def.suite) != names.end());
  }
}

TEST_CASE("configuration validation") {
  RunConfig cfg;
  cfg.max_degree = 1;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.max_degree = 3;
  cfg.max_weight = 2;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.max_weight = 8;
  cfg.suites = {"nope"};
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.suites = {"core", "all"};
  CHECK_NOTHROW(validate(cfg));
  cfg.lambda_samples = {Rat(0)};
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.lambda_samples = {};
  CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("suite selection and determinism") {
  RunConfig cfg;
  cfg.suites = {"dims"};
  const auto first = run_checks(cfg);
  const auto second = run_checks(cfg);
  REQUIRE(first.size() == second.size());
  CHECK(first.size() >= 5);
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].check_id == second[i].check_id);
    CHECK(first[i].check_id.rfind("dims/", 0) == 0);
    CHECK(static_cast<int>(first[i].status) == static_cast<int>(second[i].status));
    CHECK(first[i].witnesses == second[i].witnesses);
  }
  // Byte-identical reports once elapsed_ms is zeroed.
  auto render = [&](std::vector<CheckReport> reports) {
    for (auto& r : reports) r.elapsed_ms = 0;
    std::ostringstream os;
    print_json(os, reports, cfg);
    return os.str();
  };
  CHECK(render(first) == render(second));
}

TEST_CASE("json report shape") {
  RunConfig cfg;
  cfg.suites = {"dims"};
  cfg.format = RunConfig::Format::json;
  const auto reports = run_checks(cfg);
  std::ostringstream os;
  print_json(os, reports, cfg);
  const auto parsed = nlohmann::json::parse(os.str());
  REQUIRE(parsed.is_array());
  REQUIRE(!parsed.empty());
  for (const auto& o : parsed) {
    CHECK(o.contains("check_id"));
    CHECK(o.contains("status"));
    CHECK(o.contains("witnesses"));
    CHECK(o.contains("elapsed_ms"));
    CHECK(o.contains("cutoffs"));
    CHECK(o["cutoffs"].contains("max_degree"));
    CHECK(o["cutoffs"].contains("max_weight"));
  }
  CHECK(exit_code(reports) == 0);
}

TEST_CASE("check list output") {
  std::ostringstream os;
  print_check_list(os);
  const std::string s = os.str();
  CHECK(s.find("u2/ad-Z-eq-Q") != std::string::npos);
  CHECK(s.find("thm-il/machine-conditions") != std::string::npos);
  CHECK(s.find("related-sw/g-to-Qe2") != std::string::npos);
}
