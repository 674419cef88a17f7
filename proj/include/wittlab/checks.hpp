#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "wittlab/rational.hpp"

namespace wittlab {

/// Outcome of one named verification.
struct CheckReport {
  std::string check_id;
  enum class Status { pass, fail, skipped } status = Status::pass;
  std::vector<std::string> witnesses;
  long elapsed_ms = 0;
};

struct RunConfig {
  std::vector<std::string> suites;  // empty means "all"
  int max_degree = 3;
  int max_weight = 8;
  std::vector<Rat> lambda_samples = {Rat(2), Rat(-1), Rat(1, 2), Rat(1, 3)};
  enum class Format { text, json } format = Format::text;
  bool fail_fast = false;
};

/// Thrown for malformed run configurations (exit code 2 at the CLI).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Scratch state handed to each check body.
class CheckContext {
public:
  explicit CheckContext(const RunConfig& cfg) : cfg_(cfg) {}

  const RunConfig& cfg() const { return cfg_; }

  void require(bool ok, const std::string& witness) {
    if (!ok) { failed_ = true; witnesses_.push_back("FAIL " + witness); }
  }
  void note(const std::string& witness) { witnesses_.push_back(witness); }

  bool failed() const { return failed_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }

private:
  const RunConfig& cfg_;
  bool failed_ = false;
  std::vector<std::string> witnesses_;
};

struct CheckDef {
  std::string suite;
  std::string name;
  std::string description;
  std::function<void(CheckContext&)> body;
  std::string id() const { return suite + "/" + name; }
};

/// Suite names in canonical order (excluding the "all" alias).
const std::vector<std::string>& suite_names();

/// Full check registry in deterministic registration order.
const std::vector<CheckDef>& check_registry();

/// Validates a configuration; throws ConfigError.
void validate(const RunConfig& cfg);

/// Runs the selected suites; reports are ordered by registry order.
std::vector<CheckReport> run_checks(const RunConfig& cfg);

void print_text(std::ostream& os, const std::vector<CheckReport>& reports);
void print_json(std::ostream& os, const std::vector<CheckReport>& reports, const RunConfig& cfg);
void print_check_list(std::ostream& os);

/// 0 if every report passed, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace wittlab
