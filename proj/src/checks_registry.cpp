#include "wittlab/checks.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

#include <json.hpp>

#include "checks_internal.hpp"

namespace wittlab {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "core", "u2", "u3", "dims", "thm-i0", "thm-i2",
      "thm-il", "related-sw", "related-bf", "sl2-verma"};
  return names;
}

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> out;
    checks::register_core(out);
    checks::register_u2(out);
    checks::register_u3(out);
    checks::register_dims(out);
    checks::register_theorems(out);
    checks::register_related(out);
    return out;
  }();
  return defs;
}

void validate(const RunConfig& cfg) {
  if (cfg.max_degree < 2) throw ConfigError("max_degree must be at least 2");
  if (cfg.max_weight < cfg.max_degree) throw ConfigError("max_weight must be >= max_degree");
  const auto& known = suite_names();
  for (const auto& s : cfg.suites) {
    if (s == "all") continue;
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ConfigError("unknown suite '" + s + "'");
  }
  if (cfg.lambda_samples.empty()) throw ConfigError("lambda sample list is empty");
  for (const auto& v : cfg.lambda_samples)
    if (v == Rat(0) || v == Rat(1))
      throw ConfigError("lambda samples must differ from 0 and 1");
}

namespace {

bool suite_selected(const RunConfig& cfg, const std::string& suite) {
  if (cfg.suites.empty()) return true;
  for (const auto& s : cfg.suites)
    if (s == "all" || s == suite) return true;
  return false;
}

}  // namespace

std::vector<CheckReport> run_checks(const RunConfig& cfg) {
  validate(cfg);
  std::vector<CheckReport> reports;
  bool bail = false;
  for (const auto& def : check_registry()) {
    if (!suite_selected(cfg, def.suite)) continue;
    CheckReport rep;
    rep.check_id = def.id();
    if (bail) {
      rep.status = CheckReport::Status::skipped;
      rep.witnesses = {"skipped by fail-fast"};
      reports.push_back(std::move(rep));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    CheckContext ctx(cfg);
    try {
      def.body(ctx);
      rep.status = ctx.failed() ? CheckReport::Status::fail : CheckReport::Status::pass;
      rep.witnesses = ctx.witnesses();
    } catch (const std::exception& e) {
      rep.status = CheckReport::Status::fail;
      rep.witnesses = ctx.witnesses();
      rep.witnesses.push_back(std::string("FAIL exception: ") + e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (rep.status == CheckReport::Status::fail && cfg.fail_fast) bail = true;
    reports.push_back(std::move(rep));
  }
  return reports;
}

namespace {
const char* status_str(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::pass: return "pass";
    case CheckReport::Status::fail: return "fail";
    case CheckReport::Status::skipped: return "skipped";
  }
  return "?";
}
}  // namespace

void print_text(std::ostream& os, const std::vector<CheckReport>& reports) {
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    const char* tag = r.status == CheckReport::Status::pass
                          ? "PASS"
                          : (r.status == CheckReport::Status::fail ? "FAIL" : "SKIP");
    os << "[" << tag << "] " << r.check_id << " (" << r.elapsed_ms << " ms)\n";
    if (r.status != CheckReport::Status::pass)
      for (const auto& w : r.witnesses) os << "    " << w << "\n";
    switch (r.status) {
      case CheckReport::Status::pass: ++passed; break;
      case CheckReport::Status::fail: ++failed; break;
      case CheckReport::Status::skipped: ++skipped; break;
    }
  }
  os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
}

void print_json(std::ostream& os, const std::vector<CheckReport>& reports,
                const RunConfig& cfg) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["check_id"] = r.check_id;
    o["status"] = status_str(r.status);
    o["witnesses"] = r.witnesses;
    o["elapsed_ms"] = r.elapsed_ms;
    o["cutoffs"] = {{"max_degree", cfg.max_degree}, {"max_weight", cfg.max_weight}};
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << "\n";
}

void print_check_list(std::ostream& os) {
  for (const auto& def : check_registry())
    os << def.id() << "  --  " << def.description << "\n";
}

int exit_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status != CheckReport::Status::pass) return 1;
  return 0;
}

}  // namespace wittlab
