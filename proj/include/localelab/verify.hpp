#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace localelab::verify {

using Json = nlohmann::json;

struct CorpusConfig {
  int max_poset_size = 3;
  int operator_samples_per_frame = 50;
  int map_budget = 5000;  // frame homs enumerated across all frame pairs
  std::uint64_t seed = 42;
  std::vector<std::string> checks;  // empty selects every check

  int size_limit = 16;            // sublocale enumeration bound
  int operator_frame_limit = 6;   // |L| for the operator suites
  int map_frame_limit = 5;        // |L|, |M| for the map suites
  int configurations = 200;       // seeded draws for composition and universal checks

  /// Throws InvalidInput on out-of-range fields or unknown check names.
  void validate() const;
  Json to_json() const;
  static CorpusConfig from_json(const Json& doc);
};

struct CheckInfo {
  std::string id;
  std::string claim;
};

const std::vector<CheckInfo>& check_catalogue();

/// Resolves names to catalogue ids. A name matches an id exactly, its group
/// ("interior" selects interior.*), or its suffix ("adjunction").
std::vector<std::string> select_checks(const std::vector<std::string>& names);

struct AnomalyInfo {
  std::string id;
  std::string kind;  // "text-discrepancy" or "counterexample"
  std::string check;
  std::string title;
};

const std::vector<AnomalyInfo>& anomaly_registry();

/// Runs the selected checks over the generated corpus. Output depends only
/// on the config: no timings, and per-item work is merged in item order.
Json run_verify(const CorpusConfig& config);

/// Canonical text of a report (sorted keys, two-space indent, trailing newline).
std::string render_report(const Json& report);

long unexplained_failures(const Json& report);

struct ReplayResult {
  enum class Kind { NoFailure, Listing, Replayed } kind = Kind::NoFailure;
  bool reproduced = false;
  std::vector<std::string> trace;
};

/// Re-executes one recorded witness step by step. A check id with no
/// witnesses yields "no failure recorded"; unknown ids throw UnknownWitness.
ReplayResult replay(const Json& report, const std::string& id);

}  // namespace localelab::verify
