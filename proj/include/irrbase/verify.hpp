#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "irrbase/group.hpp"

namespace irrbase {

std::string artifact_version();

/// Named checks with their parameters. Versioned so that reports say which
/// parameter set produced them.
struct Manifest {
  std::string version;
  std::uint64_t node_budget = 10'000'000;
  nlohmann::json checks;  // id -> parameters
};

/// The built-in manifest. IRRBASE_NODE_BUDGET overrides the node budget.
Manifest default_manifest();
Manifest manifest_from_json(const nlohmann::json& j);

/// Check ids in run order.
std::vector<std::string> check_ids();
/// Canonical id for a name or one of its aliases.
std::optional<std::string> resolve_check(const std::string& name);

struct CheckOptions {
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed;
};

struct CheckResult {
  std::string id;
  std::string claim;  // what is checked, in words
  bool passed = false;
  bool exact = true;  // false when a search ran out of budget
  nlohmann::json details;
};

CheckResult run_check(const std::string& id, const Manifest& m, const CheckOptions& options = {});

/// Report for a list of results: versions, per-check verdicts, totals.
nlohmann::json verification_report(const std::vector<CheckResult>& results, const Manifest& m);

/// 0 all passed and exact, 2 some result inexact, 3 some check failed.
int exit_code(const std::vector<CheckResult>& results);

/// Normal closure in g of the generators with the given indices.
GroupHandle normal_closure(const GroupHandle& g, const std::vector<std::size_t>& generator_indices);
GroupHandle generated_subgroup(const GroupHandle& g, const std::vector<std::size_t>& generator_indices);

/// Matrix group from {"field": {"p", "k", "modulus"}, "dimension", "generators":
/// [[row-major entries]]}. Entries are field-element indices.
GroupHandle load_generator_list(const nlohmann::json& j);

}  // namespace irrbase
