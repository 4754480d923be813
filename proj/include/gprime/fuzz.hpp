#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gprime/instance.hpp"
#include "gprime/primeness.hpp"

namespace gprime {

struct PropertyTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only

  void record(bool ok, const std::string& what);
};

/// Outcome of every property check run on one instance.
struct PropertyReport {
  std::map<std::string, PropertyTally> properties;
  std::optional<PrimenessReport> primeness;
  bool disagreement = false;  // some theorem-level check failed
  std::size_t witnesses_emitted = 0;
  std::size_t witnesses_replayed = 0;

  bool ok() const;
  void merge(const PropertyReport& other);
};

/// Runs the main-theorem harness and every structural property that applies
/// to the instance (bijection round trip, global-action chain, Connell, ...).
/// Never throws for theorem disagreements; they are tallied instead.
PropertyReport verify_properties(const Instance& in);

struct FuzzOptions {
  std::uint64_t seed = 7;
  std::size_t count = 200;
  std::size_t max_ring = kDefaultOracleBound;
};

struct FuzzCase {
  std::string family;
  Json instance;
};

/// Deterministic random instance; every family is nearly epsilon-strong by construction.
FuzzCase generate_case(std::mt19937_64& rng, std::size_t max_ring);

struct FuzzSummary {
  std::size_t instances = 0;
  std::size_t oracle_runs = 0;
  std::size_t prime = 0;
  std::map<std::string, std::size_t> families;
  std::size_t validation_rejections = 0;  // random, unstructured gradings rejected by validation
  std::size_t validation_accepts = 0;
  PropertyReport totals;
  std::vector<std::string> errors;  // instances that failed to build (never expected)
};

FuzzSummary run_fuzz(const FuzzOptions& options);
Json summary_json(const FuzzSummary& s);

}  // namespace gprime
