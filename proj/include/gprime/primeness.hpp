#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gprime/grading.hpp"

namespace gprime {

struct PrimenessOptions {
  std::size_t oracle_bound = kDefaultOracleBound;
  bool run_oracle = true;
  // Throw InternalDisagreement when the seven conditions (or oracle and theorem) differ.
  bool enforce = true;
};

struct ObjectEvidence {
  Obj object = 0;
  bool in_support = false;         // S_e != 0
  std::optional<HubResult> hub;    // only for objects in G_0'
  std::size_t isotropy_order = 0;
  std::size_t isotropy_ring_size = 0;
  std::optional<bool> isotropy_prime;
  // Oracle witness of the isotropy component, as elements of the whole ring.
  std::optional<std::pair<Elem, Elem>> isotropy_witness;
};

enum class WitnessSource { Oracle, Isotropy, HubBlocker };
std::string to_string(WitnessSource s);

struct PrimenessReport {
  bool nearly_epsilon_strong = false;
  bool degenerate = false;  // G_0' empty
  bool oracle_skipped = true;
  std::optional<bool> oracle;
  std::optional<PrimeWitness> oracle_witness;
  std::size_t oracle_distinct_ideals = 0;
  // (i)..(vii); (i) is the oracle and stays empty when it is skipped.
  std::array<std::optional<bool>, 7> conditions{};
  PairVerdict g_prime;
  PairVerdict graded_prime;
  std::vector<ObjectEvidence> objects;
  bool verdict = false;
  // For non-prime verdicts: a, b nonzero with a S^1 b = 0.
  std::optional<std::pair<Elem, Elem>> witness;
  std::optional<WitnessSource> witness_source;
  bool agree = true;  // every computed condition equal
};

/// Brute-force primeness of the underlying ring.
PrimeResult is_prime_oracle(const Grading& s, std::size_t bound = kDefaultOracleBound);

/// Every condition computed independently; the verdict is the oracle when it
/// runs, condition (vii) otherwise. Throws BoundExceeded when neither the
/// oracle nor the theorem applies, InternalDisagreement per options.enforce.
PrimenessReport equivalence_report(const Grading& s, const PrimenessOptions& options = {});

/// Condition by roman numeral "i".."vii" from a finished report. Throws MalformedInput.
std::optional<bool> evaluate_condition(const PrimenessReport& r, const std::string& label);
extern const std::array<const char*, 7> kConditionLabels;

/// For e in G_0' with trivial isotropy: S_e is G_e^e-prime and the principal
/// part is G-prime. nullopt when the isotropy is nontrivial or S_e = 0.
std::optional<bool> torsion_free_shortcut(const Grading& s, Obj e, std::size_t bound = kDefaultOracleBound);

/// a S^1 b = 0 and, when the ring is small enough, Id(a) Id(b) = 0 by closure.
bool replay_witness(const FiniteRing& ring, Elem a, Elem b, std::size_t bound = kDefaultOracleBound);

}  // namespace gprime
