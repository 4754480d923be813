// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "gprime/fuzz.hpp"
#include "gprime/partial_action.hpp"
#include "gprime/primeness.hpp"

using namespace gprime;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::map<int, Criterion> results;

Instance fixture(const std::string& name) { return load_instance(std::string(GPRIME_FIXTURE_DIR) + "/" + name + ".json"); }

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(GPRIME_FIXTURE_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

bool all_equal(const PrimenessReport& r, bool value) {
  for (const auto& c : r.conditions)
    if (c != value) return false;
  return true;
}

const PropertyTally& tally(const PropertyReport& p, const std::string& key) {
  static const PropertyTally empty;
  auto it = p.properties.find(key);
  return it == p.properties.end() ? empty : it->second;
}

void require_clean(Criterion& c, const PropertyReport& p, const std::string& key) {
  const PropertyTally& t = tally(p, key);
  c.expect(t.checked > 0, key + " never checked");
  c.expect(t.failed == 0, key + ": " + std::to_string(t.failed) + " failures" +
                              (t.failures.empty() ? "" : " (first: " + t.failures.front() + ")"));
}

void corpus() {
  const auto start = Clock::now();
  FuzzOptions o;
  o.seed = 7;
  o.count = 200;
  o.max_ring = kDefaultOracleBound;
  const FuzzSummary fuzz = run_fuzz(o);

  PropertyReport fixtures;
  std::size_t fixture_count = 0;
  for (const auto& name : fixture_names()) {
    try {
      fixtures.merge(verify_properties(fixture(name)));
      ++fixture_count;
    } catch (const std::exception& e) {
      results[1].expect(false, name + ": " + e.what());
    }
  }
  PropertyReport all = fuzz.totals;
  all.merge(fixtures);
  const double elapsed = seconds_since(start);

  Criterion& c1 = results[1];
  c1.expect(fuzz.instances >= 200, "only " + std::to_string(fuzz.instances) + " fuzz instances");
  c1.expect(fuzz.errors.empty(), std::to_string(fuzz.errors.size()) + " fuzz instances failed to build");
  c1.expect(fixture_count >= 25, "only " + std::to_string(fixture_count) + " fixtures");
  require_clean(c1, all, "seven_way");
  c1.expect(!all.disagreement, "disagreement raised");
  c1.expect(tally(all, "harness").failed == 0, "harness errors");
  c1.expect(elapsed <= 600.0, "runtime " + std::to_string(elapsed) + " s");
  std::cout << "  corpus: " << fuzz.instances << " fuzzed + " << fixture_count << " fixtures, "
            << tally(all, "seven_way").checked << " seven-way checks\n";

  require_clean(results[2], all, "oracle_vs_theorem");
  require_clean(results[7], all, "ideal_bijection");
  require_clean(results[8], all, "graded_vs_g_prime");
  require_clean(results[9], fuzz.totals, "global_action_chain");
  require_clean(results[9], fuzz.totals, "group_type_theorem");
  results[9].expect(fuzz.families.count("global_action") && fuzz.families.at("global_action") > 0,
                    "no global actions fuzzed");

  Criterion& c11 = results[11];
  require_clean(c11, all, "witness_replay");
  c11.expect(all.witnesses_emitted > 0, "no witnesses emitted");
  c11.expect(all.witnesses_replayed == all.witnesses_emitted,
             std::to_string(all.witnesses_replayed) + " of " + std::to_string(all.witnesses_emitted) + " replayed");
}

void m3() {
  Criterion& c = results[3];
  const auto start = Clock::now();
  const Instance in = fixture("m3_pair_groupoid");
  const PrimenessReport r = equivalence_report(in.grading);
  const double elapsed = seconds_since(start);
  c.expect(nearly_epsilon_strong(in.grading).holds, "not nearly epsilon-strong");
  c.expect(r.nearly_epsilon_strong, "report says not nearly epsilon-strong");
  c.expect(all_equal(r, true), "some condition is not true");
  c.expect(r.oracle == true, "oracle not true");
  c.expect(elapsed <= 5.0, "runtime " + std::to_string(elapsed) + " s");
}

void block_diagonal() {
  Criterion& c = results[4];
  const Instance in = fixture("block_diagonal");
  const Grading& s = in.grading;
  const FiniteGroupoid& g = in.groupoid;
  auto hub = [&](const char* o) { return is_support_hub(s, *g.find_object(o)).hub; };
  c.expect(hub("f2"), "f2 not a support-hub");
  c.expect(!hub("f1"), "f1 is a support-hub");
  c.expect(!hub("f3"), "f3 is a support-hub");
  const PairVerdict v = is_graded_prime(s);
  c.expect(!v.prime, "graded prime");
  c.expect(v.witness && s.degree(v.witness->first) && s.degree(v.witness->second), "witness not homogeneous");
  if (v.witness) {
    const auto& [a, b] = *v.witness;
    c.expect(graded_product_is_zero(s, graded_ideal_closure(s, {{*s.degree(a), a}}),
                                    graded_ideal_closure(s, {{*s.degree(b), b}})),
             "graded witness does not replay");
  }
  c.expect(is_prime_oracle(s).prime == false, "oracle not false");
}

void disconnected() {
  Criterion& c = results[5];
  const Instance in = fixture("disconnected_groupoid_ring");
  c.expect(is_prime_oracle(in.grading).prime == false, "prime");
  c.expect(equivalence_report(in.grading).verdict == false, "verdict prime");
  c.expect(!connell_check(in.ring, in.groupoid).connected, "connell reports connected");
}

void connell() {
  Criterion& c = results[6];
  std::size_t n = 0;
  for (const auto& name : fixture_names()) {
    if (name.rfind("groupoid_ring_", 0) != 0) continue;
    const Instance in = fixture(name);
    const bool oracle = is_prime_oracle(in.grading).prime;
    c.expect(connell_check(in.ring, in.groupoid).holds() == oracle, name + ": connell differs from oracle");
    if (name == "groupoid_ring_F2_Z2") c.expect(!oracle, "F2[Z/2] prime");
    if (name == "groupoid_ring_F2_P2") c.expect(oracle, "F2[P2] not prime");
    ++n;
  }
  c.expect(n >= 19, "only " + std::to_string(n) + " groupoid ring fixtures");
  std::cout << "  connell: " << n << " groupoid ring fixtures\n";
}

void partial_fixtures() {
  Criterion& c = results[10];
  const Instance z = fixture("zero_Ag");
  c.expect(!is_graded_prime(z.grading).prime, "zero_Ag graded prime");
  const Instance f = fixture("gf4_frobenius");
  const PairVerdict iso = is_isotropy_prime(*f.action, *f.groupoid.find_object("e"));
  c.expect(!iso.prime, "A_e is G_e^e-prime");
  const PrimenessReport r = equivalence_report(f.grading);
  c.expect(!r.verdict, "skew ring prime");
  c.expect(r.witness && replay_witness(f.grading.ring(), r.witness->first, r.witness->second),
           "no replayable witness for the skew ring");
}

template <class F>
void guarded(int id, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    results[id].expect(false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  const char* names[] = {"",
                         "seven-way equivalence",
                         "oracle concordance",
                         "m3_pair_groupoid",
                         "block_diagonal",
                         "disconnected_groupoid_ring",
                         "Connell concordance",
                         "bijection round trip",
                         "graded prime = G-prime",
                         "global-action chain",
                         "partial-action fixtures",
                         "witness self-verification"};
  for (int i = 1; i <= 11; ++i) results[i];
  guarded(1, corpus);
  guarded(3, m3);
  guarded(4, block_diagonal);
  guarded(5, disconnected);
  guarded(6, connell);
  guarded(10, partial_fixtures);

  bool all = true;
  for (int i = 1; i <= 11; ++i) {
    const Criterion& c = results[i];
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << i << " " << names[i] << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    all = all && c.ok;
  }
  return all ? 0 : 1;
}
