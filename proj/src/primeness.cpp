#include "gprime/primeness.hpp"

#include <algorithm>

#include "gprime/error.hpp"

namespace gprime {

const std::array<const char*, 7> kConditionLabels = {"i", "ii", "iii", "iv", "v", "vi", "vii"};

std::string to_string(WitnessSource s) {
  switch (s) {
    case WitnessSource::Oracle: return "oracle";
    case WitnessSource::Isotropy: return "isotropy";
    case WitnessSource::HubBlocker: return "hub-blocker";
  }
  return "?";
}

PrimeResult is_prime_oracle(const Grading& s, std::size_t bound) { return is_prime_bruteforce(s.ring(), bound); }

bool replay_witness(const FiniteRing& ring, Elem a, Elem b, std::size_t bound) {
  if (!annihilating_pair(ring, a, b)) return false;
  if (ring.size() <= bound) return verify_prime_witness(ring, a, b);
  return true;
}

namespace {

ObjectEvidence object_evidence(const Grading& s, Obj e, std::size_t bound) {
  ObjectEvidence ev;
  ev.object = e;
  ev.in_support = !s.component(s.groupoid().identity(e)).is_zero();
  const FiniteGroup iso = isotropy(s.groupoid(), e);
  ev.isotropy_order = iso.order();
  if (!ev.in_support) return ev;
  ev.hub = is_support_hub(s, e);
  const IsotropyComponent c = isotropy_component(s, e);
  const FiniteRing& sub = c.grading.ring();
  ev.isotropy_ring_size = sub.size();
  const PrimeResult p = is_prime_bruteforce(sub, bound);
  ev.isotropy_prime = p.prime;
  if (p.witness) {
    const auto* view = sub.as<SubringImpl>();
    ev.isotropy_witness = std::pair{view->to_parent(p.witness->a), view->to_parent(p.witness->b)};
  }
  return ev;
}

// Smallest nonzero element of S_e.
Elem first_nonzero(const AdditiveSubgroup& c) {
  const auto v = c.sorted();
  return v.at(1);
}

}  // namespace

PrimenessReport equivalence_report(const Grading& s, const PrimenessOptions& options) {
  PrimenessReport r;
  r.nearly_epsilon_strong = nearly_epsilon_strong(s).holds;

  for (Obj e = 0; e < s.groupoid().num_objects(); ++e) r.objects.push_back(object_evidence(s, e, options.oracle_bound));
  const bool any_support = std::any_of(r.objects.begin(), r.objects.end(), [](const auto& o) { return o.in_support; });
  r.degenerate = !any_support;

  if (options.run_oracle && s.ring().size() <= options.oracle_bound) {
    PrimeResult p = is_prime_oracle(s, options.oracle_bound);
    r.oracle_skipped = false;
    r.oracle = p.prime;
    r.oracle_witness = p.witness;
    r.oracle_distinct_ideals = p.distinct_principal_ideals;
    r.conditions[0] = p.prime;
  }

  r.g_prime = is_G_prime_principal(s, options.oracle_bound);
  r.graded_prime = is_graded_prime(s);

  bool iso_all = any_support, iso_some = false, hub_all = any_support, hub_some = false;
  for (const auto& o : r.objects) {
    if (!o.in_support) continue;
    const bool ip = *o.isotropy_prime;
    iso_all = iso_all && ip;
    iso_some = iso_some || ip;
    const bool hp = o.hub->hub && ip;
    hub_all = hub_all && hp;
    hub_some = hub_some || hp;
  }
  r.conditions[1] = r.g_prime.prime && iso_all;
  r.conditions[2] = r.g_prime.prime && iso_some;
  r.conditions[3] = r.graded_prime.prime && iso_all;
  r.conditions[4] = r.graded_prime.prime && iso_some;
  r.conditions[5] = hub_all;
  r.conditions[6] = hub_some;

  std::optional<bool> first;
  for (const auto& c : r.conditions) {
    if (!c) continue;
    if (!first) first = *c;
    if (*c != *first) r.agree = false;
  }

  if (r.oracle) {
    r.verdict = *r.oracle;
  } else {
    if (!r.nearly_epsilon_strong)
      throw Error(ErrorKind::BoundExceeded,
                  "ring exceeds the oracle bound and the grading is not nearly epsilon-strong; no method applies");
    r.verdict = *r.conditions[6];
  }

  if (options.enforce && r.nearly_epsilon_strong && !r.degenerate && !r.agree) {
    std::vector<std::string> details;
    for (std::size_t i = 0; i < 7; ++i)
      if (r.conditions[i])
        details.push_back(std::string("(") + kConditionLabels[i] + ") = " + (*r.conditions[i] ? "true" : "false"));
    throw Error(ErrorKind::InternalDisagreement, "main theorem conditions disagree", details);
  }

  if (!r.verdict) {
    if (r.oracle_witness) {
      r.witness = std::pair{r.oracle_witness->a, r.oracle_witness->b};
      r.witness_source = WitnessSource::Oracle;
    } else {
      for (const auto& o : r.objects)
        if (o.isotropy_witness) {
          r.witness = o.isotropy_witness;
          r.witness_source = WitnessSource::Isotropy;
          break;
        }
      if (!r.witness)
        for (const auto& o : r.objects) {
          if (!o.hub || o.hub->hub) continue;
          const Elem b = first_nonzero(s.component(s.groupoid().identity(o.object)));
          const Elem a = *o.hub->blocker;
          r.witness = o.hub->blocked_right ? std::pair{a, b} : std::pair{b, a};
          r.witness_source = WitnessSource::HubBlocker;
          break;
        }
    }
    if (r.witness && !replay_witness(s.ring(), r.witness->first, r.witness->second, options.oracle_bound))
      throw Error(ErrorKind::InternalDisagreement, "non-primeness witness does not replay");
  }
  return r;
}

std::optional<bool> evaluate_condition(const PrimenessReport& r, const std::string& label) {
  for (std::size_t i = 0; i < kConditionLabels.size(); ++i)
    if (label == kConditionLabels[i]) return r.conditions[i];
  throw Error(ErrorKind::MalformedInput, "unknown condition label '" + label + "'");
}

std::optional<bool> torsion_free_shortcut(const Grading& s, Obj e, std::size_t bound) {
  const FiniteGroupoid& G = s.groupoid();
  if (e >= G.num_objects()) throw Error(ErrorKind::UnknownObject, "unknown object index");
  if (s.component(G.identity(e)).is_zero()) return std::nullopt;
  if (!is_torsion_free(isotropy(G, e))) return std::nullopt;
  const bool local = is_G_prime_principal(s, {e}, {G.identity(e)}, bound).prime;
  return local && is_G_prime_principal(s, bound).prime;
}

}  // namespace gprime
