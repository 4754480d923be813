#include "gprime/grading.hpp"

#include <algorithm>

#include "gprime/error.hpp"

namespace gprime {

namespace {

constexpr std::size_t kMaxTableCells = std::size_t{1} << 25;

std::vector<Mor> all_morphisms(const FiniteGroupoid& g) {
  std::vector<Mor> out(g.size());
  for (Mor x = 0; x < g.size(); ++x) out[x] = x;
  return out;
}

std::vector<Obj> all_objects(const FiniteGroupoid& g) {
  std::vector<Obj> out(g.num_objects());
  for (Obj e = 0; e < g.num_objects(); ++e) out[e] = e;
  return out;
}

}  // namespace

void Grading::check_products(const Data& d) {
  std::vector<std::string> bad;
  const FiniteGroupoid& G = d.groupoid;
  for (Mor g : d.nonzero)
    for (Mor h : d.nonzero) {
      const auto gh = G.compose(g, h);
      bool ok = true;
      for (Elem x : d.components[g].generators()) {
        for (Elem y : d.components[h].generators()) {
          const Elem p = d.ring.mul(x, y);
          if (gh ? !d.components[*gh].contains(p) : p != kZero) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok && bad.size() < 32) {
        if (gh)
          bad.push_back("S_" + G.label(g) + " S_" + G.label(h) + " is not contained in S_" + G.label(*gh));
        else
          bad.push_back("S_" + G.label(g) + " S_" + G.label(h) + " is nonzero but (" + G.label(g) + ", " +
                        G.label(h) + ") is not composable");
      }
    }
  if (!bad.empty()) throw Error(ErrorKind::AxiomViolation, "grading axioms violated: " + bad.front(), bad);
}

Grading Grading::validate(const FiniteGroupoid& g, const FiniteRing& ring,
                          const std::vector<std::vector<Elem>>& generators) {
  if (generators.size() > g.size())
    throw Error(ErrorKind::MalformedInput, "more component lists than morphisms");
  if (ring.size() > (std::size_t{1} << 22))
    throw Error(ErrorKind::BoundExceeded, "grading validation enumerates the carrier; ring too large");
  auto d = std::make_shared<Data>();
  d->groupoid = g;
  d->ring = ring;
  for (Mor x = 0; x < g.size(); ++x) {
    d->components.push_back(additive_closure(ring, x < generators.size() ? generators[x] : std::vector<Elem>{}));
    if (!d->components.back().is_zero()) d->nonzero.push_back(x);
  }
  if (d->nonzero.empty())
    throw Error(ErrorKind::Degenerate, "every component is {0}; the zero ring is treated as degenerate");
  check_products(*d);

  AdditiveSubgroup acc(ring);
  for (Mor x : d->nonzero) {
    const std::size_t before = acc.size();
    for (Elem y : d->components[x].generators()) acc.insert(y);
    if (acc.size() != before * d->components[x].size())
      throw Error(ErrorKind::NotDirectSum, "S_" + g.label(x) + " meets the sum of the preceding components");
  }
  if (acc.size() != ring.size())
    throw Error(ErrorKind::NotDirectSum, "components generate " + std::to_string(acc.size()) + " of " +
                                             std::to_string(ring.size()) + " elements");

  const std::size_t k = d->nonzero.size();
  if (ring.size() * k > kMaxTableCells) throw Error(ErrorKind::BoundExceeded, "decomposition table too large");
  d->table.assign(ring.size() * k, kZero);
  std::vector<Elem> filled{kZero};
  filled.reserve(ring.size());
  for (std::size_t j = 0; j < k; ++j) {
    const auto& comp = d->components[d->nonzero[j]];
    const std::size_t m = filled.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Elem base = filled[i];
      for (Elem y : comp.elements()) {
        if (y == kZero) continue;
        const Elem z = ring.add(base, y);
        std::copy_n(d->table.begin() + base * k, k, d->table.begin() + z * k);
        d->table[z * k + j] = y;
        filled.push_back(z);
      }
    }
  }
  Grading out;
  out.d_ = std::move(d);
  return out;
}

Grading Grading::from_components(const FiniteGroupoid& g, const FiniteRing& ring,
                                 std::vector<AdditiveSubgroup> components, Decomposer decomposer) {
  if (components.size() != g.size()) throw Error(ErrorKind::MalformedInput, "one component per morphism expected");
  auto d = std::make_shared<Data>();
  d->groupoid = g;
  d->ring = ring;
  d->components = std::move(components);
  for (Mor x = 0; x < g.size(); ++x) {
    if (!(d->components[x].ring() == ring)) throw Error(ErrorKind::RingMismatch, "component lives in another ring");
    if (!d->components[x].is_zero()) d->nonzero.push_back(x);
  }
  if (d->nonzero.empty())
    throw Error(ErrorKind::Degenerate, "every component is {0}; the zero ring is treated as degenerate");
  check_products(*d);
  d->decomposer = std::move(decomposer);
  Grading out;
  out.d_ = std::move(d);
  return out;
}

Parts Grading::decompose(Elem x) const {
  if (d_->table.empty()) return d_->decomposer(x);
  Parts out;
  const std::size_t k = d_->nonzero.size();
  for (std::size_t j = 0; j < k; ++j) {
    const Elem v = d_->table[std::size_t{x} * k + j];
    if (v != kZero) out.emplace_back(d_->nonzero[j], v);
  }
  return out;
}

std::optional<Mor> Grading::degree(Elem x) const {
  const Parts p = decompose(x);
  if (p.size() != 1) return std::nullopt;
  return p.front().first;
}

Elem Grading::sum(const Parts& parts) const {
  Elem acc = kZero;
  for (const auto& [g, v] : parts) acc = ring().add(acc, v);
  return acc;
}

AdditiveSubgroup Grading::sum_over(const std::vector<Mor>& morphisms) const {
  AdditiveSubgroup out(ring());
  for (Mor g : morphisms)
    for (Elem x : component(g).generators()) out.insert(x);
  return out;
}

AdditiveSubgroup Grading::principal_part() const {
  std::vector<Mor> ids;
  for (Obj e = 0; e < groupoid().num_objects(); ++e) ids.push_back(groupoid().identity(e));
  return sum_over(ids);
}

const std::vector<std::pair<Elem, Mor>>& Grading::homogeneous_elements() const {
  std::call_once(d_->homog_once, [this] {
    for (Mor g : d_->nonzero)
      for (Elem y : d_->components[g].elements())
        if (y != kZero) d_->homogeneous.emplace_back(y, g);
    std::sort(d_->homogeneous.begin(), d_->homogeneous.end());
  });
  return d_->homogeneous;
}

Elem project(const Grading& s, const std::vector<bool>& h, Elem x) {
  Elem acc = kZero;
  for (const auto& [g, v] : s.decompose(x))
    if (g < h.size() && h[g]) acc = s.ring().add(acc, v);
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

struct UnitSearch {
  std::vector<Elem> candidates;  // sorted elements of the product
  std::vector<Elem> recent;      // units that worked before, tried first

  template <class Pred>
  std::optional<Elem> find(Pred&& ok) {
    for (Elem u : recent)
      if (ok(u)) return u;
    for (Elem u : candidates)
      if (ok(u)) {
        recent.push_back(u);
        return u;
      }
    return std::nullopt;
  }
};

}  // namespace

NearlyEpsilonReport nearly_epsilon_strong(const Grading& s) {
  const FiniteGroupoid& G = s.groupoid();
  const FiniteRing& R = s.ring();
  const std::size_t n = G.size();
  std::vector<char> def_ok(n, 0), cert_ok(n, 0);
  std::vector<std::string> reasons(n);
  std::vector<std::vector<EpsilonCertificate>> certs(n);

  for (Mor g = 0; g < n; ++g) {
    const Mor gi = G.inverse(g);
    const auto& sg = s.component(g);
    const AdditiveSubgroup p = set_product(sg, s.component(gi));
    if (!is_s_unital(p, p)) {
      reasons[g] = "S_" + G.label(g) + " S_" + G.label(gi) + " is not s-unital";
    } else if (!(set_product(p, sg) == sg)) {
      reasons[g] = "S_" + G.label(g) + " S_" + G.label(gi) + " S_" + G.label(g) + " != S_" + G.label(g);
    } else {
      def_ok[g] = 1;
    }

    UnitSearch left{p.sorted(), {}};
    UnitSearch right{set_product(s.component(gi), sg).sorted(), {}};
    bool ok = true;
    for (Elem d : sg.elements()) {
      if (d == kZero) continue;
      auto eps = left.find([&](Elem u) { return R.mul(u, d) == d; });
      auto epsp = right.find([&](Elem u) { return R.mul(d, u) == d; });
      if (!eps || !epsp) {
        ok = false;
        break;
      }
      certs[g].push_back({g, d, *eps, *epsp});
    }
    cert_ok[g] = ok ? 1 : 0;
  }

  NearlyEpsilonReport out;
  out.holds = true;
  for (Mor g = 0; g < n; ++g) {
    const Mor gi = G.inverse(g);
    const bool by_def = def_ok[g] && def_ok[gi];
    const bool by_cert = cert_ok[g] && cert_ok[gi];
    if (by_def != by_cert)
      throw Error(ErrorKind::InternalDisagreement,
                  "nearly epsilon-strong definition and local-unit criterion disagree at " + G.label(g));
    if (!def_ok[g] && out.holds) {
      out.holds = false;
      out.failing = g;
      out.reason = reasons[g];
    }
  }
  if (out.holds)
    for (auto& c : certs) out.certificate.insert(out.certificate.end(), c.begin(), c.end());
  return out;
}

SupportGroupoid support_groupoid(const Grading& s) {
  const FiniteGroupoid& G = s.groupoid();
  SupportGroupoid out;
  std::vector<bool> live(G.num_objects(), false);
  for (Obj e = 0; e < G.num_objects(); ++e)
    if (!s.component(G.identity(e)).is_zero()) {
      live[e] = true;
      out.objects.push_back(e);
    }
  out.members.assign(G.size(), false);
  for (Mor g = 0; g < G.size(); ++g) {
    out.members[g] = live[G.src(g)] && live[G.rng(g)];
    if (!out.members[g] && !s.component(g).is_zero()) out.outside_zero = false;
  }
  out.connected = true;
  if (!out.objects.empty()) {
    const auto reach = orbit(G, out.objects.front());
    for (Obj f : out.objects)
      if (!std::binary_search(reach.begin(), reach.end(), f)) out.connected = false;
  }
  return out;
}

AdditiveSubgroup conjugate(const Grading& s, const AdditiveSubgroup& i, Mor g) {
  return set_product(set_product(s.component(s.groupoid().inverse(g)), i), s.component(g));
}

AdditiveSubgroup invariant_closure(const Grading& s, const std::vector<Elem>& seed, const std::vector<Obj>& objects,
                                   const std::vector<Mor>& morphisms) {
  const FiniteRing& R = s.ring();
  const FiniteGroupoid& G = s.groupoid();
  std::vector<Elem> multipliers;
  for (Obj e : objects)
    for (Elem x : s.component(G.identity(e)).generators()) multipliers.push_back(x);
  AdditiveSubgroup c = additive_closure(R, seed);
  linear_closure(c, [&](Elem x, auto& push) {
    for (Elem r : multipliers) {
      push(R.mul(r, x));
      push(R.mul(x, r));
    }
    for (Mor g : morphisms) {
      const auto& right = s.component(g).generators();
      for (Elem u : s.component(G.inverse(g)).generators()) {
        const Elem ux = R.mul(u, x);
        if (ux == kZero) continue;
        for (Elem v : right) push(R.mul(ux, v));
      }
    }
  });
  return c;
}

AdditiveSubgroup invariant_closure(const Grading& s, const std::vector<Elem>& seed) {
  return invariant_closure(s, seed, all_objects(s.groupoid()), all_morphisms(s.groupoid()));
}

bool is_invariant(const Grading& s, const AdditiveSubgroup& i) {
  for (Mor g = 0; g < s.groupoid().size(); ++g)
    if (!is_subset(conjugate(s, i, g), i)) return false;
  return true;
}

bool is_graded_ideal(const Grading& s, const AdditiveSubgroup& i) {
  AdditiveSubgroup acc(s.ring());
  for (Mor g = 0; g < s.groupoid().size(); ++g) {
    const AdditiveSubgroup part = intersect(i, s.component(g));
    for (Elem x : part.generators()) acc.insert(x);
  }
  return acc.size() == i.size();
}

AdditiveSubgroup phi(const Grading& s, const AdditiveSubgroup& i) {
  if (!is_graded_ideal(s, i)) throw Error(ErrorKind::NotGraded, "ideal is not graded");
  return intersect(i, s.principal_part());
}

AdditiveSubgroup psi(const Grading& s, const AdditiveSubgroup& j) {
  const AdditiveSubgroup p0 = s.principal_part();
  if (!is_subset(j, p0)) throw Error(ErrorKind::NotInvariant, "ideal is not inside the principal part");
  if (!(ideal_generated_in(p0, j.generators()) == j))
    throw Error(ErrorKind::NotInvariant, "not an ideal of the principal part");
  if (!is_invariant(s, j)) throw Error(ErrorKind::NotInvariant, "ideal is not G-invariant");
  const AdditiveSubgroup w = whole_ring(s.ring());
  return set_product(set_product(w, j), w);
}

// ---------------------------------------------------------------------------

bool GradedIdeal::is_zero() const {
  return std::all_of(parts.begin(), parts.end(), [](const AdditiveSubgroup& p) { return p.is_zero(); });
}

std::uint64_t GradedIdeal::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& p : parts) {
    h ^= p.hash();
    h *= 1099511628211ULL;
  }
  return h;
}

AdditiveSubgroup GradedIdeal::total() const {
  AdditiveSubgroup out(parts.front().ring());
  for (const auto& p : parts)
    for (Elem x : p.generators()) out.insert(x);
  return out;
}

GradedIdeal graded_ideal_closure(const Grading& s, const std::vector<std::pair<Mor, Elem>>& seed) {
  const FiniteGroupoid& G = s.groupoid();
  const FiniteRing& R = s.ring();
  const std::size_t n = G.size();
  GradedIdeal out;
  out.parts.assign(n, AdditiveSubgroup(R));
  for (const auto& [t, x] : seed) out.parts.at(t).insert(x);

  // by_src[e]: nonzero S_g with s(g) = e (left multipliers of degree-t elements with r(t) = e).
  std::vector<std::vector<Mor>> by_src(G.num_objects()), by_rng(G.num_objects());
  for (Mor g = 0; g < n; ++g)
    if (!s.component(g).is_zero()) {
      by_src[G.src(g)].push_back(g);
      by_rng[G.rng(g)].push_back(g);
    }
  std::vector<std::size_t> done(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mor t = 0; t < n; ++t) {
      while (done[t] < out.parts[t].generators().size()) {
        const Elem x = out.parts[t].generators()[done[t]++];
        changed = true;
        for (Mor g : by_src[G.rng(t)]) {
          const Mor gt = G.compose_or_throw(g, t);
          for (Elem u : s.component(g).generators()) out.parts[gt].insert(R.mul(u, x));
        }
        for (Mor h : by_rng[G.src(t)]) {
          const Mor th = G.compose_or_throw(t, h);
          for (Elem v : s.component(h).generators()) out.parts[th].insert(R.mul(x, v));
        }
      }
    }
  }
  return out;
}

bool graded_product_is_zero(const Grading& s, const GradedIdeal& a, const GradedIdeal& b) {
  const FiniteGroupoid& G = s.groupoid();
  for (Mor t = 0; t < G.size(); ++t) {
    if (a.parts[t].is_zero()) continue;
    for (Mor u = 0; u < G.size(); ++u) {
      if (b.parts[u].is_zero() || G.src(t) != G.rng(u)) continue;
      for (Elem x : a.parts[t].generators())
        for (Elem y : b.parts[u].generators())
          if (s.ring().mul(x, y) != kZero) return false;
    }
  }
  return true;
}

PairVerdict is_G_prime_principal(const Grading& s, const std::vector<Obj>& objects, const std::vector<Mor>& morphisms,
                                 std::size_t bound) {
  std::vector<Mor> ids;
  for (Obj e : objects) ids.push_back(s.groupoid().identity(e));
  const AdditiveSubgroup part = s.sum_over(ids);
  PairVerdict out;
  if (part.is_zero()) {
    out.degenerate = true;
    return out;
  }
  if (part.size() > bound)
    throw Error(ErrorKind::BoundExceeded, "invariant-ideal search refused: principal part has " +
                                              std::to_string(part.size()) + " elements");
  std::vector<Elem> cands = part.sorted();
  cands.erase(cands.begin());
  auto hit = first_zero_pair<AdditiveSubgroup>(
      cands.size(), [&](std::size_t i) { return invariant_closure(s, {cands[i]}, objects, morphisms); },
      [](const AdditiveSubgroup& I) { return I.hash(); },
      [](const AdditiveSubgroup& I, const AdditiveSubgroup& J) { return product_is_zero(I, J); });
  out.prime = !hit;
  if (hit) out.witness = std::pair{cands[hit->first], cands[hit->second]};
  return out;
}

PairVerdict is_G_prime_principal(const Grading& s, std::size_t bound) {
  return is_G_prime_principal(s, all_objects(s.groupoid()), all_morphisms(s.groupoid()), bound);
}

PairVerdict is_graded_prime(const Grading& s) {
  const auto& homog = s.homogeneous_elements();
  PairVerdict out;
  auto hit = first_zero_pair<GradedIdeal>(
      homog.size(), [&](std::size_t i) { return graded_ideal_closure(s, {{homog[i].second, homog[i].first}}); },
      [](const GradedIdeal& I) { return I.hash(); },
      [&](const GradedIdeal& I, const GradedIdeal& J) { return graded_product_is_zero(s, I, J); });
  out.prime = !hit;
  if (hit) out.witness = std::pair{homog[hit->first].first, homog[hit->second].first};
  return out;
}

// ---------------------------------------------------------------------------

namespace {

HubResult hub_check(const Grading& s, Obj e, Elem a, Mor g) {
  const FiniteGroupoid& G = s.groupoid();
  const FiniteRing& R = s.ring();
  bool right = false, left = false;
  for (Mor h = 0; h < G.size() && !right; ++h) {
    if (G.src(h) != e || G.rng(h) != G.src(g)) continue;
    for (Elem v : s.component(h).generators())
      if (R.mul(a, v) != kZero) {
        right = true;
        break;
      }
  }
  for (Mor k = 0; k < G.size() && !left; ++k) {
    if (G.rng(k) != e || G.src(k) != G.rng(g)) continue;
    for (Elem u : s.component(k).generators())
      if (R.mul(u, a) != kZero) {
        left = true;
        break;
      }
  }
  HubResult out;
  out.hub = right && left;
  out.blocked_right = !right;
  out.blocked_left = !left;
  if (!out.hub) {
    out.blocker = a;
    out.blocker_degree = g;
  }
  return out;
}

void require_g0_prime(const Grading& s, Obj e) {
  if (e >= s.groupoid().num_objects()) throw Error(ErrorKind::UnknownObject, "unknown object index");
  if (s.component(s.groupoid().identity(e)).is_zero())
    throw Error(ErrorKind::ObjectNotInG0Prime, "object " + s.groupoid().object_label(e) + " has S_e = {0}");
}

}  // namespace

HubResult is_support_hub(const Grading& s, Obj e) {
  require_g0_prime(s, e);
  for (const auto& [a, g] : s.homogeneous_elements()) {
    HubResult r = hub_check(s, e, a, g);
    if (!r.hub) return r;
  }
  HubResult ok;
  ok.hub = true;
  return ok;
}

HubResult hub_blocks(const Grading& s, Obj e, Elem a) {
  require_g0_prime(s, e);
  const auto g = s.degree(a);
  if (!g) throw Error(ErrorKind::MalformedInput, "element is not nonzero homogeneous");
  return hub_check(s, e, a, *g);
}

IsotropyComponent isotropy_component(const Grading& s, Obj e) {
  const FiniteGroupoid& G = s.groupoid();
  IsotropyComponent out;
  out.group = isotropy(G, e);
  out.morphisms = out.group.morphisms();
  const FiniteRing sub = subring_on(s.ring(), s.sum_over(out.morphisms).sorted());
  const auto* view = sub.as<SubringImpl>();
  const FiniteGroupoid h = one_object_groupoid(out.group, G.object_label(e));
  std::vector<std::vector<Elem>> gens(h.size());
  for (std::uint32_t i = 0; i < out.group.order(); ++i) {
    const Mor m = *h.find(out.group.label(i));
    for (Elem x : s.component(out.morphisms[i]).generators()) gens[m].push_back(*view->from_parent(x));
  }
  out.grading = Grading::validate(h, sub, gens);
  return out;
}

}  // namespace gprime
