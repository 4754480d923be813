#include "gprime/partial_action.hpp"

#include <algorithm>

#include "gprime/error.hpp"

namespace gprime {

namespace {

class Violations {
 public:
  void add(const std::string& axiom, const std::string& what) {
    if (list_.size() < 32) list_.push_back("[" + axiom + "] " + what);
  }
  bool empty() const { return list_.empty(); }
  void raise() const {
    if (!list_.empty())
      throw Error(ErrorKind::AxiomViolation, "partial action axiom violated: " + list_.front(), list_);
  }

 private:
  std::vector<std::string> list_;
};

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

constexpr Elem kNone = 0xffffffffu;

// Extends generator pairs additively; nullopt-free: reports conflicts.
bool extend_pairs(const FiniteRing& a, const std::vector<std::pair<Elem, Elem>>& pairs, std::vector<Elem>& table,
                  std::string& conflict) {
  std::vector<Elem> known{kZero};
  table[kZero] = kZero;
  for (const auto& [x, y] : pairs) {
    if (table[x] != kNone) {
      if (table[x] != y) {
        conflict = a.format(x);
        return false;
      }
      continue;
    }
    Elem c = x, d = y;
    while (table[c] == kNone) {
      const std::size_t m = known.size();
      for (std::size_t i = 0; i < m; ++i) {
        const Elem u = known[i];
        const Elem z = a.add(u, c), w = a.add(table[u], d);
        if (table[z] == kNone) {
          table[z] = w;
          known.push_back(z);
        } else if (table[z] != w) {
          conflict = a.format(z);
          return false;
        }
      }
      c = a.add(c, x);
      d = a.add(d, y);
    }
    if (table[c] != d) {
      conflict = a.format(c);
      return false;
    }
  }
  return true;
}

}  // namespace

PartialAction PartialAction::validate(const RawPartialAction& raw) {
  const FiniteGroupoid& G = raw.groupoid;
  const FiniteRing& A = raw.ambient;
  if (A.size() > kMaxAmbient)
    throw Error(ErrorKind::BoundExceeded, "ambient ring larger than " + std::to_string(kMaxAmbient) + " elements");
  if (raw.ideals.size() > G.size() || raw.maps.size() > G.size())
    throw Error(ErrorKind::MalformedInput, "more ideal or map entries than morphisms");

  auto d = std::make_shared<Data>();
  d->groupoid = G;
  d->ambient = A;
  for (Mor g = 0; g < G.size(); ++g)
    d->ideals.push_back(g < raw.ideals.size() ? ideal_generated(A, raw.ideals[g]) : AdditiveSubgroup(A));

  Violations v;
  for (Mor g = 0; g < G.size(); ++g)
    if (!is_subset(d->ideals[g], d->ideals[G.rng(g)]))
      v.add("ideal-containment", "A_" + G.label(g) + " is not inside A_" + G.object_label(G.rng(g)));

  // A = (+) A_e, with the decomposition table.
  {
    AdditiveSubgroup acc(A);
    for (Obj e = 0; e < G.num_objects(); ++e) {
      const std::size_t before = acc.size();
      for (Elem x : d->ideals[e].generators()) acc.insert(x);
      if (acc.size() != before * d->ideals[e].size())
        v.add("direct-sum", "A_" + G.object_label(e) + " meets the other object ideals");
    }
    if (acc.size() != A.size()) v.add("direct-sum", "the object ideals do not generate A");
    v.raise();
    const std::size_t n = G.num_objects();
    d->parts.assign(A.size() * n, kZero);
    std::vector<Elem> filled{kZero};
    for (Obj e = 0; e < n; ++e) {
      const std::size_t m = filled.size();
      for (std::size_t i = 0; i < m; ++i)
        for (Elem y : d->ideals[e].elements()) {
          if (y == kZero) continue;
          const Elem z = A.add(filled[i], y);
          std::copy_n(d->parts.begin() + filled[i] * n, n, d->parts.begin() + z * n);
          d->parts[z * n + e] = y;
          filled.push_back(z);
        }
    }
  }

  for (Mor g = 0; g < G.size(); ++g)
    if (!is_s_unital(d->ideals[g], d->ideals[g])) v.add("s-unital", "A_" + G.label(g) + " is not s-unital");
  v.raise();

  // sigma tables.
  d->sigma.assign(G.size(), {});
  std::vector<bool> given(G.size(), false);
  for (Mor g = 0; g < G.size(); ++g) {
    const Mor gi = G.inverse(g);
    const auto& dom = d->ideals[gi];
    const std::optional<MapSpec>* spec = g < raw.maps.size() ? &raw.maps[g] : nullptr;
    if (!spec || !*spec) {
      if (G.is_identity(g)) {
        d->sigma[g].assign(A.size(), kNone);
        for (Elem x : dom.elements()) d->sigma[g][x] = x;
        given[g] = true;
      }
      continue;
    }
    given[g] = true;
    auto& t = d->sigma[g];
    t.assign(A.size(), kNone);
    const MapSpec& m = **spec;
    if (m.kind == MapSpec::Kind::Pairs) {
      for (const auto& [x, y] : m.pairs)
        if (!dom.contains(x)) v.add("domain", "sigma_" + G.label(g) + " is given on " + A.format(x) +
                                                  ", outside A_" + G.label(gi));
      v.raise();
      std::string conflict;
      if (!extend_pairs(A, m.pairs, t, conflict))
        v.add("additive", "sigma_" + G.label(g) + " has two values at " + conflict);
    } else {
      const auto* ds = A.as<DirectSumImpl>();
      if (!m.permutation.empty() && !ds)
        throw Error(ErrorKind::MalformedInput, "summand permutation needs a direct-sum ambient ring");
      for (Elem x : dom.elements()) {
        Elem y = kZero;
        if (m.permutation.empty()) {
          y = m.frobenius ? A.impl().frobenius(x, m.frobenius) : x;
        } else {
          for (const auto& [i, j] : m.permutation) {
            if (i >= ds->count() || j >= ds->count())
              throw Error(ErrorKind::MalformedInput, "summand index out of range in sigma_" + G.label(g));
            Elem c = ds->project(i, x);
            if (m.frobenius) c = ds->summand(i).impl().frobenius(c, m.frobenius);
            if (ds->summand(i).size() != ds->summand(j).size())
              throw Error(ErrorKind::MalformedInput, "summands of different rings in sigma_" + G.label(g));
            y = A.add(y, ds->inject(j, c));
          }
        }
        t[x] = y;
      }
    }
  }
  v.raise();
  // Inverses of given maps.
  for (Mor g = 0; g < G.size(); ++g) {
    if (given[g]) continue;
    const Mor gi = G.inverse(g);
    d->sigma[g].assign(A.size(), kNone);
    if (given[gi]) {
      for (Elem x : d->ideals[G.inverse(gi)].elements()) {
        const Elem y = d->sigma[gi][x];
        if (y != kNone) d->sigma[g][y] = x;
      }
    } else if (d->ideals[g].is_zero() && d->ideals[gi].is_zero()) {
      d->sigma[g][kZero] = kZero;
    } else {
      throw Error(ErrorKind::MalformedInput, "no map given for sigma_" + G.label(g) + " or its inverse");
    }
  }

  for (Mor g = 0; g < G.size(); ++g) {
    const Mor gi = G.inverse(g);
    const auto& dom = d->ideals[gi];
    const auto& cod = d->ideals[g];
    const auto& t = d->sigma[g];
    const std::string name = "sigma_" + G.label(g);
    bool ok = true;
    for (Elem x : dom.elements())
      if (t[x] == kNone || !cod.contains(t[x])) {
        v.add("domain", name + " does not send " + A.format(x) + " into A_" + G.label(g));
        ok = false;
        break;
      }
    if (!ok) continue;
    for (Elem x = 0; x < A.size() && ok; ++x)
      if (t[x] != kNone && !dom.contains(x)) {
        v.add("domain", name + " is defined at " + A.format(x) + ", outside A_" + G.label(gi));
        ok = false;
      }
    if (!ok) continue;
    ElementSet image(A.size());
    for (Elem x : dom.elements()) image.insert(t[x]);
    if (image.size() != dom.size() || dom.size() != cod.size())
      v.add("bijective", name + " is not a bijection A_" + G.label(gi) + " -> A_" + G.label(g));
    for (Elem x : dom.elements()) {
      for (Elem y : dom.generators())
        if (t[A.add(x, y)] != A.add(t[x], t[y])) {
          v.add("additive", name + " fails additivity at " + A.format(x) + ", " + A.format(y));
          ok = false;
          break;
        }
      if (!ok) break;
    }
    for (Elem x : dom.generators())
      for (Elem y : dom.generators())
        if (ok && t[A.mul(x, y)] != A.mul(t[x], t[y])) {
          v.add("multiplicative", name + " fails multiplicativity at " + A.format(x) + ", " + A.format(y));
          ok = false;
        }
    if (G.is_identity(g))
      for (Elem x : dom.elements())
        if (t[x] != x) {
          v.add("identity", name + " moves " + A.format(x));
          break;
        }
  }
  v.raise();

  for (Mor g = 0; g < G.size(); ++g)
    for (Mor h = 0; h < G.size(); ++h) {
      const auto gh = G.compose(g, h);
      if (!gh) continue;
      const auto& ginv_ideal = d->ideals[G.inverse(g)];
      const auto& target = d->ideals[G.inverse(*gh)];
      for (Elem x : d->ideals[G.inverse(h)].elements()) {
        const Elem y = d->sigma[h][x];
        if (!ginv_ideal.contains(y)) continue;
        if (!target.contains(x)) {
          v.add("domain-compatibility", "sigma_" + G.label(h) + "^-1(A_" + G.label(G.inverse(g)) + " cap A_" +
                                            G.label(h) + ") is not inside A_" + G.label(G.inverse(*gh)) +
                                            ", witness " + A.format(x));
          break;
        }
        if (d->sigma[g][y] != d->sigma[*gh][x]) {
          v.add("composition", "sigma_" + G.label(g) + " sigma_" + G.label(h) + " != sigma_" + G.label(*gh) +
                                   " at " + A.format(x));
          break;
        }
      }
    }
  v.raise();

  PartialAction out;
  out.d_ = std::move(d);
  return out;
}

PartialAction PartialAction::groupoid_ring_action(const FiniteRing& r, const FiniteGroupoid& g) {
  std::vector<FiniteRing> summands(g.num_objects(), r);
  std::vector<std::string> labels;
  for (Obj e = 0; e < g.num_objects(); ++e) labels.push_back(g.object_label(e));
  RawPartialAction raw;
  raw.groupoid = g;
  raw.ambient = direct_sum(summands, labels);
  const auto* ds = raw.ambient.as<DirectSumImpl>();
  for (Mor x = 0; x < g.size(); ++x) {
    std::vector<Elem> gens;
    for (Elem y : r.additive_generators()) gens.push_back(ds->inject(g.rng(x), y));
    raw.ideals.push_back(gens);
    MapSpec m;
    m.kind = MapSpec::Kind::Copy;
    m.permutation = {{g.src(x), g.rng(x)}};
    raw.maps.emplace_back(m);
  }
  PartialAction out = validate(raw);
  auto d = std::make_shared<Data>(*out.d_);
  d->coefficients = r;
  out.d_ = std::move(d);
  return out;
}

Elem PartialAction::apply(Mor g, Elem x) const {
  const Elem y = d_->sigma.at(g).at(x);
  if (y == kNoImage)
    throw Error(ErrorKind::MalformedInput, "sigma_" + groupoid().label(g) + " is undefined at " + ambient().format(x));
  return y;
}

// ---------------------------------------------------------------------------

SkewRingImpl::SkewRingImpl(PartialAction action) : action_(std::move(action)) {
  const FiniteGroupoid& G = action_.groupoid();
  const FiniteRing& A = action_.ambient();
  stride_.resize(G.size());
  values_.resize(G.size());
  local_.resize(G.size());
  for (Mor g = 0; g < G.size(); ++g) {
    values_[g] = action_.ideal(g).sorted();
    local_[g].assign(A.size(), kNone);
    for (std::size_t i = 0; i < values_[g].size(); ++i) local_[g][values_[g][i]] = static_cast<Elem>(i);
    stride_[g] = size_;
    if (size_ > kMaxCarrier / values_[g].size())
      throw Error(ErrorKind::BoundExceeded,
                  "skew ring exceeds the carrier cap of " + std::to_string(kMaxCarrier) + " elements");
    size_ *= values_[g].size();
  }
}

std::vector<Elem> SkewRingImpl::digits(Elem x) const {
  std::vector<Elem> out(values_.size());
  for (std::size_t g = 0; g < values_.size(); ++g) out[g] = static_cast<Elem>((x / stride_[g]) % values_[g].size());
  return out;
}

Elem SkewRingImpl::pack(const std::vector<Elem>& d) const {
  std::size_t v = 0;
  for (std::size_t g = 0; g < d.size(); ++g) v += d[g] * stride_[g];
  return static_cast<Elem>(v);
}

Elem SkewRingImpl::add(Elem a, Elem b) const {
  const FiniteRing& A = action_.ambient();
  auto da = digits(a), db = digits(b);
  for (std::size_t g = 0; g < da.size(); ++g)
    if (db[g]) da[g] = local_[g][A.add(values_[g][da[g]], values_[g][db[g]])];
  return pack(da);
}

Elem SkewRingImpl::neg(Elem a) const {
  const FiniteRing& A = action_.ambient();
  auto da = digits(a);
  for (std::size_t g = 0; g < da.size(); ++g)
    if (da[g]) da[g] = local_[g][A.neg(values_[g][da[g]])];
  return pack(da);
}

Elem SkewRingImpl::mul(Elem a, Elem b) const {
  const FiniteGroupoid& G = action_.groupoid();
  const FiniteRing& A = action_.ambient();
  const auto da = digits(a), db = digits(b);
  std::vector<Elem> acc(G.size(), kZero);
  for (Mor g = 0; g < G.size(); ++g) {
    if (!da[g]) continue;
    const Elem back = action_.apply(G.inverse(g), values_[g][da[g]]);
    for (Mor h = 0; h < G.size(); ++h) {
      if (!db[h] || G.src(g) != G.rng(h)) continue;
      const Elem p = A.mul(back, values_[h][db[h]]);
      if (p == kZero) continue;
      const Mor gh = G.compose_or_throw(g, h);
      acc[gh] = A.add(acc[gh], action_.apply(g, p));
    }
  }
  for (Mor g = 0; g < G.size(); ++g) acc[g] = local_[g][acc[g]];
  return pack(acc);
}

std::string SkewRingImpl::describe() const {
  if (const auto& r = action_.coefficients()) return r->describe() + "[G]";
  return "Skew[" + action_.ambient().describe() + "]";
}

std::string SkewRingImpl::format(Elem a) const {
  const FiniteGroupoid& G = action_.groupoid();
  const auto da = digits(a);
  std::vector<std::string> terms;
  for (Mor g = 0; g < G.size(); ++g) {
    if (!da[g]) continue;
    const Elem x = values_[g][da[g]];
    std::string coeff;
    if (const auto& r = action_.coefficients())
      coeff = r->format(action_.ambient().as<DirectSumImpl>()->project(G.rng(g), x));
    else
      coeff = action_.ambient().format(x);
    terms.push_back("delta(" + G.label(g) + ", " + coeff + ")");
  }
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
  return out;
}

std::optional<Elem> SkewRingImpl::atom(const std::string& name, const std::vector<std::string>& args) const {
  if (name != "delta" || args.size() != 2) return std::nullopt;
  const FiniteGroupoid& G = action_.groupoid();
  const auto g = G.find(args[0]);
  if (!g) throw Error(ErrorKind::ParseError, "delta: unknown morphism '" + args[0] + "'");
  Elem x;
  if (const auto& r = action_.coefficients())
    x = action_.ambient().as<DirectSumImpl>()->inject(G.rng(*g), r->parse(args[1]));
  else
    x = action_.ambient().parse(args[1]);
  if (!action_.ideal(*g).contains(x))
    throw Error(ErrorKind::ParseError, "delta: " + args[1] + " is not in A_" + args[0]);
  return embed(*g, x);
}

std::vector<Elem> SkewRingImpl::natural_generators() const {
  std::vector<Elem> out;
  for (Mor g = 0; g < values_.size(); ++g)
    for (Elem x : action_.ideal(g).generators()) out.push_back(embed(g, x));
  return out;
}

std::optional<std::optional<Elem>> SkewRingImpl::identity_hint() const {
  const FiniteGroupoid& G = action_.groupoid();
  const FiniteRing& A = action_.ambient();
  Elem one = kZero;
  for (Obj e = 0; e < G.num_objects(); ++e) {
    const auto& ae = action_.ideal(e);
    if (ae.is_zero()) continue;
    std::optional<Elem> u;
    for (Elem c : ae.sorted()) {
      bool ok = true;
      for (Elem x : ae.generators())
        if (A.mul(c, x) != x || A.mul(x, c) != x) {
          ok = false;
          break;
        }
      if (ok) {
        u = c;
        break;
      }
    }
    if (!u) return std::optional<Elem>{};
    one = add(one, embed(e, *u));
  }
  return std::optional<Elem>{one};
}

Elem SkewRingImpl::embed(Mor g, Elem a) const {
  const Elem l = local_.at(g).at(a);
  if (l == kNone) throw Error(ErrorKind::MalformedInput, "coefficient outside A_" + action_.groupoid().label(g));
  return static_cast<Elem>(l * stride_[g]);
}

Elem SkewRingImpl::coefficient(Elem x, Mor g) const {
  return values_.at(g)[(x / stride_[g]) % values_[g].size()];
}

Parts SkewRingImpl::decompose(Elem x) const {
  Parts out;
  for (Mor g = 0; g < values_.size(); ++g) {
    const std::size_t dg = (x / stride_[g]) % values_[g].size();
    if (dg) out.emplace_back(g, static_cast<Elem>(dg * stride_[g]));
  }
  return out;
}

Grading build_skew_ring(const PartialAction& action) {
  auto impl = std::make_shared<SkewRingImpl>(action);
  const FiniteRing ring(impl);
  const FiniteGroupoid& G = action.groupoid();
  std::vector<std::vector<Elem>> gens(G.size());
  for (Mor g = 0; g < G.size(); ++g)
    for (Elem x : action.ideal(g).generators()) gens[g].push_back(impl->embed(g, x));
  Grading s;
  if (ring.size() <= kDefaultOracleBound) {
    s = Grading::validate(G, ring, gens);
  } else {
    std::vector<AdditiveSubgroup> comps;
    for (Mor g = 0; g < G.size(); ++g) comps.push_back(additive_closure(ring, gens[g]));
    s = Grading::from_components(G, ring, std::move(comps), [impl](Elem x) { return impl->decompose(x); });
  }
  ring.check_axioms();
  const auto nes = nearly_epsilon_strong(s);
  if (!nes.holds)
    throw Error(ErrorKind::InternalDisagreement, "skew ring of a valid partial action is not nearly epsilon-strong: " +
                                                     nes.reason);
  return s;
}

Grading build_groupoid_ring(const FiniteRing& r, const FiniteGroupoid& g) {
  return build_skew_ring(PartialAction::groupoid_ring_action(r, g));
}

bool is_global(const PartialAction& action) {
  const FiniteGroupoid& G = action.groupoid();
  for (Mor g = 0; g < G.size(); ++g)
    if (!(action.ideal(g) == action.ideal(G.rng(g)))) return false;
  return true;
}

GroupTypeResult group_type(const PartialAction& action) {
  const FiniteGroupoid& G = action.groupoid();
  GroupTypeResult out;
  if (!is_connected(G)) {
    out.reason = "groupoid is not connected";
    return out;
  }
  for (Obj e = 0; e < G.num_objects(); ++e) {
    std::vector<Mor> family(G.num_objects(), 0);
    bool ok = true;
    for (Obj f = 0; f < G.num_objects() && ok; ++f) {
      if (f == e) {
        family[f] = G.identity(e);
        continue;
      }
      bool found = false;
      for (Mor h = 0; h < G.size() && !found; ++h)
        if (G.src(h) == e && G.rng(h) == f && action.ideal(G.inverse(h)) == action.ideal(e) &&
            action.ideal(h) == action.ideal(f)) {
          family[f] = h;
          found = true;
        }
      ok = found;
    }
    if (ok) {
      out.group_type = true;
      out.anchor = e;
      out.family = std::move(family);
      return out;
    }
  }
  out.reason = "no anchor object admits a full morphism family";
  return out;
}

bool is_sigma_invariant(const PartialAction& action, const AdditiveSubgroup& i, const std::vector<Mor>& morphisms) {
  const FiniteGroupoid& G = action.groupoid();
  for (Mor g : morphisms) {
    const AdditiveSubgroup dom = intersect(i, action.ideal(G.inverse(g)));
    for (Elem x : dom.elements())
      if (!i.contains(action.apply(g, x))) return false;
  }
  return true;
}

AdditiveSubgroup sigma_invariant_closure(const PartialAction& action, const std::vector<Elem>& seed,
                                         const std::vector<Obj>& objects, const std::vector<Mor>& morphisms) {
  const FiniteGroupoid& G = action.groupoid();
  AdditiveSubgroup within(action.ambient());
  for (Obj e : objects)
    for (Elem x : action.ideal(e).generators()) within.insert(x);
  AdditiveSubgroup cur = additive_closure(action.ambient(), seed);
  for (;;) {
    cur = ideal_generated_in(within, cur.generators());
    bool changed = false;
    for (Mor g : morphisms) {
      const AdditiveSubgroup dom = intersect(cur, action.ideal(G.inverse(g)));
      for (Elem x : dom.generators()) changed |= cur.insert(action.apply(g, x));
    }
    if (!changed) return cur;
  }
}

PairVerdict is_A_G_prime(const PartialAction& action, const std::vector<Obj>& objects,
                         const std::vector<Mor>& morphisms, std::size_t bound) {
  AdditiveSubgroup within(action.ambient());
  for (Obj e : objects)
    for (Elem x : action.ideal(e).generators()) within.insert(x);
  PairVerdict out;
  if (within.is_zero()) {
    out.degenerate = true;
    return out;
  }
  if (within.size() > bound) throw Error(ErrorKind::BoundExceeded, "invariant-ideal search exceeds the bound");
  std::vector<Elem> cands = within.sorted();
  cands.erase(cands.begin());
  auto hit = first_zero_pair<AdditiveSubgroup>(
      cands.size(), [&](std::size_t i) { return sigma_invariant_closure(action, {cands[i]}, objects, morphisms); },
      [](const AdditiveSubgroup& I) { return I.hash(); },
      [](const AdditiveSubgroup& I, const AdditiveSubgroup& J) { return product_is_zero(I, J); });
  out.prime = !hit;
  if (hit) out.witness = std::pair{cands[hit->first], cands[hit->second]};
  return out;
}

PairVerdict is_A_G_prime(const PartialAction& action, std::size_t bound) {
  return is_A_G_prime(action, all_objects(action.groupoid()), all_morphisms(action.groupoid()), bound);
}

PairVerdict is_isotropy_prime(const PartialAction& action, Obj e, std::size_t bound) {
  return is_A_G_prime(action, {e}, isotropy(action.groupoid(), e).morphisms(), bound);
}

PsiCheck psi_check(const PartialAction& action, const Grading& skew, std::size_t bound) {
  const FiniteGroupoid& G = action.groupoid();
  const FiniteRing& A = action.ambient();
  const FiniteRing& S = skew.ring();
  const auto* impl = S.as<SkewRingImpl>();
  if (!impl) throw Error(ErrorKind::RingMismatch, "grading is not a skew ring");
  auto psi = [&](Elem a) {
    Elem out = kZero;
    for (Obj e = 0; e < G.num_objects(); ++e) {
      const Elem part = action.object_part(a, e);
      if (part != kZero) out = S.add(out, impl->embed(e, part));
    }
    return out;
  };
  PsiCheck out;
  out.ring_isomorphism = true;
  const auto& gens = A.additive_generators();
  for (Elem x : gens)
    for (Elem y : gens) {
      if (psi(A.add(x, y)) != S.add(psi(x), psi(y))) {
        out.ring_isomorphism = false;
        out.reason = "psi is not additive at " + A.format(x) + ", " + A.format(y);
      }
      if (psi(A.mul(x, y)) != S.mul(psi(x), psi(y))) {
        out.ring_isomorphism = false;
        out.reason = "psi is not multiplicative at " + A.format(x) + ", " + A.format(y);
      }
    }
  const AdditiveSubgroup p0 = skew.principal_part();
  if (p0.size() != A.size()) {
    out.ring_isomorphism = false;
    out.reason = "principal part and A differ in size";
  }
  for (Elem a = 1; a < A.size() && out.ring_isomorphism; ++a) {
    const Elem y = psi(a);
    if (y == kZero || !p0.contains(y)) {
      out.ring_isomorphism = false;
      out.reason = "psi is not injective into the principal part at " + A.format(a);
    }
  }
  out.a_g_prime = is_A_G_prime(action, bound).prime;
  out.principal_g_prime = is_G_prime_principal(skew, bound).prime;
  if (out.a_g_prime != out.principal_g_prime && out.reason.empty())
    out.reason = "A and the principal part disagree on G-primeness";
  out.ok = out.ring_isomorphism && out.a_g_prime == out.principal_g_prime;
  return out;
}

ChainResult group_type_chain(const PartialAction& action, const Grading& skew, Obj e) {
  const FiniteGroupoid& G = action.groupoid();
  const FiniteRing& A = action.ambient();
  if (action.ideal(e).is_zero())
    throw Error(ErrorKind::ObjectNotInG0Prime, "object " + G.object_label(e) + " has A_e = {0}");
  ChainResult out;
  out.holds[0] = group_type(action).group_type;
  bool membership = true, annihilation = true;
  for (Mor g = 0; g < G.size(); ++g)
    for (Elem a : action.ideal(g).elements()) {
      if (a == kZero) continue;
      bool mem = false, ann = false;
      for (Mor k = 0; k < G.size(); ++k) {
        if (G.src(k) != G.rng(g) || G.rng(k) != e) continue;
        const auto& dom = action.ideal(G.inverse(k));
        mem = mem || dom.contains(a);
        for (Elem u : dom.generators())
          if (A.mul(u, a) != kZero) {
            ann = true;
            break;
          }
      }
      if (!mem && membership) {
        membership = false;
        out.failing_coefficient = a;
      }
      annihilation = annihilation && ann;
    }
  out.holds[1] = membership;
  out.holds[2] = annihilation;
  out.holds[3] = is_support_hub(skew, e).hub;
  const bool chain = (!out.holds[0] || out.holds[1]) && (!out.holds[1] || out.holds[2]) && out.holds[2] == out.holds[3];
  if (!chain)
    throw Error(ErrorKind::InternalDisagreement, "group-type implication chain broken at " + G.object_label(e));
  return out;
}

ConnellResult connell_check(const FiniteRing& r, const FiniteGroupoid& g, std::size_t bound) {
  ConnellResult out;
  out.connected = is_connected(g);
  out.ring_prime = is_prime_bruteforce(r, bound).prime;
  out.no_finite_normal = true;
  for (Obj e = 0; e < g.num_objects(); ++e)
    if (has_nontrivial_finite_normal_subgroup(isotropy(g, e)).found) {
      out.no_finite_normal = false;
      out.normal_witness_object = e;
      break;
    }
  return out;
}

DensityResult r_dense(const Grading& group_ring, const std::vector<Obj>& x, std::size_t bound) {
  const FiniteGroupoid& G = group_ring.groupoid();
  const FiniteRing& S = group_ring.ring();
  if (S.size() > bound) throw Error(ErrorKind::BoundExceeded, "density check enumerates the ring; too large");
  std::vector<bool> in(G.num_objects(), false);
  for (Obj e : x) in.at(e) = true;
  DensityResult out;
  out.dense = true;
  for (Elem a = 1; a < S.size(); ++a) {
    bool hit = false;
    for (const auto& [g, part] : group_ring.decompose(a))
      if (in[G.src(g)]) {
        hit = true;
        break;
      }
    if (!hit) {
      out.dense = false;
      out.witness = a;
      return out;
    }
  }
  return out;
}

DensityResult orbit_density_check(const Grading& group_ring, Obj e, std::size_t bound) {
  return r_dense(group_ring, orbit(group_ring.groupoid(), e), bound);
}

SufficientConditions sufficient_conditions_report(const PartialAction& action, const Grading& skew,
                                                  std::optional<bool> oracle_prime, std::size_t bound) {
  const FiniteGroupoid& G = action.groupoid();
  const FiniteRing& A = action.ambient();
  SufficientConditions out;
  out.group_type = group_type(action).group_type;
  out.a_g_prime = is_A_G_prime(action, bound).prime;
  out.hypothesis = out.group_type || out.a_g_prime;
  const bool commutative = A.is_commutative();
  for (Obj e = 0; e < G.num_objects(); ++e) {
    const auto& ae = action.ideal(e);
    if (ae.is_zero()) continue;
    const FiniteGroup iso = isotropy(G, e);
    const bool iso_prime = is_isotropy_prime(action, e, bound).prime;

    const bool c1 = iso.order() == 1 && is_prime_bruteforce(subring_on(A, ae.sorted()), bound).prime;

    const IsotropyComponent comp = isotropy_component(skew, e);
    const FiniteRing& t = comp.grading.ring();
    if (t.size() > bound) throw Error(ErrorKind::BoundExceeded, "isotropy skew ring exceeds the bound");
    const Mor id_local = *comp.grading.groupoid().find(G.object_label(e));
    const AdditiveSubgroup& base = comp.grading.component(id_local);
    bool intersection = true;
    for (Elem x = 1; x < t.size() && intersection; ++x)
      if (intersect(ideal_generated(t, {x}), base).is_zero()) intersection = false;
    const bool c2 = intersection && iso_prime;

    const bool c3 = commutative && is_maximal_commutative(t, base) && iso_prime;

    const std::array<bool, 3> c{c1, c2, c3};
    for (std::size_t i = 0; i < 3; ++i)
      if (c[i] && !out.holds[i]) {
        out.holds[i] = true;
        out.at[i] = e;
      }
  }
  if (oracle_prime && out.implies_prime() && !*oracle_prime)
    throw Error(ErrorKind::InternalDisagreement, "sufficient condition holds but the skew ring is not prime");
  return out;
}

GlobalChain global_action_chain(const PartialAction& action, const Grading& skew, std::size_t bound) {
  if (!is_global(action)) throw Error(ErrorKind::MalformedInput, "action is not global");
  const FiniteGroupoid& G = action.groupoid();
  GlobalChain out;
  out.support_connected = support_groupoid(skew).connected;
  out.every_hub = true;
  bool any_support = false;
  for (Obj e = 0; e < G.num_objects(); ++e) {
    if (action.ideal(e).is_zero()) continue;
    any_support = true;
    const bool hub = is_support_hub(skew, e).hub;
    out.every_hub = out.every_hub && hub;
    out.some_hub = out.some_hub || hub;
  }
  if (!any_support) out.every_hub = false;
  if (out.support_connected != out.every_hub || out.every_hub != out.some_hub)
    throw Error(ErrorKind::InternalDisagreement, "support connectivity and support-hub conditions disagree");

  out.group_type = group_type(action).group_type;
  if (skew.ring().size() <= bound) {
    out.skew_prime = is_prime_bruteforce(skew.ring(), bound).prime;
    bool some = false;
    for (Obj e = 0; e < G.num_objects(); ++e) {
      if (action.ideal(e).is_zero()) continue;
      some = some || is_prime_bruteforce(isotropy_component(skew, e).grading.ring(), bound).prime;
    }
    out.some_isotropy_prime = some;
    if (out.group_type && *out.skew_prime != some)
      throw Error(ErrorKind::InternalDisagreement, "group-type primeness criterion fails");
  }
  return out;
}

}  // namespace gprime
