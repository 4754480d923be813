#include "gprime/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "gprime/error.hpp"
#include "gprime/partial_action.hpp"

namespace gprime {

void PropertyTally::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  ++failed;
  if (failures.size() < 8) failures.push_back(what);
}

bool PropertyReport::ok() const {
  if (disagreement) return false;
  for (const auto& [name, t] : properties)
    if (t.failed) return false;
  return true;
}

void PropertyReport::merge(const PropertyReport& other) {
  for (const auto& [name, t] : other.properties) {
    auto& mine = properties[name];
    mine.checked += t.checked;
    mine.failed += t.failed;
    for (const auto& f : t.failures)
      if (mine.failures.size() < 8) mine.failures.push_back(f);
  }
  disagreement = disagreement || other.disagreement;
  witnesses_emitted += other.witnesses_emitted;
  witnesses_replayed += other.witnesses_replayed;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > (std::size_t{1} << 40)) return r;
    r *= b;
  }
  return r;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::size_t below(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

std::string obj_name(char comp, std::size_t i) { return std::string(1, comp) + std::to_string(i); }

// Morphism label of (i <- j, x) inside transitive_groupoid / pair_groupoid.
std::string tlabel(const std::vector<std::string>& objs, std::size_t i, std::size_t j, std::size_t x,
                   std::size_t order) {
  if (i == j && x == 0) return objs[i];
  std::string s = objs[i] + "<-" + objs[j];
  if (order > 1) s += ":" + std::string(x == 0 ? "1" : "c" + std::to_string(x));
  return s;
}

std::string unit(std::size_t a, std::size_t c, const std::string& coeff) {
  std::string s = "e(" + std::to_string(a + 1) + "," + std::to_string(c + 1);
  if (!coeff.empty()) s += "," + coeff;
  return s + ")";
}

// Matrix units over a disjoint union of pair groupoids; blocks may be empty.
FuzzCase matrix_blocks(std::mt19937_64& rng, std::size_t max_ring) {
  struct Base {
    std::size_t q;
    Json ring;
  };
  const std::vector<Base> bases = {{2, {{"kind", "gf"}, {"p", 2}}},
                                   {3, {{"kind", "gf"}, {"p", 3}}},
                                   {4, {{"kind", "gf"}, {"p", 2}, {"k", 2}}}};
  for (;;) {
    const Base& b = pick(rng, bases);
    const std::size_t n = 1 + below(rng, 3);
    const std::size_t k = 1 + below(rng, 3);
    std::vector<std::size_t> block(n);
    for (auto& x : block) x = below(rng, k);
    std::vector<std::size_t> comp(k);
    std::size_t groups = 0;
    for (std::size_t o = 0; o < k; ++o) comp[o] = (o == 0 || below(rng, 2)) ? groups++ : comp[o - 1];
    std::vector<std::vector<std::string>> members(groups);
    std::vector<std::string> names;
    for (std::size_t o = 0; o < k; ++o) {
      names.push_back(obj_name('o', o));
      members[comp[o]].push_back(names.back());
    }
    // ring = span of e_ab with comp(block a) == comp(block b)
    std::size_t dim = 0;
    std::vector<std::string> units;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c)
        if (comp[block[a]] == comp[block[c]]) {
          ++dim;
          units.push_back(unit(a, c, ""));
          if (b.q == 4) units.push_back(unit(a, c, "a"));
        }
    const std::size_t size = ipow(b.q, dim);
    if (size > max_ring || size > (std::size_t{1} << 16)) continue;
    Json doc;
    doc["schema"] = kInstanceSchema;
    doc["name"] = "matrix-blocks";
    Json parts = Json::array();
    for (const auto& m : members) parts.push_back({{"kind", "pair"}, {"objects", m}});
    doc["groupoid"] = groups == 1 ? parts[0] : Json{{"kind", "disjoint_union"}, {"parts", parts}};
    Json full = {{"kind", "matrix"}, {"n", n}, {"over", b.ring}};
    doc["ring"] = dim == n * n ? full : Json{{"kind", "subring"}, {"of", full}, {"generators", units}};
    Json grading = Json::object();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (comp[i] != comp[j]) continue;
        Json gens = Json::array();
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t c = 0; c < n; ++c)
            if (block[a] == i && block[c] == j) {
              gens.push_back(unit(a, c, ""));
              if (b.q == 4) gens.push_back(unit(a, c, "a"));
            }
        grading[tlabel(names, i, j, 0, 1)] = gens;
      }
    doc["grading"] = grading;
    return {"matrix_blocks", doc};
  }
}

Json group_json(std::size_t order) { return {{"kind", "cyclic"}, {"n", order}}; }

FuzzCase groupoid_ring_case(std::mt19937_64& rng, std::size_t max_ring) {
  struct Coeff {
    std::size_t size;
    Json ring;
  };
  const std::vector<Coeff> coeffs = {
      {2, {{"kind", "gf"}, {"p", 2}}},
      {3, {{"kind", "gf"}, {"p", 3}}},
      {4, {{"kind", "zmod"}, {"n", 4}}},
      {4, {{"kind", "direct_sum"}, {"summands", {{{"kind", "gf"}, {"p", 2}}, {{"kind", "gf"}, {"p", 2}}}}}}};
  struct Shape {
    std::size_t morphisms;
    Json groupoid;
  };
  auto pair = [](std::vector<std::string> o) { return Json{{"kind", "pair"}, {"objects", o}}; };
  const std::vector<Shape> shapes = {
      {1, {{"kind", "group"}, {"group", group_json(1)}}},
      {2, {{"kind", "group"}, {"group", group_json(2)}}},
      {3, {{"kind", "group"}, {"group", group_json(3)}}},
      {4, {{"kind", "group"}, {"group", {{"kind", "klein"}}}}},
      {4, pair({"a0", "a1"})},
      {9, pair({"a0", "a1", "a2"})},
      {2, {{"kind", "discrete"}, {"objects", {"a0", "a1"}}}},
      {3, {{"kind", "discrete"}, {"objects", {"a0", "a1", "a2"}}}},
      {8, {{"kind", "transitive"}, {"objects", {"a0", "a1"}}, {"group", group_json(2)}}},
      {5, {{"kind", "disjoint_union"}, {"parts", {pair({"a0", "a1"}), pair({"b0"})}}}},
      {8, {{"kind", "disjoint_union"}, {"parts", {pair({"a0", "a1"}), pair({"b0", "b1"})}}}},
      {6, {{"kind", "disjoint_union"},
           {"parts", {{{"kind", "group"}, {"group", group_json(2)}, {"object", "a0"}}, pair({"b0", "b1"})}}}}};
  for (;;) {
    const Coeff& c = pick(rng, coeffs);
    const Shape& s = pick(rng, shapes);
    if (ipow(c.size, s.morphisms) > max_ring) continue;
    Json doc;
    doc["schema"] = kInstanceSchema;
    doc["name"] = "groupoid-ring";
    doc["groupoid"] = s.groupoid;
    doc["ring"] = c.ring;
    doc["groupoid_ring"] = Json::object();
    return {"groupoid_ring", doc};
  }
}

// A disjoint union of transitive groupoids with cyclic isotropy acting on a
// direct sum of copies of one field, atoms permuted (and Frobenius-twisted for
// GF(4) under Z/2). With `partial`, restricted to a random union of atoms.
FuzzCase action_case(std::mt19937_64& rng, std::size_t max_ring, bool partial) {
  struct Field {
    std::size_t q;
    Json ring;
    bool twist;
  };
  const std::vector<Field> fields = {{2, {{"kind", "gf"}, {"p", 2}}, false},
                                     {3, {{"kind", "gf"}, {"p", 3}}, false},
                                     {4, {{"kind", "gf"}, {"p", 2}, {"k", 2}}, true}};
  for (;;) {
    const Field& f = pick(rng, fields);
    const std::size_t comps = 1 + (below(rng, 3) == 0);
    struct Comp {
      std::vector<std::string> objs;
      std::size_t order;
      std::size_t atoms;
      std::vector<std::size_t> perm;  // action of the generator on atom indices
      unsigned frob;
    };
    std::vector<Comp> cs;
    std::size_t total_morphisms = 0;
    for (std::size_t c = 0; c < comps; ++c) {
      Comp x;
      const std::size_t k = 1 + below(rng, 3);
      for (std::size_t i = 0; i < k; ++i) x.objs.push_back(obj_name(static_cast<char>('a' + c), i));
      x.order = 1 + below(rng, 3);
      x.atoms = 1 + below(rng, 3);
      x.perm.resize(x.atoms);
      std::iota(x.perm.begin(), x.perm.end(), 0);
      if (x.order == 2 && x.atoms >= 2 && below(rng, 2)) std::swap(x.perm[0], x.perm[1]);
      if (x.order == 3 && x.atoms == 3 && below(rng, 2)) x.perm = {1, 2, 0};
      x.frob = (x.order == 2 && f.twist) ? static_cast<unsigned>(below(rng, 2)) : 0;
      total_morphisms += k * k * x.order;
      cs.push_back(std::move(x));
    }
    if (total_morphisms > 40) continue;
    // atom labels and the kept set U
    std::vector<std::string> atom_labels;
    std::vector<std::vector<std::vector<bool>>> kept(comps);
    for (std::size_t c = 0; c < comps; ++c) {
      kept[c].assign(cs[c].objs.size(), std::vector<bool>(cs[c].atoms, true));
      for (std::size_t i = 0; i < cs[c].objs.size(); ++i)
        for (std::size_t a = 0; a < cs[c].atoms; ++a)
          if (partial) kept[c][i][a] = below(rng, 3) != 0;
    }
    auto atom_name = [&](std::size_t c, std::size_t i, std::size_t a) {
      return cs[c].objs[i] + "_" + std::to_string(a + 1);
    };
    std::size_t ambient_atoms = 0;
    for (std::size_t c = 0; c < comps; ++c)
      for (std::size_t i = 0; i < cs[c].objs.size(); ++i)
        for (std::size_t a = 0; a < cs[c].atoms; ++a)
          if (kept[c][i][a]) {
            atom_labels.push_back(atom_name(c, i, a));
            ++ambient_atoms;
          }
    if (ambient_atoms == 0 || ipow(f.q, ambient_atoms) > kMaxAmbient) continue;
    auto perm_pow = [&](const Comp& x, std::size_t t, std::size_t a) {
      for (std::size_t s = 0; s < t; ++s) a = x.perm[a];
      return a;
    };
    Json ideals = Json::object(), maps = Json::object();
    std::size_t exponent = 0;
    for (std::size_t c = 0; c < comps; ++c) {
      const Comp& x = cs[c];
      for (std::size_t i = 0; i < x.objs.size(); ++i)
        for (std::size_t j = 0; j < x.objs.size(); ++j)
          for (std::size_t t = 0; t < x.order; ++t) {
            // g = (i <- j, c^t): atom (j, a) goes to (i, pi^t(a))
            Json gens = Json::array(), permute = Json::array();
            for (std::size_t a = 0; a < x.atoms; ++a) {
              const std::size_t b = perm_pow(x, t, a);
              if (!kept[c][j][a] || !kept[c][i][b]) continue;
              gens.push_back("at(" + atom_name(c, i, b) + ",1)");
              permute.push_back({atom_name(c, j, a), atom_name(c, i, b)});
              ++exponent;
            }
            const std::string label = tlabel(x.objs, i, j, t, x.order);
            ideals[label] = gens;
            if (!permute.empty() && !(i == j && t == 0)) {
              Json m = {{"permute", permute}};
              const unsigned fr = (x.frob * t) % 2;
              if (fr) m["frobenius"] = fr;
              maps[label] = m;
            }
          }
    }
    if (ipow(f.q, exponent) > max_ring) continue;
    Json doc;
    doc["schema"] = kInstanceSchema;
    doc["name"] = partial ? "partial-action" : "global-action";
    Json parts = Json::array();
    for (const auto& x : cs)
      parts.push_back({{"kind", "transitive"}, {"objects", x.objs}, {"group", group_json(x.order)}});
    doc["groupoid"] = comps == 1 ? parts[0] : Json{{"kind", "disjoint_union"}, {"parts", parts}};
    Json summands = Json::array();
    for (std::size_t i = 0; i < atom_labels.size(); ++i) summands.push_back(f.ring);
    doc["ring"] = {{"kind", "direct_sum"}, {"summands", summands}, {"labels", atom_labels}};
    doc["partial_action"] = {{"ideals", ideals}, {"maps", maps}};
    return {partial ? "partial_action" : "global_action", doc};
  }
}

// Random generator lists on M2(F2) over P2: mostly invalid, only validated.
Json random_grading(std::mt19937_64& rng) {
  const std::vector<std::string> labels = {"a0", "a1", "a0<-a1", "a1<-a0"};
  const std::vector<std::string> units = {"e(1,1)", "e(1,2)", "e(2,1)", "e(2,2)", "e(1,1)+e(2,2)", "e(1,2)+e(2,1)"};
  Json grading = Json::object();
  auto one = [](const char* x) { return Json::array({x}); };
  if (below(rng, 4) == 0) {
    // the lawful matrix-unit grading, sometimes with the diagonal units swapped
    const bool swap = below(rng, 2);
    grading["a0"] = one(swap ? "e(2,2)" : "e(1,1)");
    grading["a1"] = one(swap ? "e(1,1)" : "e(2,2)");
    grading["a0<-a1"] = one("e(1,2)");
    grading["a1<-a0"] = one("e(2,1)");
    return {{"schema", kInstanceSchema},
            {"groupoid", {{"kind", "pair"}, {"objects", {"a0", "a1"}}}},
            {"ring", {{"kind", "matrix"}, {"n", 2}, {"over", {{"kind", "gf"}, {"p", 2}}}}},
            {"grading", grading}};
  }
  for (const auto& l : labels) {
    Json gens = Json::array();
    const std::size_t n = below(rng, 3);
    for (std::size_t i = 0; i < n; ++i) gens.push_back(pick(rng, units));
    grading[l] = gens;
  }
  return {{"schema", kInstanceSchema},
          {"groupoid", {{"kind", "pair"}, {"objects", {"a0", "a1"}}}},
          {"ring", {{"kind", "matrix"}, {"n", 2}, {"over", {{"kind", "gf"}, {"p", 2}}}}},
          {"grading", grading}};
}

std::vector<bool> isotropy_mask(const FiniteGroupoid& g, Obj e) {
  std::vector<bool> m(g.size(), false);
  for (Mor x = 0; x < g.size(); ++x) m[x] = g.src(x) == e && g.rng(x) == e;
  return m;
}

// Elements used by the sampled algebraic identities.
std::vector<Elem> sample(const Grading& s, std::size_t n) {
  std::vector<Elem> out;
  const auto& hom = s.homogeneous_elements();
  for (std::size_t i = 0; i < hom.size() && out.size() < n / 2; i += 1 + hom.size() / n) out.push_back(hom[i].first);
  std::vector<Elem> mixed;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) mixed.push_back(s.ring().add(out[i], out[i + 1]));
  out.insert(out.end(), mixed.begin(), mixed.end());
  return out;
}

class Checker {
 public:
  Checker(const Instance& in, PropertyReport& pr) : in_(in), s_(in.grading), pr_(pr) {}

  template <class F>
  void run(const std::string& name, F&& f) {
    try {
      f(pr_.properties[name]);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BoundExceeded) return;
      pr_.properties[name].record(false, in_.name + ": " + e.what());
      if (e.kind() == ErrorKind::InternalDisagreement) pr_.disagreement = true;
    }
  }

  void witness(bool ok, const std::string& what) {
    ++pr_.witnesses_emitted;
    if (ok) ++pr_.witnesses_replayed;
    pr_.properties["witness_replay"].record(ok, in_.name + ": " + what);
  }

  const Instance& in_;
  const Grading& s_;
  PropertyReport& pr_;
};

void check_theorem(Checker& c, const PrimenessReport& r) {
  const Grading& s = c.s_;
  const FiniteRing& ring = s.ring();
  const std::size_t bound = c.in_.bounds.oracle;
  const std::string& name = c.in_.name;
  if (r.nearly_epsilon_strong && !r.degenerate) c.pr_.properties["seven_way"].record(r.agree, name);
  if (r.oracle && r.conditions[6])
    c.pr_.properties["oracle_vs_theorem"].record(*r.oracle == *r.conditions[6], name);
  if (!r.degenerate && !r.g_prime.degenerate && !r.graded_prime.degenerate)
    c.pr_.properties["graded_vs_g_prime"].record(r.g_prime.prime == r.graded_prime.prime, name);

  // witnesses
  if (r.witness) c.witness(replay_witness(ring, r.witness->first, r.witness->second, bound), "report witness");
  if (r.oracle_witness)
    c.witness(verify_prime_witness(ring, r.oracle_witness->a, r.oracle_witness->b), "oracle witness");
  if (r.graded_prime.witness) {
    const auto [a, b] = *r.graded_prime.witness;
    const auto da = s.degree(a), db = s.degree(b);
    bool ok = da && db;
    if (ok) {
      const GradedIdeal ia = graded_ideal_closure(s, {{*da, a}}), ib = graded_ideal_closure(s, {{*db, b}});
      ok = !ia.is_zero() && !ib.is_zero() && graded_product_is_zero(s, ia, ib) && annihilating_pair(ring, a, b);
    }
    c.witness(ok, "graded witness");
  }
  if (r.g_prime.witness) {
    const auto [a, b] = *r.g_prime.witness;
    const auto ia = invariant_closure(s, {a}), ib = invariant_closure(s, {b});
    c.witness(!ia.is_zero() && !ib.is_zero() && product_is_zero(ia, ib), "G-prime witness");
  }
  for (const auto& ev : r.objects) {
    if (ev.isotropy_witness)
      c.witness(annihilating_pair(ring, ev.isotropy_witness->first, ev.isotropy_witness->second),
                "isotropy witness at " + s.groupoid().object_label(ev.object));
    if (ev.hub && !ev.hub->hub) {
      bool ok = ev.hub->blocker.has_value();
      if (ok) ok = !hub_blocks(s, ev.object, *ev.hub->blocker).hub;
      c.witness(ok, "hub blocker at " + s.groupoid().object_label(ev.object));
    }
  }

  // lemmas relating hubs, support and primeness
  const SupportGroupoid sup = support_groupoid(s);
  bool any_hub = false, all_hub = !r.objects.empty();
  for (const auto& ev : r.objects)
    if (ev.hub) {
      any_hub = any_hub || ev.hub->hub;
      all_hub = all_hub && ev.hub->hub;
    }
  if (any_hub) c.pr_.properties["hub_implies_connected_support"].record(sup.connected, name);
  if (!r.degenerate && r.graded_prime.prime && !r.graded_prime.degenerate)
    c.pr_.properties["graded_prime_implies_every_hub"].record(all_hub, name);
  if (r.oracle && *r.oracle) {
    bool iso = true;
    for (const auto& ev : r.objects)
      if (ev.in_support && ev.isotropy_prime) iso = iso && *ev.isotropy_prime;
    c.pr_.properties["prime_implies_graded_and_isotropy"].record(r.graded_prime.prime && iso, name);
  }
  if (r.oracle && r.nearly_epsilon_strong) {
    for (const auto& ev : r.objects) {
      if (!ev.in_support || !ev.hub) continue;
      if (ev.hub->hub && ev.isotropy_prime && *ev.isotropy_prime)
        c.pr_.properties["hub_and_isotropy_imply_prime"].record(*r.oracle, name);
      c.run("torsion_free_shortcut", [&](PropertyTally& t) {
        if (auto v = torsion_free_shortcut(s, ev.object, bound)) t.record(*v == *r.oracle, name);
      });
    }
  }
}

void check_structure(Checker& c, const PrimenessReport& r) {
  const Grading& s = c.s_;
  const FiniteRing& ring = s.ring();
  const FiniteGroupoid& g = s.groupoid();
  const std::string& name = c.in_.name;
  const std::size_t bound = c.in_.bounds.oracle;
  if (r.nearly_epsilon_strong) {
    c.run("s_unital_parts", [&](PropertyTally& t) {
      const AdditiveSubgroup p0 = s.principal_part();
      t.record(is_s_unital(p0, p0), name + ": principal part");
      for (Obj e = 0; e < g.num_objects(); ++e)
        if (!s.component(e).is_zero()) t.record(is_s_unital(s.component(e), s.component(e)), name + ": S_e");
      if (ring.size() <= bound) {
        const AdditiveSubgroup w = whole_ring(ring);
        t.record(is_s_unital(w, w), name + ": whole ring");
      }
    });
  }
  const std::vector<Elem> xs = sample(s, 24);
  for (const auto& ev : r.objects) {
    if (!ev.in_support) continue;
    const std::vector<bool> h = isotropy_mask(g, ev.object);
    c.run("projection_lemma", [&](PropertyTally& t) {
      std::vector<Elem> hs;
      for (const auto& [x, d] : s.homogeneous_elements())
        if (h[d] && hs.size() < 8) hs.push_back(x);
      for (Elem a : xs) {
        for (Elem b : hs) {
          t.record(project(s, h, ring.mul(a, b)) == ring.mul(project(s, h, a), b), name + ": right");
          t.record(project(s, h, ring.mul(b, a)) == ring.mul(b, project(s, h, a)), name + ": left");
        }
        for (Elem b : xs)
          t.record(project(s, h, ring.add(a, b)) == ring.add(project(s, h, a), project(s, h, b)), name + ": additive");
      }
    });
    // nonzero ideals project onto nonzero ideals of the isotropy component at a hub
    if (ev.hub && ev.hub->hub && ring.size() <= bound && !s.homogeneous_elements().empty()) {
      c.run("hub_projection", [&](PropertyTally& t) {
        std::vector<Elem> seeds = {s.homogeneous_elements().back().first};
        if (r.oracle_witness) seeds = {r.oracle_witness->a, r.oracle_witness->b};
        for (Elem seed : seeds) {
          const Ideal i = ideal_generated(ring, {seed});
          std::vector<Elem> proj;
          for (Elem x : i.generators()) proj.push_back(project(s, h, x));
          const AdditiveSubgroup q = additive_closure(ring, proj);
          bool ok = !q.is_zero();
          for (const auto& [y, d] : s.homogeneous_elements()) {
            if (!h[d] || !ok) continue;
            for (Elem x : q.generators()) ok = ok && q.contains(ring.mul(y, x)) && q.contains(ring.mul(x, y));
          }
          t.record(ok, name);
        }
      });
    }
  }
  if (r.oracle && ring.size() <= kDefaultEnumerationBound) {
    c.run("element_criterion", [&](PropertyTally& t) {
      const AdditiveSubgroup w = whole_ring(ring);
      if (is_s_unital(w, w)) t.record(element_criterion_prime(ring) == *r.oracle, name);
    });
  }
  if (r.nearly_epsilon_strong && ring.size() <= c.in_.bounds.enumeration) {
    c.run("ideal_bijection", [&](PropertyTally& t) {
      const IdealList all = enumerate_ideals(ring, 100000, c.in_.bounds.enumeration);
      std::size_t graded = 0, invariant = 0;
      for (const Ideal& i : all.ideals) {
        if (!is_graded_ideal(s, i)) continue;
        ++graded;
        const AdditiveSubgroup j = phi(s, i);
        t.record(psi(s, j) == i, name + ": psi(phi(I)) = I");
      }
      const AdditiveSubgroup p0 = s.principal_part();
      const FiniteRing sub = subring_on(ring, p0.sorted());
      const auto* si = sub.as<SubringImpl>();
      for (const Ideal& j : enumerate_ideals(sub, 100000, c.in_.bounds.enumeration).ideals) {
        std::vector<Elem> lifted;
        for (Elem x : j.elements()) lifted.push_back(si->to_parent(x));
        const AdditiveSubgroup jj = additive_closure(ring, lifted);
        if (!is_invariant(s, jj)) continue;
        ++invariant;
        t.record(phi(s, psi(s, jj)) == jj, name + ": phi(psi(J)) = J");
      }
      t.record(graded == invariant, name + ": counts");
    });
  }
}

void check_action(Checker& c, const PrimenessReport& r) {
  const PartialAction& a = *c.in_.action;
  const Grading& s = c.s_;
  const std::string& name = c.in_.name;
  const std::size_t bound = c.in_.bounds.oracle;
  const FiniteGroupoid& g = a.groupoid();
  if (a.ambient().size() <= bound)
    c.run("psi_isomorphism", [&](PropertyTally& t) {
      const PsiCheck p = psi_check(a, s, bound);
      t.record(p.ok, name + ": " + p.reason);
    });
  const SupportGroupoid sup = support_groupoid(s);
  for (Obj e : sup.objects)
    c.run("group_type_chain", [&](PropertyTally& t) {
      group_type_chain(a, s, e);
      t.record(true, name);
    });
  const bool global = is_global(a);
  if (global && is_connected(g))
    c.run("global_is_group_type", [&](PropertyTally& t) { t.record(group_type(a).group_type, name); });
  if (global)
    c.run("global_action_chain", [&](PropertyTally& t) {
      const GlobalChain ch = global_action_chain(a, s, bound);
      t.record(ch.support_connected == ch.every_hub && ch.every_hub == ch.some_hub, name);
    });
  if (r.oracle && is_connected(g)) {
    const GroupTypeResult gt = group_type(a);
    if (gt.group_type) {
      bool some = false;
      for (const auto& ev : r.objects)
        if (ev.in_support && ev.isotropy_prime) some = some || *ev.isotropy_prime;
      c.pr_.properties["group_type_theorem"].record(some == *r.oracle, name);
    }
  }
  if (s.ring().size() <= bound && a.ambient().size() <= bound)
    c.run("sufficient_conditions", [&](PropertyTally& t) {
      const SufficientConditions sc = sufficient_conditions_report(a, s, r.oracle, bound);
      if (r.oracle && sc.implies_prime()) t.record(*r.oracle, name);
      else t.record(true, name);
    });
  if (c.in_.kind == StructureKind::GroupoidRing && r.oracle) {
    const FiniteRing& coeff = c.in_.ring;
    c.run("connell", [&](PropertyTally& t) { t.record(connell_check(coeff, g, bound).holds() == *r.oracle, name); });
    if (coeff.identity() && coeff.is_commutative())
      c.run("orbit_density", [&](PropertyTally& t) {
        bool some_dense = false;
        for (Obj e = 0; e < g.num_objects(); ++e) some_dense = some_dense || orbit_density_check(s, e, bound).dense;
        t.record(some_dense == is_connected(g), name);
      });
  }
}

}  // namespace

PropertyReport verify_properties(const Instance& in) {
  PropertyReport pr;
  Checker c(in, pr);
  PrimenessOptions o;
  o.oracle_bound = in.bounds.oracle;
  o.enforce = false;
  PrimenessReport r;
  try {
    r = equivalence_report(in.grading, o);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BoundExceeded) return pr;
    pr.properties["harness"].record(false, in.name + ": " + e.what());
    pr.disagreement = pr.disagreement || e.kind() == ErrorKind::InternalDisagreement;
    return pr;
  }
  pr.properties["harness"].record(true, in.name);
  c.run("theorem", [&](PropertyTally& t) {
    check_theorem(c, r);
    t.record(true, in.name);
  });
  c.run("structure", [&](PropertyTally& t) {
    check_structure(c, r);
    t.record(true, in.name);
  });
  if (in.action)
    c.run("action", [&](PropertyTally& t) {
      check_action(c, r);
      t.record(true, in.name);
    });
  for (const auto& [k, t] : pr.properties)
    if (t.failed && (k == "seven_way" || k == "oracle_vs_theorem" || k == "graded_vs_g_prime" ||
                     k == "witness_replay" || k == "group_type_theorem" || k == "connell"))
      pr.disagreement = true;
  pr.primeness = std::move(r);
  return pr;
}

FuzzCase generate_case(std::mt19937_64& rng, std::size_t max_ring) {
  const std::size_t roll = below(rng, 20);
  if (roll < 6) return matrix_blocks(rng, max_ring);
  if (roll < 11) return groupoid_ring_case(rng, max_ring);
  if (roll < 15) return action_case(rng, max_ring, false);
  return action_case(rng, max_ring, true);
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  FuzzSummary sum;
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.count; ++i) {
    FuzzCase fc = generate_case(rng, options.max_ring);
    fc.instance["name"] = fc.family + "-" + std::to_string(i);
    if (options.max_ring > kDefaultOracleBound) fc.instance["bounds"] = {{"oracle", options.max_ring}};
    Instance in;
    try {
      in = instance_from_json(fc.instance);
    } catch (const std::exception& e) {
      sum.errors.push_back(fc.family + "-" + std::to_string(i) + ": " + e.what() + " " + fc.instance.dump());
      continue;
    }
    ++sum.instances;
    ++sum.families[fc.family];
    PropertyReport pr = verify_properties(in);
    if (pr.primeness && pr.primeness->oracle) {
      ++sum.oracle_runs;
      if (*pr.primeness->oracle) ++sum.prime;
    }
    sum.totals.merge(pr);
  }
  // unstructured generator lists: validation must either accept a lawful grading or reject
  for (std::size_t i = 0; i < options.count / 4 + 1; ++i) {
    const Json doc = random_grading(rng);
    try {
      Instance in = instance_from_json(doc);
      ++sum.validation_accepts;
      PropertyReport pr = verify_properties(in);
      sum.totals.merge(pr);
    } catch (const Error& e) {
      const auto k = e.kind();
      if (k == ErrorKind::AxiomViolation || k == ErrorKind::NotDirectSum || k == ErrorKind::Degenerate)
        ++sum.validation_rejections;
      else
        sum.errors.push_back(std::string("random grading: ") + e.what());
    }
  }
  return sum;
}

Json summary_json(const FuzzSummary& s) {
  Json j;
  j["instances"] = s.instances;
  j["families"] = s.families;
  j["oracle_runs"] = s.oracle_runs;
  j["prime"] = s.prime;
  j["validation"] = {{"accepted", s.validation_accepts}, {"rejected", s.validation_rejections}};
  Json props = Json::object();
  for (const auto& [name, t] : s.totals.properties)
    props[name] = {{"checked", t.checked}, {"failed", t.failed}, {"failures", t.failures}};
  j["properties"] = props;
  j["witnesses"] = {{"emitted", s.totals.witnesses_emitted}, {"replayed", s.totals.witnesses_replayed}};
  j["disagreement"] = s.totals.disagreement;
  j["errors"] = s.errors;
  j["ok"] = s.totals.ok() && s.errors.empty();
  return j;
}

}  // namespace gprime
