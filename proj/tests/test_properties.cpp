#include <random>

#include "support.hpp"

#include "gprime/fuzz.hpp"
#include "gprime/partial_action.hpp"

using namespace gprime;

namespace {

std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed * 0x9e3779b97f4a7c15ULL + 1); }

FiniteRing random_small_ring(std::mt19937_64& rng) {
  switch (rng() % 6) {
    case 0: return zmod(2 + rng() % 11);
    case 1: return galois_field(rng() % 2 ? 2 : 3, 1 + rng() % 2);
    case 2: return matrix_ring(galois_field(2, 1), 2);
    case 3: return direct_sum({zmod(2 + rng() % 3), galois_field(2, 1 + rng() % 2)});
    case 4: return group_ring(galois_field(2 + rng() % 2, 1), cyclic_group(1 + rng() % 3));
    default: return build_groupoid_ring(galois_field(2, 1), pair_groupoid({"a", "b"})).ring();
  }
}

FiniteGroupoid random_groupoid(std::mt19937_64& rng) {
  const std::vector<std::string> objs = {"a", "b", "c"};
  const std::vector<std::string> some(objs.begin(), objs.begin() + 1 + rng() % 3);
  FiniteGroup h = rng() % 2 ? cyclic_group(1 + rng() % 4) : (rng() % 2 ? klein_four_group() : symmetric_group_3());
  FiniteGroupoid g = transitive_groupoid(some, h);
  if (rng() % 3 == 0) g = disjoint_union(g, pair_groupoid({"x", "y"}));
  return g;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("ring axioms on random elements") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto rng = rng_for(seed);
      const FiniteRing r = random_small_ring(rng);
      CAPTURE(r.describe());
      for (int t = 0; t < 40; ++t) {
        const Elem a = rng() % r.size(), b = rng() % r.size(), c = rng() % r.size();
        CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
        CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
        CHECK(r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)));
        CHECK(r.add(a, r.neg(a)) == kZero);
        CHECK(r.parse(r.format(a)) == a);
      }
      if (auto one = r.identity()) CHECK(r.mul(*one, 7 % r.size()) == 7 % r.size());
    }
  }

  TEST_CASE("groupoid axioms on random groupoids") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto rng = rng_for(seed);
      const FiniteGroupoid g = random_groupoid(rng);
      for (Mor x = 0; x < g.size(); ++x) {
        CHECK(g.compose(x, g.inverse(x)) == g.identity(g.rng(x)));
        CHECK(g.compose(g.identity(g.rng(x)), x) == x);
        CHECK(g.inverse(g.inverse(x)) == x);
        const Mor y = rng() % g.size(), z = rng() % g.size();
        const auto xy = g.compose(x, y);
        const auto yz = g.compose(y, z);
        if (xy && yz) CHECK(g.compose(*xy, z) == g.compose(x, *yz));
      }
      std::size_t total = 0;
      for (Obj e = 0; e < g.num_objects(); ++e) {
        const FiniteGroup h = isotropy(g, e);
        total += orbit(g, e).size() * h.order();
      }
      // sum over objects of |orbit| * |isotropy| counts each morphism once
      CHECK(total == g.size());
    }
  }

  TEST_CASE("ideal lattice invariants") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto rng = rng_for(seed);
      const FiniteRing r = random_small_ring(rng);
      if (r.size() > kDefaultEnumerationBound) continue;
      const Elem a = rng() % r.size(), b = rng() % r.size();
      const Ideal ia = ideal_generated(r, {a}), ib = ideal_generated(r, {b});
      CHECK(is_ideal(ia));
      CHECK(is_subset(set_product(ia, ib), intersect(ia, ib)));
      CHECK(ideal_generated(r, {a, b}) == subgroup_sum(ia, ib));
      CHECK(r.size() % ia.size() == 0);
      const PrimeResult p = is_prime_bruteforce(r);
      if (p.witness) CHECK(verify_prime_witness(r, p.witness->a, p.witness->b));
      if (r.identity()) CHECK(p.prime == element_criterion_prime(r));
    }
  }

  TEST_CASE("groupoid rings satisfy every structural property") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      auto rng = rng_for(seed);
      const FiniteRing coeff = seed % 2 ? galois_field(2, 1) : zmod(3);
      const std::vector<std::string> objs = {"a", "b"};
      const FiniteGroupoid g = seed % 3 == 0 ? pair_groupoid(objs)
                               : seed % 3 == 1 ? one_object_groupoid(cyclic_group(1 + rng() % 2))
                                               : discrete_groupoid(objs);
      const Grading s = build_groupoid_ring(coeff, g);
      CHECK(nearly_epsilon_strong(s).holds);
      const PrimeResult oracle = is_prime_oracle(s);
      CHECK(oracle.prime == connell_check(coeff, g).holds());
      if (oracle.prime) CHECK(is_graded_prime(s).prime);
    }
  }

  TEST_CASE("generated instances pass every property") {
    std::mt19937_64 rng(2024);
    PropertyReport total;
    std::size_t built = 0;
    for (int i = 0; i < 24; ++i) {
      FuzzCase c = generate_case(rng, 1024);
      c.instance["name"] = c.family + "-" + std::to_string(i);
      CAPTURE(c.instance.dump());
      const Instance in = instance_from_json(c.instance);
      const PropertyReport r = verify_properties(in);
      for (const auto& [k, t] : r.properties) {
        CAPTURE(k);
        CHECK(t.failed == 0);
      }
      CHECK_FALSE(r.disagreement);
      total.merge(r);
      ++built;
    }
    CHECK(built == 24);
    CHECK(total.ok());
    CHECK(total.witnesses_replayed == total.witnesses_emitted);
  }

  TEST_CASE("generator is deterministic") {
    std::mt19937_64 a(99), b(99);
    for (int i = 0; i < 10; ++i) {
      const FuzzCase x = generate_case(a, 4096), y = generate_case(b, 4096);
      CHECK(x.family == y.family);
      CHECK(x.instance == y.instance);
    }
  }

  TEST_CASE("frozen fuzz summary") {
    FuzzOptions o;
    o.seed = 11;
    o.count = 24;
    const FuzzSummary s = run_fuzz(o);
    CHECK(s.instances == 24);
    CHECK(s.errors.empty());
    CHECK(s.totals.ok());
    CHECK_FALSE(s.totals.disagreement);
    CHECK(s.oracle_runs == 24);
    CHECK(s.prime == 7);
    CHECK(s.families == std::map<std::string, std::size_t>{
                            {"global_action", 3}, {"groupoid_ring", 10}, {"matrix_blocks", 6}, {"partial_action", 5}});
    CHECK(s.validation_accepts == 1);
    CHECK(s.validation_rejections == 6);
    CHECK(s.totals.witnesses_emitted == 92);
    CHECK(s.totals.witnesses_replayed == 92);
  }
}
