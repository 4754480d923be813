#include "support.hpp"

#include "gprime/grading.hpp"
#include "gprime/partial_action.hpp"

using namespace gprime;
using gprime::test::error_kind;
using gprime::test::load;
using gprime::test::sorted_of;

namespace {

Mor mor(const Grading& s, const char* label) { return *s.groupoid().find(label); }
Obj obj(const Grading& s, const char* label) { return *s.groupoid().find_object(label); }

Grading m2_over_p2(std::vector<std::vector<const char*>> gens) {
  const FiniteGroupoid g = pair_groupoid({"a", "b"});
  const FiniteRing r = matrix_ring(galois_field(2, 1), 2);
  std::vector<std::vector<Elem>> e(g.size());
  const char* order[] = {"a", "b", "a<-b", "b<-a"};
  for (std::size_t i = 0; i < 4; ++i)
    for (const char* x : gens[i]) e[*g.find(order[i])].push_back(r.parse(x));
  return Grading::validate(g, r, e);
}

}  // namespace

TEST_SUITE("graded_ring") {
  TEST_CASE("matrix example grading is valid and nearly epsilon-strong") {
    const Grading s = load("m3_pair_groupoid").grading;
    CHECK(s.ring().size() == 512);
    CHECK(s.component(mor(s, "g")).size() == 2);
    CHECK(nearly_epsilon_strong(s).holds);
    const SupportGroupoid sup = support_groupoid(s);
    CHECK(sup.objects.size() == 3);
    CHECK(std::count(sup.members.begin(), sup.members.end(), true) == 9);
    CHECK(sup.connected);
  }

  TEST_CASE("trivial grading concentrated at one object") {
    const Grading s = m2_over_p2({{"e(1,1)", "e(1,2)", "e(2,1)", "e(2,2)"}, {}, {}, {}});
    CHECK(nearly_epsilon_strong(s).holds);
    const SupportGroupoid sup = support_groupoid(s);
    CHECK(sup.objects == std::vector<Obj>{obj(s, "a")});
    CHECK(std::count(sup.members.begin(), sup.members.end(), true) == 1);
  }

  TEST_CASE("wrong degrees are rejected") {
    CHECK(error_kind([] { m2_over_p2({{"e(2,2)"}, {"e(1,2)"}, {"e(1,1)"}, {"e(2,1)"}}); }) ==
          ErrorKind::AxiomViolation);
    CHECK(error_kind([] { m2_over_p2({{"e(1,1)"}, {"e(2,2)"}, {"e(1,2)"}, {}}); }) == ErrorKind::NotDirectSum);
    CHECK(error_kind([] { m2_over_p2({{}, {}, {}, {}}); }) == ErrorKind::Degenerate);
    // S_c = S_1 = F2 over Z/2 respects products but is not direct
    CHECK(error_kind([] {
            const FiniteGroupoid z2 = one_object_groupoid(cyclic_group(2));
            const FiniteRing f2 = galois_field(2, 1);
            Grading::validate(z2, f2, {{f2.parse("1")}, {f2.parse("1")}});
          }) == ErrorKind::NotDirectSum);
  }

  TEST_CASE("upper triangular grading is not nearly epsilon-strong") {
    const FiniteGroupoid g = pair_groupoid({"a", "b"});
    const FiniteRing m2 = matrix_ring(galois_field(2, 1), 2);
    const FiniteRing up = generated_subring(m2, {m2.parse("e(1,1)"), m2.parse("e(1,2)"), m2.parse("e(2,2)")});
    CHECK(up.size() == 8);
    std::vector<std::vector<Elem>> e(g.size());
    e[*g.find("a")] = {up.parse("e(1,1)")};
    e[*g.find("b")] = {up.parse("e(2,2)")};
    e[*g.find("a<-b")] = {up.parse("e(1,2)")};
    const Grading s = Grading::validate(g, up, e);
    const NearlyEpsilonReport r = nearly_epsilon_strong(s);
    CHECK_FALSE(r.holds);
    CHECK(g.label(*r.failing) == "a<-b");
  }

  TEST_CASE("group ring gradings are nearly epsilon-strong") {
    CHECK(nearly_epsilon_strong(build_groupoid_ring(zmod(4), one_object_groupoid(klein_four_group()))).holds);
    CHECK(nearly_epsilon_strong(build_groupoid_ring(galois_field(3, 1), pair_groupoid({"x", "y"}))).holds);
  }

  TEST_CASE("projection onto a subgroupoid") {
    const Grading s = load("m3_pair_groupoid").grading;
    const FiniteRing& r = s.ring();
    std::vector<bool> h(s.groupoid().size(), false);
    h[obj(s, "f1")] = true;
    CHECK(project(s, h, r.parse("e(1,1)+e(1,2)")) == r.parse("e(1,1)"));
    CHECK(project(s, h, r.parse("e(1,1)")) == r.parse("e(1,1)"));
    CHECK(project(s, h, r.parse("e(2,3)")) == kZero);
  }

  TEST_CASE("support groupoid of the zero coefficient example") {
    const Grading s = load("zero_Ag").grading;
    const SupportGroupoid sup = support_groupoid(s);
    CHECK(std::count(sup.members.begin(), sup.members.end(), true) == 4);
    CHECK(sup.connected);
    CHECK(s.component(mor(s, "g")).is_zero());
  }

  TEST_CASE("conjugation and invariant closure") {
    const Grading s = load("m3_pair_groupoid").grading;
    const FiniteRing& r = s.ring();
    const auto i = additive_closure(r, {r.parse("e(1,1)")});
    CHECK(conjugate(s, i, mor(s, "g")).sorted() == sorted_of(r, {"0", "e(2,2)"}));
    CHECK(conjugate(s, additive_closure(r, {}), mor(s, "g")).is_zero());
    CHECK(is_subset(conjugate(s, i, obj(s, "f1")), i));
    CHECK(invariant_closure(s, {}).is_zero());
    CHECK(invariant_closure(s, {r.parse("e(1,1)")}) == s.principal_part());
    const Grading d = load("disconnected_groupoid_ring").grading;
    CHECK(invariant_closure(d, {d.ring().parse("delta(e, 1)")}).size() == 2);
  }

  TEST_CASE("graded and invariant ideals correspond") {
    const Grading s = load("m3_pair_groupoid").grading;
    const auto w = whole_ring(s.ring());
    CHECK(phi(s, w) == s.principal_part());
    CHECK(psi(s, phi(s, w)) == w);
    CHECK(psi(s, additive_closure(s.ring(), {})).is_zero());
    const AdditiveSubgroup j = s.principal_part();
    CHECK(psi(s, j).size() == 512);
    CHECK(phi(s, psi(s, j)) == j);
    const auto not_inv = additive_closure(s.ring(), {s.ring().parse("e(1,1)")});
    CHECK(error_kind([&] { psi(s, not_inv); }) == ErrorKind::NotInvariant);
    CHECK(error_kind([&] { phi(s, additive_closure(s.ring(), {s.ring().parse("e(1,1)+e(1,2)")})); }) ==
          ErrorKind::NotGraded);
  }

  TEST_CASE("support hubs in the block diagonal example") {
    const Grading s = load("block_diagonal").grading;
    CHECK(is_support_hub(s, obj(s, "f2")).hub);
    const HubResult f1 = is_support_hub(s, obj(s, "f1"));
    CHECK_FALSE(f1.hub);
    REQUIRE(f1.blocker);
    CHECK_FALSE(is_support_hub(s, obj(s, "f3")).hub);
    // e43 is blocked at f1: nothing arrives from f1's side on the left
    const HubResult b = hub_blocks(s, obj(s, "f1"), s.ring().parse("e(4,3)"));
    CHECK_FALSE(b.hub);
    CHECK(b.blocked_left);
    CHECK_FALSE(hub_blocks(s, obj(s, "f1"), *f1.blocker).hub);
    CHECK(s.ring().format(*f1.blocker) == "e(3,3)");
  }

  TEST_CASE("identity of a group grading is a hub") {
    const Grading s = build_groupoid_ring(galois_field(2, 1), one_object_groupoid(cyclic_group(3)));
    CHECK(is_support_hub(s, 0).hub);
  }

  TEST_CASE("hub queries outside the support") {
    const Grading s = m2_over_p2({{"e(1,1)", "e(1,2)", "e(2,1)", "e(2,2)"}, {}, {}, {}});
    CHECK(error_kind([&] { is_support_hub(s, obj(s, "b")); }) == ErrorKind::ObjectNotInG0Prime);
    CHECK(error_kind([&] { is_support_hub(s, 9); }) == ErrorKind::UnknownObject);
  }

  TEST_CASE("graded primeness") {
    const Grading b = load("block_diagonal").grading;
    const PairVerdict v = is_graded_prime(b);
    CHECK_FALSE(v.prime);
    REQUIRE(v.witness);
    CHECK(b.degree(v.witness->first).has_value());
    CHECK(b.degree(v.witness->second).has_value());
    CHECK(b.ring().format(v.witness->first) == "e(1,1)");
    CHECK(b.ring().format(v.witness->second) == "e(3,3)");
    // the pair named in the example is also a witness
    const Elem e12 = b.ring().parse("e(1,2)"), e43 = b.ring().parse("e(4,3)");
    CHECK(graded_product_is_zero(b, graded_ideal_closure(b, {{mor(b, "g"), e12}}),
                                 graded_ideal_closure(b, {{mor(b, "h"), e43}})));
    CHECK(is_graded_prime(load("m3_pair_groupoid").grading).prime);
    CHECK_FALSE(is_graded_prime(load("disconnected_groupoid_ring").grading).prime);
    CHECK_FALSE(is_graded_prime(load("zero_Ag").grading).prime);
  }

  TEST_CASE("G-primeness of the principal part") {
    CHECK(is_G_prime_principal(load("m3_pair_groupoid").grading).prime);
    CHECK_FALSE(is_G_prime_principal(load("disconnected_groupoid_ring").grading).prime);
    CHECK_FALSE(is_G_prime_principal(load("block_diagonal").grading).prime);
  }

  TEST_CASE("isotropy components") {
    const Grading s = load("m3_pair_groupoid").grading;
    const IsotropyComponent c = isotropy_component(s, obj(s, "f1"));
    CHECK(c.group.order() == 1);
    CHECK(c.grading.ring().size() == 2);
    const Grading g = build_groupoid_ring(zmod(3), one_object_groupoid(cyclic_group(2)));
    CHECK(isotropy_component(g, 0).grading.ring().size() == g.ring().size());
    const Grading g8 = load("groupoid_ring_F2_G8").grading;
    const IsotropyComponent e = isotropy_component(g8, obj(g8, "e"));
    CHECK(e.group.order() == 2);
    CHECK(e.grading.ring().size() == 4);
    CHECK(e.grading.ring().is_commutative());
  }
}
