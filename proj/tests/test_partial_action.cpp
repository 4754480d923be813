#include "support.hpp"

#include "gprime/partial_action.hpp"
#include "gprime/primeness.hpp"

using namespace gprime;
using gprime::test::error_kind;
using gprime::test::load;

namespace {

// F2 + F2 with the flip on P2, A_g = A_{g^-1} = one summand each
RawPartialAction flip(bool break_additivity) {
  RawPartialAction raw;
  raw.groupoid = pair_groupoid({"e", "f"});
  raw.ambient = direct_sum({galois_field(2, 1), galois_field(2, 1)}, {"e", "f"});
  const FiniteRing& a = raw.ambient;
  const Elem ae = a.parse("at(e,1)"), af = a.parse("at(f,1)");
  raw.ideals.resize(raw.groupoid.size());
  raw.maps.resize(raw.groupoid.size());
  const Mor g = *raw.groupoid.find("e<-f"), gi = *raw.groupoid.find("f<-e");
  raw.ideals[0] = {ae};
  raw.ideals[1] = {af};
  raw.ideals[g] = {ae};
  raw.ideals[gi] = {af};
  MapSpec m;
  m.pairs = {{af, ae}};
  if (break_additivity) m.pairs.push_back({kZero, ae});
  raw.maps[g] = m;
  return raw;
}

}  // namespace

TEST_SUITE("partial_action") {
  TEST_CASE("global flip is a global action of group type") {
    const Instance in = load("global_flip");
    REQUIRE(in.action);
    CHECK(is_global(*in.action));
    const GroupTypeResult t = group_type(*in.action);
    CHECK(t.group_type);
    CHECK(in.grading.ring().size() == 16);
    CHECK(is_A_G_prime(*in.action).prime);
    const PrimenessReport r = equivalence_report(in.grading);
    CHECK(r.verdict);
  }

  TEST_CASE("built flip matches the fixture") {
    const PartialAction a = PartialAction::validate(flip(false));
    CHECK(is_global(a));
    const Grading s = build_skew_ring(a);
    CHECK(s.ring().size() == 16);
    CHECK(s.ring().identity().has_value());
  }

  TEST_CASE("non-additive map is rejected") {
    CHECK(error_kind([] { PartialAction::validate(flip(true)); }) == ErrorKind::AxiomViolation);
  }

  TEST_CASE("ideal outside the object summand") {
    RawPartialAction raw = flip(false);
    raw.ideals[*raw.groupoid.find("e<-f")] = {raw.ambient.parse("at(f,1)")};
    CHECK(error_kind([&] { PartialAction::validate(raw); }) == ErrorKind::AxiomViolation);
  }

  TEST_CASE("zero A_g") {
    const Instance in = load("zero_Ag");
    REQUIRE(in.action);
    CHECK_FALSE(is_global(*in.action));
    CHECK(in.grading.ring().size() == 4);
    CHECK_FALSE(group_type(*in.action).group_type);
    CHECK_FALSE(is_A_G_prime(*in.action).prime);
  }

  TEST_CASE("psi identifies A with the principal part") {
    for (const char* name : {"global_flip", "zero_Ag"}) {
      const Instance in = load(name);
      const PsiCheck c = psi_check(*in.action, in.grading);
      CHECK(c.ok);
      CHECK(c.ring_isomorphism);
      CHECK(c.a_g_prime == c.principal_g_prime);
    }
  }

  TEST_CASE("group-type chain on the flip") {
    const Instance in = load("global_flip");
    for (Obj e = 0; e < 2; ++e) {
      const ChainResult c = group_type_chain(*in.action, in.grading, e);
      CHECK(c.holds == std::array<bool, 4>{true, true, true, true});
    }
    const GlobalChain g = global_action_chain(*in.action, in.grading);
    CHECK(g.support_connected);
    CHECK(g.every_hub);
    CHECK(g.some_hub);
    CHECK(g.group_type);
    CHECK(g.skew_prime == true);
  }

  TEST_CASE("sigma-invariant closure") {
    const Instance in = load("global_flip");
    const FiniteRing& a = in.ring;
    const std::vector<Mor> all = {0, 1, 2, 3};
    const auto c = sigma_invariant_closure(*in.action, {a.parse("at(e,1)")}, {0, 1}, all);
    CHECK(c.size() == 4);
    CHECK(is_sigma_invariant(*in.action, c, all));
    CHECK_FALSE(is_sigma_invariant(*in.action, additive_closure(a, {a.parse("at(e,1)")}), all));
  }

  TEST_CASE("Frobenius twist: A_e is not G_e^e-prime") {
    const Instance in = load("gf4_frobenius");
    const Obj e = *in.groupoid.find_object("e");
    const PairVerdict v = is_isotropy_prime(*in.action, e);
    CHECK_FALSE(v.prime);
    REQUIRE(v.witness);
    CHECK(v.witness->first != kZero);
    CHECK(v.witness->second != kZero);
    CHECK_FALSE(is_A_G_prime(*in.action).prime);
    CHECK_FALSE(is_global(*in.action));
  }

  TEST_CASE("Connell's conditions") {
    const ConnellResult p2 = connell_check(galois_field(2, 1), pair_groupoid({"a", "b"}));
    CHECK(p2.holds());
    const ConnellResult z2 = connell_check(galois_field(2, 1), one_object_groupoid(cyclic_group(2)));
    CHECK(z2.connected);
    CHECK(z2.ring_prime);
    CHECK_FALSE(z2.no_finite_normal);
    CHECK(z2.normal_witness_object == Obj{0});
    const ConnellResult d = connell_check(galois_field(2, 1), discrete_groupoid({"a", "b"}));
    CHECK_FALSE(d.connected);
    CHECK_FALSE(d.holds());
    CHECK_FALSE(connell_check(zmod(4), pair_groupoid({"a", "b"})).ring_prime);
  }

  TEST_CASE("groupoid ring sizes and action") {
    const Grading s = build_groupoid_ring(galois_field(3, 1), pair_groupoid({"a", "b"}));
    CHECK(s.ring().size() == 81);
    const PartialAction a = PartialAction::groupoid_ring_action(galois_field(3, 1), pair_groupoid({"a", "b"}));
    CHECK(is_global(a));
    CHECK(group_type(a).group_type);
    CHECK(a.coefficients().has_value());
  }

  TEST_CASE("R-density") {
    const Grading p2 = build_groupoid_ring(galois_field(2, 1), pair_groupoid({"a", "b"}));
    CHECK_FALSE(r_dense(p2, {0}).dense);
    CHECK(r_dense(p2, {0, 1}).dense);
    CHECK(orbit_density_check(p2, 0).dense);
    const Grading d = build_groupoid_ring(galois_field(2, 1), discrete_groupoid({"a", "b"}));
    const DensityResult r = r_dense(d, {0});
    CHECK_FALSE(r.dense);
    REQUIRE(r.witness);
    CHECK(d.ring().format(*r.witness) == "delta(b, 1)");
  }

  TEST_CASE("sufficient conditions") {
    const Instance flip_in = load("global_flip");
    const SufficientConditions s = sufficient_conditions_report(*flip_in.action, flip_in.grading, true);
    CHECK(s.hypothesis);
    CHECK(s.implies_prime());
    const Instance z = load("zero_Ag");
    const SufficientConditions t = sufficient_conditions_report(*z.action, z.grading, false);
    CHECK_FALSE(t.implies_prime());
  }
}
