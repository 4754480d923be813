#include "support.hpp"

#include "gprime/groupoid.hpp"

using namespace gprime;
using gprime::test::error_kind;

namespace {

RawGroupoid p2_raw() {
  RawGroupoid raw;
  raw.objects = {"e", "f"};
  raw.morphisms = {{"g", "f", "e"}, {"g^-1", "e", "f"}};
  raw.composition = {{"g", "g^-1", "e"}, {"g^-1", "g", "f"}};
  raw.inverses = {{"g", "g^-1"}};
  return raw;
}

std::vector<std::string> labels(const FiniteGroupoid& g, const std::vector<Obj>& objs) {
  std::vector<std::string> out;
  for (Obj o : objs) out.push_back(g.object_label(o));
  return out;
}

}  // namespace

TEST_SUITE("groupoid") {
  TEST_CASE("pair groupoid on two objects validates") {
    const FiniteGroupoid g = FiniteGroupoid::validate(p2_raw());
    CHECK(g.num_objects() == 2);
    CHECK(g.size() == 4);
    const Mor x = *g.find("g");
    CHECK(g.object_label(g.src(x)) == "f");
    CHECK(g.object_label(g.rng(x)) == "e");
    CHECK(g.label(g.inverse(x)) == "g^-1");
    CHECK(g.label(*g.compose(x, g.inverse(x))) == "e");
    CHECK_FALSE(g.compose(x, x).has_value());
  }

  TEST_CASE("a single identity is a groupoid") {
    RawGroupoid raw;
    raw.objects = {"e"};
    const FiniteGroupoid g = FiniteGroupoid::validate(raw);
    CHECK(g.size() == 1);
    CHECK(is_connected(g));
  }

  TEST_CASE("composition across a non-composable pair is rejected") {
    RawGroupoid raw = p2_raw();
    raw.composition.push_back({"g", "g", "e"});
    CHECK(error_kind([&] { FiniteGroupoid::validate(raw); }) == ErrorKind::AxiomViolation);
  }

  TEST_CASE("dangling labels are malformed") {
    RawGroupoid raw = p2_raw();
    raw.inverses.push_back({"g", "nope"});
    CHECK(error_kind([&] { FiniteGroupoid::validate(raw); }) == ErrorKind::MalformedInput);
  }

  TEST_CASE("wrong inverse is an axiom violation with details") {
    RawGroupoid raw;
    raw.objects = {"e"};
    raw.morphisms = {{"a", "e", "e"}, {"b", "e", "e"}};
    raw.composition = {{"a", "a", "b"}, {"a", "b", "e"}, {"b", "a", "e"}, {"b", "b", "a"}};
    raw.inverses = {{"a", "a"}};
    try {
      FiniteGroupoid::validate(raw);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AxiomViolation);
      CHECK_FALSE(e.details().empty());
    }
  }

  TEST_CASE("isotropy groups") {
    const FiniteGroupoid p3 = pair_groupoid({"f1", "f2", "f3"});
    CHECK(isotropy(p3, 0).order() == 1);
    const FiniteGroupoid g8 = transitive_groupoid({"e", "f"}, cyclic_group(2));
    CHECK(g8.size() == 8);
    const FiniteGroup h = isotropy(g8, 0);
    CHECK(h.order() == 2);
    CHECK(h.morphisms().size() == 2);
    const FiniteGroupoid s3 = one_object_groupoid(symmetric_group_3());
    CHECK(isotropy(s3, 0).order() == 6);
    CHECK(error_kind([&] { isotropy(p3, 7); }) == ErrorKind::UnknownObject);
  }

  TEST_CASE("connectedness and orbits") {
    CHECK(is_connected(pair_groupoid({"e", "f"})));
    CHECK_FALSE(is_connected(discrete_groupoid({"e", "f"})));
    CHECK(is_connected(pair_groupoid({"f1", "f2", "f3"})));
    CHECK(labels(pair_groupoid({"e", "f"}), orbit(pair_groupoid({"e", "f"}), 0)) ==
          std::vector<std::string>{"e", "f"});
    const FiniteGroupoid d = discrete_groupoid({"e", "f"});
    CHECK(labels(d, orbit(d, 0)) == std::vector<std::string>{"e"});
    const FiniteGroupoid p3 = pair_groupoid({"f1", "f2", "f3"});
    CHECK(labels(p3, orbit(p3, 1)) == std::vector<std::string>{"f1", "f2", "f3"});
    const FiniteGroupoid u = disjoint_union(pair_groupoid({"a", "b"}), pair_groupoid({"c", "d"}));
    CHECK(labels(u, orbit(u, 2)) == std::vector<std::string>{"c", "d"});
  }

  TEST_CASE("subgroup enumeration") {
    CHECK(subgroups(cyclic_group(1)).size() == 1);
    CHECK(subgroups(cyclic_group(2)).size() == 2);
    CHECK(subgroups(cyclic_group(4)).size() == 3);
    CHECK(subgroups(klein_four_group()).size() == 5);
    CHECK(subgroups(symmetric_group_3()).size() == 6);
    CHECK(error_kind([&] { subgroups(cyclic_group(30), 24); }) == ErrorKind::BoundExceeded);
  }

  TEST_CASE("nontrivial finite normal subgroups") {
    CHECK_FALSE(has_nontrivial_finite_normal_subgroup(cyclic_group(1)).found);
    const auto z2 = has_nontrivial_finite_normal_subgroup(cyclic_group(2));
    CHECK(z2.found);
    CHECK(z2.witness->order() == 2);
    const auto s3 = has_nontrivial_finite_normal_subgroup(symmetric_group_3());
    CHECK(s3.found);
    CHECK(s3.witness->order() == 3);  // A_3
    CHECK(s3.all.size() == 2);        // A_3 and S_3
  }

  TEST_CASE("torsion-freeness of finite groups") {
    CHECK(is_torsion_free(cyclic_group(1)));
    CHECK_FALSE(is_torsion_free(cyclic_group(2)));
    CHECK_FALSE(is_torsion_free(cyclic_group(6)));
  }

  TEST_CASE("builder labels") {
    const FiniteGroupoid t = transitive_groupoid({"a", "b"}, cyclic_group(2));
    CHECK(t.find("a<-b:c1").has_value());
    CHECK(t.find("a<-a:c1").has_value());
    CHECK(t.label(*t.compose(*t.find("a<-b:c1"), *t.find("b<-a:c1"))) == "a");
    CHECK(pair_groupoid({"x", "y"}).find("x<-y").has_value());
    CHECK(error_kind([&] { disjoint_union(pair_groupoid({"x"}), pair_groupoid({"x"})); }) == ErrorKind::MalformedInput);
  }
}
