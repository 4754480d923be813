#include "support.hpp"

#include "gprime/ring.hpp"
#include "gprime/ring_ops.hpp"

using namespace gprime;
using gprime::test::error_kind;
using gprime::test::sorted_of;

TEST_SUITE("finite_ring") {
  TEST_CASE("constructors have the expected sizes and identities") {
    CHECK(zmod(4).size() == 4);
    CHECK(galois_field(2, 2).size() == 4);
    CHECK(matrix_ring(galois_field(2, 1), 2).size() == 16);
    CHECK(matrix_ring(galois_field(2, 1), 3).size() == 512);
    CHECK(direct_sum({galois_field(2, 1), galois_field(3, 1)}).size() == 6);
    CHECK(group_ring(galois_field(2, 1), cyclic_group(2)).size() == 4);
    const FiniteRing m2 = matrix_ring(galois_field(2, 1), 2);
    REQUIRE(m2.identity());
    CHECK(m2.format(*m2.identity()) == m2.format(m2.parse("e(1,1)+e(2,2)")));
    CHECK_FALSE(m2.is_commutative());
    CHECK(galois_field(2, 2).is_commutative());
    const FiniteRing even = generated_subring(zmod(4), {2});
    CHECK(even.size() == 2);
    CHECK_FALSE(even.identity().has_value());
  }

  TEST_CASE("GF(4) arithmetic and Frobenius") {
    const FiniteRing f = galois_field(2, 2);
    const Elem a = f.parse("a");
    CHECK(f.mul(a, a) == f.parse("a+1"));
    CHECK(f.mul(a, f.parse("a+1")) == f.parse("1"));
    CHECK(f.impl().frobenius(a, 1) == f.parse("a+1"));
    CHECK(f.impl().frobenius(a, 2) == a);
  }

  TEST_CASE("parse and format round trip") {
    const FiniteRing m2 = matrix_ring(zmod(4), 2);
    for (Elem x = 0; x < m2.size(); x += 7) CHECK(m2.parse(m2.format(x)) == x);
    const FiniteRing ds = direct_sum({galois_field(2, 1), galois_field(2, 1)}, {"x", "y"});
    CHECK(ds.parse("at(x,1)+at(y,1)") == ds.parse("at(y,1)+at(x,1)"));
    CHECK(error_kind([&] { ds.parse("at(z,1)"); }) == ErrorKind::ParseError);
    CHECK(error_kind([&] { m2.parse("e(1,"); }) == ErrorKind::ParseError);
    CHECK(error_kind([&] { m2.parse("e(3,1)"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("table rings are checked") {
    // Z/2 as explicit tables
    const FiniteRing z2 = table_ring({"0", "u"}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}});
    CHECK(z2.size() == 2);
    CHECK(z2.identity() == Elem{1});
    CHECK(error_kind([&] { table_ring({"0", "u"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}); }) ==
          ErrorKind::AxiomViolation);
  }

  TEST_CASE("non-associative tables fail the axiom check") {
    // x*x = x, x*y = y, y*x = 0, y*y = x on (Z/2)^2 is not associative: (y*y)*y = y but y*(y*y) = 0
    const std::vector<std::vector<Elem>> add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    auto mulxy = [](Elem a, Elem b) {
      // bilinear extension of the basis products
      const int ax = a & 1, ay = (a >> 1) & 1, bx = b & 1, by = (b >> 1) & 1;
      int cx = (ax & bx) ^ (ay & by), cy = (ax & by);
      return static_cast<Elem>(cx | (cy << 1));
    };
    std::vector<std::vector<Elem>> mul(4, std::vector<Elem>(4));
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) mul[a][b] = mulxy(a, b);
    const auto kind = error_kind([&] { table_ring({"0", "x", "y", "z"}, add, mul).check_axioms(); });
    CHECK((kind == ErrorKind::AssociativityFailure || kind == ErrorKind::AxiomViolation));
  }
}

TEST_SUITE("ring_ops") {
  TEST_CASE("additive closure") {
    const FiniteRing z4 = zmod(4);
    CHECK(additive_closure(z4, {2}).sorted() == sorted_of(z4, {"0", "2"}));
    const FiniteRing m2 = matrix_ring(galois_field(2, 1), 2);
    CHECK(additive_closure(m2, {m2.parse("e(1,1)")}).sorted() == sorted_of(m2, {"0", "e(1,1)"}));
    const FiniteRing ds = direct_sum({galois_field(2, 1), galois_field(2, 1)});
    CHECK(additive_closure(ds, {ds.parse("at(1,1)+at(2,1)")}).size() == 2);
    CHECK(additive_closure(ds, {}).is_zero());
  }

  TEST_CASE("set products") {
    const FiniteRing m2 = matrix_ring(galois_field(2, 1), 2);
    const auto x = additive_closure(m2, {m2.parse("e(1,2)")});
    const auto y = additive_closure(m2, {m2.parse("e(2,1)")});
    CHECK(set_product(x, y).sorted() == sorted_of(m2, {"0", "e(1,1)"}));
    CHECK(set_product(x, additive_closure(m2, {})).is_zero());
    const FiniteRing m3 = matrix_ring(galois_field(2, 1), 3);
    const auto sg = additive_closure(m3, {m3.parse("e(1,2)")});
    const auto sgi = additive_closure(m3, {m3.parse("e(2,1)")});
    CHECK(set_product(sg, sgi).sorted() == sorted_of(m3, {"0", "e(1,1)"}));
  }

  TEST_CASE("ideal generation") {
    const FiniteRing m2 = matrix_ring(galois_field(2, 1), 2);
    CHECK(ideal_generated(m2, {m2.parse("e(1,1)")}).size() == 16);
    const FiniteRing ds = direct_sum({galois_field(2, 1), galois_field(2, 1)});
    CHECK(ideal_generated(ds, {ds.parse("at(1,1)")}).sorted() == sorted_of(ds, {"0", "at(1,1)"}));
    CHECK(ideal_generated(ds, {}).is_zero());
    CHECK(ideal_generated(ds, {0}).is_zero());
  }

  TEST_CASE("s-units") {
    const FiniteRing f2 = galois_field(2, 1);
    const auto w = whole_ring(f2);
    CHECK(s_unit_for(w, {1}) == f2.parse("1"));
    const FiniteRing z4 = zmod(4);
    const auto even = additive_closure(z4, {2});
    CHECK(error_kind([&] { s_unit_for(even, {2}); }) == ErrorKind::NotSUnital);
    CHECK_FALSE(is_s_unital(even, even));
    const FiniteRing m2 = matrix_ring(f2, 2);
    const auto diag = additive_closure(m2, {m2.parse("e(1,1)"), m2.parse("e(2,2)")});
    const Elem u = s_unit_for(diag, {m2.parse("e(1,1)")});
    CHECK((u == m2.parse("e(1,1)") || u == m2.parse("e(1,1)+e(2,2)")));
  }

  TEST_CASE("primeness oracle") {
    const FiniteRing ds = direct_sum({galois_field(2, 1), galois_field(2, 1)});
    const PrimeResult r = is_prime_bruteforce(ds);
    CHECK_FALSE(r.prime);
    REQUIRE(r.witness);
    CHECK(r.witness->left.size() == 2);
    CHECK(r.witness->right.size() == 2);
    CHECK(verify_prime_witness(ds, r.witness->a, r.witness->b));
    CHECK(is_prime_bruteforce(matrix_ring(galois_field(2, 1), 2)).prime);
    const PrimeResult z4 = is_prime_bruteforce(zmod(4));
    CHECK_FALSE(z4.prime);
    CHECK(z4.witness->a == 2);
    CHECK(z4.witness->b == 2);
    CHECK(error_kind([&] { is_prime_bruteforce(matrix_ring(galois_field(2, 1), 3), 256); }) ==
          ErrorKind::BoundExceeded);
  }

  TEST_CASE("element criterion agrees with the oracle on unital rings") {
    for (const FiniteRing& r : {zmod(4), zmod(6), galois_field(3, 1), matrix_ring(galois_field(2, 1), 2),
                                direct_sum({galois_field(2, 1), galois_field(2, 1)}),
                                group_ring(galois_field(2, 1), cyclic_group(2))})
      CHECK(element_criterion_prime(r) == is_prime_bruteforce(r).prime);
  }

  TEST_CASE("centralizers") {
    const FiniteRing z4 = zmod(4);
    CHECK(is_maximal_commutative(z4, whole_ring(z4)));
    const FiniteRing m2 = matrix_ring(galois_field(2, 1), 2);
    const auto scalars = additive_closure(m2, {m2.parse("e(1,1)+e(2,2)")});
    CHECK(centralizer(m2, scalars).size() == 16);
    CHECK_FALSE(is_maximal_commutative(m2, scalars));
    const auto diag = additive_closure(m2, {m2.parse("e(1,1)"), m2.parse("e(2,2)")});
    CHECK(centralizer(m2, diag) == diag);
    CHECK(is_maximal_commutative(m2, diag));
  }

  TEST_CASE("ideal enumeration") {
    CHECK(enumerate_ideals(galois_field(2, 1)).ideals.size() == 2);
    CHECK(enumerate_ideals(direct_sum({galois_field(2, 1), galois_field(2, 1)})).ideals.size() == 4);
    const auto z8 = enumerate_ideals(zmod(8));
    REQUIRE(z8.ideals.size() == 4);
    CHECK(z8.ideals[1].sorted() == std::vector<Elem>{0, 4});
    CHECK(z8.ideals[2].sorted() == std::vector<Elem>{0, 2, 4, 6});
    CHECK(enumerate_ideals(matrix_ring(galois_field(2, 1), 2)).ideals.size() == 2);
  }
}
