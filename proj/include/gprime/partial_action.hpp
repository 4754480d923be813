#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gprime/grading.hpp"
#include "gprime/primeness.hpp"

namespace gprime {

/// How sigma_g : A_{g^-1} -> A_g is given.
struct MapSpec {
  enum class Kind { Pairs, Copy };
  Kind kind = Kind::Pairs;
  // Pairs: x -> y on generators of A_{g^-1}, extended additively.
  std::vector<std::pair<Elem, Elem>> pairs;
  // Copy: Frobenius power on every coordinate, then move summand i to j.
  unsigned frobenius = 0;
  std::vector<std::pair<std::size_t, std::size_t>> permutation;
};

struct RawPartialAction {
  FiniteGroupoid groupoid;
  FiniteRing ambient;
  // Generators of the ideal A_g of the ambient ring, one list per morphism.
  std::vector<std::vector<Elem>> ideals;
  // sigma_g per morphism. Objects default to the identity, and sigma_{g^-1}
  // is taken as the inverse of sigma_g when only one of them is given.
  std::vector<std::optional<MapSpec>> maps;
};

inline constexpr std::size_t kMaxAmbient = std::size_t{1} << 16;

class PartialAction {
 public:
  PartialAction() = default;

  /// Checks every axiom exhaustively. Throws AxiomViolation whose message
  /// names the failing axiom (ideal-containment, identity, domain, additive,
  /// multiplicative, bijective, domain-compatibility, composition, s-unital,
  /// direct-sum) with a witness element.
  static PartialAction validate(const RawPartialAction& raw);
  /// The global action behind R[G]: A = (+)_{e} R, A_g = R at r(g), sigma_g copies.
  static PartialAction groupoid_ring_action(const FiniteRing& r, const FiniteGroupoid& g);

  const FiniteGroupoid& groupoid() const { return d_->groupoid; }
  const FiniteRing& ambient() const { return d_->ambient; }
  const AdditiveSubgroup& ideal(Mor g) const { return d_->ideals.at(g); }
  /// sigma_g(x) for x in A_{g^-1}. Throws MalformedInput outside the domain.
  Elem apply(Mor g, Elem x) const;
  /// The A_e-component of x.
  Elem object_part(Elem x, Obj e) const { return d_->parts[std::size_t{x} * groupoid().num_objects() + e]; }
  /// Set for groupoid rings: coefficients live in R, injected at r(g).
  const std::optional<FiniteRing>& coefficients() const { return d_->coefficients; }

 private:
  struct Data {
    FiniteGroupoid groupoid;
    FiniteRing ambient;
    std::vector<AdditiveSubgroup> ideals;
    std::vector<std::vector<Elem>> sigma;  // dense over the ambient, kNoImage outside A_{g^-1}
    std::vector<Elem> parts;               // element x object
    std::optional<FiniteRing> coefficients;
  };
  static constexpr Elem kNoImage = 0xffffffffu;
  std::shared_ptr<const Data> d_;
};

/// A x_sigma G as a ring. Elements are tuples (a_g), one digit per morphism.
class SkewRingImpl : public RingImpl {
 public:
  explicit SkewRingImpl(PartialAction action);

  std::size_t size() const override { return size_; }
  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  std::string kind() const override { return "skew"; }
  std::string describe() const override;
  std::string format(Elem a) const override;
  std::optional<Elem> atom(const std::string& name, const std::vector<std::string>& args) const override;
  std::vector<Elem> natural_generators() const override;
  std::optional<std::optional<Elem>> identity_hint() const override;

  const PartialAction& action() const { return action_; }
  /// a delta_g for a in A_g.
  Elem embed(Mor g, Elem a) const;
  /// Coefficient a_g of x, in the ambient ring.
  Elem coefficient(Elem x, Mor g) const;
  Parts decompose(Elem x) const;

 private:
  std::vector<Elem> digits(Elem x) const;
  Elem pack(const std::vector<Elem>& d) const;

  PartialAction action_;
  std::size_t size_ = 1;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<Elem>> values_;  // local digit -> ambient element, per morphism
  std::vector<std::vector<Elem>> local_;   // ambient element -> local digit (or kNoImage)
};

/// Materializes the carrier up to kDefaultOracleBound and validates the grading
/// exhaustively; above that the ring stays lazy (products computed on demand).
/// Always checks associativity on generators and nearly epsilon-strongness.
/// Throws BoundExceeded, AssociativityFailure, InternalDisagreement.
Grading build_skew_ring(const PartialAction& action);
Grading build_groupoid_ring(const FiniteRing& r, const FiniteGroupoid& g);

bool is_global(const PartialAction& action);

struct GroupTypeResult {
  bool group_type = false;
  std::optional<Obj> anchor;
  std::vector<Mor> family;  // h_f : anchor -> f, indexed by f
  std::string reason;
};
GroupTypeResult group_type(const PartialAction& action);

/// sigma_g(I cap A_{g^-1}) subset I for every g in morphisms.
bool is_sigma_invariant(const PartialAction& action, const AdditiveSubgroup& i, const std::vector<Mor>& morphisms);
/// Smallest ideal of (+)_{e in objects} A_e containing seed and invariant under morphisms.
AdditiveSubgroup sigma_invariant_closure(const PartialAction& action, const std::vector<Elem>& seed,
                                         const std::vector<Obj>& objects, const std::vector<Mor>& morphisms);
/// No nonzero invariant ideals of (+)_{e in objects} A_e with zero product.
/// Witness elements live in the ambient ring.
PairVerdict is_A_G_prime(const PartialAction& action, const std::vector<Obj>& objects,
                         const std::vector<Mor>& morphisms, std::size_t bound = kDefaultOracleBound);
PairVerdict is_A_G_prime(const PartialAction& action, std::size_t bound = kDefaultOracleBound);
/// A_e is G_e^e-prime.
PairVerdict is_isotropy_prime(const PartialAction& action, Obj e, std::size_t bound = kDefaultOracleBound);

struct PsiCheck {
  bool ok = false;
  bool ring_isomorphism = false;
  bool a_g_prime = false;
  bool principal_g_prime = false;
  std::string reason;
};
/// a -> sum_e a_e delta_e is a ring isomorphism onto the principal part, and
/// A is G-prime exactly when the principal part of the skew ring is.
PsiCheck psi_check(const PartialAction& action, const Grading& skew, std::size_t bound = kDefaultOracleBound);

struct ChainResult {
  std::array<bool, 4> holds{};  // group-type, coefficient membership, nonzero annihilation, support-hub
  std::optional<Elem> failing_coefficient;  // first a_g breaking membership
};
/// Throws InternalDisagreement when the implication chain breaks.
ChainResult group_type_chain(const PartialAction& action, const Grading& skew, Obj e);

struct ConnellResult {
  bool connected = false;
  bool ring_prime = false;
  bool no_finite_normal = false;
  std::optional<Obj> normal_witness_object;
  bool holds() const { return connected && ring_prime && no_finite_normal; }
};
ConnellResult connell_check(const FiniteRing& r, const FiniteGroupoid& g, std::size_t bound = kDefaultOracleBound);

struct DensityResult {
  bool dense = false;
  std::optional<Elem> witness;  // nonzero element without coefficient at a source in X
};
/// Brute force over R[G]. Throws BoundExceeded.
DensityResult r_dense(const Grading& group_ring, const std::vector<Obj>& x, std::size_t bound = kDefaultOracleBound);
DensityResult orbit_density_check(const Grading& group_ring, Obj e, std::size_t bound = kDefaultOracleBound);

struct SufficientConditions {
  bool hypothesis = false;  // group-type or A G-prime
  bool group_type = false;
  bool a_g_prime = false;
  std::array<bool, 3> holds{};  // per listed condition, witnessed at some e in G_0'
  std::array<std::optional<Obj>, 3> at;
  bool implies_prime() const { return hypothesis && (holds[0] || holds[1] || holds[2]); }
};
/// Evaluates the sufficient conditions; with `oracle_prime`, a satisfied
/// condition contradicting it throws InternalDisagreement.
SufficientConditions sufficient_conditions_report(const PartialAction& action, const Grading& skew,
                                                  std::optional<bool> oracle_prime,
                                                  std::size_t bound = kDefaultOracleBound);

struct GlobalChain {
  bool support_connected = false;
  bool every_hub = false;
  bool some_hub = false;
  bool group_type = false;
  std::optional<bool> skew_prime;           // oracle, when it runs
  std::optional<bool> some_isotropy_prime;  // oracle on isotropy skew group rings
};
/// For global actions: compares the three support conditions and the
/// group-type primeness criterion. Throws InternalDisagreement on mismatch.
GlobalChain global_action_chain(const PartialAction& action, const Grading& skew,
                                std::size_t bound = kDefaultOracleBound);

}  // namespace gprime
