#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gprime/element_set.hpp"
#include "gprime/ring.hpp"

namespace gprime {

/// Additive subgroup of a ring, kept as a closed element set plus the
/// generators it was built from. Always contains 0.
class AdditiveSubgroup {
 public:
  AdditiveSubgroup() = default;
  explicit AdditiveSubgroup(FiniteRing ring);

  const FiniteRing& ring() const { return ring_; }
  bool contains(Elem x) const { return set_.contains(x); }
  std::size_t size() const { return elems_.size(); }
  bool is_zero() const { return elems_.size() == 1; }
  /// Insertion order; elements()[0] == 0.
  const std::vector<Elem>& elements() const { return elems_; }
  const std::vector<Elem>& generators() const { return gens_; }
  std::vector<Elem> sorted() const { return set_.to_vector(); }
  const ElementSet& set() const { return set_; }
  std::uint64_t hash() const { return set_.hash(); }

  /// Extends to the subgroup generated by this and x. Returns false if x was already inside.
  bool insert(Elem x);

  friend bool operator==(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
    return a.ring_ == b.ring_ && a.set_ == b.set_;
  }

 private:
  FiniteRing ring_;
  ElementSet set_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
};

/// An ideal is an additive subgroup closed under multiplication by the ring on both sides.
using Ideal = AdditiveSubgroup;

/// Closes s under an additive operator given on generators: apply(x, push) pushes T(x) pieces.
/// Valid because every operator used here is additive.
template <class Apply>
void linear_closure(AdditiveSubgroup& s, Apply&& apply) {
  auto push = [&s](Elem y) { s.insert(y); };
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    const Elem g = s.generators()[i];
    apply(g, push);
  }
}

AdditiveSubgroup additive_closure(const FiniteRing& ring, const std::vector<Elem>& seed);
/// Sum X + Y.
AdditiveSubgroup subgroup_sum(const AdditiveSubgroup& x, const AdditiveSubgroup& y);
/// Additive closure of {xy}. Throws RingMismatch.
AdditiveSubgroup set_product(const AdditiveSubgroup& x, const AdditiveSubgroup& y);
AdditiveSubgroup intersect(const AdditiveSubgroup& x, const AdditiveSubgroup& y);
bool is_subset(const AdditiveSubgroup& x, const AdditiveSubgroup& y);
/// True when every generator product is zero, i.e. XY = {0}.
bool product_is_zero(const AdditiveSubgroup& x, const AdditiveSubgroup& y);

/// Smallest two-sided ideal containing the seed.
Ideal ideal_generated(const FiniteRing& ring, const std::vector<Elem>& seed);
/// Smallest two-sided ideal of the subring `within` (closed subgroup) containing the seed.
AdditiveSubgroup ideal_generated_in(const AdditiveSubgroup& within, const std::vector<Elem>& seed);
/// Smallest subring containing the seed, as a subgroup of the ring.
AdditiveSubgroup subring_closure(const FiniteRing& ring, const std::vector<Elem>& seed);
bool is_ideal(const AdditiveSubgroup& s);
AdditiveSubgroup whole_ring(const FiniteRing& ring);

/// Every m in module lies in Rm and in mR (Tominaga's criterion).
bool is_s_unital(const AdditiveSubgroup& module, const AdditiveSubgroup& r);
/// Some a in r with a m = m a = m for all ms; nullopt if none.
std::optional<Elem> find_s_unit(const AdditiveSubgroup& r, const std::vector<Elem>& ms);
/// As find_s_unit, but throws NotSUnital.
Elem s_unit_for(const AdditiveSubgroup& r, const std::vector<Elem>& ms);

AdditiveSubgroup centralizer(const FiniteRing& ring, const AdditiveSubgroup& s);
bool is_maximal_commutative(const FiniteRing& ring, const AdditiveSubgroup& s);

struct PrimeWitness {
  Elem a = kZero;
  Elem b = kZero;
  Ideal left;   // Id(a)
  Ideal right;  // Id(b)
};

struct PrimeResult {
  bool prime = false;
  bool degenerate = false;
  std::optional<PrimeWitness> witness;
  std::size_t distinct_principal_ideals = 0;
};

inline constexpr std::size_t kDefaultOracleBound = 4096;
inline constexpr std::size_t kDefaultEnumerationBound = 256;

/// Prime iff Id(a) Id(b) != 0 for all nonzero a, b. The zero ring is reported
/// not prime and degenerate. Throws BoundExceeded.
PrimeResult is_prime_bruteforce(const FiniteRing& ring, std::size_t bound = kDefaultOracleBound);
/// aRb != 0 for all nonzero a, b; only equivalent to primeness for s-unital rings.
bool element_criterion_prime(const FiniteRing& ring, std::size_t bound = kDefaultEnumerationBound);
/// Replays a witness: a, b nonzero and Id(a) Id(b) = 0.
bool verify_prime_witness(const FiniteRing& ring, Elem a, Elem b);
/// a S^1 b = 0, i.e. ab = 0 and a x b = 0 for all x. Cheap on huge rings.
bool annihilating_pair(const FiniteRing& ring, Elem a, Elem b);

struct IdealList {
  std::vector<Ideal> ideals;  // sorted by size, then elements
  bool truncated = false;
};
/// All ideals, as joins of principal ideals. Throws BoundExceeded.
IdealList enumerate_ideals(const FiniteRing& ring, std::size_t cap = 100000,
                           std::size_t bound = kDefaultEnumerationBound);

/// Lexicographically first (i, j) over candidate indices with zero(cl(i), cl(j)),
/// closing each candidate once and deduplicating equal closures by hash.
/// T needs `bool operator==` and `std::uint64_t hash()` reachable through Hash.
template <class T, class Closure, class Hash, class Zero>
std::optional<std::pair<std::size_t, std::size_t>> first_zero_pair(std::size_t count, Closure&& closure, Hash&& hash,
                                                                 Zero&& zero, std::vector<T>* distinct_out = nullptr,
                                                                 std::vector<std::size_t>* first_out = nullptr) {
  std::vector<T> distinct;
  std::vector<std::size_t> first;
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) {
    T c = closure(i);
    const std::uint64_t h = hash(c);
    bool found = false;
    auto range = index.equal_range(h);
    for (auto it = range.first; it != range.second && !found; ++it) found = distinct[it->second] == c;
    if (found) continue;
    index.emplace(h, distinct.size());
    distinct.push_back(std::move(c));
    first.push_back(i);
  }
  std::optional<std::pair<std::size_t, std::size_t>> out;
  const std::size_t k = distinct.size();
  std::vector<signed char> memo(k * k, -1);
  for (std::size_t i = 0; i < k && !out; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      signed char& m = memo[i * k + j];
      if (m < 0) m = zero(distinct[i], distinct[j]) ? 1 : 0;
      if (m == 1) {
        out = std::pair{first[i], first[j]};
        break;
      }
    }
  if (distinct_out) *distinct_out = std::move(distinct);
  if (first_out) *first_out = std::move(first);
  return out;
}

}  // namespace gprime
