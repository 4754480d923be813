#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gprime {

/// Morphism index. Objects are identified with their identity morphisms,
/// which always occupy indices [0, num_objects()).
using Mor = std::uint32_t;
/// Object index into FiniteGroupoid::object_label.
using Obj = std::uint32_t;

class FiniteGroup;

/// Groupoid as written in an instance file. Identity compositions are implied
/// and need not be listed; explicit entries are checked against them.
struct RawGroupoid {
  struct Arrow {
    std::string label;
    std::string src;
    std::string rng;
  };
  struct Entry {
    std::string left;
    std::string right;
    std::string result;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::vector<Entry> composition;
  std::vector<std::pair<std::string, std::string>> inverses;
};

/// A validated finite groupoid. Immutable and cheap to copy.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;

  /// Builds and exhaustively checks the groupoid axioms. Throws Error with
  /// kind MalformedInput (dangling labels) or AxiomViolation (every offending
  /// pair/triple listed in details()).
  static FiniteGroupoid validate(const RawGroupoid& raw);

  std::size_t num_objects() const;
  std::size_t size() const;

  Mor identity(Obj e) const { return e; }
  bool is_identity(Mor g) const { return g < num_objects(); }
  Obj src(Mor g) const;
  Obj rng(Mor g) const;
  Mor inverse(Mor g) const;
  /// gh, defined exactly when src(g) == rng(h).
  std::optional<Mor> compose(Mor g, Mor h) const;
  Mor compose_or_throw(Mor g, Mor h) const;

  const std::string& object_label(Obj e) const;
  const std::string& label(Mor g) const;
  std::optional<Obj> find_object(std::string_view label) const;
  std::optional<Mor> find(std::string_view label) const;

  RawGroupoid to_raw() const;

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) { return a.d_ == b.d_; }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Finite group given by its Cayley table; element 0 need not be the identity.
/// When produced by isotropy(), morphisms() maps group elements back to the
/// groupoid.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates closure, associativity, identity and inverses.
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<std::uint32_t>> table);

  std::size_t order() const { return labels_.size(); }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t op(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  const std::string& label(std::uint32_t a) const { return labels_[a]; }
  std::optional<std::uint32_t> find(std::string_view label) const;
  std::uint32_t element_order(std::uint32_t a) const;

  std::optional<Obj> base() const { return base_; }
  const std::vector<Mor>& morphisms() const { return morphisms_; }

 private:
  friend FiniteGroup isotropy(const FiniteGroupoid& g, Obj e);

  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
  std::optional<Obj> base_;
  std::vector<Mor> morphisms_;
};

/// Subset of a groupoid's morphisms closed under inverses and defined
/// composition.
class Subgroupoid {
 public:
  Subgroupoid() = default;
  /// Throws AxiomViolation if members are empty or not closed.
  Subgroupoid(FiniteGroupoid parent, std::vector<bool> members);

  static Subgroupoid whole(const FiniteGroupoid& parent);

  const FiniteGroupoid& parent() const { return parent_; }
  bool contains(Mor g) const { return g < members_.size() && members_[g]; }
  std::vector<Mor> morphisms() const;
  /// Objects whose identity lies in the subgroupoid.
  std::vector<Obj> objects() const;
  bool is_connected() const;

 private:
  FiniteGroupoid parent_;
  std::vector<bool> members_;
};

/// G_e^e materialized as a group. Throws UnknownObject.
FiniteGroup isotropy(const FiniteGroupoid& g, Obj e);
bool is_connected(const FiniteGroupoid& g);
/// Objects reachable from e, in object order. Throws UnknownObject.
std::vector<Obj> orbit(const FiniteGroupoid& g, Obj e);

/// Subgroup of a FiniteGroup as a sorted element list.
struct Subgroup {
  std::vector<std::uint32_t> elements;

  std::size_t order() const { return elements.size(); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Every subgroup, by closure of generated subsets with canonical dedup.
/// Sorted by order, then lexicographically. Throws BoundExceeded.
std::vector<Subgroup> subgroups(const FiniteGroup& h, std::size_t bound = 24);
bool is_normal(const FiniteGroup& h, const Subgroup& n);

struct NormalSubgroupSearch {
  bool found = false;
  std::optional<Subgroup> witness;     // smallest nontrivial normal subgroup
  std::vector<Subgroup> all;           // every nontrivial normal subgroup
};
NormalSubgroupSearch has_nontrivial_finite_normal_subgroup(const FiniteGroup& h, std::size_t bound = 24);

/// A finite group is torsion-free iff it is trivial.
bool is_torsion_free(const FiniteGroup& h);

// Builders for common shapes.
FiniteGroup cyclic_group(std::uint32_t n);
FiniteGroup klein_four_group();
FiniteGroup symmetric_group_3();
FiniteGroupoid one_object_groupoid(const FiniteGroup& h, std::string object = "e");
/// Pair groupoid on the objects crossed with h: morphisms (i, j, x) : j -> i.
FiniteGroupoid transitive_groupoid(const std::vector<std::string>& objects, const FiniteGroup& h);
FiniteGroupoid pair_groupoid(const std::vector<std::string>& objects);
/// Objects only.
FiniteGroupoid discrete_groupoid(const std::vector<std::string>& objects);
/// Labels must be disjoint.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace gprime
