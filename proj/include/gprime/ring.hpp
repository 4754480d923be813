#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gprime/element_set.hpp"
#include "gprime/groupoid.hpp"

namespace gprime {

/// Arithmetic backend. Implementations never assume a multiplicative unit.
class RingImpl {
 public:
  virtual ~RingImpl() = default;

  virtual std::size_t size() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;

  virtual std::string kind() const = 0;
  /// Canonical constructor expression, e.g. "M2(GF(2))".
  virtual std::string describe() const = 0;
  /// Expression that parses back to a.
  virtual std::string format(Elem a) const = 0;
  /// Ring-specific atom `name(args...)`; nullopt when the name is not an atom here.
  virtual std::optional<Elem> atom(const std::string& name, const std::vector<std::string>& args) const = 0;

  /// Additive generators known from the construction; empty means "search".
  virtual std::vector<Elem> natural_generators() const { return {}; }
  /// Outer nullopt: fall back to exhaustive search.
  virtual std::optional<std::optional<Elem>> identity_hint() const { return std::nullopt; }
  /// x -> x^(p^k) on field coordinates; identity on Z_n. Throws for unsupported kinds.
  virtual Elem frobenius(Elem a, unsigned k) const;
};

/// Finite associative ring with dense element indices, 0 = additive identity.
/// Handle semantics: copies share the same carrier; equality is identity.
class FiniteRing {
 public:
  FiniteRing() = default;
  explicit FiniteRing(std::shared_ptr<const RingImpl> impl);

  std::size_t size() const;
  bool valid() const { return static_cast<bool>(core_); }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem scalar(std::int64_t k, Elem a) const;
  Elem power(Elem a, unsigned k) const;
  std::uint64_t additive_order(Elem a) const;

  std::string format(Elem a) const;
  /// Element grammar: sums, differences, products, integer scalars, `^k`,
  /// parentheses and ring atoms. Throws ParseError.
  Elem parse(std::string_view expr) const;

  std::string kind() const;
  std::string describe() const;

  /// Additive generating set (natural or greedy), cached.
  const std::vector<Elem>& additive_generators() const;
  /// Two-sided multiplicative identity if one exists, cached.
  std::optional<Elem> identity() const;
  bool is_commutative() const;
  /// Associativity on additive-generator triples. Throws AssociativityFailure.
  void check_axioms() const;
  bool tabulated() const;

  const RingImpl& impl() const;
  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(&impl());
  }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.core_ == b.core_; }

 private:
  struct Core;
  std::shared_ptr<Core> core_;
};

/// Rings above this many elements are never tabulated.
inline constexpr std::size_t kTableThreshold = 256;
/// Hard cap on carrier size for any constructor.
inline constexpr std::size_t kMaxCarrier = std::size_t{1} << 26;

FiniteRing zmod(std::uint32_t n);
/// GF(p^k), k in {1, 2}, p in {2, 3, 5, 7}. Element c0 + c1*a has index c0 + c1*p.
FiniteRing galois_field(std::uint32_t p, std::uint32_t k);
FiniteRing matrix_ring(const FiniteRing& base, std::uint32_t n);
/// First summand is the least significant digit. Labels name summands for `at`.
FiniteRing direct_sum(std::vector<FiniteRing> summands, std::vector<std::string> labels = {});
FiniteRing group_ring(const FiniteRing& base, const FiniteGroup& h);
/// Explicit Cayley tables. Element 0 must be the additive identity. Throws AxiomViolation.
FiniteRing table_ring(std::vector<std::string> names, std::vector<std::vector<Elem>> add,
                      std::vector<std::vector<Elem>> mul);
/// Smallest subring containing the generators.
FiniteRing generated_subring(const FiniteRing& parent, const std::vector<Elem>& generators);
/// Subring on a member set already closed under +, -, *. Members need not be sorted.
FiniteRing subring_on(const FiniteRing& parent, std::vector<Elem> members);

// Backends whose structure callers need to see.

class DirectSumImpl : public RingImpl {
 public:
  DirectSumImpl(std::vector<FiniteRing> summands, std::vector<std::string> labels);

  std::size_t size() const override { return size_; }
  Elem add(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem mul(Elem a, Elem b) const override;
  std::string kind() const override { return "direct_sum"; }
  std::string describe() const override;
  std::string format(Elem a) const override;
  std::optional<Elem> atom(const std::string& name, const std::vector<std::string>& args) const override;
  std::vector<Elem> natural_generators() const override;
  std::optional<std::optional<Elem>> identity_hint() const override;
  Elem frobenius(Elem a, unsigned k) const override;

  std::size_t count() const { return summands_.size(); }
  const FiniteRing& summand(std::size_t i) const { return summands_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> find(std::string_view label) const;
  Elem inject(std::size_t i, Elem x) const { return x * stride_[i]; }
  Elem project(std::size_t i, Elem a) const { return (a / stride_[i]) % summands_[i].size(); }

 private:
  std::vector<FiniteRing> summands_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

class SubringImpl : public RingImpl {
 public:
  SubringImpl(FiniteRing parent, std::vector<Elem> members);

  std::size_t size() const override { return members_.size(); }
  Elem add(Elem a, Elem b) const override { return local(parent_.add(members_[a], members_[b])); }
  Elem neg(Elem a) const override { return local(parent_.neg(members_[a])); }
  Elem mul(Elem a, Elem b) const override { return local(parent_.mul(members_[a], members_[b])); }
  std::string kind() const override { return "subring"; }
  std::string describe() const override;
  std::string format(Elem a) const override { return parent_.format(members_[a]); }
  std::optional<Elem> atom(const std::string& name, const std::vector<std::string>& args) const override;
  Elem frobenius(Elem a, unsigned k) const override { return local(parent_.impl().frobenius(members_[a], k)); }

  const FiniteRing& parent() const { return parent_; }
  Elem to_parent(Elem a) const { return members_[a]; }
  std::optional<Elem> from_parent(Elem x) const;
  const std::vector<Elem>& members() const { return members_; }

 private:
  Elem local(Elem x) const;

  FiniteRing parent_;
  std::vector<Elem> members_;  // sorted, members_[0] == 0
  std::vector<std::uint32_t> dense_;  // parent -> local + 1, when parent is small
  std::vector<std::pair<Elem, Elem>> sparse_;  // sorted (parent, local) otherwise
};

}  // namespace gprime
