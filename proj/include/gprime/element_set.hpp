#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace gprime {

/// Ring elements are dense indices into the carrier; 0 is the additive identity.
using Elem = std::uint32_t;
inline constexpr Elem kZero = 0;

/// Membership set over the universe [0, universe). Bitset-backed for
/// universes up to 2^22, hash-backed above that (lazily represented rings).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  bool contains(Elem x) const;
  bool insert(Elem x);
  std::size_t size() const { return count_; }
  std::size_t universe() const { return universe_; }

  std::vector<Elem> to_vector() const;
  std::uint64_t hash() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b);

 private:
  static constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  bool dense_ = true;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<Elem> sparse_;
};

}  // namespace gprime
