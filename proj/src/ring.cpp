#include "gprime/ring.hpp"

#include <mutex>

#include "gprime/error.hpp"

namespace gprime {

Elem RingImpl::frobenius(Elem, unsigned) const {
  throw Error(ErrorKind::MalformedInput, "frobenius is not defined on " + describe());
}

struct FiniteRing::Core {
  std::shared_ptr<const RingImpl> impl;
  std::size_t n = 0;
  bool tab = false;
  std::vector<Elem> add_t, mul_t, neg_t;

  std::once_flag gens_once;
  std::vector<Elem> gens;
  std::once_flag id_once;
  std::optional<Elem> identity;
};

FiniteRing::FiniteRing(std::shared_ptr<const RingImpl> impl) : core_(std::make_shared<Core>()) {
  core_->impl = std::move(impl);
  const std::size_t n = core_->impl->size();
  if (n == 0) throw Error(ErrorKind::MalformedInput, "ring carrier is empty");
  if (n > kMaxCarrier)
    throw Error(ErrorKind::BoundExceeded, "ring of size " + std::to_string(n) + " exceeds the carrier cap");
  core_->n = n;
  if (n <= kTableThreshold) {
    const RingImpl& r = *core_->impl;
    core_->add_t.resize(n * n);
    core_->mul_t.resize(n * n);
    core_->neg_t.resize(n);
    for (Elem a = 0; a < n; ++a) {
      core_->neg_t[a] = r.neg(a);
      for (Elem b = 0; b < n; ++b) {
        core_->add_t[a * n + b] = r.add(a, b);
        core_->mul_t[a * n + b] = r.mul(a, b);
      }
    }
    core_->tab = true;
  }
}

std::size_t FiniteRing::size() const { return core_->n; }
bool FiniteRing::tabulated() const { return core_->tab; }
const RingImpl& FiniteRing::impl() const { return *core_->impl; }

Elem FiniteRing::add(Elem a, Elem b) const {
  return core_->tab ? core_->add_t[a * core_->n + b] : core_->impl->add(a, b);
}
Elem FiniteRing::neg(Elem a) const { return core_->tab ? core_->neg_t[a] : core_->impl->neg(a); }
Elem FiniteRing::mul(Elem a, Elem b) const {
  return core_->tab ? core_->mul_t[a * core_->n + b] : core_->impl->mul(a, b);
}

Elem FiniteRing::scalar(std::int64_t k, Elem a) const {
  if (k < 0) return neg(scalar(-k, a));
  Elem acc = kZero, base = a;
  auto u = static_cast<std::uint64_t>(k);
  while (u) {
    if (u & 1U) acc = add(acc, base);
    base = add(base, base);
    u >>= 1;
  }
  return acc;
}

Elem FiniteRing::power(Elem a, unsigned k) const {
  if (k == 0) throw Error(ErrorKind::ParseError, "exponent must be positive (rings need not be unital)");
  Elem acc = a;
  for (unsigned i = 1; i < k; ++i) acc = mul(acc, a);
  return acc;
}

std::uint64_t FiniteRing::additive_order(Elem a) const {
  std::uint64_t k = 1;
  for (Elem x = a; x != kZero; x = add(x, a)) ++k;
  return k;
}

std::string FiniteRing::format(Elem a) const { return core_->impl->format(a); }
std::string FiniteRing::kind() const { return core_->impl->kind(); }
std::string FiniteRing::describe() const { return core_->impl->describe(); }

const std::vector<Elem>& FiniteRing::additive_generators() const {
  std::call_once(core_->gens_once, [this] {
    auto natural = core_->impl->natural_generators();
    if (!natural.empty() || core_->n == 1) {
      core_->gens = std::move(natural);
      return;
    }
    // Greedy: add the smallest element not yet generated.
    ElementSet in(core_->n);
    std::vector<Elem> elems{kZero};
    in.insert(kZero);
    for (Elem x = 1; x < core_->n && elems.size() < core_->n; ++x) {
      if (in.contains(x)) continue;
      core_->gens.push_back(x);
      const std::size_t m = elems.size();
      for (Elem c = x; !in.contains(c); c = add(c, x))
        for (std::size_t i = 0; i < m; ++i) {
          const Elem y = add(elems[i], c);
          if (in.insert(y)) elems.push_back(y);
        }
    }
  });
  return core_->gens;
}

std::optional<Elem> FiniteRing::identity() const {
  std::call_once(core_->id_once, [this] {
    if (auto hint = core_->impl->identity_hint()) {
      core_->identity = *hint;
      return;
    }
    const auto& gens = additive_generators();
    for (Elem u = 0; u < core_->n; ++u) {
      bool ok = true;
      for (Elem x : gens)
        if (mul(u, x) != x || mul(x, u) != x) {
          ok = false;
          break;
        }
      if (ok && (core_->n > 1 || u == kZero)) {
        core_->identity = u;
        return;
      }
    }
  });
  return core_->identity;
}

bool FiniteRing::is_commutative() const {
  const auto& gens = additive_generators();
  for (Elem x : gens)
    for (Elem y : gens)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

void FiniteRing::check_axioms() const {
  const auto& gens = additive_generators();
  for (Elem x : gens)
    for (Elem y : gens)
      for (Elem z : gens)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw Error(ErrorKind::AssociativityFailure,
                      "multiplication is not associative on (" + format(x) + ", " + format(y) + ", " + format(z) + ")");
}

}  // namespace gprime
