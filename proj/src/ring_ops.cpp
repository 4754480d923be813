#include "gprime/ring_ops.hpp"

#include <algorithm>

#include "gprime/error.hpp"

namespace gprime {

AdditiveSubgroup::AdditiveSubgroup(FiniteRing ring) : ring_(std::move(ring)), set_(ring_.size()) {
  set_.insert(kZero);
  elems_.push_back(kZero);
}

bool AdditiveSubgroup::insert(Elem x) {
  if (set_.contains(x)) return false;
  gens_.push_back(x);
  const std::size_t m = elems_.size();
  for (Elem c = x; !set_.contains(c); c = ring_.add(c, x))
    for (std::size_t i = 0; i < m; ++i) {
      const Elem y = ring_.add(elems_[i], c);
      if (set_.insert(y)) elems_.push_back(y);
    }
  return true;
}

AdditiveSubgroup additive_closure(const FiniteRing& ring, const std::vector<Elem>& seed) {
  AdditiveSubgroup s(ring);
  for (Elem x : seed) s.insert(x);
  return s;
}

namespace {

void require_same_ring(const AdditiveSubgroup& x, const AdditiveSubgroup& y) {
  if (!(x.ring() == y.ring())) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

}  // namespace

AdditiveSubgroup subgroup_sum(const AdditiveSubgroup& x, const AdditiveSubgroup& y) {
  require_same_ring(x, y);
  AdditiveSubgroup s = x;
  for (Elem g : y.generators()) s.insert(g);
  return s;
}

AdditiveSubgroup set_product(const AdditiveSubgroup& x, const AdditiveSubgroup& y) {
  require_same_ring(x, y);
  AdditiveSubgroup s(x.ring());
  for (Elem a : x.generators())
    for (Elem b : y.generators()) s.insert(x.ring().mul(a, b));
  return s;
}

AdditiveSubgroup intersect(const AdditiveSubgroup& x, const AdditiveSubgroup& y) {
  require_same_ring(x, y);
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  AdditiveSubgroup s(x.ring());
  for (Elem e : small.elements())
    if (large.contains(e)) s.insert(e);
  return s;
}

bool is_subset(const AdditiveSubgroup& x, const AdditiveSubgroup& y) {
  return std::all_of(x.generators().begin(), x.generators().end(), [&](Elem g) { return y.contains(g); });
}

bool product_is_zero(const AdditiveSubgroup& x, const AdditiveSubgroup& y) {
  require_same_ring(x, y);
  for (Elem a : x.generators())
    for (Elem b : y.generators())
      if (x.ring().mul(a, b) != kZero) return false;
  return true;
}

Ideal ideal_generated(const FiniteRing& ring, const std::vector<Elem>& seed) {
  AdditiveSubgroup s = additive_closure(ring, seed);
  const auto& gens = ring.additive_generators();
  linear_closure(s, [&](Elem x, auto& push) {
    for (Elem r : gens) {
      push(ring.mul(r, x));
      push(ring.mul(x, r));
    }
  });
  return s;
}

AdditiveSubgroup ideal_generated_in(const AdditiveSubgroup& within, const std::vector<Elem>& seed) {
  const FiniteRing& ring = within.ring();
  AdditiveSubgroup s = additive_closure(ring, seed);
  linear_closure(s, [&](Elem x, auto& push) {
    for (Elem r : within.generators()) {
      push(ring.mul(r, x));
      push(ring.mul(x, r));
    }
  });
  return s;
}

AdditiveSubgroup subring_closure(const FiniteRing& ring, const std::vector<Elem>& seed) {
  AdditiveSubgroup s = additive_closure(ring, seed);
  for (std::size_t i = 0; i < s.generators().size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem a = s.generators()[i], b = s.generators()[j];
      s.insert(ring.mul(a, b));
      s.insert(ring.mul(b, a));
    }
  return s;
}

FiniteRing generated_subring(const FiniteRing& parent, const std::vector<Elem>& generators) {
  return subring_on(parent, subring_closure(parent, generators).sorted());
}

bool is_ideal(const AdditiveSubgroup& s) {
  const FiniteRing& ring = s.ring();
  for (Elem x : s.generators())
    for (Elem r : ring.additive_generators())
      if (!s.contains(ring.mul(r, x)) || !s.contains(ring.mul(x, r))) return false;
  return true;
}

AdditiveSubgroup whole_ring(const FiniteRing& ring) { return additive_closure(ring, ring.additive_generators()); }

bool is_s_unital(const AdditiveSubgroup& module, const AdditiveSubgroup& r) {
  require_same_ring(module, r);
  const FiniteRing& ring = r.ring();
  for (Elem m : module.elements()) {
    if (m == kZero) continue;
    for (int side = 0; side < 2; ++side) {
      AdditiveSubgroup span(ring);
      bool hit = false;
      for (Elem g : r.generators()) {
        span.insert(side == 0 ? ring.mul(g, m) : ring.mul(m, g));
        if (span.contains(m)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
  }
  return true;
}

std::optional<Elem> find_s_unit(const AdditiveSubgroup& r, const std::vector<Elem>& ms) {
  const FiniteRing& ring = r.ring();
  for (Elem a : r.sorted()) {
    bool ok = true;
    for (Elem m : ms)
      if (ring.mul(a, m) != m || ring.mul(m, a) != m) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  return std::nullopt;
}

Elem s_unit_for(const AdditiveSubgroup& r, const std::vector<Elem>& ms) {
  if (auto a = find_s_unit(r, ms)) return *a;
  throw Error(ErrorKind::NotSUnital, "no s-unit exists for the given elements");
}

AdditiveSubgroup centralizer(const FiniteRing& ring, const AdditiveSubgroup& s) {
  if (ring.size() > kDefaultOracleBound)
    throw Error(ErrorKind::BoundExceeded, "centralizer search exceeds the ring bound");
  AdditiveSubgroup c(ring);
  for (Elem t = 0; t < ring.size(); ++t) {
    bool ok = true;
    for (Elem g : s.generators())
      if (ring.mul(t, g) != ring.mul(g, t)) {
        ok = false;
        break;
      }
    if (ok) c.insert(t);
  }
  return c;
}

bool is_maximal_commutative(const FiniteRing& ring, const AdditiveSubgroup& s) { return centralizer(ring, s) == s; }

PrimeResult is_prime_bruteforce(const FiniteRing& ring, std::size_t bound) {
  if (ring.size() > bound)
    throw Error(ErrorKind::BoundExceeded, "oracle refused: ring has " + std::to_string(ring.size()) +
                                              " elements, bound is " + std::to_string(bound));
  PrimeResult out;
  if (ring.size() == 1) {
    out.degenerate = true;
    return out;
  }
  std::vector<Ideal> distinct;
  std::vector<std::size_t> first;
  auto hit = first_zero_pair<Ideal>(
      ring.size() - 1, [&](std::size_t i) { return ideal_generated(ring, {static_cast<Elem>(i + 1)}); },
      [](const Ideal& I) { return I.hash(); }, [](const Ideal& I, const Ideal& J) { return product_is_zero(I, J); },
      &distinct, &first);
  out.distinct_principal_ideals = distinct.size();
  if (!hit) {
    out.prime = true;
    return out;
  }
  auto index_of = [&](std::size_t cand) {
    return static_cast<std::size_t>(std::find(first.begin(), first.end(), cand) - first.begin());
  };
  PrimeWitness w;
  w.a = static_cast<Elem>(hit->first + 1);
  w.b = static_cast<Elem>(hit->second + 1);
  w.left = distinct[index_of(hit->first)];
  w.right = distinct[index_of(hit->second)];
  out.witness = std::move(w);
  return out;
}

bool element_criterion_prime(const FiniteRing& ring, std::size_t bound) {
  if (ring.size() > bound) throw Error(ErrorKind::BoundExceeded, "element criterion exceeds its bound");
  if (ring.size() == 1) return false;
  const auto& gens = ring.additive_generators();
  for (Elem a = 1; a < ring.size(); ++a)
    for (Elem b = 1; b < ring.size(); ++b) {
      bool nonzero = false;
      for (Elem r : gens)
        if (ring.mul(ring.mul(a, r), b) != kZero) {
          nonzero = true;
          break;
        }
      if (!nonzero) return false;
    }
  return true;
}

bool verify_prime_witness(const FiniteRing& ring, Elem a, Elem b) {
  if (a == kZero || b == kZero || a >= ring.size() || b >= ring.size()) return false;
  return product_is_zero(ideal_generated(ring, {a}), ideal_generated(ring, {b}));
}

bool annihilating_pair(const FiniteRing& ring, Elem a, Elem b) {
  if (a == kZero || b == kZero) return false;
  if (ring.mul(a, b) != kZero) return false;
  for (Elem g : ring.additive_generators())
    if (ring.mul(ring.mul(a, g), b) != kZero) return false;
  return true;
}

IdealList enumerate_ideals(const FiniteRing& ring, std::size_t cap, std::size_t bound) {
  if (ring.size() > bound)
    throw Error(ErrorKind::BoundExceeded, "ideal enumeration refused: ring has " + std::to_string(ring.size()) +
                                              " elements, bound is " + std::to_string(bound));
  IdealList out;
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  auto add = [&](Ideal I) {
    const auto h = I.hash();
    auto range = index.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (out.ideals[it->second] == I) return;
    if (out.ideals.size() >= cap) {
      out.truncated = true;
      return;
    }
    index.emplace(h, out.ideals.size());
    out.ideals.push_back(std::move(I));
  };
  add(AdditiveSubgroup(ring));
  for (Elem a = 1; a < ring.size(); ++a) add(ideal_generated(ring, {a}));
  for (std::size_t i = 0; i < out.ideals.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(subgroup_sum(out.ideals[i], out.ideals[j]));
  std::sort(out.ideals.begin(), out.ideals.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.sorted() < b.sorted();
  });
  return out;
}

}  // namespace gprime
