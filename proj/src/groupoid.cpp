#include "gprime/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "gprime/error.hpp"

namespace gprime {

struct FiniteGroupoid::Data {
  std::vector<std::string> object_labels;
  std::vector<std::string> labels;
  std::vector<Obj> src;
  std::vector<Obj> rng;
  std::vector<Mor> inv;
  std::vector<std::int32_t> comp;  // n*n, -1 when undefined
  std::unordered_map<std::string, Mor> by_label;
};

namespace {

constexpr std::size_t kMaxViolations = 32;

void note(std::vector<std::string>& out, std::string msg) {
  if (out.size() < kMaxViolations) out.push_back(std::move(msg));
}

}  // namespace

FiniteGroupoid FiniteGroupoid::validate(const RawGroupoid& raw) {
  auto d = std::make_shared<Data>();
  if (raw.objects.empty()) throw Error(ErrorKind::MalformedInput, "groupoid has no objects");

  for (const auto& o : raw.objects) {
    if (o.empty()) throw Error(ErrorKind::MalformedInput, "empty object label");
    if (!d->by_label.emplace(o, static_cast<Mor>(d->labels.size())).second)
      throw Error(ErrorKind::MalformedInput, "duplicate label '" + o + "'");
    d->object_labels.push_back(o);
    d->labels.push_back(o);
    const auto idx = static_cast<Obj>(d->object_labels.size() - 1);
    d->src.push_back(idx);
    d->rng.push_back(idx);
  }
  const std::size_t num_obj = d->object_labels.size();
  auto object_index = [&](const std::string& label, const std::string& ctx) -> Obj {
    auto it = d->by_label.find(label);
    if (it == d->by_label.end() || it->second >= num_obj)
      throw Error(ErrorKind::MalformedInput, ctx + " refers to unknown object '" + label + "'");
    return it->second;
  };
  for (const auto& a : raw.morphisms) {
    if (a.label.empty()) throw Error(ErrorKind::MalformedInput, "empty morphism label");
    if (a.src.empty() || a.rng.empty())
      throw Error(ErrorKind::MalformedInput, "morphism '" + a.label + "' is missing src or rng");
    const Obj s = object_index(a.src, "src of '" + a.label + "'");
    const Obj r = object_index(a.rng, "rng of '" + a.label + "'");
    if (!d->by_label.emplace(a.label, static_cast<Mor>(d->labels.size())).second)
      throw Error(ErrorKind::MalformedInput, "duplicate label '" + a.label + "'");
    d->labels.push_back(a.label);
    d->src.push_back(s);
    d->rng.push_back(r);
  }

  const std::size_t n = d->labels.size();
  auto lookup = [&](const std::string& label) -> Mor {
    auto it = d->by_label.find(label);
    if (it == d->by_label.end())
      throw Error(ErrorKind::MalformedInput, "unknown morphism '" + label + "'");
    return it->second;
  };

  std::vector<std::string> violations;
  d->comp.assign(n * n, -1);
  auto at = [&](Mor g, Mor h) -> std::int32_t& { return d->comp[g * n + h]; };
  for (Mor x = 0; x < n; ++x) {
    at(d->rng[x], x) = static_cast<std::int32_t>(x);
    at(x, d->src[x]) = static_cast<std::int32_t>(x);
  }
  for (const auto& e : raw.composition) {
    const Mor g = lookup(e.left), h = lookup(e.right), gh = lookup(e.result);
    if (d->src[g] != d->rng[h]) {
      note(violations, "composition " + e.left + "*" + e.right + " defined but src(" + e.left +
                           ") != rng(" + e.right + ")");
      continue;
    }
    std::int32_t& slot = at(g, h);
    if (slot >= 0 && slot != static_cast<std::int32_t>(gh)) {
      note(violations, "composition " + e.left + "*" + e.right + " = " + e.result +
                           " conflicts with " + d->labels[slot]);
      continue;
    }
    slot = static_cast<std::int32_t>(gh);
  }

  bool complete = true;
  for (Mor g = 0; g < n; ++g) {
    for (Mor h = 0; h < n; ++h) {
      if (d->src[g] != d->rng[h]) continue;
      const std::int32_t gh = at(g, h);
      if (gh < 0) {
        complete = false;
        note(violations, "composable pair (" + d->labels[g] + ", " + d->labels[h] + ") has no composite");
        continue;
      }
      if (d->src[gh] != d->src[h] || d->rng[gh] != d->rng[g])
        note(violations, "composite " + d->labels[g] + "*" + d->labels[h] + " = " + d->labels[gh] +
                             " has wrong src/rng");
    }
  }

  if (complete) {
    for (Mor g = 0; g < n; ++g)
      for (Mor h = 0; h < n; ++h) {
        if (d->src[g] != d->rng[h]) continue;
        const Mor gh = static_cast<Mor>(at(g, h));
        for (Mor k = 0; k < n; ++k) {
          if (d->src[h] != d->rng[k]) continue;
          const Mor hk = static_cast<Mor>(at(h, k));
          if (at(gh, k) != at(g, hk))
            note(violations, "associativity fails on (" + d->labels[g] + ", " + d->labels[h] + ", " +
                                 d->labels[k] + ")");
        }
      }
  }

  d->inv.assign(n, static_cast<Mor>(n));
  for (Obj e = 0; e < num_obj; ++e) d->inv[e] = e;
  for (const auto& [a, b] : raw.inverses) {
    const Mor g = lookup(a), h = lookup(b);
    for (auto [x, y] : {std::pair{g, h}, std::pair{h, g}}) {
      if (d->inv[x] != n && d->inv[x] != y)
        note(violations, "conflicting inverses declared for " + d->labels[x]);
      d->inv[x] = y;
    }
  }
  if (complete) {
    for (Mor g = 0; g < n; ++g) {
      if (d->inv[g] == n) {
        for (Mor h = 0; h < n; ++h) {
          if (d->src[g] == d->rng[h] && at(g, h) == static_cast<std::int32_t>(d->rng[g]) &&
              d->src[h] == d->rng[g] && at(h, g) == static_cast<std::int32_t>(d->src[g])) {
            d->inv[g] = h;
            break;
          }
        }
      }
      const Mor h = d->inv[g];
      if (h == n) {
        note(violations, "morphism " + d->labels[g] + " has no inverse");
        continue;
      }
      const bool ok = d->src[g] == d->rng[h] && d->src[h] == d->rng[g] &&
                      at(h, g) == static_cast<std::int32_t>(d->src[g]) &&
                      at(g, h) == static_cast<std::int32_t>(d->rng[g]);
      if (!ok) note(violations, "declared inverse " + d->labels[h] + " of " + d->labels[g] + " is not an inverse");
    }
  }

  if (!violations.empty())
    throw Error(ErrorKind::AxiomViolation, "groupoid axioms violated: " + violations.front(),
                violations);
  FiniteGroupoid out;
  out.d_ = std::move(d);
  return out;
}

std::size_t FiniteGroupoid::num_objects() const { return d_ ? d_->object_labels.size() : 0; }
std::size_t FiniteGroupoid::size() const { return d_ ? d_->labels.size() : 0; }
Obj FiniteGroupoid::src(Mor g) const { return d_->src.at(g); }
Obj FiniteGroupoid::rng(Mor g) const { return d_->rng.at(g); }
Mor FiniteGroupoid::inverse(Mor g) const { return d_->inv.at(g); }

std::optional<Mor> FiniteGroupoid::compose(Mor g, Mor h) const {
  const std::int32_t v = d_->comp.at(g * size() + h);
  if (v < 0) return std::nullopt;
  return static_cast<Mor>(v);
}

Mor FiniteGroupoid::compose_or_throw(Mor g, Mor h) const {
  if (auto gh = compose(g, h)) return *gh;
  throw Error(ErrorKind::MalformedInput, "morphisms " + label(g) + " and " + label(h) + " are not composable");
}

const std::string& FiniteGroupoid::object_label(Obj e) const { return d_->object_labels.at(e); }
const std::string& FiniteGroupoid::label(Mor g) const { return d_->labels.at(g); }

std::optional<Obj> FiniteGroupoid::find_object(std::string_view label) const {
  auto it = d_->by_label.find(std::string(label));
  if (it == d_->by_label.end() || it->second >= num_objects()) return std::nullopt;
  return it->second;
}

std::optional<Mor> FiniteGroupoid::find(std::string_view label) const {
  auto it = d_->by_label.find(std::string(label));
  if (it == d_->by_label.end()) return std::nullopt;
  return it->second;
}

RawGroupoid FiniteGroupoid::to_raw() const {
  RawGroupoid raw;
  raw.objects = d_->object_labels;
  for (Mor g = static_cast<Mor>(num_objects()); g < size(); ++g)
    raw.morphisms.push_back({label(g), object_label(src(g)), object_label(rng(g))});
  for (Mor g = static_cast<Mor>(num_objects()); g < size(); ++g)
    for (Mor h = static_cast<Mor>(num_objects()); h < size(); ++h)
      if (auto gh = compose(g, h)) raw.composition.push_back({label(g), label(h), label(*gh)});
  for (Mor g = static_cast<Mor>(num_objects()); g < size(); ++g)
    if (g <= inverse(g)) raw.inverses.emplace_back(label(g), label(inverse(g)));
  return raw;
}

// ---------------------------------------------------------------------------

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<std::uint32_t>> table) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::MalformedInput, "group has no elements");
  if (table.size() != n) throw Error(ErrorKind::MalformedInput, "group table has wrong row count");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::MalformedInput, "group table has wrong column count");
    for (auto v : row)
      if (v >= n) throw Error(ErrorKind::AxiomViolation, "group table is not closed");
  }
  std::vector<std::string> violations;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          note(violations, "associativity fails on (" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")");
  std::optional<std::uint32_t> id;
  for (std::uint32_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) id = e;
  }
  if (!id) throw Error(ErrorKind::AxiomViolation, "group has no identity element");
  std::vector<std::uint32_t> inv(n, static_cast<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b)
      if (table[a][b] == *id && table[b][a] == *id) {
        inv[a] = b;
        break;
      }
    if (inv[a] == n) note(violations, "element " + labels[a] + " has no inverse");
  }
  if (!violations.empty())
    throw Error(ErrorKind::AxiomViolation, "group axioms violated: " + violations.front(), violations);
  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.inverse_ = std::move(inv);
  g.identity_ = *id;
  return g;
}

std::optional<std::uint32_t> FiniteGroup::find(std::string_view label) const {
  for (std::uint32_t a = 0; a < order(); ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

std::uint32_t FiniteGroup::element_order(std::uint32_t a) const {
  std::uint32_t k = 1;
  for (std::uint32_t x = a; x != identity_; x = op(x, a)) ++k;
  return k;
}

FiniteGroup isotropy(const FiniteGroupoid& g, Obj e) {
  if (e >= g.num_objects()) throw Error(ErrorKind::UnknownObject, "unknown object index " + std::to_string(e));
  std::vector<Mor> members;
  for (Mor x = 0; x < g.size(); ++x)
    if (g.src(x) == e && g.rng(x) == e) members.push_back(x);
  std::unordered_map<Mor, std::uint32_t> local;
  for (std::uint32_t i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table(members.size(), std::vector<std::uint32_t>(members.size()));
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    labels.push_back(g.label(members[i]));
    for (std::uint32_t j = 0; j < members.size(); ++j)
      table[i][j] = local.at(g.compose_or_throw(members[i], members[j]));
  }
  FiniteGroup h = FiniteGroup::from_table(std::move(labels), std::move(table));
  h.base_ = e;
  h.morphisms_ = std::move(members);
  return h;
}

bool is_connected(const FiniteGroupoid& g) { return orbit(g, 0).size() == g.num_objects(); }

std::vector<Obj> orbit(const FiniteGroupoid& g, Obj e) {
  if (e >= g.num_objects()) throw Error(ErrorKind::UnknownObject, "unknown object index " + std::to_string(e));
  std::vector<bool> seen(g.num_objects(), false);
  for (Mor x = 0; x < g.size(); ++x)
    if (g.src(x) == e) seen[g.rng(x)] = true;
  std::vector<Obj> out;
  for (Obj f = 0; f < g.num_objects(); ++f)
    if (seen[f]) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------

Subgroupoid::Subgroupoid(FiniteGroupoid parent, std::vector<bool> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  members_.resize(parent_.size(), false);
  bool any = false;
  for (Mor g = 0; g < parent_.size(); ++g) {
    if (!members_[g]) continue;
    any = true;
    if (!members_[parent_.inverse(g)])
      throw Error(ErrorKind::AxiomViolation, "subgroupoid not closed under inverse at " + parent_.label(g));
    for (Mor h = 0; h < parent_.size(); ++h)
      if (members_[h])
        if (auto gh = parent_.compose(g, h); gh && !members_[*gh])
          throw Error(ErrorKind::AxiomViolation, "subgroupoid not closed under composition at (" +
                                                     parent_.label(g) + ", " + parent_.label(h) + ")");
  }
  if (!any) throw Error(ErrorKind::AxiomViolation, "subgroupoid is empty");
}

Subgroupoid Subgroupoid::whole(const FiniteGroupoid& parent) {
  return Subgroupoid(parent, std::vector<bool>(parent.size(), true));
}

std::vector<Mor> Subgroupoid::morphisms() const {
  std::vector<Mor> out;
  for (Mor g = 0; g < members_.size(); ++g)
    if (members_[g]) out.push_back(g);
  return out;
}

std::vector<Obj> Subgroupoid::objects() const {
  std::vector<Obj> out;
  for (Obj e = 0; e < parent_.num_objects(); ++e)
    if (members_[parent_.identity(e)]) out.push_back(e);
  return out;
}

bool Subgroupoid::is_connected() const {
  const auto objs = objects();
  if (objs.empty()) return true;
  for (Obj f : objs) {
    bool reached = false;
    for (Mor g = 0; g < members_.size() && !reached; ++g)
      reached = members_[g] && parent_.src(g) == objs.front() && parent_.rng(g) == f;
    if (!reached) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint32_t> close_subgroup(const FiniteGroup& h, std::vector<std::uint32_t> seed) {
  std::vector<bool> in(h.order(), false);
  std::vector<std::uint32_t> elems;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      elems.push_back(x);
    }
  };
  add(h.identity());
  for (auto x : seed) add(x);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(h.op(elems[i], elems[j]));
      add(h.op(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

std::vector<Subgroup> subgroups(const FiniteGroup& h, std::size_t bound) {
  if (h.order() > bound)
    throw Error(ErrorKind::BoundExceeded, "group of order " + std::to_string(h.order()) +
                                              " exceeds subgroup enumeration bound " + std::to_string(bound));
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<std::vector<std::uint32_t>> queue;
  auto trivial = close_subgroup(h, {});
  seen.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    auto k = queue.front();
    queue.pop_front();
    for (std::uint32_t x = 0; x < h.order(); ++x) {
      if (std::binary_search(k.begin(), k.end(), x)) continue;
      auto seed = k;
      seed.push_back(x);
      auto next = close_subgroup(h, std::move(seed));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& s : seen) out.push_back({s});
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

bool is_normal(const FiniteGroup& h, const Subgroup& n) {
  for (std::uint32_t g = 0; g < h.order(); ++g)
    for (auto x : n.elements) {
      const auto c = h.op(h.op(g, x), h.inverse(g));
      if (!std::binary_search(n.elements.begin(), n.elements.end(), c)) return false;
    }
  return true;
}

NormalSubgroupSearch has_nontrivial_finite_normal_subgroup(const FiniteGroup& h, std::size_t bound) {
  NormalSubgroupSearch out;
  for (const auto& s : subgroups(h, bound)) {
    if (s.order() == 1 || !is_normal(h, s)) continue;
    if (!out.found) out.witness = s;
    out.found = true;
    out.all.push_back(s);
  }
  return out;
}

bool is_torsion_free(const FiniteGroup& h) { return h.order() == 1; }

// ---------------------------------------------------------------------------

FiniteGroup cyclic_group(std::uint32_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : "c" + std::to_string(a));
    for (std::uint32_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(labels), std::move(table));
}

FiniteGroup klein_four_group() {
  std::vector<std::string> labels = {"1", "a", "b", "ab"};
  std::vector<std::vector<std::uint32_t>> table(4, std::vector<std::uint32_t>(4));
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return FiniteGroup::from_table(std::move(labels), std::move(table));
}

FiniteGroup symmetric_group_3() {
  // Permutations of {0,1,2} in one-line notation; composition (p*q)(i) = p(q(i)).
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  const std::vector<std::string> labels = {"1", "r", "r2", "s01", "s12", "s02"};
  std::vector<std::vector<std::uint32_t>> table(6, std::vector<std::uint32_t>(6));
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup::from_table(labels, std::move(table));
}

FiniteGroupoid transitive_groupoid(const std::vector<std::string>& objects, const FiniteGroup& h) {
  RawGroupoid raw;
  raw.objects = objects;
  const bool trivial = h.order() == 1;
  const std::size_t k = objects.size();
  auto label = [&](std::size_t i, std::size_t j, std::uint32_t x) {
    if (i == j && x == h.identity()) return objects[i];
    std::string s = objects[i] + "<-" + objects[j];
    if (!trivial) s += ":" + h.label(x);
    return s;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::uint32_t x = 0; x < h.order(); ++x) {
        if (i == j && x == h.identity()) continue;
        raw.morphisms.push_back({label(i, j, x), objects[j], objects[i]});
      }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        for (std::uint32_t x = 0; x < h.order(); ++x)
          for (std::uint32_t y = 0; y < h.order(); ++y)
            raw.composition.push_back({label(i, j, x), label(j, l, y), label(i, l, h.op(x, y))});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::uint32_t x = 0; x < h.order(); ++x)
        raw.inverses.emplace_back(label(i, j, x), label(j, i, h.inverse(x)));
  return FiniteGroupoid::validate(raw);
}

FiniteGroupoid one_object_groupoid(const FiniteGroup& h, std::string object) {
  RawGroupoid raw;
  raw.objects = {object};
  auto label = [&](std::uint32_t x) { return x == h.identity() ? object : h.label(x); };
  for (std::uint32_t x = 0; x < h.order(); ++x)
    if (x != h.identity()) raw.morphisms.push_back({label(x), object, object});
  for (std::uint32_t x = 0; x < h.order(); ++x)
    for (std::uint32_t y = 0; y < h.order(); ++y) raw.composition.push_back({label(x), label(y), label(h.op(x, y))});
  for (std::uint32_t x = 0; x < h.order(); ++x) raw.inverses.emplace_back(label(x), label(h.inverse(x)));
  return FiniteGroupoid::validate(raw);
}

FiniteGroupoid pair_groupoid(const std::vector<std::string>& objects) {
  return transitive_groupoid(objects, cyclic_group(1));
}

FiniteGroupoid discrete_groupoid(const std::vector<std::string>& objects) {
  RawGroupoid raw;
  raw.objects = objects;
  return FiniteGroupoid::validate(raw);
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  RawGroupoid ra = a.to_raw(), rb = b.to_raw();
  ra.objects.insert(ra.objects.end(), rb.objects.begin(), rb.objects.end());
  ra.morphisms.insert(ra.morphisms.end(), rb.morphisms.begin(), rb.morphisms.end());
  ra.composition.insert(ra.composition.end(), rb.composition.begin(), rb.composition.end());
  ra.inverses.insert(ra.inverses.end(), rb.inverses.begin(), rb.inverses.end());
  return FiniteGroupoid::validate(ra);
}

}  // namespace gprime
