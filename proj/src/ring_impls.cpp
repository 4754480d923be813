#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>

#include "gprime/error.hpp"
#include "gprime/ring.hpp"

namespace gprime {

namespace {

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
  return out;
}

std::size_t checked_power(std::size_t base, std::size_t exp, const std::string& what) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > kMaxCarrier / std::max<std::size_t>(base, 1))
      throw Error(ErrorKind::BoundExceeded, what + " exceeds the carrier cap of " + std::to_string(kMaxCarrier));
    out *= base;
  }
  return out;
}

std::uint32_t parse_index(const std::string& s, std::uint32_t lo, std::uint32_t hi, const std::string& ctx) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || v < lo || v > hi)
    throw Error(ErrorKind::ParseError, ctx + ": index '" + s + "' must be in " + std::to_string(lo) + ".." +
                                           std::to_string(hi));
  return static_cast<std::uint32_t>(v);
}

// Mixed-radix digit helpers over a uniform base.
struct Radix {
  std::size_t q = 1;
  std::size_t digits = 0;

  void decode(Elem a, std::vector<Elem>& out) const {
    out.resize(digits);
    std::size_t v = a;
    for (std::size_t i = 0; i < digits; ++i) {
      out[i] = static_cast<Elem>(v % q);
      v /= q;
    }
  }
  Elem encode(const std::vector<Elem>& d) const {
    std::size_t v = 0;
    for (std::size_t i = digits; i-- > 0;) v = v * q + d[i];
    return static_cast<Elem>(v);
  }
};

class ZnImpl : public RingImpl {
 public:
  explicit ZnImpl(std::uint32_t n) : n_(n) {}
  std::size_t size() const override { return n_; }
  Elem add(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} + b) % n_); }
  Elem neg(Elem a) const override { return a == 0 ? 0 : n_ - a; }
  Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} * b) % n_); }
  std::string kind() const override { return "Zn"; }
  std::string describe() const override { return "Z/" + std::to_string(n_); }
  std::string format(Elem a) const override { return std::to_string(a); }
  std::optional<Elem> atom(const std::string&, const std::vector<std::string>&) const override { return std::nullopt; }
  std::vector<Elem> natural_generators() const override { return n_ > 1 ? std::vector<Elem>{1} : std::vector<Elem>{}; }
  std::optional<std::optional<Elem>> identity_hint() const override { return std::optional<Elem>(n_ > 1 ? 1 : 0); }
  Elem frobenius(Elem a, unsigned) const override { return a; }

 private:
  std::uint32_t n_;
};

class GaloisImpl : public RingImpl {
 public:
  GaloisImpl(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    // Conway polynomials x^2 + c1 x + c0.
    switch (p) {
      case 2: c1_ = 1, c0_ = 1; break;
      case 3: c1_ = 2, c0_ = 2; break;
      case 5: c1_ = 4, c0_ = 2; break;
      case 7: c1_ = 6, c0_ = 3; break;
      default: break;
    }
  }
  std::size_t size() const override { return k_ == 1 ? p_ : p_ * p_; }
  Elem add(Elem a, Elem b) const override {
    return pack((lo(a) + lo(b)) % p_, (hi(a) + hi(b)) % p_);
  }
  Elem neg(Elem a) const override { return pack((p_ - lo(a)) % p_, (p_ - hi(a)) % p_); }
  Elem mul(Elem a, Elem b) const override {
    const std::uint32_t u0 = lo(a), u1 = hi(a), v0 = lo(b), v1 = hi(b);
    const std::uint32_t t = u1 * v1 % p_;
    const std::uint32_t r0 = (u0 * v0 + (p_ - c0_) * t) % p_;
    const std::uint32_t r1 = (u0 * v1 + u1 * v0 + (p_ - c1_) * t) % p_;
    return pack(r0, r1);
  }
  std::string kind() const override { return "GF"; }
  std::string describe() const override {
    return k_ == 1 ? "GF(" + std::to_string(p_) + ")" : "GF(" + std::to_string(p_) + "^2)";
  }
  std::string format(Elem a) const override {
    const std::uint32_t c0 = lo(a), c1 = hi(a);
    std::vector<std::string> terms;
    if (c0 != 0) terms.push_back(std::to_string(c0));
    if (c1 == 1) terms.emplace_back("a");
    else if (c1 != 0) terms.push_back(std::to_string(c1) + "*a");
    return join_terms(terms);
  }
  std::optional<Elem> atom(const std::string& name, const std::vector<std::string>& args) const override {
    if (name == "a" && args.empty() && k_ == 2) return pack(0, 1);
    return std::nullopt;
  }
  std::vector<Elem> natural_generators() const override {
    return k_ == 1 ? std::vector<Elem>{1} : std::vector<Elem>{1, pack(0, 1)};
  }
  std::optional<std::optional<Elem>> identity_hint() const override { return std::optional<Elem>(1); }
  Elem frobenius(Elem a, unsigned k) const override {
    Elem x = a;
    for (unsigned i = 0; i < k; ++i) {
      Elem acc = 1;
      for (std::uint32_t j = 0; j < p_; ++j) acc = mul(acc, x);
      x = acc;
    }
    return x;
  }

 private:
  std::uint32_t lo(Elem a) const { return a % p_; }
  std::uint32_t hi(Elem a) const { return k_ == 1 ? 0 : a / p_; }
  Elem pack(std::uint32_t c0, std::uint32_t c1) const { return c0 + c1 * p_; }

  std::uint32_t p_, k_;
  std::uint32_t c1_ = 0, c0_ = 0;
};

class MatrixImpl : public RingImpl {
 public:
  MatrixImpl(FiniteRing base, std::uint32_t n) : base_(std::move(base)), n_(n) {
    radix_.q = base_.size();
    radix_.digits = std::size_t{n} * n;
    size_ = checked_power(radix_.q, radix_.digits, "matrix ring M" + std::to_string(n) + "(" + base_.describe() + ")");
  }
  std::size_t size() const override { return size_; }
  Elem add(Elem a, Elem b) const override {
    std::vector<Elem> x, y;
    radix_.decode(a, x);
    radix_.decode(b, y);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_.add(x[i], y[i]);
    return radix_.encode(x);
  }
  Elem neg(Elem a) const override {
    std::vector<Elem> x;
    radix_.decode(a, x);
    for (auto& v : x) v = base_.neg(v);
    return radix_.encode(x);
  }
  Elem mul(Elem a, Elem b) const override {
    std::vector<Elem> x, y, z(radix_.digits, kZero);
    radix_.decode(a, x);
    radix_.decode(b, y);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t k = 0; k < n_; ++k) {
        const Elem xik = x[i * n_ + k];
        if (xik == kZero) continue;
        for (std::uint32_t j = 0; j < n_; ++j) {
          const Elem ykj = y[k * n_ + j];
          if (ykj != kZero) z[i * n_ + j] = base_.add(z[i * n_ + j], base_.mul(xik, ykj));
        }
      }
    return radix_.encode(z);
  }
  std::string kind() const override { return "matrix"; }
  std::string describe() const override { return "M" + std::to_string(n_) + "(" + base_.describe() + ")"; }
  std::string format(Elem a) const override {
    std::vector<Elem> x;
    radix_.decode(a, x);
    const auto one = base_.identity();
    std::vector<std::string> terms;
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) {
        const Elem c = x[i * n_ + j];
        if (c == kZero) continue;
        std::string t = "e(" + std::to_string(i + 1) + "," + std::to_string(j + 1);
        if (!one || c != *one) t += "," + base_.format(c);
        terms.push_back(t + ")");
      }
    return join_terms(terms);
  }
  std::optional<Elem> atom(const std::string& name, const std::vector<std::string>& args) const override {
    if (name != "e") return std::nullopt;
    if (args.size() != 2 && args.size() != 3)
      throw Error(ErrorKind::ParseError, "e(i,j) or e(i,j,coefficient) expected");
    const auto i = parse_index(args[0], 1, n_, "matrix unit") - 1;
    const auto j = parse_index(args[1], 1, n_, "matrix unit") - 1;
    Elem c;
    if (args.size() == 3) {
      c = base_.parse(args[2]);
    } else {
      const auto one = base_.identity();
      if (!one) throw Error(ErrorKind::ParseError, "e(i,j) needs a unital base ring; give a coefficient");
      c = *one;
    }
    std::vector<Elem> x(radix_.digits, kZero);
    x[i * n_ + j] = c;
    return radix_.encode(x);
  }
  std::vector<Elem> natural_generators() const override {
    std::vector<Elem> out;
    std::vector<Elem> x(radix_.digits, kZero);
    for (std::size_t d = 0; d < radix_.digits; ++d)
      for (Elem g : base_.additive_generators()) {
        x[d] = g;
        out.push_back(radix_.encode(x));
        x[d] = kZero;
      }
    return out;
  }
  std::optional<std::optional<Elem>> identity_hint() const override {
    const auto one = base_.identity();
    if (!one) return std::optional<Elem>();
    std::vector<Elem> x(radix_.digits, kZero);
    for (std::uint32_t i = 0; i < n_; ++i) x[i * n_ + i] = *one;
    return std::optional<Elem>(radix_.encode(x));
  }
  Elem frobenius(Elem a, unsigned k) const override {
    std::vector<Elem> x;
    radix_.decode(a, x);
    for (auto& v : x) v = base_.impl().frobenius(v, k);
    return radix_.encode(x);
  }

 private:
  FiniteRing base_;
  std::uint32_t n_;
  Radix radix_;
  std::size_t size_ = 1;
};

class GroupRingImpl : public RingImpl {
 public:
  GroupRingImpl(FiniteRing base, FiniteGroup h) : base_(std::move(base)), h_(std::move(h)) {
    radix_.q = base_.size();
    radix_.digits = h_.order();
    size_ = checked_power(radix_.q, radix_.digits, "group ring over " + base_.describe());
  }
  std::size_t size() const override { return size_; }
  Elem add(Elem a, Elem b) const override {
    std::vector<Elem> x, y;
    radix_.decode(a, x);
    radix_.decode(b, y);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_.add(x[i], y[i]);
    return radix_.encode(x);
  }
  Elem neg(Elem a) const override {
    std::vector<Elem> x;
    radix_.decode(a, x);
    for (auto& v : x) v = base_.neg(v);
    return radix_.encode(x);
  }
  Elem mul(Elem a, Elem b) const override {
    std::vector<Elem> x, y, z(radix_.digits, kZero);
    radix_.decode(a, x);
    radix_.decode(b, y);
    for (std::uint32_t g = 0; g < h_.order(); ++g) {
      if (x[g] == kZero) continue;
      for (std::uint32_t k = 0; k < h_.order(); ++k) {
        if (y[k] == kZero) continue;
        const auto gk = h_.op(g, k);
        z[gk] = base_.add(z[gk], base_.mul(x[g], y[k]));
      }
    }
    return radix_.encode(z);
  }
  std::string kind() const override { return "group_ring"; }
  std::string describe() const override {
    std::string s = base_.describe() + "[";
    for (std::uint32_t g = 0; g < h_.order(); ++g) s += (g ? "," : "") + h_.label(g);
    return s + "]";
  }
  std::string format(Elem a) const override {
    std::vector<Elem> x;
    radix_.decode(a, x);
    const auto one = base_.identity();
    std::vector<std::string> terms;
    for (std::uint32_t g = 0; g < h_.order(); ++g) {
      if (x[g] == kZero) continue;
      std::string t = "grp(" + h_.label(g);
      if (!one || x[g] != *one) t += "," + base_.format(x[g]);
      terms.push_back(t + ")");
    }
    return join_terms(terms);
  }
  std::optional<Elem> atom(const std::string& name, const std::vector<std::string>& args) const override {
    if (name != "grp") return std::nullopt;
    if (args.size() != 1 && args.size() != 2) throw Error(ErrorKind::ParseError, "grp(label[, coefficient]) expected");
    const auto g = h_.find(args[0]);
    if (!g) throw Error(ErrorKind::ParseError, "unknown group element '" + args[0] + "'");
    Elem c;
    if (args.size() == 2) {
      c = base_.parse(args[1]);
    } else {
      const auto one = base_.identity();
      if (!one) throw Error(ErrorKind::ParseError, "grp(label) needs a unital base ring; give a coefficient");
      c = *one;
    }
    std::vector<Elem> x(radix_.digits, kZero);
    x[*g] = c;
    return radix_.encode(x);
  }
  std::vector<Elem> natural_generators() const override {
    std::vector<Elem> out;
    std::vector<Elem> x(radix_.digits, kZero);
    for (std::size_t d = 0; d < radix_.digits; ++d)
      for (Elem g : base_.additive_generators()) {
        x[d] = g;
        out.push_back(radix_.encode(x));
        x[d] = kZero;
      }
    return out;
  }
  std::optional<std::optional<Elem>> identity_hint() const override {
    const auto one = base_.identity();
    if (!one) return std::optional<Elem>();
    std::vector<Elem> x(radix_.digits, kZero);
    x[h_.identity()] = *one;
    return std::optional<Elem>(radix_.encode(x));
  }

 private:
  FiniteRing base_;
  FiniteGroup h_;
  Radix radix_;
  std::size_t size_ = 1;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class TableImpl : public RingImpl {
 public:
  TableImpl(std::vector<std::string> names, std::vector<std::vector<Elem>> add, std::vector<std::vector<Elem>> mul)
      : names_(std::move(names)), add_(std::move(add)), mul_(std::move(mul)) {
    for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<Elem>(i);
  }
  std::size_t size() const override { return names_.size(); }
  Elem add(Elem a, Elem b) const override { return add_[a][b]; }
  Elem neg(Elem a) const override {
    for (Elem b = 0; b < names_.size(); ++b)
      if (add_[a][b] == kZero) return b;
    return kZero;
  }
  Elem mul(Elem a, Elem b) const override { return mul_[a][b]; }
  std::string kind() const override { return "table"; }
  std::string describe() const override { return "Table[" + std::to_string(names_.size()) + "]"; }
  std::string format(Elem a) const override { return a == kZero ? "0" : names_[a]; }
  std::optional<Elem> atom(const std::string& name, const std::vector<std::string>& args) const override {
    if (!args.empty()) return std::nullopt;
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Elem>> add_, mul_;
  std::unordered_map<std::string, Elem> index_;
};

}  // namespace

// ---------------------------------------------------------------------------

DirectSumImpl::DirectSumImpl(std::vector<FiniteRing> summands, std::vector<std::string> labels)
    : summands_(std::move(summands)), labels_(std::move(labels)) {
  if (summands_.empty()) throw Error(ErrorKind::MalformedInput, "direct sum needs at least one summand");
  if (labels_.empty())
    for (std::size_t i = 0; i < summands_.size(); ++i) labels_.push_back(std::to_string(i + 1));
  if (labels_.size() != summands_.size())
    throw Error(ErrorKind::MalformedInput, "direct sum label count does not match summand count");
  for (const auto& r : summands_) {
    stride_.push_back(size_);
    if (size_ > kMaxCarrier / r.size())
      throw Error(ErrorKind::BoundExceeded, "direct sum exceeds the carrier cap of " + std::to_string(kMaxCarrier));
    size_ *= r.size();
  }
}

Elem DirectSumImpl::add(Elem a, Elem b) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < summands_.size(); ++i)
    out += summands_[i].add(project(i, a), project(i, b)) * stride_[i];
  return static_cast<Elem>(out);
}

Elem DirectSumImpl::neg(Elem a) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < summands_.size(); ++i) out += summands_[i].neg(project(i, a)) * stride_[i];
  return static_cast<Elem>(out);
}

Elem DirectSumImpl::mul(Elem a, Elem b) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < summands_.size(); ++i)
    out += summands_[i].mul(project(i, a), project(i, b)) * stride_[i];
  return static_cast<Elem>(out);
}

std::string DirectSumImpl::describe() const {
  std::string s = "DirectSum[";
  for (std::size_t i = 0; i < summands_.size(); ++i)
    s += (i ? ", " : "") + labels_[i] + ": " + summands_[i].describe();
  return s + "]";
}

std::string DirectSumImpl::format(Elem a) const {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const Elem x = project(i, a);
    if (x != kZero) terms.push_back("at(" + labels_[i] + "," + summands_[i].format(x) + ")");
  }
  return join_terms(terms);
}

std::optional<std::size_t> DirectSumImpl::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  std::size_t pos = 0;
  try {
    const auto v = std::stoul(std::string(label), &pos);
    if (pos == label.size() && v >= 1 && v <= summands_.size()) return v - 1;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

std::optional<Elem> DirectSumImpl::atom(const std::string& name, const std::vector<std::string>& args) const {
  if (name != "at") return std::nullopt;
  if (args.size() != 2) throw Error(ErrorKind::ParseError, "at(summand, expression) expected");
  const auto i = find(args[0]);
  if (!i) throw Error(ErrorKind::ParseError, "unknown summand '" + args[0] + "'");
  return inject(*i, summands_[*i].parse(args[1]));
}

std::vector<Elem> DirectSumImpl::natural_generators() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < summands_.size(); ++i)
    for (Elem g : summands_[i].additive_generators()) out.push_back(inject(i, g));
  return out;
}

std::optional<std::optional<Elem>> DirectSumImpl::identity_hint() const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const auto one = summands_[i].identity();
    if (!one) return std::optional<Elem>();
    out += *one * stride_[i];
  }
  return std::optional<Elem>(static_cast<Elem>(out));
}

Elem DirectSumImpl::frobenius(Elem a, unsigned k) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < summands_.size(); ++i)
    out += summands_[i].impl().frobenius(project(i, a), k) * stride_[i];
  return static_cast<Elem>(out);
}

// ---------------------------------------------------------------------------

SubringImpl::SubringImpl(FiniteRing parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != kZero)
    throw Error(ErrorKind::MalformedInput, "subring must contain zero");
  if (parent_.size() <= (std::size_t{1} << 22)) {
    dense_.assign(parent_.size(), 0);
    for (std::size_t i = 0; i < members_.size(); ++i) dense_[members_[i]] = static_cast<std::uint32_t>(i + 1);
  } else {
    for (std::size_t i = 0; i < members_.size(); ++i) sparse_.emplace_back(members_[i], static_cast<Elem>(i));
  }
}

std::optional<Elem> SubringImpl::from_parent(Elem x) const {
  if (!dense_.empty()) {
    if (x >= dense_.size() || dense_[x] == 0) return std::nullopt;
    return dense_[x] - 1;
  }
  auto it = std::lower_bound(sparse_.begin(), sparse_.end(), std::pair<Elem, Elem>{x, 0});
  if (it == sparse_.end() || it->first != x) return std::nullopt;
  return it->second;
}

Elem SubringImpl::local(Elem x) const {
  if (auto l = from_parent(x)) return *l;
  throw Error(ErrorKind::AxiomViolation, "subring is not closed: " + parent_.format(x) + " escapes it");
}

std::string SubringImpl::describe() const {
  return "Subring[" + std::to_string(members_.size()) + " of " + parent_.describe() + "]";
}

std::optional<Elem> SubringImpl::atom(const std::string& name, const std::vector<std::string>& args) const {
  auto x = parent_.impl().atom(name, args);
  if (!x) return std::nullopt;
  if (auto l = from_parent(*x)) return *l;
  throw Error(ErrorKind::ParseError, "element " + parent_.format(*x) + " is not in the subring");
}

// ---------------------------------------------------------------------------

FiniteRing zmod(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::MalformedInput, "Z/n needs n >= 1");
  return FiniteRing(std::make_shared<ZnImpl>(n));
}

FiniteRing galois_field(std::uint32_t p, std::uint32_t k) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw Error(ErrorKind::MalformedInput, "GF(p^k) supports p in {2, 3, 5, 7}");
  if (k != 1 && k != 2) throw Error(ErrorKind::MalformedInput, "GF(p^k) supports k in {1, 2}");
  return FiniteRing(std::make_shared<GaloisImpl>(p, k));
}

FiniteRing matrix_ring(const FiniteRing& base, std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::MalformedInput, "matrix size must be positive");
  return FiniteRing(std::make_shared<MatrixImpl>(base, n));
}

FiniteRing direct_sum(std::vector<FiniteRing> summands, std::vector<std::string> labels) {
  return FiniteRing(std::make_shared<DirectSumImpl>(std::move(summands), std::move(labels)));
}

FiniteRing group_ring(const FiniteRing& base, const FiniteGroup& h) {
  return FiniteRing(std::make_shared<GroupRingImpl>(base, h));
}

FiniteRing table_ring(std::vector<std::string> names, std::vector<std::vector<Elem>> add,
                      std::vector<std::vector<Elem>> mul) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::MalformedInput, "table ring has no elements");
  if (n > kTableThreshold) throw Error(ErrorKind::BoundExceeded, "table rings are limited to 256 elements");
  std::unordered_map<std::string, int> seen;
  for (const auto& s : names) {
    if (!is_identifier(s) && s != "0")
      throw Error(ErrorKind::MalformedInput, "table element name '" + s + "' is not an identifier");
    if (seen[s]++) throw Error(ErrorKind::MalformedInput, "duplicate table element name '" + s + "'");
  }
  auto check_shape = [&](const std::vector<std::vector<Elem>>& t, const char* what) {
    if (t.size() != n) throw Error(ErrorKind::MalformedInput, std::string(what) + " table has wrong row count");
    for (const auto& row : t) {
      if (row.size() != n) throw Error(ErrorKind::MalformedInput, std::string(what) + " table has wrong column count");
      for (Elem v : row)
        if (v >= n) throw Error(ErrorKind::MalformedInput, std::string(what) + " table entry out of range");
    }
  };
  check_shape(add, "addition");
  check_shape(mul, "multiplication");
  std::vector<std::string> bad;
  auto note = [&](std::string msg) {
    if (bad.size() < 32) bad.push_back(std::move(msg));
  };
  for (Elem a = 0; a < n; ++a) {
    if (add[0][a] != a || add[a][0] != a) note("element 0 is not an additive identity at " + names[a]);
    bool has_neg = false;
    for (Elem b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) note("addition not commutative on (" + names[a] + ", " + names[b] + ")");
      has_neg = has_neg || add[a][b] == 0;
    }
    if (!has_neg) note("no additive inverse for " + names[a]);
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]])
          note("addition not associative on (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          note("multiplication not associative on (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] || mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
          note("distributivity fails on (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
      }
  if (!bad.empty()) throw Error(ErrorKind::AxiomViolation, "table ring axioms violated: " + bad.front(), bad);
  return FiniteRing(std::make_shared<TableImpl>(std::move(names), std::move(add), std::move(mul)));
}

FiniteRing subring_on(const FiniteRing& parent, std::vector<Elem> members) {
  return FiniteRing(std::make_shared<SubringImpl>(parent, std::move(members)));
}

}  // namespace gprime
