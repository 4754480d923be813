#include "gprime/element_set.hpp"

#include <algorithm>
#include <bit>

#include "gprime/error.hpp"

namespace gprime {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotDirectSum: return "NotDirectSum";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotSUnital: return "NotSUnital";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::ObjectNotInG0Prime: return "ObjectNotInG0Prime";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::AssociativityFailure: return "AssociativityFailure";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundExceeded: return 2;
    case ErrorKind::InternalDisagreement:
    case ErrorKind::AssociativityFailure: return 3;
    default: return 1;
  }
}

ElementSet::ElementSet(std::size_t universe) : universe_(universe), dense_(universe <= kDenseLimit) {
  if (dense_) bits_.assign((universe + 63) / 64, 0);
}

bool ElementSet::contains(Elem x) const {
  if (x >= universe_) return false;
  if (dense_) return (bits_[x >> 6] >> (x & 63)) & 1U;
  return sparse_.count(x) != 0;
}

bool ElementSet::insert(Elem x) {
  if (x >= universe_) throw Error(ErrorKind::MalformedInput, "element index outside ring carrier");
  if (dense_) {
    std::uint64_t& word = bits_[x >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (x & 63);
    if (word & mask) return false;
    word |= mask;
  } else if (!sparse_.insert(x).second) {
    return false;
  }
  ++count_;
  return true;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> out;
  out.reserve(count_);
  if (dense_) {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        const int bit = std::countr_zero(word);
        out.push_back(static_cast<Elem>(w * 64 + bit));
        word &= word - 1;
      }
    }
  } else {
    out.assign(sparse_.begin(), sparse_.end());
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::uint64_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  if (dense_) {
    for (std::uint64_t w : bits_) mix(w);
  } else {
    for (Elem x : to_vector()) mix(x);
  }
  return h;
}

bool operator==(const ElementSet& a, const ElementSet& b) {
  if (a.universe_ != b.universe_ || a.count_ != b.count_) return false;
  if (a.dense_) return a.bits_ == b.bits_;
  return a.sparse_ == b.sparse_;
}

}  // namespace gprime
