#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gprime/grading.hpp"
#include "gprime/partial_action.hpp"

namespace gprime {

using Json = nlohmann::ordered_json;

inline constexpr const char* kInstanceSchema = "gprime-instance/1";

struct Bounds {
  std::size_t oracle = kDefaultOracleBound;
  std::size_t enumeration = kDefaultEnumerationBound;
  std::size_t subgroups = 24;
};

enum class StructureKind { Grading, PartialAction, GroupoidRing };
std::string to_string(StructureKind k);

/// A parsed and fully validated instance.
struct Instance {
  std::string name;
  std::string digest;  // FNV-1a 64 of the canonical dump, hex
  StructureKind kind = StructureKind::Grading;
  FiniteGroupoid groupoid;
  FiniteRing ring;  // the graded ring, the ambient A, or the coefficients R
  std::optional<PartialAction> action;
  Grading grading;  // S, A x_sigma G, or R[G]
  Bounds bounds;
  Json source;
};

/// Throws ParseError (with line and column), SchemaError, and whatever the
/// structure validation raises.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);
Instance instance_from_json(const Json& doc);

std::string instance_digest(const Json& doc);

// Pieces reused by the fuzzer and tests.
FiniteGroupoid groupoid_from_json(const Json& j);
FiniteRing ring_from_json(const Json& j, const FiniteGroupoid* objects = nullptr);
FiniteGroup group_from_json(const Json& j);

}  // namespace gprime
