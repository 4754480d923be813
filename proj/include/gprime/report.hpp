#pragma once

#include <string>

#include "gprime/instance.hpp"
#include "gprime/primeness.hpp"

namespace gprime {

inline constexpr const char* kReportSchema = "gprime-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Method { Oracle, Theorem, All };
Method parse_method(const std::string& s);
std::string to_string(Method m);

/// Skeleton shared by every command: schema, tool, command, instance digest.
Json report_header(const std::string& command, const Instance* in);

Json validation_json(const Instance& in);
Json analysis_json(const Instance& in);
/// Runs the deciders selected by `method`.
Json primeness_json(const Instance& in, Method method);
/// The seven-way harness; throws InternalDisagreement like equivalence_report.
Json equivalence_json(const Instance& in);

Json error_json(const std::exception& e);

/// Indented key: value rendering of a report.
std::string render_text(const Json& doc);

}  // namespace gprime
