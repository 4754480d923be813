#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gprime/error.hpp"
#include "gprime/fuzz.hpp"
#include "gprime/report.hpp"

using namespace gprime;

namespace {

struct Options {
  std::string file;
  std::string output = "json";
  std::string method = "all";
  bool timings = false;
  std::uint64_t seed = 7;
  std::size_t count = 200;
  std::size_t max_ring = kDefaultOracleBound;
};

std::optional<std::size_t> env_bound() {
  const char* v = std::getenv("GPRIME_MAX_RING");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t pos = 0;
    const unsigned long long n = std::stoull(v, &pos);
    if (pos != std::string(v).size() || n == 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedInput, std::string("GPRIME_MAX_RING must be a positive integer, got '") + v + "'");
  }
}

void emit(const Json& doc, const std::string& output) {
  if (output == "text")
    std::cout << render_text(doc);
  else
    std::cout << doc.dump(2) << "\n";
}

int run(const std::string& command, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Json doc;
  int code = 0;
  if (command == "fuzz") {
    FuzzOptions f;
    f.seed = o.seed;
    f.count = o.count;
    f.max_ring = env_bound().value_or(o.max_ring);
    doc = report_header("fuzz", nullptr);
    doc["seed"] = f.seed;
    doc["count"] = f.count;
    doc["max_ring"] = f.max_ring;
    const FuzzSummary s = run_fuzz(f);
    doc["fuzz"] = summary_json(s);
    if (s.totals.disagreement) code = 3;
    else if (!s.totals.ok() || !s.errors.empty()) code = 1;
  } else {
    Instance in = load_instance(o.file);
    if (auto b = env_bound()) in.bounds.oracle = *b;
    doc = report_header(command, &in);
    if (command == "validate") doc["validation"] = validation_json(in);
    else if (command == "analyze") doc["analysis"] = analysis_json(in);
    else if (command == "prime") doc["primeness"] = primeness_json(in, parse_method(o.method));
    else doc["equivalence"] = equivalence_json(in);
  }
  if (o.timings)
    doc["timings"] = {{"total_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                                       .count()}};
  emit(doc, o.output);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primeness of finite groupoid graded rings"};
  app.require_subcommand(1);
  Options o;
  app.set_version_flag("--version", std::string("gprime ") + kToolVersion);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timings", o.timings, "Include wall-clock timings (breaks byte-identical output)");
  };
  for (const char* name : {"validate", "analyze", "prime", "equivalence"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("file", o.file, "Instance JSON")->required();
    if (std::string(name) == "prime")
      sub->add_option("--method", o.method, "oracle, theorem or all")->check(CLI::IsMember({"oracle", "theorem", "all"}));
    add_common(sub);
  }
  auto* fuzz = app.add_subcommand("fuzz", "Random nearly epsilon-strong instances, every property checked");
  fuzz->add_option("--seed", o.seed);
  fuzz->add_option("--count", o.count);
  fuzz->add_option("--max-ring", o.max_ring)->check(CLI::PositiveNumber);
  add_common(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const std::exception& e) {
    Json doc = report_header(command, nullptr);
    doc["error"] = error_json(e);
    if (o.output == "text")
      std::cerr << render_text(doc);
    else
      std::cerr << doc.dump(2) << "\n";
    if (const auto* err = dynamic_cast<const Error*>(&e)) return exit_code_for(err->kind());
    return 1;
  }
}
