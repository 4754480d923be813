#include <fstream>
#include <sstream>

#include "support.hpp"

#include "gprime/report.hpp"

using namespace gprime;
using gprime::test::error_kind;
using gprime::test::fixture;
using gprime::test::load;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kTiny = R"({
  "schema": "gprime-instance/1",
  "name": "tiny",
  "groupoid": {"objects": ["e"]},
  "ring": {"kind": "zmod", "n": 3},
  "grading": {"e": ["1"]}
})";

}  // namespace

TEST_SUITE("instance") {
  TEST_CASE("minimal grading instance") {
    const Instance in = parse_instance(kTiny);
    CHECK(in.name == "tiny");
    CHECK(in.kind == StructureKind::Grading);
    CHECK(in.grading.ring().size() == 3);
    CHECK(in.digest.size() == 16);
  }

  TEST_CASE("digest ignores whitespace but not content") {
    const Json doc = Json::parse(kTiny);
    CHECK(parse_instance(doc.dump()).digest == parse_instance(kTiny).digest);
    CHECK(parse_instance(doc.dump(4)).digest == parse_instance(kTiny).digest);
    Json other = doc;
    other["name"] = "tiny2";
    CHECK(instance_from_json(other).digest != parse_instance(kTiny).digest);
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      parse_instance("{\n  \"schema\": ,\n}");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(error_kind([] { parse_instance(""); }) == ErrorKind::ParseError);
  }

  TEST_CASE("schema violations") {
    CHECK(error_kind([] { parse_instance("[]"); }) == ErrorKind::SchemaError);
    Json doc = Json::parse(kTiny);
    doc["schema"] = "gprime-instance/2";
    CHECK(error_kind([&] { instance_from_json(doc); }) == ErrorKind::SchemaError);
    doc = Json::parse(kTiny);
    doc.erase("ring");
    CHECK(error_kind([&] { instance_from_json(doc); }) == ErrorKind::SchemaError);
    doc = Json::parse(kTiny);
    doc["ring"]["n"] = -3;
    CHECK(error_kind([&] { instance_from_json(doc); }) == ErrorKind::SchemaError);
    doc = Json::parse(kTiny);
    doc["groupoid"]["morphisms"] = Json::array({{{"name", "g"}, {"src", "x"}, {"rng", "e"}}});
    CHECK(error_kind([&] { instance_from_json(doc); }) == ErrorKind::SchemaError);
  }

  TEST_CASE("unknown degree labels") {
    Json doc = Json::parse(kTiny);
    doc["grading"]["nope"] = Json::array({"1"});
    CHECK(error_kind([&] { instance_from_json(doc); }) == ErrorKind::SchemaError);
  }

  TEST_CASE("every fixture loads") {
    for (const char* name : {"m3_pair_groupoid", "block_diagonal", "disconnected_groupoid_ring", "zero_Ag",
                             "global_flip", "gf4_frobenius", "groupoid_ring_F2_G8"}) {
      CAPTURE(name);
      const Instance in = load(name);
      CHECK(in.name == name);
      CHECK(in.digest == load(name).digest);
    }
    CHECK(load("block_diagonal").kind == StructureKind::Grading);
    CHECK(load("zero_Ag").kind == StructureKind::PartialAction);
    CHECK(load("groupoid_ring_F2_P2").kind == StructureKind::GroupoidRing);
  }

  TEST_CASE("missing file") {
    CHECK(error_kind([] { load_instance(fixture("does_not_exist")); }) == ErrorKind::MalformedInput);
  }
}

TEST_SUITE("report") {
  TEST_CASE("reports are deterministic") {
    const Instance a = load("block_diagonal");
    const Instance b = load_instance(fixture("block_diagonal"));
    CHECK(equivalence_json(a).dump() == equivalence_json(b).dump());
    CHECK(analysis_json(a).dump() == analysis_json(b).dump());
    CHECK(primeness_json(a, Method::All).dump() == primeness_json(b, Method::All).dump());
  }

  TEST_CASE("header") {
    const Instance in = load("m3_pair_groupoid");
    const Json h = report_header("prime", &in);
    CHECK(h["schema"] == kReportSchema);
    CHECK(h["command"] == "prime");
    CHECK(h["instance"]["digest"] == in.digest);
    CHECK_FALSE(report_header("fuzz", nullptr).contains("instance"));
  }

  TEST_CASE("primeness by method") {
    const Instance in = load("m3_pair_groupoid");
    const Json all = primeness_json(in, Method::All);
    CHECK(all["verdict"] == true);
    for (const char* c : {"i", "ii", "iii", "iv", "v", "vi", "vii"}) CHECK(all["conditions"][c] == true);
    const Json th = primeness_json(in, Method::Theorem);
    CHECK(th["conditions"]["i"].is_null());
    CHECK(th["conditions"]["vii"] == true);
    CHECK(primeness_json(in, Method::Oracle)["oracle"]["ran"] == true);
    CHECK(parse_method("theorem") == Method::Theorem);
    CHECK(error_kind([] { parse_method("magic"); }) == ErrorKind::MalformedInput);
  }

  TEST_CASE("non-prime report names a witness") {
    const Json j = primeness_json(load("disconnected_groupoid_ring"), Method::All);
    CHECK(j["verdict"] == false);
    CHECK(j["witness"].is_object());
  }

  TEST_CASE("errors as json") {
    const Json e = error_json(Error(ErrorKind::BoundExceeded, "too big", {"a"}));
    CHECK(e["kind"] == "BoundExceeded");
    CHECK(e["details"].size() == 1);
    CHECK(exit_code_for(ErrorKind::BoundExceeded) == 2);
    CHECK(exit_code_for(ErrorKind::InternalDisagreement) == 3);
    CHECK(exit_code_for(ErrorKind::ParseError) == 1);
  }

  TEST_CASE("text rendering") {
    const std::string t = render_text(analysis_json(load("block_diagonal")));
    CHECK(t.find("support_hubs") != std::string::npos);
  }

  TEST_CASE("fixture files round trip through the parser") {
    const std::string text = slurp(fixture("m3_pair_groupoid"));
    CHECK(parse_instance(text).digest == load("m3_pair_groupoid").digest);
  }
}
