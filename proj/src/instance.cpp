#include "gprime/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gprime/error.hpp"

namespace gprime {

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::Grading: return "grading";
    case StructureKind::PartialAction: return "partial_action";
    case StructureKind::GroupoidRing: return "groupoid_ring";
  }
  return "?";
}

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& msg) {
  throw Error(ErrorKind::SchemaError, where + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

std::uint32_t uint(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) schema(where, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffu) schema(where, "integer too large");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> strings(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string kind_of(const Json& j, const std::string& where) { return str(field(j, "kind", where), where + ".kind"); }

FiniteGroupoid explicit_groupoid(const Json& j) {
  RawGroupoid raw;
  raw.objects = strings(field(j, "objects", "groupoid"), "groupoid.objects");
  std::vector<std::string> known = raw.objects;
  auto is_object = [&](const std::string& s) {
    return std::find(raw.objects.begin(), raw.objects.end(), s) != raw.objects.end();
  };
  if (auto it = j.find("morphisms"); it != j.end()) {
    if (!it->is_array()) schema("groupoid.morphisms", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string w = "groupoid.morphisms[" + std::to_string(i) + "]";
      const Json& m = (*it)[i];
      RawGroupoid::Arrow a{str(field(m, "name", w), w + ".name"), str(field(m, "src", w), w + ".src"),
                           str(field(m, "rng", w), w + ".rng")};
      if (!is_object(a.src)) schema(w, "unknown src object '" + a.src + "'");
      if (!is_object(a.rng)) schema(w, "unknown rng object '" + a.rng + "'");
      known.push_back(a.label);
      raw.morphisms.push_back(std::move(a));
    }
  }
  auto known_label = [&](const std::string& s, const std::string& w) {
    if (std::find(known.begin(), known.end(), s) == known.end()) schema(w, "unknown morphism '" + s + "'");
  };
  if (auto it = j.find("composition"); it != j.end()) {
    if (!it->is_array()) schema("groupoid.composition", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string w = "groupoid.composition[" + std::to_string(i) + "]";
      auto t = strings((*it)[i], w);
      if (t.size() != 3) schema(w, "expected [g, h, gh]");
      for (const auto& s : t) known_label(s, w);
      raw.composition.push_back({t[0], t[1], t[2]});
    }
  }
  if (auto it = j.find("inverses"); it != j.end()) {
    if (!it->is_array()) schema("groupoid.inverses", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string w = "groupoid.inverses[" + std::to_string(i) + "]";
      auto t = strings((*it)[i], w);
      if (t.size() != 2) schema(w, "expected [g, g^-1]");
      for (const auto& s : t) known_label(s, w);
      raw.inverses.emplace_back(t[0], t[1]);
    }
  }
  return FiniteGroupoid::validate(raw);
}

Elem parse_in(const FiniteRing& r, const Json& j, const std::string& where) {
  if (j.is_number_integer()) return r.parse(std::to_string(j.get<std::int64_t>()));
  return r.parse(str(j, where));
}

}  // namespace

FiniteGroup group_from_json(const Json& j) {
  const std::string k = kind_of(j, "group");
  if (k == "cyclic") return cyclic_group(uint(field(j, "n", "group"), "group.n"));
  if (k == "klein") return klein_four_group();
  if (k == "symmetric3") return symmetric_group_3();
  if (k == "table") {
    auto labels = strings(field(j, "elements", "group"), "group.elements");
    const Json& t = field(j, "table", "group");
    if (!t.is_array() || t.size() != labels.size()) schema("group.table", "expected one row per element");
    std::vector<std::vector<std::uint32_t>> table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto row = strings(t[i], "group.table");
      if (row.size() != labels.size()) schema("group.table", "row " + std::to_string(i) + " has the wrong length");
      std::vector<std::uint32_t> r;
      for (const auto& s : row) {
        auto it = std::find(labels.begin(), labels.end(), s);
        if (it == labels.end()) schema("group.table", "unknown element '" + s + "'");
        r.push_back(static_cast<std::uint32_t>(it - labels.begin()));
      }
      table.push_back(std::move(r));
    }
    return FiniteGroup::from_table(std::move(labels), std::move(table));
  }
  schema("group.kind", "unknown group kind '" + k + "'");
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  if (!j.is_object()) schema("groupoid", "expected an object");
  if (!j.contains("kind")) return explicit_groupoid(j);
  const std::string k = kind_of(j, "groupoid");
  if (k == "explicit") return explicit_groupoid(j);
  if (k == "pair") return pair_groupoid(strings(field(j, "objects", "groupoid"), "groupoid.objects"));
  if (k == "discrete") return discrete_groupoid(strings(field(j, "objects", "groupoid"), "groupoid.objects"));
  if (k == "group") {
    const std::string obj = j.contains("object") ? str(j["object"], "groupoid.object") : "e";
    return one_object_groupoid(group_from_json(field(j, "group", "groupoid")), obj);
  }
  if (k == "transitive")
    return transitive_groupoid(strings(field(j, "objects", "groupoid"), "groupoid.objects"),
                               group_from_json(field(j, "group", "groupoid")));
  if (k == "disjoint_union") {
    const Json& parts = field(j, "parts", "groupoid");
    if (!parts.is_array() || parts.empty()) schema("groupoid.parts", "expected a nonempty array");
    FiniteGroupoid acc = groupoid_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = disjoint_union(acc, groupoid_from_json(parts[i]));
    return acc;
  }
  schema("groupoid.kind", "unknown groupoid kind '" + k + "'");
}

FiniteRing ring_from_json(const Json& j, const FiniteGroupoid* objects) {
  const std::string k = kind_of(j, "ring");
  if (k == "zmod") return zmod(uint(field(j, "n", "ring"), "ring.n"));
  if (k == "gf") {
    const auto p = uint(field(j, "p", "ring"), "ring.p");
    const auto e = j.contains("k") ? uint(j["k"], "ring.k") : 1;
    return galois_field(p, e);
  }
  if (k == "matrix")
    return matrix_ring(ring_from_json(field(j, "over", "ring"), objects), uint(field(j, "n", "ring"), "ring.n"));
  if (k == "direct_sum") {
    const Json& s = field(j, "summands", "ring");
    if (!s.is_array() || s.empty()) schema("ring.summands", "expected a nonempty array");
    std::vector<FiniteRing> rings;
    for (const auto& x : s) rings.push_back(ring_from_json(x, objects));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = strings(j["labels"], "ring.labels");
      if (labels.size() != rings.size()) schema("ring.labels", "one label per summand expected");
    }
    return direct_sum(std::move(rings), std::move(labels));
  }
  if (k == "object_sum") {
    if (!objects) schema("ring", "object_sum needs a groupoid");
    const Json& s = field(j, "summands", "ring");
    if (!s.is_object()) schema("ring.summands", "expected a map from object to ring");
    for (auto it = s.begin(); it != s.end(); ++it)
      if (!objects->find_object(it.key())) schema("ring.summands", "unknown object '" + it.key() + "'");
    std::vector<FiniteRing> rings;
    std::vector<std::string> labels;
    for (Obj e = 0; e < objects->num_objects(); ++e) {
      const std::string& name = objects->object_label(e);
      if (!s.contains(name)) schema("ring.summands", "no summand for object '" + name + "'");
      rings.push_back(ring_from_json(s[name], objects));
      labels.push_back(name);
    }
    return direct_sum(std::move(rings), std::move(labels));
  }
  if (k == "group_ring")
    return group_ring(ring_from_json(field(j, "over", "ring"), objects), group_from_json(field(j, "group", "ring")));
  if (k == "table") {
    auto names = strings(field(j, "elements", "ring"), "ring.elements");
    auto table = [&](const char* key) {
      const Json& t = field(j, key, "ring");
      if (!t.is_array() || t.size() != names.size()) schema(std::string("ring.") + key, "one row per element");
      std::vector<std::vector<Elem>> out;
      for (const auto& row : t) {
        auto r = strings(row, std::string("ring.") + key);
        if (r.size() != names.size()) schema(std::string("ring.") + key, "row length differs from element count");
        std::vector<Elem> v;
        for (const auto& s : r) {
          auto it = std::find(names.begin(), names.end(), s);
          if (it == names.end()) schema(std::string("ring.") + key, "unknown element '" + s + "'");
          v.push_back(static_cast<Elem>(it - names.begin()));
        }
        out.push_back(std::move(v));
      }
      return out;
    };
    return table_ring(names, table("add"), table("mul"));
  }
  if (k == "subring") {
    FiniteRing parent = ring_from_json(field(j, "of", "ring"), objects);
    const Json& g = field(j, "generators", "ring");
    if (!g.is_array()) schema("ring.generators", "expected an array");
    std::vector<Elem> gens;
    for (const auto& x : g) gens.push_back(parse_in(parent, x, "ring.generators"));
    return generated_subring(parent, gens);
  }
  schema("ring.kind", "unknown ring kind '" + k + "'");
}

std::string instance_digest(const Json& doc) {
  const std::string canon = doc.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Mor morphism(const FiniteGroupoid& g, const std::string& label, const std::string& where) {
  auto m = g.find(label);
  if (!m) schema(where, "unknown morphism '" + label + "'");
  return *m;
}

Grading grading_section(const Instance& in, const Json& j) {
  if (!j.is_object()) schema("grading", "expected a map from morphism to generator list");
  std::vector<std::vector<Elem>> gens(in.groupoid.size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Mor g = morphism(in.groupoid, it.key(), "grading");
    if (!it->is_array()) schema("grading." + it.key(), "expected an array of expressions");
    for (const auto& x : *it) gens[g].push_back(parse_in(in.ring, x, "grading." + it.key()));
  }
  return Grading::validate(in.groupoid, in.ring, gens);
}

PartialAction action_section(const Instance& in, const Json& j) {
  RawPartialAction raw;
  raw.groupoid = in.groupoid;
  raw.ambient = in.ring;
  raw.ideals.assign(in.groupoid.size(), {});
  raw.maps.assign(in.groupoid.size(), std::nullopt);
  const Json& ideals = field(j, "ideals", "partial_action");
  if (!ideals.is_object()) schema("partial_action.ideals", "expected a map from morphism to generator list");
  for (auto it = ideals.begin(); it != ideals.end(); ++it) {
    const Mor g = morphism(in.groupoid, it.key(), "partial_action.ideals");
    if (!it->is_array()) schema("partial_action.ideals." + it.key(), "expected an array");
    for (const auto& x : *it) raw.ideals[g].push_back(parse_in(in.ring, x, "partial_action.ideals." + it.key()));
  }
  if (j.contains("maps")) {
    const Json& maps = j["maps"];
    if (!maps.is_object()) schema("partial_action.maps", "expected a map from morphism to map spec");
    for (auto it = maps.begin(); it != maps.end(); ++it) {
      const std::string w = "partial_action.maps." + it.key();
      const Mor g = morphism(in.groupoid, it.key(), "partial_action.maps");
      if (!it->is_object()) schema(w, "expected an object");
      MapSpec m;
      if (it->contains("pairs")) {
        m.kind = MapSpec::Kind::Pairs;
        for (const auto& p : (*it)["pairs"]) {
          if (!p.is_array() || p.size() != 2) schema(w, "pairs are [x, sigma(x)]");
          m.pairs.emplace_back(parse_in(in.ring, p[0], w), parse_in(in.ring, p[1], w));
        }
      } else {
        m.kind = MapSpec::Kind::Copy;
        if (it->contains("frobenius")) m.frobenius = uint((*it)["frobenius"], w + ".frobenius");
        if (it->contains("permute")) {
          const auto* ds = in.ring.as<DirectSumImpl>();
          if (!ds) schema(w, "permute needs a direct-sum ring");
          for (const auto& p : (*it)["permute"]) {
            auto t = strings(p, w + ".permute");
            if (t.size() != 2) schema(w, "permute entries are [from, to]");
            auto a = ds->find(t[0]), b = ds->find(t[1]);
            if (!a || !b) schema(w, "unknown summand in permute");
            m.permutation.emplace_back(*a, *b);
          }
        }
      }
      raw.maps[g] = std::move(m);
    }
  }
  return PartialAction::validate(raw);
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) schema("instance", "top level must be an object");
  Instance in;
  in.source = doc;
  in.digest = instance_digest(doc);
  if (doc.contains("schema") && str(doc["schema"], "schema") != kInstanceSchema)
    schema("schema", "unsupported schema '" + doc["schema"].get<std::string>() + "'");
  if (doc.contains("name")) in.name = str(doc["name"], "name");
  if (doc.contains("bounds")) {
    const Json& b = doc["bounds"];
    if (!b.is_object()) schema("bounds", "expected an object");
    if (b.contains("oracle")) in.bounds.oracle = uint(b["oracle"], "bounds.oracle");
    if (b.contains("enumeration")) in.bounds.enumeration = uint(b["enumeration"], "bounds.enumeration");
    if (b.contains("subgroups")) in.bounds.subgroups = uint(b["subgroups"], "bounds.subgroups");
  }
  const int sections = doc.contains("grading") + doc.contains("partial_action") + doc.contains("groupoid_ring");
  if (sections != 1) schema("instance", "exactly one of grading, partial_action, groupoid_ring is required");
  in.groupoid = groupoid_from_json(field(doc, "groupoid", "instance"));
  in.ring = ring_from_json(field(doc, "ring", "instance"), &in.groupoid);
  if (doc.contains("grading")) {
    in.kind = StructureKind::Grading;
    in.grading = grading_section(in, doc["grading"]);
  } else if (doc.contains("partial_action")) {
    in.kind = StructureKind::PartialAction;
    in.action = action_section(in, doc["partial_action"]);
    in.grading = build_skew_ring(*in.action);
  } else {
    in.kind = StructureKind::GroupoidRing;
    in.action = PartialAction::groupoid_ring_action(in.ring, in.groupoid);
    in.grading = build_skew_ring(*in.action);
  }
  return in;
}

Instance parse_instance(std::string_view text) {
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) throw Error(ErrorKind::ParseError, "empty instance file");
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError,
                "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  return instance_from_json(doc);
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::MalformedInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

}  // namespace gprime
