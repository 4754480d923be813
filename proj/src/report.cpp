#include "gprime/report.hpp"

#include <sstream>

#include "gprime/error.hpp"

namespace gprime {

Method parse_method(const std::string& s) {
  if (s == "oracle") return Method::Oracle;
  if (s == "theorem") return Method::Theorem;
  if (s == "all") return Method::All;
  throw Error(ErrorKind::MalformedInput, "unknown method '" + s + "' (oracle, theorem, all)");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Theorem: return "theorem";
    case Method::All: return "all";
  }
  return "?";
}

namespace {

Json opt(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json pair_json(const FiniteRing& r, const std::optional<std::pair<Elem, Elem>>& w) {
  if (!w) return nullptr;
  return Json{{"a", r.format(w->first)}, {"b", r.format(w->second)}};
}

Json verdict_json(const FiniteRing& r, const PairVerdict& v) {
  Json j;
  j["prime"] = v.prime;
  if (v.degenerate) j["degenerate"] = true;
  j["witness"] = pair_json(r, v.witness);
  return j;
}

Json hub_json(const Grading& s, const HubResult& h) {
  Json j;
  j["hub"] = h.hub;
  if (!h.hub) {
    j["blocker"] = s.ring().format(*h.blocker);
    j["blocker_degree"] = s.groupoid().label(*h.blocker_degree);
    j["blocked_right"] = h.blocked_right;
    j["blocked_left"] = h.blocked_left;
  }
  return j;
}

Json nes_json(const Grading& s) {
  const auto nes = nearly_epsilon_strong(s);
  Json j;
  j["holds"] = nes.holds;
  if (nes.holds) {
    j["certificate_size"] = nes.certificate.size();
  } else {
    j["failing"] = s.groupoid().label(*nes.failing);
    j["reason"] = nes.reason;
  }
  return j;
}

Json objects_of(const FiniteGroupoid& g, const std::vector<Obj>& objs) {
  Json j = Json::array();
  for (Obj e : objs) j.push_back(g.object_label(e));
  return j;
}

Json oracle_json(const FiniteRing& r, const PrimeResult& p) {
  Json j;
  j["ran"] = true;
  j["prime"] = p.prime;
  if (p.degenerate) j["degenerate"] = true;
  j["distinct_principal_ideals"] = p.distinct_principal_ideals;
  if (p.witness) {
    j["witness"] = {{"a", r.format(p.witness->a)},
                    {"b", r.format(p.witness->b)},
                    {"left_ideal_size", p.witness->left.size()},
                    {"right_ideal_size", p.witness->right.size()},
                    {"replayed", verify_prime_witness(r, p.witness->a, p.witness->b)}};
  }
  return j;
}

Json report_json(const Instance& in, const PrimenessReport& r, bool include_oracle) {
  const Grading& s = in.grading;
  const FiniteGroupoid& G = s.groupoid();
  Json j;
  j["verdict"] = r.verdict;
  j["nearly_epsilon_strong"] = r.nearly_epsilon_strong;
  j["degenerate"] = r.degenerate;
  if (include_oracle) {
    if (r.oracle) {
      PrimeResult p;
      p.prime = *r.oracle;
      p.witness = r.oracle_witness;
      p.distinct_principal_ideals = r.oracle_distinct_ideals;
      j["oracle"] = oracle_json(s.ring(), p);
    } else {
      j["oracle"] = {{"ran", false}, {"reason", "ring has " + std::to_string(s.ring().size()) +
                                                    " elements, oracle bound is " +
                                                    std::to_string(in.bounds.oracle)}};
    }
  }
  Json conds;
  for (std::size_t i = 0; i < 7; ++i) conds[kConditionLabels[i]] = opt(r.conditions[i]);
  j["conditions"] = conds;
  j["agree"] = r.agree;
  j["g_prime"] = verdict_json(s.ring(), r.g_prime);
  j["graded_prime"] = verdict_json(s.ring(), r.graded_prime);
  Json objs = Json::array();
  for (const auto& o : r.objects) {
    Json x;
    x["object"] = G.object_label(o.object);
    x["in_support"] = o.in_support;
    x["isotropy_order"] = o.isotropy_order;
    if (o.in_support) {
      x["support_hub"] = hub_json(s, *o.hub);
      x["isotropy_ring_size"] = o.isotropy_ring_size;
      x["isotropy_prime"] = *o.isotropy_prime;
      x["isotropy_witness"] = pair_json(s.ring(), o.isotropy_witness);
      x["torsion_free_shortcut"] = opt(torsion_free_shortcut(s, o.object, in.bounds.oracle));
    }
    objs.push_back(std::move(x));
  }
  j["objects"] = std::move(objs);
  if (r.witness) {
    j["witness"] = {{"a", s.ring().format(r.witness->first)},
                    {"b", s.ring().format(r.witness->second)},
                    {"source", to_string(*r.witness_source)},
                    {"replayed", replay_witness(s.ring(), r.witness->first, r.witness->second, in.bounds.oracle)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace

Json report_header(const std::string& command, const Instance* in) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", "gprime"}, {"version", kToolVersion}};
  j["command"] = command;
  if (in) j["instance"] = {{"name", in->name}, {"digest", in->digest}, {"kind", to_string(in->kind)}};
  return j;
}

Json validation_json(const Instance& in) {
  const Grading& s = in.grading;
  const FiniteGroupoid& G = s.groupoid();
  Json j;
  j["valid"] = true;
  j["groupoid"] = {{"objects", G.num_objects()}, {"morphisms", G.size()}, {"connected", is_connected(G)}};
  j["ring"] = {{"describe", in.ring.describe()}, {"size", in.ring.size()}};
  j["graded_ring"] = {{"describe", s.ring().describe()},
                      {"size", s.ring().size()},
                      {"materialized", s.has_table()},
                      {"commutative", s.ring().size() <= kDefaultOracleBound ? Json(s.ring().is_commutative())
                                                                              : Json(nullptr)}};
  Json comps;
  for (Mor g = 0; g < G.size(); ++g) comps[G.label(g)] = s.component(g).size();
  j["component_sizes"] = std::move(comps);
  j["nearly_epsilon_strong"] = nes_json(s);
  if (in.action) j["partial_action"] = {{"axioms", "ok"}, {"ambient_size", in.action->ambient().size()}};
  return j;
}

Json analysis_json(const Instance& in) {
  const Grading& s = in.grading;
  const FiniteGroupoid& G = s.groupoid();
  const std::size_t bound = in.bounds.oracle;
  Json j;
  const SupportGroupoid sg = support_groupoid(s);
  Json members = Json::array();
  for (Mor g = 0; g < G.size(); ++g)
    if (sg.members[g]) members.push_back(G.label(g));
  j["support"] = {{"objects", objects_of(G, sg.objects)},
                  {"morphisms", std::move(members)},
                  {"connected", sg.connected},
                  {"zero_outside", sg.outside_zero}};
  j["groupoid_connected"] = is_connected(G);
  Json iso, hubs;
  for (Obj e = 0; e < G.num_objects(); ++e) {
    iso[G.object_label(e)] = isotropy(G, e).order();
    if (!s.component(G.identity(e)).is_zero()) hubs[G.object_label(e)] = hub_json(s, is_support_hub(s, e));
  }
  j["isotropy_orders"] = std::move(iso);
  j["support_hubs"] = hubs.is_null() ? Json::object() : std::move(hubs);
  j["nearly_epsilon_strong"] = nes_json(s);
  j["principal_part_size"] = s.principal_part().size();

  if (in.action) {
    const PartialAction& a = *in.action;
    Json pa;
    pa["global"] = is_global(a);
    const auto gt = group_type(a);
    pa["group_type"] = {{"holds", gt.group_type}};
    if (gt.group_type) {
      pa["group_type"]["anchor"] = G.object_label(*gt.anchor);
      Json fam;
      for (Obj f = 0; f < G.num_objects(); ++f) fam[G.object_label(f)] = G.label(gt.family[f]);
      pa["group_type"]["family"] = std::move(fam);
    } else {
      pa["group_type"]["reason"] = gt.reason;
    }
    if (a.ambient().size() <= bound) {
      const auto agp = is_A_G_prime(a, bound);
      pa["A_G_prime"] = verdict_json(a.ambient(), agp);
      Json iso_prime;
      for (Obj e = 0; e < G.num_objects(); ++e)
        if (!a.ideal(e).is_zero())
          iso_prime[G.object_label(e)] = verdict_json(a.ambient(), is_isotropy_prime(a, e, bound));
      pa["A_e_isotropy_prime"] = iso_prime.is_null() ? Json::object() : std::move(iso_prime);
      const auto psi = psi_check(a, s, bound);
      pa["psi_check"] = {{"ok", psi.ok},
                         {"ring_isomorphism", psi.ring_isomorphism},
                         {"A_G_prime", psi.a_g_prime},
                         {"principal_part_G_prime", psi.principal_g_prime}};
    }
    Json chain;
    for (Obj e = 0; e < G.num_objects(); ++e) {
      if (a.ideal(e).is_zero()) continue;
      const auto c = group_type_chain(a, s, e);
      chain[G.object_label(e)] = {{"group_type", c.holds[0]},
                                  {"coefficient_membership", c.holds[1]},
                                  {"nonzero_annihilation", c.holds[2]},
                                  {"support_hub", c.holds[3]}};
    }
    pa["group_type_chain"] = chain.is_null() ? Json::object() : std::move(chain);
    if (s.ring().size() <= bound) {
      const auto sc = sufficient_conditions_report(a, s, std::nullopt, bound);
      Json scj;
      scj["hypothesis"] = sc.hypothesis;
      const char* names[3] = {"trivial_isotropy_and_A_e_prime", "intersection_property_and_A_e_isotropy_prime",
                              "maximal_commutative_and_A_e_isotropy_prime"};
      for (std::size_t i = 0; i < 3; ++i)
        scj[names[i]] = sc.holds[i] ? Json(G.object_label(*sc.at[i])) : Json(false);
      scj["implies_prime"] = sc.implies_prime();
      pa["sufficient_conditions"] = std::move(scj);
    }
    j["partial_action"] = std::move(pa);
  }
  if (in.kind == StructureKind::GroupoidRing) {
    const auto c = connell_check(in.ring, G, bound);
    Json cj = {{"holds", c.holds()},
               {"connected", c.connected},
               {"coefficients_prime", c.ring_prime},
               {"no_nontrivial_finite_normal_subgroup", c.no_finite_normal}};
    if (c.normal_witness_object) cj["normal_subgroup_at"] = G.object_label(*c.normal_witness_object);
    j["connell"] = std::move(cj);
    if (s.ring().size() <= bound) {
      Json dens;
      for (Obj e = 0; e < G.num_objects(); ++e) {
        const auto d = orbit_density_check(s, e, bound);
        dens[G.object_label(e)] = {{"dense", d.dense}, {"witness", d.witness ? Json(s.ring().format(*d.witness))
                                                                             : Json(nullptr)}};
      }
      j["orbit_density"] = std::move(dens);
    }
  }
  return j;
}

Json primeness_json(const Instance& in, Method method) {
  Json j;
  j["method"] = to_string(method);
  if (method == Method::Oracle) {
    const PrimeResult p = is_prime_oracle(in.grading, in.bounds.oracle);
    j["verdict"] = p.prime;
    j["oracle"] = oracle_json(in.grading.ring(), p);
    return j;
  }
  PrimenessOptions opts;
  opts.oracle_bound = in.bounds.oracle;
  opts.run_oracle = method == Method::All;
  const PrimenessReport r = equivalence_report(in.grading, opts);
  Json body = report_json(in, r, method == Method::All);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

Json equivalence_json(const Instance& in) {
  PrimenessOptions opts;
  opts.oracle_bound = in.bounds.oracle;
  const PrimenessReport r = equivalence_report(in.grading, opts);
  return report_json(in, r, true);
}

Json error_json(const std::exception& e) {
  Json j;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    j["kind"] = to_string(err->kind());
    j["message"] = err->what();
    if (!err->details().empty()) j["details"] = err->details();
    j["exit_code"] = exit_code_for(err->kind());
  } else {
    j["kind"] = "Internal";
    j["message"] = e.what();
    j["exit_code"] = 1;
  }
  return j;
}

namespace {

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_structured() && !it->empty()) {
        os << pad << it.key() << ":\n";
        render(os, *it, indent + 1);
      } else {
        os << pad << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_structured()) {
        os << pad << "-\n";
        render(os, x, indent + 1);
      } else {
        os << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

}  // namespace gprime
