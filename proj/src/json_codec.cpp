#include "brauerq/json_codec.hpp"

#include "brauerq/error.hpp"

namespace brauerq {

Json to_json(const Place& place) {
  switch (place.kind) {
    case Place::Kind::Finite: return Json{{"kind", "finite"}, {"p", place.p}, {"idx", place.index}};
    case Place::Kind::Real: return Json{{"kind", "real"}, {"idx", place.index}};
    case Place::Kind::Complex: return Json{{"kind", "complex"}, {"idx", place.index}};
  }
  return {};
}

Place place_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const std::size_t idx = j.contains("idx") ? j.at("idx").get<std::size_t>() : 0;
    if (kind == "finite") return Place::finite(j.at("p").get<u64>(), idx);
    if (kind == "real") return Place::real(idx);
    if (kind == "infinite") return Place::real(0);
    if (kind == "complex") return Place::complex(idx);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad place JSON: ") + e.what());
  }
  throw Error(ErrorKind::ParseError, "bad place JSON: " + j.dump());
}

Json to_json(const SplittingType& type) {
  Json pairs = Json::array();
  for (const auto& pr : type.pairs) pairs.push_back(Json::array({pr.e, pr.f}));
  return Json{{"p", type.p}, {"ef", pairs}};
}

Json to_json(const Signature& sig) { return Json::array({sig.r1, sig.r2}); }

Json to_json(const BrauerClass& c) {
  Json support = Json::array();
  for (const auto& [place, value] : c.support()) support.push_back(Json{{"place", to_json(place)}, {"inv", value.to_string()}});
  return Json{{"field", c.field().polyhash()}, {"support", support}};
}

BrauerClass class_from_json(const NumberField& k, const Json& j) {
  std::vector<std::pair<Place, QmodZ>> assignments;
  try {
    if (j.contains("field") && j.at("field").get<std::string>() != k.polyhash()) {
      throw Error(ErrorKind::FieldMismatch, "class JSON belongs to field " + j.at("field").get<std::string>());
    }
    for (const auto& entry : j.at("support")) {
      assignments.emplace_back(place_from_json(entry.at("place")), QmodZ::parse(entry.at("inv").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad class JSON: ") + e.what());
  }
  return make_class(k, assignments);
}

Json to_json(const QuaternionAlgebra& a) {
  if (a.field().is_rationals()) {
    return Json{{"field", a.field().polyhash()}, {"primes", a.finite_primes()}, {"inf", a.real_ramified() > 0}};
  }
  Json ram = Json::array();
  for (const auto& place : a.ram()) ram.push_back(to_json(place));
  return Json{{"field", a.field().polyhash()}, {"ram", ram}};
}

namespace {

Json tokens_json(const std::vector<u64>& tokens) {
  Json out = Json::array();
  for (u64 t : tokens) {
    if (t == kInfinityToken) out.push_back("inf");
    else out.push_back(t);
  }
  return out;
}

}  // namespace

Json to_json(const MatchingSpace& space) {
  Json cls = Json::object();
  for (const auto& [p, v] : space.classification) cls[std::to_string(p)] = to_string(v);
  std::vector<u64> visible;
  std::vector<u64> invisible;
  for (const auto& [p, v] : space.classification) {
    if (v == PrimeVisibility::Visible) visible.push_back(p);
    if (v == PrimeVisibility::Invisible) invisible.push_back(p);
  }
  Json out{{"bound", space.bound},
           {"require_indefinite", space.require_indefinite},
           {"feasible", space.feasible}};
  if (!space.feasible) out["infeasible_reason"] = space.infeasible_reason;
  out["forced"] = tokens_json(space.forced);
  out["free"] = tokens_json(space.free);
  out["count"] = space.size().get_str();
  out["visible_primes"] = visible;
  out["invisible_primes"] = invisible;
  out["excluded_primes"] = space.excluded_primes;
  return out;
}

Json to_json(const MatchReport& report) {
  Json out{{"verdict", report.agree ? "agree" : "witness"}, {"bound", report.bound}};
  if (report.witness) {
    Json w = to_json(*report.witness);
    w["matches_first"] = report.witness_matches_first;
    w["matches_second"] = report.witness_matches_second;
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["require_indefinite"] = report.require_indefinite;
  out["primes_tested"] = report.primes_tested;
  out["excluded_primes"] = report.excluded_primes;
  return out;
}

Json to_json(const GaloisFingerprint& fp) {
  Json fields = Json::array();
  for (const auto& c : fp.contained_catalog_fields) fields.push_back(c.name());
  return Json{{"evidence_up_to_bound", fp.bound},
              {"rou_order", fp.rou_order},
              {"contained_catalog_fields", fields},
              {"catalog_semantics", "subfields of the Galois closure (of the field itself when Galois)"},
              {"primes_used", fp.primes_used}};
}

Json to_json(const SplittingComparison& cmp) {
  return Json{{"holds_up_to_bound", cmp.holds},
              {"bound", cmp.bound},
              {"primes_tested", cmp.primes_tested},
              {"mismatches", cmp.mismatches},
              {"excluded_primes", cmp.excluded_primes}};
}

Json to_json(const UniformityReport& report) {
  return Json{{"uniform_up_to_bound", report.uniform},
              {"bound", report.bound},
              {"primes_tested", report.primes_tested},
              {"nonuniform_primes", report.nonuniform_primes}};
}

Json to_json(const FieldAudit& audit) {
  return Json{{"input", audit.input},
              {"reduced", audit.reduced},
              {"reduction_factor", audit.reduction_factor},
              {"degree", audit.degree},
              {"signature", to_json(audit.signature)},
              {"irreducibility", audit.irreducibility},
              {"uniformity", to_json(audit.uniformity)},
              {"fingerprint", to_json(audit.fingerprint)}};
}

Json to_json(const PresetAudit& audit) {
  return Json{{"preset", audit.preset->name},
              {"description", audit.preset->description},
              {"bound", audit.bound},
              {"first", to_json(audit.first)},
              {"second", to_json(audit.second)},
              {"same_reduced_polynomial", audit.same_reduced_poly},
              {"splitting_comparison", to_json(audit.splitting)},
              {"discrepancies", audit.discrepancies}};
}

Json to_json(const DistinguisherTranscript& t) {
  return Json{{"nu", Json::array({t.nu1, t.nu2})},
              {"B", to_json(t.b)},
              {"B0_tensor_K1", to_json(t.a1)},
              {"B0_tensor_K2", to_json(t.a2)},
              {"B_tensor_K1", to_json(t.b_k1)},
              {"B_tensor_K2", to_json(t.b_k2)},
              {"B_matches_over_K1", t.matches_k1},
              {"B_matches_over_K2", t.matches_k2},
              {"candidates", t.candidates}};
}

Json to_json(const CommensurabilityVerdict& v) {
  return Json{{"verdict", to_string(v.verdict)}, {"reason", v.reason}, {"bound", v.bound}};
}

Json field_summary(const NumberField& k) {
  Json out{{"input", k.input_poly().to_string()},
           {"polynomial", k.defining_poly().to_string()},
           {"coefficients", k.defining_poly().to_list_string()},
           {"polyhash", k.polyhash()},
           {"degree", k.degree()},
           {"signature", to_json(k.signature())},
           {"discriminant", k.poly_discriminant().get_str()}};
  if (k.reduction_factor() > 1) {
    out["generator_reduction"] = Json{{"factor", k.reduction_factor().get_str()},
                                      {"note", k.input_poly().to_string() + " = " + k.reduction_factor().get_str() + "^" +
                                                   std::to_string(k.degree()) + " * g(x/" +
                                                   k.reduction_factor().get_str() + "), g = " +
                                                   k.defining_poly().to_string()}};
  } else {
    out["generator_reduction"] = nullptr;
  }
  out["irreducibility"] = k.irreducibility().describe();
  return out;
}

}  // namespace brauerq
