#include "brauerq/geo.hpp"

#include <algorithm>

#include "brauerq/error.hpp"

namespace brauerq {

SymmetricSpaceShape symmetric_space_shape(const QuaternionAlgebra& a) {
  const Signature sig = a.field().signature();
  SymmetricSpaceShape shape{sig.r1 - static_cast<int>(a.real_ramified()), sig.r2};
  if (shape.s == 0 && shape.r2 == 0) {
    throw Error(ErrorKind::TotallyDefinite, "algebra " + a.to_string() + " ramifies at every archimedean place");
  }
  return shape;
}

CommClass::CommClass(QuaternionAlgebra a) : algebra_(std::move(a)), shape_(symmetric_space_shape(algebra_)) {}

std::vector<std::string> surface_flags_used(const NumberField& k) {
  TrustedFlags used;
  used.only_totally_real_subfield_is_q = k.flags().only_totally_real_subfield_is_q;
  used.narrow_class_number_one = k.flags().narrow_class_number_one;
  return used.names();
}

void require_surface_flags(const NumberField& k) {
  const auto& flags = k.flags();
  if (!flags.only_totally_real_subfield_is_q || !flags.narrow_class_number_one) {
    throw Error(ErrorKind::MissingTrustedFlags,
                "surface classes over " + k.defining_poly().to_string() +
                    " need claimed_only_totally_real_subfield_is_Q and claimed_narrow_class_number_one");
  }
}

SurfaceCensus surface_classes(const CommClass& m, u64 bound, std::size_t max_listed) {
  require_surface_flags(m.field());
  SurfaceCensus census{{}, enumerate_matching(m.algebra(), bound, true, kMaxRamPlaces, max_listed),
                       surface_flags_used(m.field())};
  for (const auto& b : census.enumeration.matching) census.classes.push_back({b, !b.is_split()});
  return census;
}

SurfaceComparison compare_surface_sets(const CommClass& m1, const CommClass& m2, u64 bound) {
  require_surface_flags(m1.field());
  require_surface_flags(m2.field());
  SurfaceComparison out{compare_matching(m1.algebra(), m2.algebra(), bound, true), surface_flags_used(m1.field())};
  return out;
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::True: return "true";
    case Tristate::False: return "false";
    case Tristate::Unknown: return "unknown";
  }
  return "";
}

CommensurabilityVerdict commensurable(const CommClass& m1, const CommClass& m2, u64 bound) {
  const NumberField& k1 = m1.field();
  const NumberField& k2 = m2.field();
  CommensurabilityVerdict v;
  v.bound = bound;
  if (k1 == k2) {
    if (m1.algebra().ram() == m2.algebra().ram()) {
      v.verdict = Tristate::True;
      v.reason = "same defining polynomial and ramification";
    } else {
      v.verdict = Tristate::False;
      v.reason = "same field, different ramification";
    }
    return v;
  }
  if (k1.degree() != k2.degree()) {
    v.verdict = Tristate::False;
    v.reason = "degrees differ";
    return v;
  }
  if (k1.signature() != k2.signature()) {
    v.verdict = Tristate::False;
    v.reason = "signatures differ";
    return v;
  }
  for (u64 p : primes_up_to(bound)) {
    if (!k1.is_good_prime(p) || !k2.is_good_prime(p)) continue;
    if (!same_multiset(splitting_type(k1, p), splitting_type(k2, p))) {
      v.verdict = Tristate::False;
      v.reason = "splitting types differ at " + std::to_string(p) + ", so the fields are not isomorphic";
      return v;
    }
  }
  v.verdict = Tristate::Unknown;
  v.reason = "defining polynomials differ but splitting data agree up to the bound";
  return v;
}

std::vector<std::string> audit_trusted_flags(const NumberField& k, u64 bound) {
  std::vector<std::string> findings;
  if (!k.flags().only_totally_real_subfield_is_q) return findings;
  const IntPoly& f = k.defining_poly();
  const int n = f.degree();
  for (int step = 2; step < n; ++step) {
    if (n % step != 0) continue;
    bool in_powers = true;
    std::vector<mpz_class> g;
    for (int j = 0; j <= n; ++j) {
      const mpz_class& c = f.coeffs()[static_cast<std::size_t>(j)];
      if (j % step == 0) g.push_back(c);
      else if (c != 0) in_powers = false;
    }
    if (!in_powers) continue;
    const IntPoly gpoly(std::move(g));
    if (count_real_roots(gpoly) == gpoly.degree()) {
      findings.push_back("the subfield generated by alpha^" + std::to_string(step) + ", a root of " + gpoly.to_string() +
                         ", is totally real of degree " + std::to_string(gpoly.degree()));
      break;
    }
  }
  if (k.degree() % 2 == 0 && uniform_splitting_evidence(k, bound).uniform) {
    for (const auto& c : galois_fingerprint(k, std::max<u64>(bound, 1000)).contained_catalog_fields) {
      if (c.kind == CatalogField::Kind::Quadratic && c.parameter > 0) {
        findings.push_back("splitting is uniform up to " + std::to_string(std::max<u64>(bound, 1000)) + " and the field contains " +
                           c.name() + ", which is totally real");
      }
    }
  }
  return findings;
}

FieldAudit audit_field(const NumberField& k, u64 bound) {
  FieldAudit a;
  a.input = k.input_poly().to_string();
  a.reduced = k.defining_poly().to_string();
  a.reduction_factor = k.reduction_factor().get_str();
  a.degree = k.degree();
  a.signature = k.signature();
  a.irreducibility = k.irreducibility().describe();
  a.uniformity = uniform_splitting_evidence(k, bound);
  a.fingerprint = galois_fingerprint(k, std::max<u64>(bound, 1000));
  return a;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = [] {
    TrustedFlags surface;
    surface.only_totally_real_subfield_is_q = true;
    surface.narrow_class_number_one = true;
    std::vector<Preset> t;
    t.push_back({"paper-k1k2", "fields of the eighth roots of -6561 and of -16*6561, with their published claims",
                 "x^8+6561", "x^8+104976", surface, true, true, true});
    t.push_back({"arith-equiv-x8", "fields of x^8-3 and x^8-48: arithmetically equivalent, not isomorphic",
                 "x^8-3", "x^8-48", surface, true, true, false});
    return t;
  }();
  return table;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

namespace {

std::optional<CatalogField> cyclotomic_of_full_degree(const FieldAudit& a) {
  for (const auto& c : a.fingerprint.contained_catalog_fields) {
    if (c.kind == CatalogField::Kind::Cyclotomic && euler_phi(static_cast<u64>(c.parameter)) == static_cast<u64>(a.degree)) {
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

PresetAudit run_preset_audit(const Preset& preset, const FieldOptions& base, u64 bound) {
  FieldOptions options = base;
  options.flags = preset.flags;
  const NumberField k1 = build_field(preset.poly1, options);
  const NumberField k2 = build_field(preset.poly2, options);

  PresetAudit audit;
  audit.preset = &preset;
  audit.bound = bound;
  audit.first = audit_field(k1, bound);
  audit.second = audit_field(k2, bound);
  audit.splitting = compare_splitting_types(k1, k2, bound);
  audit.same_reduced_poly = k1 == k2;

  for (const auto* fa : {&audit.first, &audit.second}) {
    if (fa->reduction_factor != "1") {
      audit.discrepancies.push_back("generator reduction: " + fa->input + " = " + fa->reduction_factor + "^" +
                                    std::to_string(fa->degree) + " * g(x/" + fa->reduction_factor + ") with g = " +
                                    fa->reduced);
    }
  }

  const bool galois1 = audit.first.uniformity.uniform;
  const bool galois2 = audit.second.uniformity.uniform;
  if (preset.claims_non_galois) {
    for (const auto* fa : {&audit.first, &audit.second}) {
      if (!fa->uniformity.uniform) continue;
      std::string msg = "the field of " + fa->input + " splits uniformly at every prime up to " + std::to_string(bound) +
                        " (Galois evidence)";
      if (auto cyc = cyclotomic_of_full_degree(*fa)) {
        msg += " and every completely split prime is 1 mod " + std::to_string(cyc->parameter) + ", so it is " + cyc->name();
      }
      audit.discrepancies.push_back(msg + "; a Galois field is isomorphic to every field Brauer equivalent to it");
    }
  }
  if (preset.claims_non_isomorphic) {
    if (audit.same_reduced_poly) {
      audit.discrepancies.push_back("both polynomials reduce to " + audit.first.reduced + ": the fields are isomorphic");
    } else if (galois1 && galois2 && audit.splitting.holds) {
      audit.discrepancies.push_back(
          "both fields look Galois and have the same splitting types at every good prime up to " + std::to_string(bound) +
          "; Galois fields with the same completely split primes are isomorphic");
    }
  }
  if (preset.claims_only_common_subfield_q && galois1 && galois2) {
    for (const auto& c : audit.first.fingerprint.contained_catalog_fields) {
      const auto& other = audit.second.fingerprint.contained_catalog_fields;
      if (std::find(other.begin(), other.end(), c) != other.end()) {
        audit.discrepancies.push_back("both fields contain " + c.name() + " (evidence up to " +
                                      std::to_string(audit.first.fingerprint.bound) + ")");
      }
    }
  }
  for (const auto& [k, fa] : {std::pair{&k1, &audit.first}, std::pair{&k2, &audit.second}}) {
    for (const auto& finding : audit_trusted_flags(*k, bound)) {
      audit.discrepancies.push_back("claimed_only_totally_real_subfield_is_Q for " + fa->input + ": " + finding);
    }
  }
  return audit;
}

}  // namespace brauerq
