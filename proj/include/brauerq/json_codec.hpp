#ifndef BRAUERQ_JSON_CODEC_HPP
#define BRAUERQ_JSON_CODEC_HPP

// JSON views of places, classes, algebras and reports.

#include <json.hpp>

#include "brauerq/geo.hpp"

namespace brauerq {

using Json = nlohmann::ordered_json;

Json to_json(const Place& place);
/// Accepts {"kind":"finite","p":..,"idx":..}, {"kind":"real","idx":..},
/// {"kind":"complex","idx":..} and {"kind":"infinite"} (real place 0).
Place place_from_json(const Json& j);

Json to_json(const SplittingType& type);
Json to_json(const Signature& sig);
Json to_json(const BrauerClass& c);
/// Decodes {"support":[{"place":..,"inv":"r/s"}]} over k; validates via make_class.
BrauerClass class_from_json(const NumberField& k, const Json& j);

/// {"field":hash,"primes":[..],"inf":bool} over Q, {"field":hash,"ram":[..]} otherwise.
Json to_json(const QuaternionAlgebra& a);

Json to_json(const MatchingSpace& space);
Json to_json(const MatchReport& report);
Json to_json(const GaloisFingerprint& fp);
Json to_json(const SplittingComparison& cmp);
Json to_json(const UniformityReport& report);
Json to_json(const FieldAudit& audit);
Json to_json(const PresetAudit& audit);
Json to_json(const DistinguisherTranscript& t);
Json to_json(const CommensurabilityVerdict& v);

/// Field summary used by `field info`.
Json field_summary(const NumberField& k);

}  // namespace brauerq

#endif  // BRAUERQ_JSON_CODEC_HPP
