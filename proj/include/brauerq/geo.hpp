#ifndef BRAUERQ_GEO_HPP
#define BRAUERQ_GEO_HPP

// Commensurability classes of arithmetic quaternionic lattices, described by
// their (field, algebra) pair, and their totally geodesic surface classes.

#include <optional>
#include <string>
#include <vector>

#include "brauerq/quat.hpp"

namespace brauerq {

struct SymmetricSpaceShape {
  int s = 0;   // factors of H^2
  int r2 = 0;  // factors of H^3
  friend bool operator==(const SymmetricSpaceShape&, const SymmetricSpaceShape&) = default;
};

/// (s, r2) with s = r1 minus the ramified real places. TotallyDefinite when both vanish.
SymmetricSpaceShape symmetric_space_shape(const QuaternionAlgebra& a);

class CommClass {
 public:
  /// Throws TotallyDefinite.
  explicit CommClass(QuaternionAlgebra a);
  const NumberField& field() const { return algebra_.field(); }
  const QuaternionAlgebra& algebra() const { return algebra_; }
  SymmetricSpaceShape shape() const { return shape_; }

 private:
  QuaternionAlgebra algebra_;
  SymmetricSpaceShape shape_;
};

struct SurfaceClass {
  QuaternionAlgebra b;  // over Q, unramified at infinity
  bool cocompact = false;
};

struct SurfaceCensus {
  std::vector<SurfaceClass> classes;
  MatchingEnumeration enumeration;
  std::vector<std::string> trusted_flags_used;
};

/// Throws MissingTrustedFlags unless the field carries
/// claimed_only_totally_real_subfield_is_Q and claimed_narrow_class_number_one.
void require_surface_flags(const NumberField& k);
std::vector<std::string> surface_flags_used(const NumberField& k);

/// Indefinite B over Q with ram among primes <= bound and B tensor k = A.
SurfaceCensus surface_classes(const CommClass& m, u64 bound, std::size_t max_listed = kMaxListed);

struct SurfaceComparison {
  MatchReport match;
  std::vector<std::string> trusted_flags_used;
};

SurfaceComparison compare_surface_sets(const CommClass& m1, const CommClass& m2, u64 bound);

enum class Tristate { True, False, Unknown };
std::string to_string(Tristate t);

struct CommensurabilityVerdict {
  Tristate verdict = Tristate::Unknown;
  std::string reason;
  u64 bound = 0;
};

/// True only for identical reduced polynomials with identical ramification.
/// False when the algebras differ over the same field, or the fields are
/// provably different (degree, signature, or splitting type at a prime good
/// for both, up to bound). Unknown otherwise.
CommensurabilityVerdict commensurable(const CommClass& m1, const CommClass& m2, u64 bound = 1000);

/// Findings contradicting claimed_only_totally_real_subfield_is_Q when it is
/// set: a totally real subfield Q(alpha^k) for f(x) = g(x^k), or a real
/// quadratic catalog field inside a field whose splitting is uniform up to
/// bound. Empty when the flag is not set.
std::vector<std::string> audit_trusted_flags(const NumberField& k, u64 bound);

struct FieldAudit {
  std::string input;
  std::string reduced;
  std::string reduction_factor;
  int degree = 0;
  Signature signature;
  std::string irreducibility;
  UniformityReport uniformity;
  GaloisFingerprint fingerprint;
};

FieldAudit audit_field(const NumberField& k, u64 bound);

struct Preset {
  std::string name;
  std::string description;
  std::string poly1;
  std::string poly2;
  TrustedFlags flags;
  /// Claims attached to the pair that the audit checks against the data.
  bool claims_non_isomorphic = false;
  bool claims_non_galois = false;
  bool claims_only_common_subfield_q = false;
};

const std::vector<Preset>& presets();
/// InvalidArgument for unknown names.
const Preset& find_preset(std::string_view name);

struct PresetAudit {
  const Preset* preset = nullptr;
  u64 bound = 0;
  FieldAudit first;
  FieldAudit second;
  SplittingComparison splitting;
  bool same_reduced_poly = false;
  std::vector<std::string> discrepancies;
};

PresetAudit run_preset_audit(const Preset& preset, const FieldOptions& base, u64 bound);

}  // namespace brauerq

#endif  // BRAUERQ_GEO_HPP
