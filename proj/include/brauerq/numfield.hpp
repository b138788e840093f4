#ifndef BRAUERQ_NUMFIELD_HPP
#define BRAUERQ_NUMFIELD_HPP

// Number fields given by a monic integer defining polynomial, together with
// prime splitting data and the bounded-prime sweeps built on top of it.

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauerq/fppoly.hpp"
#include "brauerq/splitting_cache.hpp"

namespace brauerq {

inline constexpr u64 kDefaultPrimeBound = 10000;
inline constexpr u64 kDefaultSeed = 0x5eedULL;

/// Facts about a field that this library cannot compute and takes on trust.
/// Every report that depends on one of them lists it.
struct TrustedFlags {
  bool narrow_class_number_one = false;
  bool primitive = false;
  bool only_totally_real_subfield_is_q = false;
  /// Skip the irreducibility certificate search.
  bool irreducible = false;

  /// Names of the flags that are set, e.g. "claimed_narrow_class_number_one".
  std::vector<std::string> names() const;
  /// Parses a comma-separated list of flag names (short or claimed_* form).
  static TrustedFlags parse(std::string_view list);

  friend bool operator==(const TrustedFlags&, const TrustedFlags&) = default;
};

struct Signature {
  int r1 = 0;
  int r2 = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct IrreducibilityEvidence {
  enum class Method {
    Linear,
    IrreducibleModPrime,
    DegreePattern,
    BinomialCriterion,
    ShiftedEisenstein,
    FactorSearch,
    Trusted,
  };
  Method method = Method::Linear;
  u64 prime = 0;       // certifying prime, when there is one
  long shift = 0;      // Eisenstein shift x -> x + shift
  int primes_examined = 0;

  std::string describe() const;
};

/// A finite place (p, index into the canonical factor order), a real place
/// (index into ascending real roots) or a complex place.
struct Place {
  enum class Kind { Finite, Real, Complex };
  Kind kind = Kind::Finite;
  u64 p = 0;
  std::size_t index = 0;

  static Place finite(u64 p, std::size_t index = 0) { return {Kind::Finite, p, index}; }
  static Place real(std::size_t index = 0) { return {Kind::Real, 0, index}; }
  static Place complex(std::size_t index = 0) { return {Kind::Complex, 0, index}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_real() const noexcept { return kind == Kind::Real; }
  bool is_complex() const noexcept { return kind == Kind::Complex; }

  /// `7.0`, `r0`, `c1`.
  std::string to_string() const;
  /// Accepts `7` (index 0), `7.1`, `inf`/`oo` (real place 0), `r2`, `c0`.
  static Place parse(std::string_view text);

  friend auto operator<=>(const Place&, const Place&) = default;
};

struct FieldOptions {
  TrustedFlags flags;
  /// Shared splitting cache; a private one is created when null.
  std::shared_ptr<SplittingCache> cache;
  u64 seed = kDefaultSeed;
};

class NumberField {
 public:
  /// Generator-reduced defining polynomial.
  const IntPoly& defining_poly() const { return d_->poly; }
  /// Polynomial as supplied, before reduction.
  const IntPoly& input_poly() const { return d_->input; }
  /// c > 1 when input(x) = c^n * defining(x / c); 1 otherwise.
  const mpz_class& reduction_factor() const { return d_->reduction; }
  int degree() const { return d_->poly.degree(); }
  const mpz_class& poly_discriminant() const { return d_->disc; }
  Signature signature() const { return d_->signature; }
  const TrustedFlags& flags() const { return d_->flags; }
  const IrreducibilityEvidence& irreducibility() const { return d_->evidence; }
  /// Stable 64-bit FNV-1a hash of the reduced coefficient list, as 16 hex digits.
  const std::string& polyhash() const { return d_->hash; }
  /// Isolating intervals of the real roots; real place i is root i.
  const std::vector<RootInterval>& real_roots() const { return d_->real_roots; }
  u64 seed() const { return d_->seed; }
  const std::shared_ptr<SplittingCache>& cache() const { return d_->cache; }

  bool is_rationals() const { return degree() == 1; }
  /// p does not divide the discriminant of the defining polynomial.
  bool is_good_prime(u64 p) const;

  /// Same field data with different trusted flags (cache shared).
  NumberField with_flags(const TrustedFlags& flags) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || a.d_->poly == b.d_->poly;
  }

 private:
  struct Data {
    IntPoly input;
    IntPoly poly;
    mpz_class reduction = 1;
    mpz_class disc;
    Signature signature;
    TrustedFlags flags;
    IrreducibilityEvidence evidence;
    std::string hash;
    std::vector<RootInterval> real_roots;
    u64 seed = kDefaultSeed;
    std::shared_ptr<SplittingCache> cache;
  };
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend NumberField build_field(const IntPoly&, const FieldOptions&);
};

/// Validates and reduces a monic defining polynomial, certifies
/// irreducibility, caches discriminant and signature. Throws Reducible or
/// InconclusiveIrreducibility (unless flags.irreducible is set).
NumberField build_field(const IntPoly& poly, const FieldOptions& options = {});
NumberField build_field(std::string_view poly_text, const FieldOptions& options = {});
/// The field Q, defined by x.
NumberField rationals(const FieldOptions& options = {});

/// Largest c > 0 with f(x) = c^n g(x/c), g monic integral.
mpz_class generator_reduction_factor(const IntPoly& f);
/// FNV-1a over the coefficient-list string.
std::string poly_hash(const IntPoly& f);

Signature signature(const NumberField& k);

/// Splitting type at p; throws IndexPrime when the Dedekind criterion fails.
SplittingType splitting_type(const NumberField& k, u64 p);
/// Same, but an index prime yields nullopt.
std::optional<SplittingType> try_splitting_type(const NumberField& k, u64 p);

u64 inertia_gcd(const NumberField& k, u64 p);

struct SplitPredicates {
  bool splits_completely = false;
  bool has_degree_one_factor = false;
  bool unramified = false;
  friend bool operator==(const SplitPredicates&, const SplitPredicates&) = default;
};

SplitPredicates split_predicates(const NumberField& k, u64 p);

/// Finite places above p in canonical factor order.
std::vector<Place> places_over(const NumberField& k, u64 p);
std::vector<Place> real_places(const NumberField& k);
/// Throws BadPlace when p is not prime, is an index prime, or the index is
/// out of range.
void validate_place(const NumberField& k, const Place& place);
/// e * f of a finite place (local degree over Q_p).
int local_degree(const NumberField& k, const Place& place);

// ---------------------------------------------------------------------------
// Bounded-prime evidence. Every report names its bound.

struct ContainmentReport {
  bool holds_up_to_bound = true;
  u64 bound = 0;
  std::vector<u64> exceptions;
  std::size_t primes_tested = 0;
  std::vector<u64> skipped_primes;  // bad for at least one field
};

/// Checks splits_completely(a, p) => splits_completely(b, p) at every prime
/// p <= bound good for both fields. InvalidArgument if bound < 100.
ContainmentReport split_set_contained(const NumberField& a, const NumberField& b, u64 bound);

struct SplittingComparison {
  bool holds = true;
  u64 bound = 0;
  std::size_t primes_tested = 0;
  std::vector<u64> mismatches;
  std::vector<u64> excluded_primes;
};

/// Splitting-type multisets agree at every prime <= bound good for both.
SplittingComparison compare_splitting_types(const NumberField& a, const NumberField& b, u64 bound);
/// Inertia-degree gcds agree at every prime <= bound good for both.
SplittingComparison compare_inertia_gcds(const NumberField& a, const NumberField& b, u64 bound);

struct UniformityReport {
  bool uniform = true;
  u64 bound = 0;
  std::size_t primes_tested = 0;
  std::vector<u64> nonuniform_primes;
};

/// All (e, f) pairs equal at every prime <= bound where the splitting type
/// is computable; a necessary condition for the field to be Galois.
UniformityReport uniform_splitting_evidence(const NumberField& k, u64 bound);

struct CatalogField {
  enum class Kind { Quadratic, Cyclotomic };
  Kind kind;
  long parameter;  // d for Q(sqrt d), m for Q(zeta_m)

  std::string name() const;
  friend bool operator==(const CatalogField&, const CatalogField&) = default;
};

struct GaloisFingerprint {
  u64 bound = 0;
  u64 rou_order = 2;
  std::vector<CatalogField> contained_catalog_fields;
  std::size_t primes_used = 0;
};

/// Roots-of-unity order and catalog fields consistent with the splitting
/// data up to bound. A catalog field F is listed when every prime splitting
/// completely in k also splits in F, which makes F a subfield of the Galois
/// closure of k (of k itself when k is Galois). InvalidArgument if bound < 1000.
GaloisFingerprint galois_fingerprint(const NumberField& k, u64 bound, long d_max = 50, u64 m_max = 64);

}  // namespace brauerq

#endif  // BRAUERQ_NUMFIELD_HPP
