#ifndef BRAUERQ_QUAT_HPP
#define BRAUERQ_QUAT_HPP

// Quaternion algebras over number fields, described by their ramification
// sets, and the matching questions for algebras coming from Q.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brauerq/brauer.hpp"
#include "brauerq/numfield.hpp"

namespace brauerq {

class QuaternionAlgebra {
 public:
  const NumberField& field() const { return field_; }
  const std::set<Place>& ram() const { return ram_; }
  bool is_split() const { return ram_.empty(); }
  /// Rational primes below the finite ramified places, ascending, no repeats.
  std::vector<u64> finite_primes() const;
  std::size_t real_ramified() const;

  /// "{2,3,inf}" for algebras over Q, "{2.0,r1}" otherwise.
  std::string to_string() const;

  friend bool operator==(const QuaternionAlgebra& a, const QuaternionAlgebra& b) {
    return a.field_ == b.field_ && a.ram_ == b.ram_;
  }

 private:
  QuaternionAlgebra(NumberField k, std::set<Place> ram) : field_(std::move(k)), ram_(std::move(ram)) {}
  NumberField field_;
  std::set<Place> ram_;

  friend QuaternionAlgebra quat_make(const NumberField&, const std::vector<Place>&);
};

/// Errors: ComplexRamification, OddRamification, BadPlace (invalid or repeated place).
QuaternionAlgebra quat_make(const NumberField& k, const std::vector<Place>& places);
/// Over Q: finite primes plus optionally the real place.
QuaternionAlgebra rational_quat(const std::vector<u64>& primes, bool ramified_at_infinity, const FieldOptions& options = {});

/// Every ramified place gets invariant 1/2.
BrauerClass to_brauer(const QuaternionAlgebra& a);

/// B (over Q) tensored up to k: places P | p with e*f odd for p in Ram_f(B),
/// plus every real place of k when B ramifies at infinity.
/// Errors: FieldMismatch, IndexPrime.
QuaternionAlgebra base_change(const QuaternionAlgebra& b, const NumberField& k);

/// base_change(b, a.field()) has exactly the ramification of a.
bool tensor_matches(const QuaternionAlgebra& b, const QuaternionAlgebra& a);

enum class PrimeVisibility { Visible, Invisible, Excluded };
std::string to_string(PrimeVisibility v);

/// Token for the infinite place of Q inside matching spaces; sorts last.
inline constexpr u64 kInfinityToken = ~0ULL;

/// The set of B over Q (ram inside primes <= bound, plus infinity unless
/// indefinite is required) with B tensor k = A. It is the parity-constrained
/// affine family { forced + S : S subset of free, |forced| + |S| even }.
/// When exactly one free token exists it is resolved by parity, so two
/// spaces are equal iff their canonical (forced, free) data are equal.
struct MatchingSpace {
  bool feasible = false;
  std::string infeasible_reason;
  std::vector<u64> forced;  // ascending, kInfinityToken last
  std::vector<u64> free;
  std::map<u64, PrimeVisibility> classification;
  std::vector<u64> excluded_primes;
  u64 bound = 0;
  bool require_indefinite = false;

  /// Whether the rational algebra with these tokens lies in the space.
  bool contains(const std::vector<u64>& tokens) const;
  /// Number of algebras in the space.
  mpz_class size() const;
  /// One element of the space (requires feasible).
  std::vector<u64> base_element() const;
};

MatchingSpace matching_space(const QuaternionAlgebra& a, u64 bound, bool require_indefinite,
                             const std::vector<u64>& extra_excluded = {});

struct MatchingEnumeration {
  MatchingSpace space;
  std::vector<QuaternionAlgebra> matching;
  mpz_class total = 0;
  bool truncated = false;
};

inline constexpr std::size_t kMaxRamPlaces = 16;
inline constexpr std::size_t kMaxListed = 100000;

/// Lists the matching algebras by ramification size then lexicographically,
/// skipping sets with more than max_ram places and stopping after max_listed;
/// `total` is always exact and `truncated` says whether anything was left out.
MatchingEnumeration enumerate_matching(const QuaternionAlgebra& a, u64 bound, bool require_indefinite,
                                       std::size_t max_ram = kMaxRamPlaces, std::size_t max_listed = kMaxListed);

/// Quaternion algebra over Q from matching-space tokens.
QuaternionAlgebra algebra_from_tokens(const std::vector<u64>& tokens, const FieldOptions& options = {});

struct DistinguisherTranscript {
  u64 nu1 = 0;
  u64 nu2 = 0;
  QuaternionAlgebra b;
  QuaternionAlgebra a1;  // B0 tensor K1
  QuaternionAlgebra a2;  // B0 tensor K2
  QuaternionAlgebra b_k1;  // B tensor K1
  QuaternionAlgebra b_k2;  // B tensor K2
  bool matches_k1 = false;
  bool matches_k2 = false;
  std::vector<u64> candidates;  // admissible nu values up to the bound
};

/// Searches nu1 < nu2 <= bound outside Ram_f(B0), unramified in both fields,
/// not split completely in K1, at least one split completely in K2, such that
/// B = B0 + {nu1, nu2} matches over K1 and not over K2.
/// Errors: HypothesisViolation (degrees differ or are not powers of two, or
/// splitting is not uniform up to bound), FieldMismatch.
std::optional<DistinguisherTranscript> distinguisher_search(const QuaternionAlgebra& b0, const NumberField& k1,
                                                            const NumberField& k2, u64 bound);

struct MatchReport {
  bool agree = true;
  u64 bound = 0;
  std::optional<QuaternionAlgebra> witness;
  bool witness_matches_first = false;
  bool witness_matches_second = false;
  std::size_t primes_tested = 0;
  std::vector<u64> excluded_primes;
  bool require_indefinite = false;
};

/// Compares { B : B tensor K1 = A1 } with { B : B tensor K2 = A2 } over all
/// B with ramification among primes <= bound (and infinity unless
/// require_indefinite). A witness is re-verified with tensor_matches.
MatchReport compare_matching(const QuaternionAlgebra& a1, const QuaternionAlgebra& a2, u64 bound,
                             bool require_indefinite);
MatchReport same_subalgebra_report(const QuaternionAlgebra& a1, const QuaternionAlgebra& a2, u64 bound);

}  // namespace brauerq

#endif  // BRAUERQ_QUAT_HPP
