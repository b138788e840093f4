#ifndef BRAUERQ_BRAUER_HPP
#define BRAUERQ_BRAUER_HPP

// Brauer classes of number fields as finitely supported vectors of local
// invariants in Q/Z.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauerq/numfield.hpp"

namespace brauerq {

/// An element of Q/Z, stored as the reduced representative r/s in [0, 1).
class QmodZ {
 public:
  QmodZ() = default;
  explicit QmodZ(const mpq_class& value);
  QmodZ(long num, long den) : QmodZ(mpq_class(num, den)) {}

  /// "1/3", "0", "-1/2" (read mod 1), "5/4".
  static QmodZ parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_half() const { return v_ == mpq_class(1, 2); }
  /// "0" or "r/s".
  std::string to_string() const;

  friend QmodZ operator+(const QmodZ& a, const QmodZ& b) { return QmodZ(a.v_ + b.v_); }
  friend QmodZ operator*(const mpz_class& k, const QmodZ& a) { return QmodZ(mpq_class(k) * a.v_); }
  friend bool operator==(const QmodZ& a, const QmodZ& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const QmodZ& a, const QmodZ& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class v_ = 0;
};

class BrauerClass {
 public:
  using Support = std::map<Place, QmodZ>;

  const NumberField& field() const { return field_; }
  /// Places with nonzero invariant, in place order.
  const Support& support() const { return support_; }
  bool is_trivial() const { return support_.empty(); }
  QmodZ invariant(const Place& place) const;
  std::vector<u64> support_primes() const;

 private:
  BrauerClass(NumberField k, Support s) : field_(std::move(k)), support_(std::move(s)) {}
  NumberField field_;
  Support support_;

  friend BrauerClass make_class(const NumberField&, const std::vector<std::pair<Place, QmodZ>>&);
};

/// Validates places, drops zeros, checks real values are 0 or 1/2, no complex
/// place carries a nonzero value, and the invariants sum to 0.
/// Errors: BadPlace (also for duplicates), BadArchimedean, ReciprocityViolation.
BrauerClass make_class(const NumberField& k, const std::vector<std::pair<Place, QmodZ>>& assignments);
BrauerClass trivial_class(const NumberField& k);

/// Lcm of the invariant denominators; over a number field this is both the
/// exponent and the Schur index.
mpz_class class_index(const BrauerClass& c);

/// Sum of two classes over the same field (FieldMismatch otherwise).
BrauerClass add(const BrauerClass& a, const BrauerClass& b);

/// Extension of scalars from Q: each place P | p gets e(P)f(P) * inv_p, every
/// real place of k gets inv_oo. Throws IndexPrime at a support prime whose
/// splitting is undetermined, FieldMismatch when c is not over Q.
BrauerClass restrict_from_Q(const BrauerClass& c, const NumberField& k);

/// Extension of scalars along L/F for Galois-like (uniformly splitting)
/// fields, checked at the support primes and at all primes up to bound.
/// Local invariants are multiplied by the relative local degree and placed on
/// the L-places above p in canonical blocks.
/// Errors: NonUniformSplitting, NonIntegralRelativeDegree, IndexPrime.
BrauerClass restrict_relative(const BrauerClass& c, const NumberField& l, u64 bound);

/// Moves invariants to the places of k2 with the same (e, f), block by block.
/// Errors: NotSplittingEquivalent, AmbiguousTransport.
BrauerClass transport_phi(const BrauerClass& c, const NumberField& k2, u64 bound);

/// Strict place-wise equality, or equality of the invariant multisets within
/// each (p, (e, f)) block (and among real places) when up_to_block_matching.
/// Throws FieldMismatch for different fields.
bool classes_equal(const BrauerClass& a, const BrauerClass& b, bool up_to_block_matching);

}  // namespace brauerq

#endif  // BRAUERQ_BRAUER_HPP
