#ifndef BRAUERQ_FPPOLY_HPP
#define BRAUERQ_FPPOLY_HPP

// Exact polynomial arithmetic: integer polynomials, polynomials over prime
// fields, factorization mod p, discriminants and Sturm real-root counting.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brauerq/arith.hpp"

namespace brauerq {

/// A prime 2 <= p < 2^62, checked on construction.
class PrimeModulus {
 public:
  static constexpr u64 kLimit = u64{1} << 62U;

  /// Throws CompositeModulus for non-primes and InvalidArgument for p >= 2^62.
  explicit PrimeModulus(u64 p);

  u64 value() const noexcept { return p_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  u64 p_;
};

/// Polynomial with arbitrary-precision integer coefficients, low-to-high.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  /// Accepts `x^8+6561`, `-3*x^2 + x - 1`, `2x`, or a coefficient list
  /// `[6561,0,0,0,0,0,0,0,1]` (low-to-high). Throws ParseError.
  static IntPoly parse(std::string_view text);

  static IntPoly monomial(unsigned degree, const mpz_class& c = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

  IntPoly derivative() const;
  /// f(x + shift)
  IntPoly taylor_shift(const mpz_class& shift) const;
  /// Exact value at a rational point.
  mpq_class evaluate(const mpq_class& x) const;

  /// Human form, e.g. `x^8+6561`.
  std::string to_string() const;
  /// Coefficient-list form, e.g. `[6561,0,0,0,0,0,0,0,1]`.
  std::string to_list_string() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Polynomial over the field with p elements, coefficients low-to-high in
/// [0, p) with no trailing zeros.
class PolyModP {
 public:
  PolyModP(PrimeModulus modulus, std::vector<u64> coeffs);
  PolyModP(const IntPoly& f, PrimeModulus modulus);

  static PolyModP zero(PrimeModulus m) { return PolyModP(m, {}); }
  static PolyModP one(PrimeModulus m) { return PolyModP(m, {1}); }
  static PolyModP x(PrimeModulus m) { return PolyModP(m, {0, 1}); }

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  u64 p() const noexcept { return modulus_.value(); }
  std::span<const u64> coeffs() const noexcept { return coeffs_; }
  u64 coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  u64 leading() const { return coeffs_.back(); }

  PolyModP monic() const;
  PolyModP derivative() const;
  u64 evaluate(u64 x) const;
  std::string to_string() const;

  friend bool operator==(const PolyModP& a, const PolyModP& b) {
    return a.p() == b.p() && a.coeffs_ == b.coeffs_;
  }
  /// Canonical order: degree ascending, then lexicographic on the
  /// low-to-high coefficient list.
  friend std::strong_ordering operator<=>(const PolyModP& a, const PolyModP& b);

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator/(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator%(const PolyModP& a, const PolyModP& b);

 private:
  void normalize();
  PrimeModulus modulus_;
  std::vector<u64> coeffs_;
};

struct DivMod {
  PolyModP quotient;
  PolyModP remainder;
};

DivMod divmod(const PolyModP& a, const PolyModP& b);
/// Monic gcd (zero if both inputs are zero).
PolyModP gcd(const PolyModP& a, const PolyModP& b);
PolyModP pow_mod(const PolyModP& base, const mpz_class& exponent, const PolyModP& modulus);

struct ModFactor {
  PolyModP factor;  // monic irreducible
  int multiplicity;

  friend bool operator==(const ModFactor&, const ModFactor&) = default;
};

/// Factor a monic polynomial over F_p into irreducibles: squarefree split,
/// distinct-degree split, randomized equal-degree split. The output is in
/// canonical factor order and does not depend on the random source.
std::vector<ModFactor> factor_mod_p(const PolyModP& f, std::mt19937_64& rng);
std::vector<ModFactor> factor_mod_p(const IntPoly& f, const PrimeModulus& p, std::mt19937_64& rng);

/// Resultant via fraction-free elimination of the Sylvester matrix.
mpz_class resultant(const IntPoly& f, const IntPoly& g);
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). InvalidArgument for constants.
mpz_class discriminant(const IntPoly& f);

/// Gcd over Q, made primitive with positive leading coefficient.
IntPoly rational_gcd(const IntPoly& f, const IntPoly& g);
bool is_squarefree(const IntPoly& f);

/// Number of distinct real roots via a Sturm chain in exact rationals.
/// Throws NotSquarefree.
int count_real_roots(const IntPoly& f);

/// Half-open rational interval (lo, hi] holding exactly one real root.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
};

/// Isolating intervals for all real roots of a squarefree f, ascending.
std::vector<RootInterval> isolate_real_roots(const IntPoly& f);
/// Shrinks an isolating interval until hi - lo <= width.
RootInterval refine_root(const IntPoly& f, RootInterval interval, const mpq_class& width);

}  // namespace brauerq

#endif  // BRAUERQ_FPPOLY_HPP
