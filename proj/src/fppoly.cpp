#include "brauerq/fppoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "brauerq/error.hpp"

namespace brauerq {

// ---------------------------------------------------------------------------
// PrimeModulus

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
  if (p >= kLimit) {
    throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not below 2^62");
  }
  if (!is_prime_u64(p)) {
    throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
  }
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(unsigned degree, const mpz_class& c) {
  std::vector<mpz_class> coeffs(degree + 1, mpz_class(0));
  coeffs[degree] = c;
  return IntPoly(std::move(coeffs));
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "cannot parse polynomial '" + std::string(text) + "': " + why);
}

mpz_class parse_integer(std::string_view digits, std::string_view text) {
  mpz_class value;
  if (digits.empty() || value.set_str(std::string(digits), 10) != 0) {
    parse_fail(text, "bad integer '" + std::string(digits) + "'");
  }
  return value;
}

IntPoly parse_list(std::string_view text, std::string_view inner) {
  std::vector<mpz_class> coeffs;
  std::string token;
  auto flush = [&] {
    if (token.empty()) parse_fail(text, "empty list entry");
    coeffs.push_back(parse_integer(token, text));
    token.clear();
  };
  for (char ch : inner) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      if (ch == '+') continue;
      token.push_back(ch);
    } else {
      parse_fail(text, std::string("unexpected character '") + ch + "'");
    }
  }
  if (!token.empty() || !coeffs.empty()) flush();
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) parse_fail(text, "empty input");
  if (s.front() == '[') {
    if (s.back() != ']') parse_fail(text, "unterminated list");
    return parse_list(text, std::string_view(s).substr(1, s.size() - 2));
  }

  std::map<unsigned, mpz_class> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      parse_fail(text, "expected '+' or '-'");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    bool has_coeff = pos > start;
    mpz_class coeff = has_coeff ? parse_integer(std::string_view(s).substr(start, pos - start), text)
                                : mpz_class(1);
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) parse_fail(text, "'*' without coefficient");
      ++pos;
      if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'X')) parse_fail(text, "expected x after '*'");
    }
    unsigned degree = 0;
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t estart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == estart || pos - estart > 4) parse_fail(text, "bad exponent");
        degree = static_cast<unsigned>(std::stoul(s.substr(estart, pos - estart)));
      }
    } else if (!has_coeff) {
      parse_fail(text, "empty term");
    }
    terms[degree] += sign * coeff;
  }
  if (terms.empty()) parse_fail(text, "no terms");
  std::vector<mpz_class> coeffs(terms.rbegin()->first + 1, mpz_class(0));
  for (const auto& [deg, c] : terms) coeffs[deg] = c;
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::taylor_shift(const mpz_class& shift) const {
  // Horner in Z[x]: result = result * (x + shift) + c_i
  std::vector<mpz_class> result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<mpz_class> next(result.size() + 1, mpz_class(0));
    for (std::size_t i = 0; i < result.size(); ++i) {
      next[i + 1] += result[i];
      next[i] += result[i] * shift;
    }
    next[0] += *it;
    result = std::move(next);
  }
  return IntPoly(std::move(result));
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    if (d == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'x';
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

std::string IntPoly::to_list_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ',';
    out += coeffs_[i].get_str();
  }
  if (coeffs_.empty()) out += '0';
  return out + "]";
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// PolyModP

PolyModP::PolyModP(PrimeModulus modulus, std::vector<u64> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  for (u64& c : coeffs_) c %= modulus_.value();
  normalize();
}

PolyModP::PolyModP(const IntPoly& f, PrimeModulus modulus) : modulus_(modulus) {
  coeffs_.reserve(f.coeffs().size());
  for (const mpz_class& c : f.coeffs()) {
    coeffs_.push_back(mpz_fdiv_ui(c.get_mpz_t(), modulus_.value()));
  }
  normalize();
}

void PolyModP::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyModP PolyModP::monic() const {
  if (is_zero() || leading() == 1) return *this;
  u64 inv = inv_mod(leading(), p());
  std::vector<u64> out(coeffs_);
  for (u64& c : out) c = mul_mod(c, inv, p());
  return PolyModP(modulus_, std::move(out));
}

PolyModP PolyModP::derivative() const {
  if (coeffs_.size() <= 1) return zero(modulus_);
  std::vector<u64> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = mul_mod(coeffs_[i], i % p(), p());
  return PolyModP(modulus_, std::move(out));
}

u64 PolyModP::evaluate(u64 x) const {
  u64 acc = 0;
  x %= p();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_mod(mul_mod(acc, x, p()), *it, p());
  return acc;
}

std::string PolyModP::to_string() const {
  std::vector<mpz_class> lifted;
  lifted.reserve(coeffs_.size());
  for (u64 c : coeffs_) lifted.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(lifted)).to_string();
}

std::strong_ordering operator<=>(const PolyModP& a, const PolyModP& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                b.coeffs_.end());
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  std::vector<u64> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(a.coeff(i), b.coeff(i), a.p());
  return PolyModP(a.modulus_, std::move(out));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  std::vector<u64> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a.coeff(i), b.coeff(i), a.p());
  return PolyModP(a.modulus_, std::move(out));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.is_zero() || b.is_zero()) return PolyModP::zero(a.modulus_);
  const u64 p = a.p();
  std::vector<u64> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a.coeffs_[i], b.coeffs_[j], p), p);
    }
  }
  return PolyModP(a.modulus_, std::move(out));
}

PolyModP operator/(const PolyModP& a, const PolyModP& b) { return divmod(a, b).quotient; }
PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).remainder; }

DivMod divmod(const PolyModP& a, const PolyModP& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  const u64 p = a.p();
  if (a.degree() < b.degree()) return {PolyModP::zero(a.modulus()), a};
  std::vector<u64> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<u64> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const u64 lead_inv = inv_mod(b.leading(), p);
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    u64 c = mul_mod(rem[k + db], lead_inv, p);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k + j] = sub_mod(rem[k + j], mul_mod(c, b.coeff(j), p), p);
    }
  }
  rem.resize(db);
  return {PolyModP(a.modulus(), std::move(quot)), PolyModP(a.modulus(), std::move(rem))};
}

PolyModP gcd(const PolyModP& a, const PolyModP& b) {
  PolyModP x = a;
  PolyModP y = b;
  while (!y.is_zero()) {
    PolyModP r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyModP pow_mod(const PolyModP& base, const mpz_class& exponent, const PolyModP& modulus) {
  PolyModP result = PolyModP::one(base.modulus()) % modulus;
  PolyModP b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (exponent == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i) != 0) result = (result * b) % modulus;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Factorization over F_p

namespace {

mpz_class mpz_from_u64(u64 v) { return mpz_class(static_cast<unsigned long>(v)); }

PolyModP pth_root(const PolyModP& f) {
  const u64 p = f.p();
  std::vector<u64> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
  return PolyModP(f.modulus(), std::move(out));
}

void squarefree_parts(const PolyModP& f, int scale, std::vector<std::pair<PolyModP, int>>& out) {
  if (f.degree() < 1) return;
  const PolyModP df = f.derivative();
  if (df.is_zero()) {
    squarefree_parts(pth_root(f), scale * static_cast<int>(f.p()), out);
    return;
  }
  PolyModP c = gcd(f, df);
  PolyModP w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    PolyModP y = gcd(w, c);
    PolyModP z = w / y;
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c), scale * static_cast<int>(f.p()), out);
}

// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
std::vector<std::pair<PolyModP, int>> distinct_degree(const PolyModP& g) {
  std::vector<std::pair<PolyModP, int>> out;
  const PolyModP x = PolyModP::x(g.modulus());
  const mpz_class p = mpz_from_u64(g.p());
  PolyModP rest = g;
  PolyModP h = x % rest;
  int d = 1;
  while (rest.degree() >= 2 * d) {
    h = pow_mod(h, p, rest);
    PolyModP fac = gcd(h - x, rest);
    if (fac.degree() > 0) {
      out.emplace_back(fac, d);
      rest = rest / fac;
      h = h % rest;
    }
    ++d;
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

PolyModP random_poly(const PrimeModulus& m, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, m.value() - 1);
  std::vector<u64> coeffs(static_cast<std::size_t>(below_degree));
  for (u64& c : coeffs) c = dist(rng);
  return PolyModP(m, std::move(coeffs));
}

void equal_degree(const PolyModP& h, int d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
  if (h.degree() == d) {
    out.push_back(h);
    return;
  }
  const u64 p = h.p();
  mpz_class exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
  }
  for (;;) {
    PolyModP r = random_poly(h.modulus(), h.degree(), rng);
    if (r.degree() < 1) continue;
    PolyModP t = PolyModP::zero(h.modulus());
    if (p == 2) {
      PolyModP cur = r % h;
      t = cur;
      for (int i = 1; i < d; ++i) {
        cur = (cur * cur) % h;
        t = t + cur;
      }
    } else {
      t = pow_mod(r, exponent, h) - PolyModP::one(h.modulus());
    }
    PolyModP g = gcd(t, h);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(h / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const PolyModP& f, std::mt19937_64& rng) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "factor_mod_p needs degree >= 1");
  const PolyModP monic = f.monic();

  std::vector<std::pair<PolyModP, int>> parts;
  squarefree_parts(monic, 1, parts);

  std::vector<ModFactor> factors;
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<PolyModP> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) factors.push_back({std::move(g), mult});
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const ModFactor& a, const ModFactor& b) { return a.factor < b.factor; });
  std::vector<ModFactor> merged;
  for (auto& fac : factors) {
    if (!merged.empty() && merged.back().factor == fac.factor) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  return merged;
}

std::vector<ModFactor> factor_mod_p(const IntPoly& f, const PrimeModulus& p, std::mt19937_64& rng) {
  if (!f.is_monic() || f.degree() < 1) {
    throw Error(ErrorKind::InvalidArgument, "factor_mod_p needs a monic polynomial of degree >= 1");
  }
  return factor_mod_p(PolyModP(f, p), rng);
}

// ---------------------------------------------------------------------------
// Resultants and discriminants

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) return 1;
  if (n == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  if (m == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<mpz_class>> a(size, std::vector<mpz_class>(size, mpz_class(0)));
  for (std::size_t row = 0; row < static_cast<std::size_t>(n); ++row) {
    for (int k = 0; k <= m; ++k) a[row][row + static_cast<std::size_t>(k)] = f.coeff(static_cast<std::size_t>(m - k));
  }
  for (std::size_t row = 0; row < static_cast<std::size_t>(m); ++row) {
    for (int k = 0; k <= n; ++k) {
      a[row + static_cast<std::size_t>(n)][row + static_cast<std::size_t>(k)] = g.coeff(static_cast<std::size_t>(n - k));
    }
  }

  // Bareiss fraction-free elimination
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

mpz_class discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "discriminant of a constant polynomial");
  mpz_class res = resultant(f, f.derivative());
  mpz_class disc;
  mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

// ---------------------------------------------------------------------------
// Polynomials over Q (internal) and Sturm chains

namespace {

using RatPoly = std::vector<mpq_class>;  // low-to-high, no trailing zeros

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& f) {
  RatPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return out;
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Scales by a positive rational so coefficients are coprime integers; sign
// of every value is preserved, which is all a Sturm chain needs.
RatPoly make_primitive(const RatPoly& p) {
  if (p.empty()) return p;
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, c.get_den());
  mpz_class content = 0;
  for (const auto& c : p) content = gcd(content, mpz_class(c * den));
  RatPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(mpq_class(c * den) / content);
  return out;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_primitive(a);
}

int sign_at(const RatPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

std::vector<RatPoly> sturm_chain(const IntPoly& f) {
  std::vector<RatPoly> chain;
  chain.push_back(make_primitive(to_rat(f)));
  RatPoly d = make_primitive(to_rat(f.derivative()));
  if (d.empty()) return chain;
  chain.push_back(std::move(d));
  for (;;) {
    RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(make_primitive(r));
  }
  return chain;
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<RatPoly>& chain, const mpq_class& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at(p, x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    int s = sgn(p.back());
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

void require_squarefree(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no root count");
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.to_string() + " has a repeated factor");
}

// Every real root lies strictly inside (-B, B).
mpq_class cauchy_bound(const IntPoly& f) {
  mpq_class max_ratio = 0;
  for (int i = 0; i < f.degree(); ++i) {
    mpq_class r = mpq_class(abs(f.coeff(static_cast<std::size_t>(i)))) / mpq_class(abs(f.leading()));
    if (r > max_ratio) max_ratio = r;
  }
  return max_ratio + 1;
}

}  // namespace

IntPoly rational_gcd(const IntPoly& f, const IntPoly& g) {
  RatPoly r = rat_gcd(to_rat(f), to_rat(g));
  std::vector<mpz_class> coeffs;
  coeffs.reserve(r.size());
  for (const auto& c : r) coeffs.push_back(c.get_num());
  IntPoly out(std::move(coeffs));
  if (!out.is_zero() && out.leading() < 0) out = IntPoly{} - out;
  return out;
}

bool is_squarefree(const IntPoly& f) {
  if (f.degree() < 1) return !f.is_zero();
  return rational_gcd(f, f.derivative()).degree() == 0;
}

int count_real_roots(const IntPoly& f) {
  require_squarefree(f);
  if (f.degree() == 0) return 0;
  const auto chain = sturm_chain(f);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& f) {
  require_squarefree(f);
  std::vector<RootInterval> out;
  if (f.degree() == 0) return out;
  const auto chain = sturm_chain(f);
  const mpq_class bound = cauchy_bound(f);

  std::vector<RootInterval> stack{{-bound, bound}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    const int roots = variations_at(chain, iv.lo) - variations_at(chain, iv.hi);
    if (roots == 0) continue;
    if (roots == 1) {
      out.push_back(iv);
      continue;
    }
    mpq_class mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval refine_root(const IntPoly& f, RootInterval interval, const mpq_class& width) {
  const auto chain = sturm_chain(f);
  while (interval.hi - interval.lo > width) {
    mpq_class mid = (interval.lo + interval.hi) / 2;
    if (sign_at(chain.front(), mid) == 0) {
      mpq_class lo = mid - width / 2;
      interval.lo = lo > interval.lo ? lo : interval.lo;
      interval.hi = mid;
      return interval;
    }
    if (variations_at(chain, interval.lo) - variations_at(chain, mid) == 1) {
      interval.hi = mid;
    } else {
      interval.lo = mid;
    }
  }
  return interval;
}

}  // namespace brauerq
