#include "brauerq/numfield.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <utility>

#include "brauerq/error.hpp"

namespace brauerq {

// ---------------------------------------------------------------------------
// Flags, evidence, places

std::vector<std::string> TrustedFlags::names() const {
  std::vector<std::string> out;
  if (narrow_class_number_one) out.emplace_back("claimed_narrow_class_number_one");
  if (primitive) out.emplace_back("claimed_primitive");
  if (only_totally_real_subfield_is_q) out.emplace_back("claimed_only_totally_real_subfield_is_Q");
  if (irreducible) out.emplace_back("claimed_irreducible");
  return out;
}

TrustedFlags TrustedFlags::parse(std::string_view list) {
  TrustedFlags flags;
  std::string item;
  auto apply = [&] {
    std::string name = item;
    item.clear();
    if (name.empty()) return;
    if (name.rfind("claimed_", 0) == 0) name = name.substr(8);
    if (name == "narrow_class_number_one") {
      flags.narrow_class_number_one = true;
    } else if (name == "primitive") {
      flags.primitive = true;
    } else if (name == "only_totally_real_subfield_is_Q" || name == "only_totally_real_subfield_is_q") {
      flags.only_totally_real_subfield_is_q = true;
    } else if (name == "irreducible") {
      flags.irreducible = true;
    } else {
      throw Error(ErrorKind::ParseError, "unknown trusted flag '" + name + "'");
    }
  };
  for (char ch : list) {
    if (ch == ',') {
      apply();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      item.push_back(ch);
    }
  }
  apply();
  return flags;
}

std::string IrreducibilityEvidence::describe() const {
  switch (method) {
    case Method::Linear:
      return "degree one";
    case Method::IrreducibleModPrime:
      return "irreducible modulo the good prime " + std::to_string(prime);
    case Method::DegreePattern:
      return "no proper factor degree is consistent with the factorization patterns at " +
             std::to_string(primes_examined) + " good primes";
    case Method::BinomialCriterion:
      return "binomial x^n - a with a not a q-th power for q | n and not in -4Q^4";
    case Method::ShiftedEisenstein:
      return "Eisenstein at " + std::to_string(prime) + " after x -> x" + (shift < 0 ? "" : "+") +
             std::to_string(shift);
    case Method::FactorSearch:
      return "no product of lifted factors modulo a power of " + std::to_string(prime) + " divides over Z";
    case Method::Trusted:
      return "trusted flag claimed_irreducible (no certificate found)";
  }
  return "";
}

std::string Place::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(p) + "." + std::to_string(index);
    case Kind::Real: return "r" + std::to_string(index);
    case Kind::Complex: return "c" + std::to_string(index);
  }
  return "";
}

Place Place::parse(std::string_view text) {
  auto fail = [&]() -> Place { throw Error(ErrorKind::ParseError, "bad place '" + std::string(text) + "'"); };
  auto parse_number = [&](std::string_view digits) -> u64 {
    if (digits.empty() || digits.size() > 19) fail();
    u64 v = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
      v = v * 10 + static_cast<u64>(ch - '0');
    }
    return v;
  };
  if (text == "inf" || text == "oo" || text == "infinity") return real(0);
  if (text.empty()) return fail();
  if (text.front() == 'r') return real(parse_number(text.substr(1)));
  if (text.front() == 'c') return complex(parse_number(text.substr(1)));
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return finite(parse_number(text), 0);
  return finite(parse_number(text.substr(0, dot)), parse_number(text.substr(dot + 1)));
}

// ---------------------------------------------------------------------------
// Field construction

std::string poly_hash(const IntPoly& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : f.to_list_string()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

unsigned valuation(const mpz_class& value, unsigned long q) {
  mpz_class v = value;
  unsigned count = 0;
  while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), q) != 0) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), q);
    ++count;
  }
  return count;
}

bool scaling_divides(const IntPoly& f, const mpz_class& c) {
  const int n = f.degree();
  for (int j = 0; j < n; ++j) {
    const mpz_class& a = f.coeffs()[static_cast<std::size_t>(j)];
    if (a == 0) continue;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - j));
    if (mpz_divisible_p(a.get_mpz_t(), power.get_mpz_t()) == 0) return false;
  }
  return true;
}

IntPoly apply_reduction(const IntPoly& f, const mpz_class& c) {
  const int n = f.degree();
  std::vector<mpz_class> out(f.coeffs());
  for (int j = 0; j < n; ++j) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - j));
    mpz_divexact(out[static_cast<std::size_t>(j)].get_mpz_t(), out[static_cast<std::size_t>(j)].get_mpz_t(),
                 power.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

}  // namespace

mpz_class generator_reduction_factor(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return 1;
  mpz_class g = 0;
  for (int j = 0; j < n; ++j) g = gcd(g, f.coeffs()[static_cast<std::size_t>(j)]);
  if (g == 0) return 1;

  mpz_class c = 1;
  mpz_class rest = abs(g);
  for (unsigned long q = 2; q <= 100000 && rest > 1; ++q) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), q) == 0) continue;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q) != 0) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
    unsigned exponent = ~0U;
    for (int j = 0; j < n; ++j) {
      const mpz_class& a = f.coeffs()[static_cast<std::size_t>(j)];
      if (a == 0) continue;
      exponent = std::min(exponent, valuation(a, q) / static_cast<unsigned>(n - j));
    }
    for (unsigned i = 0; i < exponent; ++i) c *= q;
  }
  // Cofactor without small primes: only try it and its exact roots.
  if (rest > 1) {
    for (unsigned long k = 1; k <= 64; ++k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), rest.get_mpz_t(), k) == 0) continue;
      if (root > 1 && scaling_divides(f, c * root)) {
        c *= root;
        break;
      }
    }
  }
  return c;
}

namespace {

std::mt19937_64 rng_for(u64 seed, u64 p) { return std::mt19937_64(seed ^ (p * 0x9E3779B97F4A7C15ULL)); }

bool has_integer_root(const IntPoly& f) {
  if (f.coeff(0) == 0) return true;
  for (const auto& iv : isolate_real_roots(f)) {
    RootInterval r = refine_root(f, iv, mpq_class(1, 2));
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), r.hi.get_num_mpz_t(), r.hi.get_den_mpz_t());
    if (mpq_class(k) > r.lo && f.evaluate(mpq_class(k)) == 0) return true;
  }
  return false;
}

bool is_perfect_power(const mpz_class& a, unsigned long q) {
  if (a < 0) {
    if (q % 2 == 0) return false;
    mpz_class neg = -a;
    mpz_class root;
    return mpz_root(root.get_mpz_t(), neg.get_mpz_t(), q) != 0;
  }
  mpz_class root;
  return mpz_root(root.get_mpz_t(), a.get_mpz_t(), q) != 0;
}

// x^n - a: irreducible over Q iff a is not a q-th power for primes q | n and,
// when 4 | n, a is not of the form -4b^4.
std::optional<bool> binomial_irreducible(const IntPoly& f) {
  const int n = f.degree();
  for (int j = 1; j < n; ++j) {
    if (f.coeffs()[static_cast<std::size_t>(j)] != 0) return std::nullopt;
  }
  const mpz_class a = -f.coeff(0);
  auto m = static_cast<unsigned long>(n);
  for (unsigned long q = 2; q <= m; ++q) {
    if (m % q != 0 || !is_prime_u64(q)) continue;
    if (is_perfect_power(a, q)) return false;
  }
  if (m % 4 == 0 && a < 0 && mpz_divisible_ui_p(a.get_mpz_t(), 4) != 0) {
    mpz_class b4 = -a / 4;
    if (is_perfect_power(b4, 4)) return false;
  }
  return true;
}

std::optional<IrreducibilityEvidence> eisenstein_certificate(const IntPoly& f) {
  const int n = f.degree();
  for (long shift : {0L, 1L, -1L, 2L, -2L}) {
    IntPoly h = f.taylor_shift(shift);
    mpz_class g = 0;
    for (int j = 0; j < n; ++j) g = gcd(g, h.coeffs()[static_cast<std::size_t>(j)]);
    if (g == 0) continue;
    for (u64 q : primes_up_to(1000)) {
      if (mpz_divisible_ui_p(g.get_mpz_t(), q) == 0) continue;
      if (mpz_divisible_ui_p(h.coeff(0).get_mpz_t(), q * q) == 0) {
        IrreducibilityEvidence ev;
        ev.method = IrreducibilityEvidence::Method::ShiftedEisenstein;
        ev.prime = q;
        ev.shift = shift;
        return ev;
      }
    }
  }
  return std::nullopt;
}

// Zassenhaus search: Hensel-lift the factorization at one good prime past the
// Landau-Mignotte bound and try every product of at most half the modular
// factors. Finding none proves irreducibility.
using ZPoly = std::vector<mpz_class>;

constexpr std::size_t kMaxLiftedFactors = 16;

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void z_reduce(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
}

PolyModP to_modp(const ZPoly& a, const PrimeModulus& mod) {
  std::vector<u64> c;
  for (const auto& x : a) c.push_back(mpz_fdiv_ui(x.get_mpz_t(), mod.value()));
  return PolyModP(mod, std::move(c));
}

ZPoly from_modp(const PolyModP& a) {
  ZPoly r;
  for (u64 c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// s*g + t*h = 1 for coprime g, h.
std::pair<PolyModP, PolyModP> bezout(const PolyModP& g, const PolyModP& h) {
  const auto& mod = g.modulus();
  PolyModP r0 = g, r1 = h;
  PolyModP s0 = PolyModP::one(mod), s1 = PolyModP::zero(mod);
  PolyModP t0 = PolyModP::zero(mod), t1 = PolyModP::one(mod);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const PolyModP inv(mod, {inv_mod(r0.leading(), mod.value())});
  return {s0 * inv, t0 * inv};
}

// Lifts target = g*h (mod p) to target = G*H (mod p^k), G and H monic.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& target, const PolyModP& g, const PolyModP& h, int k) {
  const auto& mod = g.modulus();
  const auto [s, t] = bezout(g, h);
  ZPoly big_g = from_modp(g), big_h = from_modp(h);
  mpz_class pj = mod.value();
  for (int j = 1; j < k; ++j) {
    ZPoly gh = z_mul(big_g, big_h);
    ZPoly e(target.size(), mpz_class(0));
    for (std::size_t i = 0; i < target.size(); ++i) {
      e[i] = target[i] - (i < gh.size() ? gh[i] : mpz_class(0));
      mpz_divexact(e[i].get_mpz_t(), e[i].get_mpz_t(), pj.get_mpz_t());
    }
    const PolyModP em = to_modp(e, mod);
    const auto [q, dg] = divmod(em * t, g);
    const PolyModP dh = em * s + q * h;
    const ZPoly zg = from_modp(dg), zh = from_modp(dh);
    for (std::size_t i = 0; i < zg.size(); ++i) big_g[i] += pj * zg[i];
    for (std::size_t i = 0; i < zh.size(); ++i) big_h[i] += pj * zh[i];
    pj *= mod.value();
  }
  z_reduce(big_g, pj);
  z_reduce(big_h, pj);
  return {big_g, big_h};
}

bool divides_over_z(const ZPoly& g, ZPoly f) {
  // g monic
  while (f.size() >= g.size()) {
    const mpz_class c = f.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    f.pop_back();
  }
  return std::all_of(f.begin(), f.end(), [](const mpz_class& c) { return c == 0; });
}

// Returns a proper factor over Z, or nullopt when f is irreducible. The
// factors must be those of a squarefree reduction.
std::optional<ZPoly> zassenhaus_factor(const IntPoly& f, const std::vector<ModFactor>& factors) {
  const PrimeModulus& mod = factors.front().factor.modulus();
  const int n = f.degree();
  mpz_class norm = 0;
  for (const auto& c : f.coeffs()) norm += abs(c);
  const mpz_class bound = (mpz_class(1) << static_cast<mp_bitcnt_t>(n + 1)) * norm;
  int k = 1;
  mpz_class pk = mod.value();
  while (pk <= bound) {
    pk *= mod.value();
    ++k;
  }

  const ZPoly target(f.coeffs().begin(), f.coeffs().end());
  std::vector<ZPoly> lifted;
  ZPoly rest = target;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    PolyModP others = PolyModP::one(mod);
    for (std::size_t j = i + 1; j < factors.size(); ++j) others = others * factors[j].factor;
    auto [g, h] = hensel_pair(rest, factors[i].factor, others, k);
    lifted.push_back(std::move(g));
    rest = std::move(h);
  }
  lifted.push_back(rest);

  const mpz_class half = pk / 2;
  const std::size_t r = lifted.size();
  for (std::size_t size = 1; 2 * size <= r; ++size) {
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      ZPoly g{1};
      for (std::size_t i = 0; i < r; ++i) {
        if (!pick[i]) continue;
        g = z_mul(g, lifted[i]);
        z_reduce(g, pk);
      }
      for (auto& c : g) {
        if (c > half) c -= pk;
      }
      if (g[0] == 0 || mpz_divisible_p(target[0].get_mpz_t(), g[0].get_mpz_t()) == 0) continue;
      if (divides_over_z(g, target)) return g;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

IrreducibilityEvidence certify_irreducible(const IntPoly& f, const mpz_class& disc, const FieldOptions& options) {
  using Method = IrreducibilityEvidence::Method;
  const int n = f.degree();
  IrreducibilityEvidence ev;
  if (n == 1) return ev;
  if (disc == 0) throw Error(ErrorKind::Reducible, f.to_string() + " has a repeated factor over Q");
  if (has_integer_root(f)) throw Error(ErrorKind::Reducible, f.to_string() + " has a rational root");

  constexpr int kPatternPrimes = 50;
  // possible[d]: a factor of degree d over Q is still consistent with every pattern seen
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  int examined = 0;
  std::vector<ModFactor> fewest;  // fewest modular factors seen, for the lifting search
  for (u64 p = 2; examined < kPatternPrimes; ++p) {
    if (!is_prime_u64(p) || mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0) continue;
    ++examined;
    auto rng = rng_for(options.seed, p);
    const auto factors = factor_mod_p(f, PrimeModulus(p), rng);
    if (factors.size() == 1 && factors.front().multiplicity == 1) {
      ev.method = Method::IrreducibleModPrime;
      ev.prime = p;
      ev.primes_examined = examined;
      return ev;
    }
    if (fewest.empty() || factors.size() < fewest.size()) fewest = factors;
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (const auto& fac : factors) {
      for (int m = 0; m < fac.multiplicity; ++m) {
        for (int s = n; s >= fac.factor.degree(); --s) {
          if (sums[static_cast<std::size_t>(s - fac.factor.degree())]) sums[static_cast<std::size_t>(s)] = true;
        }
      }
    }
    for (int d = 0; d <= n; ++d) possible[static_cast<std::size_t>(d)] = possible[static_cast<std::size_t>(d)] && sums[static_cast<std::size_t>(d)];
  }
  bool proper_possible = false;
  for (int d = 1; d < n; ++d) proper_possible = proper_possible || possible[static_cast<std::size_t>(d)];
  if (!proper_possible) {
    ev.method = Method::DegreePattern;
    ev.primes_examined = examined;
    return ev;
  }

  if (auto binomial = binomial_irreducible(f)) {
    if (!*binomial) throw Error(ErrorKind::Reducible, f.to_string() + " is a reducible binomial");
    ev.method = Method::BinomialCriterion;
    ev.primes_examined = examined;
    return ev;
  }
  if (auto eis = eisenstein_certificate(f)) {
    eis->primes_examined = examined;
    return *eis;
  }
  if (!fewest.empty() && fewest.size() <= kMaxLiftedFactors) {
    if (auto g = zassenhaus_factor(f, fewest)) {
      throw Error(ErrorKind::Reducible, f.to_string() + " has the factor " + IntPoly(std::move(*g)).to_string());
    }
    ev.method = Method::FactorSearch;
    ev.prime = fewest.front().factor.p();
    ev.primes_examined = examined;
    return ev;
  }
  if (options.flags.irreducible) {
    ev.method = Method::Trusted;
    ev.primes_examined = examined;
    return ev;
  }
  throw Error(ErrorKind::InconclusiveIrreducibility,
              "could not certify " + f.to_string() + " irreducible; set the claimed_irreducible flag to override");
}

}  // namespace

bool NumberField::is_good_prime(u64 p) const {
  return mpz_divisible_ui_p(d_->disc.get_mpz_t(), p) == 0;
}

NumberField NumberField::with_flags(const TrustedFlags& flags) const {
  auto copy = std::make_shared<Data>(*d_);
  copy->flags = flags;
  return NumberField(std::move(copy));
}

NumberField build_field(const IntPoly& poly, const FieldOptions& options) {
  if (poly.degree() < 1) throw Error(ErrorKind::InvalidArgument, "defining polynomial must have degree >= 1");
  if (!poly.is_monic()) throw Error(ErrorKind::InvalidArgument, poly.to_string() + " is not monic");

  auto data = std::make_shared<NumberField::Data>();
  data->input = poly;
  if (poly.degree() == 1) {
    data->poly = IntPoly{0, 1};
  } else {
    data->reduction = generator_reduction_factor(poly);
    data->poly = data->reduction > 1 ? apply_reduction(poly, data->reduction) : poly;
  }
  data->disc = discriminant(data->poly);
  data->flags = options.flags;
  data->seed = options.seed;
  data->evidence = certify_irreducible(data->poly, data->disc, options);
  data->real_roots = isolate_real_roots(data->poly);
  const int r1 = static_cast<int>(data->real_roots.size());
  data->signature = {r1, (data->poly.degree() - r1) / 2};
  data->hash = poly_hash(data->poly);
  data->cache = options.cache ? options.cache : std::make_shared<SplittingCache>();
  return NumberField(std::move(data));
}

NumberField build_field(std::string_view poly_text, const FieldOptions& options) {
  return build_field(IntPoly::parse(poly_text), options);
}

NumberField rationals(const FieldOptions& options) { return build_field(IntPoly{0, 1}, options); }

Signature signature(const NumberField& k) {
  const int r1 = count_real_roots(k.defining_poly());
  return {r1, (k.degree() - r1) / 2};
}

// ---------------------------------------------------------------------------
// Splitting

namespace {

IntPoly lift(const PolyModP& g) {
  std::vector<mpz_class> coeffs;
  coeffs.reserve(g.coeffs().size());
  for (u64 c : g.coeffs()) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(coeffs));
}

std::optional<SplittingType> compute_splitting(const NumberField& k, u64 p) {
  const PrimeModulus modulus(p);
  auto rng = rng_for(k.seed(), p);
  const IntPoly& f = k.defining_poly();
  const auto factors = factor_mod_p(f, modulus, rng);

  const bool repeated = std::any_of(factors.begin(), factors.end(), [](const ModFactor& m) { return m.multiplicity > 1; });
  if (repeated) {
    // Dedekind: with g = prod g_i and h = prod g_i^(e_i - 1), p divides the
    // index iff some g_i with e_i >= 2 divides (f - g h) / p mod p.
    IntPoly g{1};
    IntPoly h{1};
    for (const auto& fac : factors) {
      IntPoly lifted = lift(fac.factor);
      g = g * lifted;
      for (int i = 1; i < fac.multiplicity; ++i) h = h * lifted;
    }
    IntPoly diff = f - g * h;
    std::vector<mpz_class> quotient;
    quotient.reserve(diff.coeffs().size());
    for (const auto& c : diff.coeffs()) {
      mpz_class q;
      mpz_divexact_ui(q.get_mpz_t(), c.get_mpz_t(), p);
      quotient.push_back(q);
    }
    const PolyModP fbar(IntPoly(std::move(quotient)), modulus);
    for (const auto& fac : factors) {
      if (fac.multiplicity >= 2 && gcd(fbar, fac.factor).degree() > 0) return std::nullopt;
    }
  }

  SplittingType type{p, {}};
  type.pairs.reserve(factors.size());
  for (const auto& fac : factors) type.pairs.push_back({fac.multiplicity, fac.factor.degree()});
  return type;
}

}  // namespace

std::optional<SplittingType> try_splitting_type(const NumberField& k, u64 p) {
  const auto& cache = k.cache();
  if (auto hit = cache->lookup(k.polyhash(), p)) return *hit;
  auto result = compute_splitting(k, p);
  cache->store(k.polyhash(), p, result);
  return result;
}

SplittingType splitting_type(const NumberField& k, u64 p) {
  auto result = try_splitting_type(k, p);
  if (!result) {
    throw Error(ErrorKind::IndexPrime, std::to_string(p) + " divides the index of " + k.defining_poly().to_string() +
                                           " (Dedekind criterion fails)");
  }
  return *std::move(result);
}

u64 inertia_gcd(const NumberField& k, u64 p) {
  const auto type = splitting_type(k, p);
  u64 g = 0;
  for (const auto& pr : type.pairs) g = std::gcd(g, static_cast<u64>(pr.f));
  return g;
}

SplitPredicates split_predicates(const NumberField& k, u64 p) {
  const auto type = splitting_type(k, p);
  SplitPredicates out;
  out.splits_completely = std::all_of(type.pairs.begin(), type.pairs.end(),
                                      [](const SplitPair& pr) { return pr.e == 1 && pr.f == 1; });
  out.has_degree_one_factor = std::any_of(type.pairs.begin(), type.pairs.end(), [](const SplitPair& pr) { return pr.f == 1; });
  out.unramified = std::all_of(type.pairs.begin(), type.pairs.end(), [](const SplitPair& pr) { return pr.e == 1; });
  return out;
}

std::vector<Place> places_over(const NumberField& k, u64 p) {
  const auto type = splitting_type(k, p);
  std::vector<Place> out;
  for (std::size_t i = 0; i < type.pairs.size(); ++i) out.push_back(Place::finite(p, i));
  return out;
}

std::vector<Place> real_places(const NumberField& k) {
  std::vector<Place> out;
  for (int i = 0; i < k.signature().r1; ++i) out.push_back(Place::real(static_cast<std::size_t>(i)));
  return out;
}

void validate_place(const NumberField& k, const Place& place) {
  switch (place.kind) {
    case Place::Kind::Finite: {
      if (!is_prime_u64(place.p) || place.p >= PrimeModulus::kLimit) {
        throw Error(ErrorKind::BadPlace, std::to_string(place.p) + " is not a usable prime");
      }
      auto type = try_splitting_type(k, place.p);
      if (!type) throw Error(ErrorKind::BadPlace, std::to_string(place.p) + " is an index prime; its places are undetermined");
      if (place.index >= type->pairs.size()) {
        throw Error(ErrorKind::BadPlace, "only " + std::to_string(type->pairs.size()) + " places above " +
                                             std::to_string(place.p));
      }
      return;
    }
    case Place::Kind::Real:
      if (place.index >= static_cast<std::size_t>(k.signature().r1)) {
        throw Error(ErrorKind::BadPlace, "field has " + std::to_string(k.signature().r1) + " real places");
      }
      return;
    case Place::Kind::Complex:
      if (place.index >= static_cast<std::size_t>(k.signature().r2)) {
        throw Error(ErrorKind::BadPlace, "field has " + std::to_string(k.signature().r2) + " complex places");
      }
      return;
  }
}

int local_degree(const NumberField& k, const Place& place) {
  if (place.is_real()) return 1;
  if (place.is_complex()) return 2;
  const auto type = splitting_type(k, place.p);
  if (place.index >= type.pairs.size()) throw Error(ErrorKind::BadPlace, "no place " + place.to_string());
  return type.pairs[place.index].e * type.pairs[place.index].f;
}

// ---------------------------------------------------------------------------
// Sweeps

ContainmentReport split_set_contained(const NumberField& a, const NumberField& b, u64 bound) {
  if (bound < 100) throw Error(ErrorKind::InvalidArgument, "split_set_contained needs bound >= 100");
  ContainmentReport report;
  report.bound = bound;
  for (u64 p : primes_up_to(bound)) {
    if (!a.is_good_prime(p) || !b.is_good_prime(p)) {
      report.skipped_primes.push_back(p);
      continue;
    }
    ++report.primes_tested;
    if (split_predicates(a, p).splits_completely && !split_predicates(b, p).splits_completely) {
      report.exceptions.push_back(p);
    }
  }
  report.holds_up_to_bound = report.exceptions.empty();
  return report;
}

namespace {

template <typename Agree>
SplittingComparison compare_at_good_primes(const NumberField& a, const NumberField& b, u64 bound, Agree agree) {
  SplittingComparison report;
  report.bound = bound;
  for (u64 p : primes_up_to(bound)) {
    if (!a.is_good_prime(p) || !b.is_good_prime(p)) {
      report.excluded_primes.push_back(p);
      continue;
    }
    ++report.primes_tested;
    if (!agree(p)) report.mismatches.push_back(p);
  }
  report.holds = report.mismatches.empty();
  return report;
}

}  // namespace

SplittingComparison compare_splitting_types(const NumberField& a, const NumberField& b, u64 bound) {
  return compare_at_good_primes(a, b, bound,
                                [&](u64 p) { return same_multiset(splitting_type(a, p), splitting_type(b, p)); });
}

SplittingComparison compare_inertia_gcds(const NumberField& a, const NumberField& b, u64 bound) {
  return compare_at_good_primes(a, b, bound, [&](u64 p) { return inertia_gcd(a, p) == inertia_gcd(b, p); });
}

UniformityReport uniform_splitting_evidence(const NumberField& k, u64 bound) {
  UniformityReport report;
  report.bound = bound;
  for (u64 p : primes_up_to(bound)) {
    auto type = try_splitting_type(k, p);
    if (!type) continue;
    ++report.primes_tested;
    if (!type->uniform()) report.nonuniform_primes.push_back(p);
  }
  report.uniform = report.nonuniform_primes.empty();
  return report;
}

std::string CatalogField::name() const {
  if (kind == Kind::Cyclotomic) return "Q(zeta_" + std::to_string(parameter) + ")";
  if (parameter == -1) return "Q(i)";
  return "Q(sqrt(" + std::to_string(parameter) + "))";
}

namespace {

long legendre(long a, u64 p) {
  long r = a % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  if (r == 0) return 0;
  return pow_mod(static_cast<u64>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

GaloisFingerprint galois_fingerprint(const NumberField& k, u64 bound, long d_max, u64 m_max) {
  if (bound < 1000) throw Error(ErrorKind::InvalidArgument, "galois_fingerprint needs bound >= 1000");
  const auto n = static_cast<u64>(k.degree());

  struct Observation {
    u64 p;
    bool splits_completely;
    bool degree_one;
  };
  std::vector<Observation> observed;
  for (u64 p : primes_up_to(bound)) {
    if (!k.is_good_prime(p)) continue;
    const auto pred = split_predicates(k, p);
    observed.push_back({p, pred.splits_completely, pred.has_degree_one_factor});
  }

  GaloisFingerprint fp;
  fp.bound = bound;
  fp.primes_used = observed.size();
  for (u64 m = 2; m <= m_max; m += 2) {
    if (n % euler_phi(m) != 0) continue;
    const bool consistent = std::all_of(observed.begin(), observed.end(), [&](const Observation& o) {
      return !o.degree_one || m % o.p == 0 || o.p % m == 1;
    });
    if (consistent) fp.rou_order = m;
  }

  if (n % 2 == 0) {
    std::vector<long> ds;
    for (long d = -d_max; d <= d_max; ++d) {
      if (d == 0 || d == 1) continue;
      if (d != -1 && !is_squarefree(static_cast<u64>(d < 0 ? -d : d))) continue;
      ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end(), [](long a, long b) {
      const long aa = a < 0 ? -a : a;
      const long bb = b < 0 ? -b : b;
      return aa != bb ? aa < bb : a > b;
    });
    for (long d : ds) {
      const bool contained = std::all_of(observed.begin(), observed.end(), [&](const Observation& o) {
        if (!o.splits_completely || o.p == 2 || (d % static_cast<long>(o.p)) == 0) return true;
        return legendre(d, o.p) == 1;
      });
      if (contained) fp.contained_catalog_fields.push_back({CatalogField::Kind::Quadratic, d});
    }
  }
  for (u64 m = 3; m <= m_max; ++m) {
    const u64 phi = euler_phi(m);
    if (m % 4 == 2 || phi <= 2 || n % phi != 0) continue;
    const bool contained = std::all_of(observed.begin(), observed.end(), [&](const Observation& o) {
      return !o.splits_completely || m % o.p == 0 || o.p % m == 1;
    });
    if (contained) fp.contained_catalog_fields.push_back({CatalogField::Kind::Cyclotomic, static_cast<long>(m)});
  }
  return fp;
}

}  // namespace brauerq
