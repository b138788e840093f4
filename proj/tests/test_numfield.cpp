#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "brauerq/error.hpp"
#include "brauerq/numfield.hpp"
#include "oracles/naive_modp.hpp"

using namespace brauerq;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

std::vector<std::pair<int, int>> pairs_of(const SplittingType& t) {
  std::vector<std::pair<int, int>> out;
  for (const auto& pr : t.sorted()) out.emplace_back(pr.e, pr.f);
  return out;
}

using Pairs = std::vector<std::pair<int, int>>;

// Euler's criterion, for the quadratic-field oracle.
int legendre(long a, u64 p) {
  long r = a % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  if (r == 0) return 0;
  return oracle::power(static_cast<u64>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

TEST_SUITE("numfield") {

TEST_CASE("build_field examples") {
  const NumberField qi = build_field("x^2+1");
  CHECK(qi.degree() == 2);
  CHECK(qi.signature() == Signature{0, 1});

  const NumberField k1 = build_field("x^8+6561");
  CHECK(k1.defining_poly().to_string() == "x^8+1");
  CHECK(k1.reduction_factor() == 3);
  CHECK(k1.input_poly().to_string() == "x^8+6561");
  CHECK(k1.degree() == 8);
  CHECK(k1.signature() == Signature{0, 4});

  const NumberField k2 = build_field("x^8+104976");
  CHECK(k2.defining_poly().to_string() == "x^8+16");
  CHECK(k2.signature() == Signature{0, 4});

  const NumberField e48 = build_field("x^8-48");
  CHECK(e48.signature() == Signature{2, 3});
  CHECK(e48.reduction_factor() == 1);
  CHECK(signature(build_field("x^8-3")) == Signature{2, 3});
}

TEST_CASE("generator reduction factor") {
  CHECK(generator_reduction_factor(IntPoly::parse("x^8+6561")) == 3);
  CHECK(generator_reduction_factor(IntPoly::parse("x^2+12")) == 2);
  CHECK(generator_reduction_factor(IntPoly::parse("x^3+8")) == 2);
  CHECK(generator_reduction_factor(IntPoly::parse("x^2+x+1")) == 1);
  CHECK(generator_reduction_factor(IntPoly::parse("x^4-48")) == 2);
  // large prime power beyond trial division
  CHECK(generator_reduction_factor(IntPoly::parse("x^2-2000012000018")) == 1000003);
}

TEST_CASE("irreducibility certificates and failures") {
  using M = IrreducibilityEvidence::Method;
  CHECK(build_field("x^2+1").irreducibility().method == M::IrreducibleModPrime);
  CHECK(build_field("x^8+1").irreducibility().method == M::BinomialCriterion);
  CHECK(build_field("x").irreducibility().method == M::Linear);
  CHECK(build_field("x^6+3").irreducibility().method == M::DegreePattern);
  // Z/2 x Z/2 Galois group: reducible modulo every prime, no pattern obstruction
  CHECK(build_field("x^4-10*x^2+1").irreducibility().method == M::FactorSearch);
  CHECK(build_field("x^4-2*x^2+9").irreducibility().method == M::FactorSearch);

  CHECK(kind_of([] { build_field("x^2-1"); }) == ErrorKind::Reducible);
  CHECK(kind_of([] { build_field("x^4+4"); }) == ErrorKind::Reducible);
  CHECK(kind_of([] { build_field("x^4-2*x^2+1"); }) == ErrorKind::Reducible);
  CHECK(kind_of([] { build_field("x^3-2*x^2+x-2"); }) == ErrorKind::Reducible);
  CHECK(kind_of([] { build_field("x^4+x^2+1"); }) == ErrorKind::Reducible);
  CHECK(kind_of([] { build_field("2*x^2+1"); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { build_field("7"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("products without rational roots are reducible") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    auto random_factor = [&](int degree) {
      std::vector<mpz_class> c;
      for (int i = 0; i < degree; ++i) c.emplace_back(coeff(rng));
      if (c[0] == 0) c[0] = 5;
      c.emplace_back(1);
      return IntPoly(std::move(c));
    };
    const IntPoly f = random_factor(2 + trial % 3) * random_factor(2 + trial % 4);
    CAPTURE(f.to_string());
    CHECK(kind_of([&] { build_field(f); }) == ErrorKind::Reducible);
  }
}

TEST_CASE("splitting_type examples") {
  const NumberField qi = build_field("x^2+1");
  CHECK(pairs_of(splitting_type(qi, 5)) == Pairs{{1, 1}, {1, 1}});
  CHECK(pairs_of(splitting_type(qi, 2)) == Pairs{{2, 1}});
  CHECK(pairs_of(splitting_type(qi, 7)) == Pairs{{1, 2}});
  const NumberField z16 = build_field("x^8+1");
  CHECK(pairs_of(splitting_type(z16, 3)) == Pairs{{1, 4}, {1, 4}});
  CHECK(pairs_of(splitting_type(z16, 2)) == Pairs{{8, 1}});
  CHECK(pairs_of(splitting_type(build_field("x^8-3"), 2)) == Pairs{{8, 1}});
  CHECK(pairs_of(splitting_type(build_field("x^8-3"), 3)) == Pairs{{8, 1}});
  CHECK(pairs_of(splitting_type(build_field("x^2+5"), 5)) == Pairs{{2, 1}});
  CHECK(kind_of([] { splitting_type(build_field("x^8-48"), 2); }) == ErrorKind::IndexPrime);
  CHECK_FALSE(try_splitting_type(build_field("x^8-48"), 2).has_value());
  // x^2+3 has index 2 in the ring of integers of Q(sqrt(-3))
  CHECK(kind_of([] { splitting_type(build_field("x^2+3"), 2); }) == ErrorKind::IndexPrime);
  CHECK(kind_of([] { splitting_type(build_field("x^2+1"), 9); }) == ErrorKind::CompositeModulus);
}

TEST_CASE("inertia gcd and predicates") {
  const NumberField qi = build_field("x^2+1");
  const NumberField z16 = build_field("x^8+1");
  CHECK(inertia_gcd(qi, 5) == 1);
  CHECK(inertia_gcd(z16, 7) == 2);
  CHECK(inertia_gcd(z16, 17) == 1);
  CHECK(split_predicates(qi, 13) == SplitPredicates{true, true, true});
  CHECK(split_predicates(qi, 7) == SplitPredicates{false, false, true});
  CHECK(split_predicates(z16, 17) == SplitPredicates{true, true, true});
  CHECK(split_predicates(qi, 2) == SplitPredicates{false, true, false});
}

TEST_CASE("quadratic splitting matches the Legendre symbol") {
  for (long d : {-1L, -2L, -5L, 2L, 3L, -7L, 13L, -47L}) {
    const NumberField k = build_field(IntPoly{-d, 0, 1});
    for (u64 p : primes_up_to(500)) {
      if (p == 2 || d % static_cast<long>(p) == 0) continue;
      const auto t = splitting_type(k, p);
      CAPTURE(d);
      CAPTURE(p);
      if (legendre(d, p) == 1) CHECK(pairs_of(t) == Pairs{{1, 1}, {1, 1}});
      else CHECK(pairs_of(t) == Pairs{{1, 2}});
    }
  }
}

TEST_CASE("cyclotomic splitting follows the order of p") {
  const NumberField z16 = build_field("x^8+1");
  for (u64 p : primes_up_to(2000)) {
    if (p == 2) continue;
    int order = 1;
    u64 v = p % 16;
    while (v != 1) {
      v = v * p % 16;
      ++order;
    }
    const auto t = splitting_type(z16, p);
    CAPTURE(p);
    CHECK(t.uniform());
    CHECK(t.pairs.front().f == order);
    CHECK(static_cast<int>(t.pairs.size()) == 8 / order);
  }
}

TEST_CASE("sum of e*f is the degree") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-40, 40);
  int fields = 0;
  while (fields < 40) {
    const int n = 2 + fields % 6;
    std::vector<mpz_class> c;
    for (int i = 0; i < n; ++i) c.emplace_back(coeff(rng));
    c.emplace_back(1);
    std::optional<NumberField> k;
    try {
      k = build_field(IntPoly(std::move(c)));
    } catch (const Error&) {
      continue;
    }
    ++fields;
    for (u64 p : primes_up_to(300)) {
      auto t = try_splitting_type(*k, p);
      if (!t) continue;
      CHECK(t->degree_sum() == n);
      if (k->is_good_prime(p)) CHECK(split_predicates(*k, p).unramified);
      const auto pr = split_predicates(*k, p);
      if (pr.splits_completely) CHECK(pr.has_degree_one_factor);
      if (pr.has_degree_one_factor) CHECK(inertia_gcd(*k, p) == 1);
      for (const auto& sp : t->pairs) CHECK(sp.f % static_cast<int>(inertia_gcd(*k, p)) == 0);
    }
  }
}

TEST_CASE("generator reduction preserves splitting at common good primes") {
  for (const char* text : {"x^8+6561", "x^2+12", "x^4-48", "x^3+16"}) {
    const IntPoly input = IntPoly::parse(text);
    const NumberField k = build_field(input);
    const mpz_class d_input = discriminant(input);
    std::mt19937_64 rng(1);
    for (u64 p : primes_up_to(400)) {
      if (!k.is_good_prime(p) || mpz_divisible_ui_p(d_input.get_mpz_t(), p) != 0) continue;
      auto raw = factor_mod_p(input, PrimeModulus(p), rng);
      std::vector<SplitPair> pairs;
      for (const auto& f : raw) pairs.push_back({1, f.factor.degree()});
      CHECK(same_multiset(SplittingType{p, pairs}, splitting_type(k, p)));
    }
  }
}

TEST_CASE("places") {
  const NumberField k = build_field("x^8-3");
  CHECK(places_over(k, 7).size() == 4);
  CHECK(real_places(k).size() == 2);
  CHECK_NOTHROW(validate_place(k, Place::finite(7, 3)));
  CHECK(kind_of([&] { validate_place(k, Place::finite(7, 4)); }) == ErrorKind::BadPlace);
  CHECK(kind_of([&] { validate_place(k, Place::finite(8, 0)); }) == ErrorKind::BadPlace);
  CHECK(kind_of([&] { validate_place(k, Place::real(2)); }) == ErrorKind::BadPlace);
  CHECK_NOTHROW(validate_place(k, Place::complex(2)));
  CHECK(kind_of([&] { validate_place(k, Place::complex(3)); }) == ErrorKind::BadPlace);
  CHECK(kind_of([] { validate_place(build_field("x^8-48"), Place::finite(2, 0)); }) == ErrorKind::BadPlace);
  CHECK(local_degree(k, Place::finite(2, 0)) == 8);
  CHECK(Place::parse("7") == Place::finite(7, 0));
  CHECK(Place::parse("13.1") == Place::finite(13, 1));
  CHECK(Place::parse("inf") == Place::real(0));
  CHECK(Place::parse("c2") == Place::complex(2));
  CHECK(Place::finite(13, 1).to_string() == "13.1");
  CHECK(kind_of([] { Place::parse("7.x"); }) == ErrorKind::ParseError);
}

TEST_CASE("split-set containment") {
  const NumberField z16 = build_field("x^8+1");
  const NumberField qi = build_field("x^2+1");
  const NumberField q5 = build_field("x^2+5");
  auto r1 = split_set_contained(z16, qi, 10000);
  CHECK(r1.holds_up_to_bound);
  CHECK(r1.exceptions.empty());
  auto r2 = split_set_contained(qi, q5, 10000);
  CHECK_FALSE(r2.holds_up_to_bound);
  CHECK(r2.exceptions.front() == 13);
  CHECK(split_set_contained(q5, q5, 1000).holds_up_to_bound);
  CHECK(kind_of([&] { split_set_contained(qi, qi, 50); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("arithmetically equivalent pair agrees at good primes") {
  const NumberField a = build_field("x^8-3");
  const NumberField b = build_field("x^8-48");
  auto types = compare_splitting_types(a, b, 2000);
  CHECK(types.holds);
  CHECK(std::find(types.excluded_primes.begin(), types.excluded_primes.end(), 2) != types.excluded_primes.end());
  CHECK(compare_inertia_gcds(a, b, 2000).holds);
  CHECK_FALSE(compare_splitting_types(a, build_field("x^8-5"), 200).holds);
}

TEST_CASE("galois fingerprint") {
  auto qi = galois_fingerprint(build_field("x^2+1"), 2000);
  CHECK(qi.rou_order == 4);
  CHECK(std::find(qi.contained_catalog_fields.begin(), qi.contained_catalog_fields.end(),
                  CatalogField{CatalogField::Kind::Quadratic, -1}) != qi.contained_catalog_fields.end());
  CHECK(galois_fingerprint(build_field("x^8-3"), 2000).rou_order == 2);
  auto z = galois_fingerprint(build_field("x^8+1"), 2000);
  CHECK(z.rou_order == 16);
  std::vector<std::string> names;
  for (const auto& c : z.contained_catalog_fields) names.push_back(c.name());
  for (const char* want : {"Q(sqrt(2))", "Q(i)", "Q(sqrt(-2))", "Q(zeta_8)", "Q(zeta_16)"}) {
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  }
  CHECK(names.size() == 5);
  CHECK(kind_of([] { galois_fingerprint(build_field("x^2+1"), 500); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("uniform splitting separates Galois and non-Galois fields") {
  CHECK(uniform_splitting_evidence(build_field("x^8+1"), 3000).uniform);
  CHECK(uniform_splitting_evidence(build_field("x^2+5"), 3000).uniform);
  CHECK_FALSE(uniform_splitting_evidence(build_field("x^8-3"), 3000).uniform);
  CHECK_FALSE(uniform_splitting_evidence(build_field("x^3-2"), 3000).uniform);
}

TEST_CASE("trusted flags") {
  auto f = TrustedFlags::parse("narrow_class_number_one, claimed_only_totally_real_subfield_is_Q");
  CHECK(f.narrow_class_number_one);
  CHECK(f.only_totally_real_subfield_is_q);
  CHECK_FALSE(f.primitive);
  CHECK(f.names() == std::vector<std::string>{"claimed_narrow_class_number_one", "claimed_only_totally_real_subfield_is_Q"});
  CHECK(kind_of([] { TrustedFlags::parse("bogus"); }) == ErrorKind::ParseError);
}

TEST_CASE("splitting cache persistence") {
  const auto dir = std::filesystem::temp_directory_path() / "brauerq_cache_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "splitting.cache";

  auto cache = std::make_shared<SplittingCache>();
  const NumberField k = build_field("x^8-3", FieldOptions{{}, cache});
  std::vector<SplittingType> first;
  for (u64 p : primes_up_to(200)) first.push_back(splitting_type(k, p));
  cache->save(path);

  auto reloaded = std::make_shared<SplittingCache>();
  CHECK(reloaded->load(path) == first.size());
  const NumberField k2 = build_field("x^8-3", FieldOptions{{}, reloaded});
  std::size_t i = 0;
  for (u64 p : primes_up_to(200)) CHECK(splitting_type(k2, p) == first[i++]);
  CHECK(reloaded->hits() == first.size());
  CHECK(reloaded->misses() == 0);

  // malformed lines are skipped
  {
    std::ofstream out(path, std::ios::app);
    out << "garbage line\n" << k.polyhash() << " 3 0,1\n";
  }
  SplittingCache third;
  CHECK(third.load(path) == first.size());
  std::filesystem::remove_all(dir);

  auto rec = SplittingCache::parse_record("abc 7 1,2;1,2");
  REQUIRE(rec.has_value());
  CHECK(rec->second.to_string() == "1,2;1,2");
  CHECK_FALSE(SplittingCache::parse_record("abc 7 1,2;x").has_value());
}

TEST_CASE("polyhash is stable") {
  CHECK(poly_hash(IntPoly::parse("x^8+1")) == build_field("x^8+6561").polyhash());
  CHECK(poly_hash(IntPoly::parse("x^8+1")).size() == 16);
  CHECK(poly_hash(IntPoly::parse("x^8+1")) != poly_hash(IntPoly::parse("x^8+16")));
}

}  // TEST_SUITE
