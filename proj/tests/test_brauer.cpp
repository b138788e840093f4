#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "brauerq/brauer.hpp"
#include "brauerq/error.hpp"
#include "brauerq/quat.hpp"
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

using Assignments = std::vector<std::pair<Place, QmodZ>>;

const NumberField& q() {
  static const NumberField k = rationals();
  return k;
}

BrauerClass hamilton() { return make_class(q(), {{Place::finite(2), QmodZ(1, 2)}, {Place::real(), QmodZ(1, 2)}}); }

// Random class over Q supported on primes from `pool`, with invariants of
// denominator dividing 12 (or exactly 1/2 when `quaternion`).
BrauerClass random_rational_class(std::mt19937_64& rng, const std::vector<u64>& pool, bool quaternion) {
  std::uniform_int_distribution<std::size_t> count(0, 4);
  std::uniform_int_distribution<long> numer(1, 11);
  std::bernoulli_distribution coin(0.5);
  std::vector<u64> primes = pool;
  std::shuffle(primes.begin(), primes.end(), rng);
  primes.resize(std::min(primes.size(), count(rng) + 1));

  Assignments out;
  mpq_class sum = 0;
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    const QmodZ v = quaternion ? QmodZ(1, 2) : QmodZ(numer(rng), 12);
    out.emplace_back(Place::finite(primes[i]), v);
    sum += v.value();
  }
  if (coin(rng)) {
    out.emplace_back(Place::real(), QmodZ(1, 2));
    sum += mpq_class(1, 2);
  }
  out.emplace_back(Place::finite(primes.back()), QmodZ(-sum));
  return make_class(q(), out);
}

// e*f of each place over a good prime p, by trial division mod p.
std::vector<int> oracle_local_degrees(const NumberField& k, u64 p) {
  static std::map<std::pair<std::string, u64>, std::vector<int>> memo;
  const auto key = std::make_pair(k.polyhash(), p);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  oracle::Poly f;
  for (const auto& c : k.defining_poly().coeffs()) f.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  std::vector<int> out;
  for (const auto& [g, m] : oracle::trial_factor(f, p)) {
    for (int i = 0; i < m; ++i) out.push_back(static_cast<int>(g.size()) - 1);
  }
  memo[key] = out;
  return out;
}

}  // namespace

TEST_SUITE("brauer") {

TEST_CASE("QmodZ normal form") {
  CHECK(QmodZ::parse("1/3").to_string() == "1/3");
  CHECK(QmodZ::parse("-1/2").to_string() == "1/2");
  CHECK(QmodZ::parse("5/4").to_string() == "1/4");
  CHECK(QmodZ::parse("3").to_string() == "0");
  CHECK(QmodZ::parse("-2/6") == QmodZ(2, 3));
  CHECK((QmodZ(1, 3) + QmodZ(2, 3)).is_zero());
  CHECK(mpz_class(4) * QmodZ(1, 6) == QmodZ(2, 3));
  CHECK(kind_of([] { QmodZ::parse("1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { QmodZ::parse("x"); }) == ErrorKind::ParseError);
}

TEST_CASE("make_class examples") {
  const BrauerClass h = hamilton();
  CHECK(h.support().size() == 2);
  CHECK(h.invariant(Place::finite(3)).is_zero());
  const BrauerClass c3 = make_class(q(), {{Place::finite(7), QmodZ(1, 3)}, {Place::finite(13), QmodZ(2, 3)}});
  CHECK(c3.support_primes() == std::vector<u64>{7, 13});
  CHECK(kind_of([] { make_class(q(), {{Place::finite(5), QmodZ(1, 2)}}); }) == ErrorKind::ReciprocityViolation);
  // zero entries dropped
  CHECK(make_class(q(), {{Place::finite(5), QmodZ(0, 1)}}).is_trivial());
}

TEST_CASE("make_class validation") {
  CHECK(kind_of([] {
          make_class(q(), {{Place::finite(7), QmodZ(1, 2)}, {Place::finite(7), QmodZ(1, 2)}});
        }) == ErrorKind::BadPlace);
  CHECK(kind_of([] {
          make_class(q(), {{Place::real(), QmodZ(1, 3)}, {Place::finite(7), QmodZ(2, 3)}});
        }) == ErrorKind::BadArchimedean);
  const NumberField qi = build_field("x^2+1");
  CHECK(kind_of([&] {
          make_class(qi, {{Place::complex(0), QmodZ(1, 2)}, {Place::finite(5, 0), QmodZ(1, 2)}});
        }) == ErrorKind::BadArchimedean);
  CHECK(kind_of([&] {
          make_class(qi, {{Place::finite(5, 2), QmodZ(1, 2)}, {Place::finite(5, 0), QmodZ(1, 2)}});
        }) == ErrorKind::BadPlace);
  CHECK(kind_of([] {
          make_class(q(), {{Place::finite(9), QmodZ(1, 2)}, {Place::finite(5), QmodZ(1, 2)}});
        }) == ErrorKind::BadPlace);
}

TEST_CASE("class_index examples") {
  CHECK(class_index(trivial_class(q())) == 1);
  CHECK(class_index(hamilton()) == 2);
  CHECK(class_index(make_class(q(), {{Place::finite(7), QmodZ(1, 3)}, {Place::finite(13), QmodZ(2, 3)}})) == 3);
  CHECK(class_index(make_class(q(), {{Place::finite(7), QmodZ(1, 4)}, {Place::finite(13), QmodZ(1, 6)},
                                     {Place::finite(5), QmodZ(7, 12)}})) == 12);
}

TEST_CASE("add") {
  const BrauerClass c = make_class(q(), {{Place::finite(7), QmodZ(1, 3)}, {Place::finite(13), QmodZ(2, 3)}});
  const BrauerClass neg = make_class(q(), {{Place::finite(7), QmodZ(2, 3)}, {Place::finite(13), QmodZ(1, 3)}});
  CHECK(add(c, neg).is_trivial());
  CHECK(add(hamilton(), hamilton()).is_trivial());
  CHECK(kind_of([] { add(hamilton(), trivial_class(build_field("x^2+1"))); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("index equals exponent") {
  std::mt19937_64 rng(404);
  const std::vector<u64> pool{3, 5, 7, 11, 13, 17, 19, 23};
  for (int trial = 0; trial < 100; ++trial) {
    const BrauerClass c = random_rational_class(rng, pool, false);
    BrauerClass acc = c;
    mpz_class order = 1;
    while (!acc.is_trivial()) {
      acc = add(acc, c);
      ++order;
    }
    CHECK(class_index(c) == order);
  }
}

TEST_CASE("restrict_from_Q examples") {
  const NumberField qi = build_field("x^2+1");
  CHECK(restrict_from_Q(hamilton(), qi).is_trivial());
  CHECK(restrict_from_Q(trivial_class(q()), build_field("x^8-3")).is_trivial());

  const BrauerClass c3 = make_class(q(), {{Place::finite(7), QmodZ(1, 3)}, {Place::finite(13), QmodZ(2, 3)}});
  const BrauerClass r = restrict_from_Q(c3, qi);
  CHECK(r.support().size() == 3);
  CHECK(r.invariant(Place::finite(7, 0)) == QmodZ(2, 3));
  CHECK(r.invariant(Place::finite(13, 0)) == QmodZ(2, 3));
  CHECK(r.invariant(Place::finite(13, 1)) == QmodZ(2, 3));

  // a totally real field keeps the infinite half at every real place
  const BrauerClass hr = restrict_from_Q(hamilton(), build_field("x^2-3"));
  CHECK(hr.invariant(Place::real(0)) == QmodZ(1, 2));
  CHECK(hr.invariant(Place::real(1)) == QmodZ(1, 2));

  CHECK(kind_of([&] { restrict_from_Q(r, qi); }) == ErrorKind::FieldMismatch);
  const BrauerClass at2 = make_class(q(), {{Place::finite(2), QmodZ(1, 2)}, {Place::finite(3), QmodZ(1, 2)}});
  CHECK(kind_of([&] { restrict_from_Q(at2, build_field("x^8-48")); }) == ErrorKind::IndexPrime);
}

TEST_CASE("restrict_from_Q to Q is the identity") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const BrauerClass c = random_rational_class(rng, {2, 3, 5, 7, 11}, false);
    CHECK(classes_equal(restrict_from_Q(c, q()), c, false));
  }
}

TEST_CASE("restriction against local degrees from trial division") {
  const std::vector<std::string> catalog{"x^2+1", "x^2+5", "x^2-2", "x^3-2", "x^4-2", "x^4+1", "x^8+1", "x^8-3", "x^6+3"};
  std::mt19937_64 rng(77);
  for (const auto& text : catalog) {
    const NumberField k = build_field(text);
    std::vector<u64> pool;
    for (u64 p : {3, 5, 7, 11, 13}) {
      if (k.is_good_prime(p)) pool.push_back(p);
    }
    for (int trial = 0; trial < 20; ++trial) {
      const bool quaternion = trial % 2 == 0;
      const BrauerClass c = random_rational_class(rng, pool, quaternion);
      const BrauerClass r = restrict_from_Q(c, k);
      CAPTURE(text);
      CHECK(class_index(c) % class_index(r) == 0);

      mpq_class total = 0;
      for (const auto& [place, value] : r.support()) total += value.value();
      CHECK(total.get_den() == 1);

      for (u64 p : c.support_primes()) {
        const auto degrees = oracle_local_degrees(k, p);
        // oracle factors and library places share the canonical order
        for (std::size_t i = 0; i < degrees.size(); ++i) {
          CHECK(r.invariant(Place::finite(p, i)) == mpz_class(degrees[i]) * c.invariant(Place::finite(p)));
        }
      }
      if (quaternion) {
        for (const auto& [place, value] : r.support()) CHECK(value.is_half());
      }
    }
  }
}

TEST_CASE("restrict_relative examples") {
  const NumberField f = build_field("x^2-2");
  const NumberField l = build_field("x^8+1");
  const BrauerClass c = make_class(f, {{Place::finite(7, 0), QmodZ(1, 2)}, {Place::finite(23, 0), QmodZ(1, 2)}});
  CHECK(restrict_relative(c, l, 1000).is_trivial());
  CHECK(restrict_relative(trivial_class(f), l, 1000).is_trivial());
  CHECK(kind_of([&] { restrict_relative(c, build_field("x^8-3"), 1000); }) == ErrorKind::NonUniformSplitting);
  CHECK(kind_of([&] { restrict_relative(c, build_field("x^3-x^2-2*x+1"), 1000); }) == ErrorKind::NonIntegralRelativeDegree);

  const BrauerClass c3 = make_class(q(), {{Place::finite(7), QmodZ(1, 3)}, {Place::finite(13), QmodZ(2, 3)}});
  CHECK(classes_equal(restrict_relative(c3, l, 1000), restrict_from_Q(c3, l), false));
}

TEST_CASE("restriction composes along Q in Q(sqrt 2) in Q(zeta_16)") {
  const NumberField f = build_field("x^2-2");
  const NumberField l = build_field("x^8+1");
  std::mt19937_64 rng(5);
  const std::vector<u64> pool{3, 5, 7, 11, 13, 17, 23, 31, 41, 47};
  for (int trial = 0; trial < 40; ++trial) {
    const BrauerClass c = random_rational_class(rng, pool, trial % 3 == 0);
    const BrauerClass two_step = restrict_relative(restrict_from_Q(c, f), l, 1000);
    const BrauerClass direct = restrict_from_Q(c, l);
    CHECK(classes_equal(two_step, direct, true));
  }
}

TEST_CASE("transport between arithmetically equivalent fields") {
  const NumberField k1 = build_field("x^8-3");
  const NumberField k2 = build_field("x^8-48");
  CHECK(transport_phi(trivial_class(k1), k2, 1000).is_trivial());

  std::vector<u64> single;  // odd good primes with one place above them
  std::vector<u64> split;   // primes with two places of equal (e, f)
  for (u64 p : primes_up_to(100)) {
    if (p <= 3) continue;
    const auto t = splitting_type(k1, p);
    if (t.pairs.size() == 1) single.push_back(p);
    const auto s = t.sorted();
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] == s[i - 1] && (split.empty() || split.back() != p)) split.push_back(p);
    }
  }
  REQUIRE(single.size() >= 2);
  REQUIRE(!split.empty());

  const BrauerClass c = make_class(k1, {{Place::finite(single[0]), QmodZ(1, 2)}, {Place::finite(single[1]), QmodZ(1, 2)}});
  const BrauerClass t = transport_phi(c, k2, 1000);
  CHECK(t.support().size() == 2);
  CHECK(t.invariant(Place::finite(single[0])) == QmodZ(1, 2));
  CHECK(t.invariant(Place::finite(single[1])) == QmodZ(1, 2));
  CHECK(class_index(t) == class_index(c));

  // unequal values on two places with the same (e, f)
  const auto type = splitting_type(k1, split[0]);
  std::size_t a = 0, b = 1;
  for (std::size_t i = 0; i < type.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < type.pairs.size(); ++j) {
      if (type.pairs[i] == type.pairs[j]) {
        a = i;
        b = j;
      }
    }
  }
  (void)b;
  const BrauerClass amb = make_class(k1, {{Place::finite(split[0], a), QmodZ(1, 2)}, {Place::finite(single[0]), QmodZ(1, 2)}});
  CHECK(kind_of([&] { transport_phi(amb, k2, 1000); }) == ErrorKind::AmbiguousTransport);

  CHECK(kind_of([] {
          transport_phi(trivial_class(build_field("x^2+1")), build_field("x^2+5"), 1000);
        }) == ErrorKind::NotSplittingEquivalent);
}

TEST_CASE("transport preserves index and commutes with restriction") {
  const NumberField k1 = build_field("x^8-3");
  const NumberField k2 = build_field("x^8-48");
  std::mt19937_64 rng(8);
  const std::vector<u64> pool{5, 7, 11, 13, 17, 19, 23, 29};
  for (int trial = 0; trial < 60; ++trial) {
    const BrauerClass c0 = random_rational_class(rng, pool, false);
    const BrauerClass c = restrict_from_Q(c0, k1);
    const BrauerClass t = transport_phi(c, k2, 500);
    CHECK(class_index(t) == class_index(c));
    CHECK(t.is_trivial() == c.is_trivial());
    CHECK(classes_equal(t, restrict_from_Q(c0, k2), true));
    CHECK(classes_equal(transport_phi(t, k1, 500), c, true));
  }
}

TEST_CASE("classes_equal") {
  CHECK(classes_equal(hamilton(), hamilton(), false));
  const BrauerClass other = make_class(q(), {{Place::finite(3), QmodZ(1, 2)}, {Place::real(), QmodZ(1, 2)}});
  CHECK_FALSE(classes_equal(hamilton(), other, false));
  CHECK_FALSE(classes_equal(hamilton(), other, true));

  const NumberField qi = build_field("x^2+1");
  const BrauerClass a = make_class(qi, {{Place::finite(5, 0), QmodZ(1, 3)}, {Place::finite(5, 1), QmodZ(2, 3)}});
  const BrauerClass b = make_class(qi, {{Place::finite(5, 0), QmodZ(2, 3)}, {Place::finite(5, 1), QmodZ(1, 3)}});
  CHECK_FALSE(classes_equal(a, b, false));
  CHECK(classes_equal(a, b, true));
  CHECK(kind_of([&] { classes_equal(a, hamilton(), false); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("quaternion view agrees with restriction") {
  const BrauerClass via_quat = to_brauer(rational_quat({2}, true));
  CHECK(classes_equal(via_quat, hamilton(), false));
}

}  // TEST_SUITE
