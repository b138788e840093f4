// Acceptance run: one PASS/FAIL line per criterion, with the measured time
// next to its limit. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "brauerq/error.hpp"
#include "brauerq/geo.hpp"
#include "oracles/naive_modp.hpp"
#include "oracles/rational_oracles.hpp"

using namespace brauerq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %d. %s (%.3f s", pass ? "PASS" : "FAIL", number, title, secs);
  if (limit_seconds > 0) std::printf(", limit %.0f s", limit_seconds);
  std::printf(")");
  if (!o.ok) std::printf(": %s", o.detail.c_str());
  else if (!in_time) std::printf(": over time limit");
  std::printf("\n");
  std::fflush(stdout);
}

FieldOptions surface_options() {
  FieldOptions o;
  o.flags.narrow_class_number_one = true;
  o.flags.only_totally_real_subfield_is_q = true;
  return o;
}

bool contains_text(const std::vector<std::string>& lines, const std::string& needle) {
  return std::any_of(lines.begin(), lines.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

IntPoly random_monic(std::mt19937_64& rng, int degree, long range) {
  std::uniform_int_distribution<long> coeff(-range, range);
  std::vector<mpz_class> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(coeff(rng));
  c.emplace_back(1);
  return IntPoly(std::move(c));
}

}  // namespace

int main() {
  criterion(1, "signature and degree of x^8+6561 and x^8+16*6561", 1.0, [] {
    Outcome o;
    for (const char* poly : {"x^8+6561", "x^8+104976"}) {
      const NumberField k = build_field(poly);
      o.require(k.degree() == 8, std::string(poly) + ": degree " + std::to_string(k.degree()));
      o.require(k.signature() == Signature{0, 4}, std::string(poly) + ": signature differs from (0,4)");
    }
    return o;
  });

  criterion(2, "preset audit: generator reduction and Galois discrepancy", 1.0, [] {
    Outcome o;
    const Preset& p = find_preset("paper-k1k2");
    const PresetAudit a = run_preset_audit(p, FieldOptions{}, 2000);
    const PresetAudit b = run_preset_audit(p, FieldOptions{}, 2000);
    o.require(a.first.reduced == "x^8+1" && a.first.reduction_factor == "3", "x^8+6561 not reduced to x^8+1");
    o.require(contains_text(a.discrepancies, "x^8+6561 = 3^8 * g(x/3) with g = x^8+1"), "reduction line missing");
    o.require(contains_text(a.discrepancies, "so it is Q(zeta_16)"), "Galois-field discrepancy missing");
    o.require(a.discrepancies == b.discrepancies, "audit not deterministic");
    return o;
  });

  criterion(3, "x^8-3 vs x^8-48: splitting types and inertia gcds up to 10^4", 60.0, [] {
    Outcome o;
    const NumberField a = build_field("x^8-3");
    const NumberField b = build_field("x^8-48");
    const auto types = compare_splitting_types(a, b, 10000);
    const auto gcds = compare_inertia_gcds(a, b, 10000);
    o.require(types.holds, "splitting types differ at " + (types.mismatches.empty() ? std::string("?") : std::to_string(types.mismatches.front())));
    o.require(gcds.holds, "inertia gcds differ");
    // every good prime <= 10^4 other than 2 and 3 was tested
    o.require(types.primes_tested + 2 == primes_up_to(10000).size(), "unexpected number of primes tested");
    o.require(types.excluded_primes == std::vector<u64>{2, 3}, "unexpected excluded primes");
    return o;
  });

  criterion(4, "restriction from Q vs quaternion base change, 500 fuzzed pairs", 30.0, [] {
    Outcome o;
    const std::vector<std::string> catalog{"x^2+1", "x^2+5", "x^2-2", "x^2-3", "x^3-2", "x^4-2", "x^4+1",
                                           "x^8+1", "x^8-3", "x^8-48", "x^6+3", "x^5-x+1"};
    std::vector<NumberField> fields;
    for (const auto& c : catalog) fields.push_back(build_field(c));
    std::mt19937_64 rng(2024);
    const auto pool = primes_up_to(60);
    for (int trial = 0; trial < 500; ++trial) {
      const NumberField& k = fields[static_cast<std::size_t>(trial) % fields.size()];
      std::vector<u64> primes;
      for (u64 p : pool) {
        if (rng() % 5 == 0 && try_splitting_type(k, p)) primes.push_back(p);
      }
      const bool inf = primes.size() % 2 != 0;
      const QuaternionAlgebra b = rational_quat(primes, inf);
      const BrauerClass r = restrict_from_Q(to_brauer(b), k);  // make_class validation included
      mpq_class total = 0;
      std::set<Place> half_support;
      for (const auto& [place, value] : r.support()) {
        total += value.value();
        o.require(value.is_half(), "restriction left the {0,1/2} values");
        half_support.insert(place);
      }
      o.require(total.get_den() == 1, "reciprocity fails after restriction");
      o.require(half_support == base_change(b, k).ram(), "support differs from base change for " + b.to_string() +
                                                             " over " + k.defining_poly().to_string());
    }
    return o;
  });

  criterion(5, "distinguisher for Q(i) and Q(sqrt(-5)) at bound 50", 1.0, [] {
    Outcome o;
    const NumberField qi = build_field("x^2+1");
    const NumberField q5 = build_field("x^2+5");
    const auto t = distinguisher_search(rational_quat({}, false), qi, q5, 50);
    o.require(t.has_value(), "no distinguisher found");
    if (!t) return o;
    o.require(t->b.to_string() == "{3,7}", "B = " + t->b.to_string());
    // independent re-check of the transcript
    o.require(base_change(t->b, qi).is_split(), "B tensor Q(i) is not split");
    o.require(base_change(t->b, q5).ram().size() == 4, "B tensor Q(sqrt(-5)) is not ramified at 4 places");
    o.require(t->matches_k1 && !t->matches_k2, "transcript verdicts wrong");
    return o;
  });

  criterion(6, "surface sets of x^8-3 and x^8-48 agree at 10^3; 64 algebras for x^8+1 at 20", 60.0, [] {
    Outcome o;
    const CommClass m1(quat_make(build_field("x^8-3", surface_options()), {}));
    const CommClass m2(quat_make(build_field("x^8-48", surface_options()), {}));
    const auto cmp = compare_surface_sets(m1, m2, 1000);
    o.require(cmp.match.agree, "surface sets differ, witness " + (cmp.match.witness ? cmp.match.witness->to_string() : std::string("?")));
    o.require(cmp.match.bound == 1000, "wrong bound in report");

    const auto e = enumerate_matching(quat_make(build_field("x^8+1"), {}), 20, true);
    o.require(e.matching.size() == 64 && e.total == 64 && !e.truncated, "enumeration size " + std::to_string(e.matching.size()));
    std::vector<u64> invisible;
    for (const auto& [p, v] : e.space.classification) {
      if (v == PrimeVisibility::Invisible) invisible.push_back(p);
    }
    o.require(invisible == std::vector<u64>{2, 3, 5, 7, 11, 13, 19}, "invisible set differs");
    for (const auto& b : e.matching) o.require(tensor_matches(b, quat_make(build_field("x^8+1"), {})), "listed algebra fails re-check");
    return o;
  });

  criterion(7, "distinct Q(sqrt(-d)), squarefree d <= 50: surface witness at 200", 120.0, [] {
    Outcome o;
    std::vector<long> ds;
    for (long d = 1; d <= 50; ++d) {
      if (is_squarefree(static_cast<u64>(d))) ds.push_back(d);
    }
    std::vector<CommClass> classes;
    for (long d : ds) classes.emplace_back(quat_make(build_field(IntPoly{d, 0, 1}, surface_options()), {}));
    int pairs = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        const auto cmp = compare_surface_sets(classes[i], classes[j], 200);
        ++pairs;
        o.require(!cmp.match.agree && cmp.match.witness.has_value(),
                  "no witness for d = " + std::to_string(ds[i]) + ", " + std::to_string(ds[j]));
        if (cmp.match.witness) {
          const bool m1 = tensor_matches(*cmp.match.witness, classes[i].algebra());
          const bool m2 = tensor_matches(*cmp.match.witness, classes[j].algebra());
          o.require(m1 != m2, "witness does not re-verify");
        }
      }
    }
    o.require(pairs == static_cast<int>(ds.size() * (ds.size() - 1) / 2), "pair count");
    return o;
  });

  criterion(8, "oracle suites: factorization, sum of e*f, Sturm vs bisection", 0, [] {
    Outcome o;
    std::mt19937_64 rng(8);
    std::mt19937_64 frng(9);
    const std::vector<u64> primes{2, 3, 5, 7, 11, 13, 101, 65537, 1000003, 2147483647};
    for (int trial = 0; trial < 10000; ++trial) {
      const u64 p = primes[static_cast<std::size_t>(trial) % primes.size()];
      const IntPoly f = random_monic(rng, 1 + trial % 12, 1000000);
      oracle::Poly reduced;
      for (const auto& c : f.coeffs()) reduced.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
      oracle::trim(reduced);
      oracle::Poly product{1};
      for (const auto& fac : factor_mod_p(f, PrimeModulus(p), frng)) {
        const oracle::Poly g(fac.factor.coeffs().begin(), fac.factor.coeffs().end());
        for (int m = 0; m < fac.multiplicity; ++m) product = oracle::mul(product, g, p);
      }
      o.require(product == reduced, "re-multiplication fails for " + f.to_string() + " mod " + std::to_string(p));
    }

    long splitting_calls = 0;
    std::mt19937_64 frng2(10);
    int fields = 0;
    while (fields < 60) {
      std::optional<NumberField> k;
      try {
        k = build_field(random_monic(frng2, 2 + fields % 7, 30));
      } catch (const Error&) {
        continue;
      }
      ++fields;
      for (u64 p : primes_up_to(500)) {
        const auto t = try_splitting_type(*k, p);
        if (!t) continue;
        ++splitting_calls;
        o.require(t->degree_sum() == k->degree(), "sum of e*f differs from n for " + k->defining_poly().to_string());
      }
    }
    o.require(splitting_calls > 0, "no splitting calls");

    std::mt19937_64 srng(11);
    int sturm = 0;
    while (sturm < 1000) {
      const IntPoly f = random_monic(srng, 3 + sturm % 2, 50);
      if (!is_squarefree(f)) continue;
      const oracle::ZPoly z(f.coeffs().begin(), f.coeffs().end());
      o.require(count_real_roots(f) == oracle::vca_real_roots(z), "Sturm count differs for " + f.to_string());
      ++sturm;
    }
    return o;
  });

  criterion(9, "index equals exponent on 100 fuzzed classes", 0, [] {
    Outcome o;
    std::mt19937_64 rng(9);
    const NumberField q = rationals();
    const auto pool = primes_up_to(100);
    std::uniform_int_distribution<long> den(2, 16);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::pair<Place, QmodZ>> inv;
      mpq_class sum = 0;
      std::vector<u64> chosen = pool;
      std::shuffle(chosen.begin(), chosen.end(), rng);
      const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const long d = den(rng);
        const QmodZ v(std::uniform_int_distribution<long>(1, d - 1)(rng), d);
        inv.emplace_back(Place::finite(chosen[i]), v);
        sum += v.value();
      }
      if (trial % 3 == 0) {
        inv.emplace_back(Place::real(), QmodZ(1, 2));
        sum += mpq_class(1, 2);
      }
      inv.emplace_back(Place::finite(chosen[n - 1]), QmodZ(-sum));
      const BrauerClass c = make_class(q, inv);
      BrauerClass acc = c;
      mpz_class order = 1;
      while (!acc.is_trivial()) {
        acc = add(acc, c);
        ++order;
      }
      o.require(class_index(c) == order, "index " + class_index(c).get_str() + " vs order " + order.get_str());
    }
    return o;
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
