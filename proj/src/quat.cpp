#include "brauerq/quat.hpp"

#include <algorithm>
#include <stdexcept>

#include "brauerq/error.hpp"

namespace brauerq {

std::vector<u64> QuaternionAlgebra::finite_primes() const {
  std::vector<u64> out;
  for (const auto& place : ram_) {
    if (place.is_finite() && (out.empty() || out.back() != place.p)) out.push_back(place.p);
  }
  return out;
}

std::size_t QuaternionAlgebra::real_ramified() const {
  return static_cast<std::size_t>(std::count_if(ram_.begin(), ram_.end(), [](const Place& pl) { return pl.is_real(); }));
}

std::string QuaternionAlgebra::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& place : ram_) {
    if (!first) out += ",";
    first = false;
    if (field_.is_rationals()) {
      out += place.is_real() ? "inf" : std::to_string(place.p);
    } else {
      out += place.to_string();
    }
  }
  return out + "}";
}

QuaternionAlgebra quat_make(const NumberField& k, const std::vector<Place>& places) {
  std::set<Place> ram;
  for (const auto& place : places) {
    if (place.is_complex()) throw Error(ErrorKind::ComplexRamification, "complex place " + place.to_string() + " cannot ramify");
    validate_place(k, place);
    if (!ram.insert(place).second) throw Error(ErrorKind::BadPlace, "duplicate place " + place.to_string());
  }
  if (ram.size() % 2 != 0) {
    throw Error(ErrorKind::OddRamification, "ramification set has odd size " + std::to_string(ram.size()));
  }
  return QuaternionAlgebra(k, std::move(ram));
}

QuaternionAlgebra rational_quat(const std::vector<u64>& primes, bool ramified_at_infinity, const FieldOptions& options) {
  std::vector<Place> places;
  for (u64 p : primes) places.push_back(Place::finite(p, 0));
  if (ramified_at_infinity) places.push_back(Place::real(0));
  return quat_make(rationals(options), places);
}

BrauerClass to_brauer(const QuaternionAlgebra& a) {
  std::vector<std::pair<Place, QmodZ>> assignments;
  for (const auto& place : a.ram()) assignments.emplace_back(place, QmodZ(1, 2));
  return make_class(a.field(), assignments);
}

QuaternionAlgebra base_change(const QuaternionAlgebra& b, const NumberField& k) {
  if (!b.field().is_rationals()) throw Error(ErrorKind::FieldMismatch, "base_change expects an algebra over Q");
  std::vector<Place> places;
  for (u64 p : b.finite_primes()) {
    const auto type = splitting_type(k, p);
    for (std::size_t i = 0; i < type.pairs.size(); ++i) {
      if ((type.pairs[i].e * type.pairs[i].f) % 2 == 1) places.push_back(Place::finite(p, i));
    }
  }
  if (b.real_ramified() > 0) {
    for (const auto& r : real_places(k)) places.push_back(r);
  }
  if (places.size() % 2 != 0) throw std::logic_error("base change produced odd ramification");
  return quat_make(k, places);
}

bool tensor_matches(const QuaternionAlgebra& b, const QuaternionAlgebra& a) {
  return base_change(b, a.field()).ram() == a.ram();
}

std::string to_string(PrimeVisibility v) {
  switch (v) {
    case PrimeVisibility::Visible: return "visible";
    case PrimeVisibility::Invisible: return "invisible";
    case PrimeVisibility::Excluded: return "excluded";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Matching spaces

bool MatchingSpace::contains(const std::vector<u64>& tokens) const {
  if (!feasible || tokens.size() % 2 != 0) return false;
  for (u64 t : forced) {
    if (!std::binary_search(tokens.begin(), tokens.end(), t)) return false;
  }
  for (u64 t : tokens) {
    if (!std::binary_search(forced.begin(), forced.end(), t) && !std::binary_search(free.begin(), free.end(), t)) {
      return false;
    }
  }
  return true;
}

mpz_class MatchingSpace::size() const {
  if (!feasible) return 0;
  if (free.empty()) return 1;
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, free.size() - 1);
  return out;
}

std::vector<u64> MatchingSpace::base_element() const {
  std::vector<u64> out = forced;
  if (out.size() % 2 == 1) {
    out.push_back(free.front());
    std::sort(out.begin(), out.end());
  }
  return out;
}

MatchingSpace matching_space(const QuaternionAlgebra& a, u64 bound, bool require_indefinite,
                             const std::vector<u64>& extra_excluded) {
  const NumberField& k = a.field();
  MatchingSpace space;
  space.bound = bound;
  space.require_indefinite = require_indefinite;
  space.feasible = true;
  auto fail = [&](std::string reason) {
    if (space.feasible) space.infeasible_reason = std::move(reason);
    space.feasible = false;
  };

  // Ramified places of A grouped by rational prime.
  std::map<u64, std::set<std::size_t>> ram_over;
  for (const auto& place : a.ram()) {
    if (place.is_finite()) ram_over[place.p].insert(place.index);
  }

  for (u64 p : primes_up_to(bound)) {
    const auto type = try_splitting_type(k, p);
    if (!type || std::binary_search(extra_excluded.begin(), extra_excluded.end(), p)) {
      space.classification[p] = PrimeVisibility::Excluded;
      space.excluded_primes.push_back(p);
      continue;
    }
    std::set<std::size_t> visible;
    for (std::size_t i = 0; i < type->pairs.size(); ++i) {
      if ((type->pairs[i].e * type->pairs[i].f) % 2 == 1) visible.insert(i);
    }
    const auto it = ram_over.find(p);
    const std::set<std::size_t> ramified = it == ram_over.end() ? std::set<std::size_t>{} : it->second;
    if (visible.empty()) {
      space.classification[p] = PrimeVisibility::Invisible;
      space.free.push_back(p);
    } else {
      space.classification[p] = PrimeVisibility::Visible;
      if (ramified == visible) {
        space.forced.push_back(p);
      } else if (!ramified.empty()) {
        fail("ramification above " + std::to_string(p) + " is not the odd-local-degree set");
      }
    }
  }
  for (const auto& [p, indices] : ram_over) {
    if (p > bound) fail("ramified place above " + std::to_string(p) + " lies beyond the bound");
    else if (space.classification[p] == PrimeVisibility::Excluded) fail("ramified place above excluded prime " + std::to_string(p));
    else if (space.classification[p] == PrimeVisibility::Invisible) fail("ramified place above " + std::to_string(p) + " has even local degree");
  }

  const auto r1 = static_cast<std::size_t>(k.signature().r1);
  const std::size_t real_ram = a.real_ramified();
  if (r1 == 0) {
    if (!require_indefinite) space.free.push_back(kInfinityToken);
  } else if (real_ram == r1) {
    if (require_indefinite) fail("all real places ramify, which needs B ramified at infinity");
    else space.forced.push_back(kInfinityToken);
  } else if (real_ram != 0) {
    fail("only some real places ramify");
  }

  if (space.free.size() == 1) {
    if (space.forced.size() % 2 == 1) space.forced.push_back(space.free.front());
    space.free.clear();
  }
  std::sort(space.forced.begin(), space.forced.end());
  if (space.free.empty() && space.forced.size() % 2 == 1) fail("parity: the forced primes have odd count");
  if (!space.feasible) {
    space.forced.clear();
    space.free.clear();
  }
  return space;
}

QuaternionAlgebra algebra_from_tokens(const std::vector<u64>& tokens, const FieldOptions& options) {
  std::vector<u64> primes;
  bool infinite = false;
  for (u64 t : tokens) {
    if (t == kInfinityToken) infinite = true;
    else primes.push_back(t);
  }
  return rational_quat(primes, infinite, options);
}

MatchingEnumeration enumerate_matching(const QuaternionAlgebra& a, u64 bound, bool require_indefinite,
                                       std::size_t max_ram, std::size_t max_listed) {
  MatchingEnumeration out{matching_space(a, bound, require_indefinite), {}, 0, false};
  const MatchingSpace& space = out.space;
  out.total = space.size();
  if (!space.feasible) return out;

  const FieldOptions options{{}, a.field().cache(), a.field().seed()};
  const std::size_t m = space.free.size();
  const std::size_t parity = space.forced.size() % 2;
  bool stopped = false;
  for (std::size_t size = parity; size <= m && !stopped; size += 2) {
    if (space.forced.size() + size > max_ram) break;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (out.matching.size() >= max_listed) {
        stopped = true;
        break;
      }
      std::vector<u64> tokens = space.forced;
      for (std::size_t i : idx) tokens.push_back(space.free[i]);
      std::sort(tokens.begin(), tokens.end());
      out.matching.push_back(algebra_from_tokens(tokens, options));
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.truncated = mpz_class(static_cast<unsigned long>(out.matching.size())) != out.total;
  return out;
}

// ---------------------------------------------------------------------------
// Distinguisher

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<u64> index_primes(const NumberField& k, u64 bound) {
  std::vector<u64> out;
  for (u64 p : primes_up_to(bound)) {
    if (!try_splitting_type(k, p)) out.push_back(p);
  }
  return out;
}

std::vector<u64> merge(std::vector<u64> a, const std::vector<u64>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

std::optional<DistinguisherTranscript> distinguisher_search(const QuaternionAlgebra& b0, const NumberField& k1,
                                                            const NumberField& k2, u64 bound) {
  if (!b0.field().is_rationals()) throw Error(ErrorKind::FieldMismatch, "B0 must be an algebra over Q");
  if (k1.degree() != k2.degree() || !is_power_of_two(k1.degree())) {
    throw Error(ErrorKind::HypothesisViolation, "both fields need the same 2-power degree, got " +
                                                    std::to_string(k1.degree()) + " and " + std::to_string(k2.degree()));
  }
  for (const NumberField* k : {&k1, &k2}) {
    const auto evidence = uniform_splitting_evidence(*k, bound);
    if (!evidence.uniform) {
      throw Error(ErrorKind::HypothesisViolation, k->defining_poly().to_string() + " splits non-uniformly at " +
                                                      std::to_string(evidence.nonuniform_primes.front()) +
                                                      ", so it is not Galois");
    }
  }

  const QuaternionAlgebra a1 = base_change(b0, k1);
  const QuaternionAlgebra a2 = base_change(b0, k2);
  const std::vector<u64> ram_f = b0.finite_primes();

  std::vector<u64> candidates;
  std::vector<bool> splits_in_k2;
  for (u64 p : primes_up_to(bound)) {
    if (std::binary_search(ram_f.begin(), ram_f.end(), p)) continue;
    if (!k1.is_good_prime(p) || !k2.is_good_prime(p)) continue;
    if (split_predicates(k1, p).splits_completely) continue;
    candidates.push_back(p);
    splits_in_k2.push_back(split_predicates(k2, p).splits_completely);
  }

  const FieldOptions options{{}, k1.cache(), k1.seed()};
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (!splits_in_k2[i] && !splits_in_k2[j]) continue;
      std::vector<u64> primes = merge(ram_f, {candidates[i], candidates[j]});
      const QuaternionAlgebra b = rational_quat(primes, b0.real_ramified() > 0, options);
      QuaternionAlgebra b_k1 = base_change(b, k1);
      QuaternionAlgebra b_k2 = base_change(b, k2);
      const bool m1 = b_k1.ram() == a1.ram();
      const bool m2 = b_k2.ram() == a2.ram();
      if (m1 && !m2) {
        return DistinguisherTranscript{candidates[i], candidates[j], b, a1, a2, std::move(b_k1), std::move(b_k2),
                                       m1, m2, candidates};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Comparison

MatchReport compare_matching(const QuaternionAlgebra& a1, const QuaternionAlgebra& a2, u64 bound,
                             bool require_indefinite) {
  const NumberField& k1 = a1.field();
  const NumberField& k2 = a2.field();
  const std::vector<u64> ex1 = index_primes(k1, bound);
  const std::vector<u64> ex2 = index_primes(k2, bound);
  const std::vector<u64> excluded = merge(ex1, ex2);

  const MatchingSpace s1 = matching_space(a1, bound, require_indefinite, excluded);
  const MatchingSpace s2 = matching_space(a2, bound, require_indefinite, excluded);

  MatchReport report;
  report.bound = bound;
  report.excluded_primes = excluded;
  report.require_indefinite = require_indefinite;

  std::vector<u64> universe;
  std::vector<u64> ramified_somewhere;
  for (u64 p : primes_up_to(bound)) {
    if (std::binary_search(excluded.begin(), excluded.end(), p)) continue;
    universe.push_back(p);
    if (!split_predicates(k1, p).unramified || !split_predicates(k2, p).unramified) ramified_somewhere.push_back(p);
  }
  report.primes_tested = universe.size();
  if (!require_indefinite) universe.push_back(kInfinityToken);

  const bool equal = (!s1.feasible && !s2.feasible) || (s1.feasible && s2.feasible && s1.forced == s2.forced && s1.free == s2.free);
  if (equal) return report;

  auto differs = [&](const std::vector<u64>& tokens) { return s1.contains(tokens) != s2.contains(tokens); };
  std::optional<std::vector<u64>> found;
  if (differs({})) found = std::vector<u64>{};

  if (!found) {
    auto ramified = [&](u64 t) {
      return std::binary_search(ramified_somewhere.begin(), ramified_somewhere.end(), t) ? 1 : 0;
    };
    for (int target = 0; target <= 2 && !found; ++target) {
      for (std::size_t i = 0; i < universe.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < universe.size() && !found; ++j) {
          if (ramified(universe[i]) + ramified(universe[j]) != target) continue;
          std::vector<u64> tokens{universe[i], universe[j]};
          if (differs(tokens)) found = tokens;
        }
      }
    }
  }
  if (!found) {
    // One space is not inside the other; a base point or a generator step shows it.
    for (const MatchingSpace* s : {&s1, &s2}) {
      if (found || !s->feasible) continue;
      const std::vector<u64> m0 = s->base_element();
      if (differs(m0)) {
        found = m0;
        break;
      }
      for (std::size_t i = 1; i < s->free.size() && !found; ++i) {
        std::vector<u64> step = m0;
        for (u64 t : {s->free[0], s->free[i]}) {
          auto it = std::lower_bound(step.begin(), step.end(), t);
          if (it != step.end() && *it == t) step.erase(it);
          else step.insert(it, t);
        }
        if (differs(step)) found = step;
      }
    }
  }
  if (!found) throw std::logic_error("matching spaces differ but no witness was found");

  const FieldOptions options{{}, k1.cache(), k1.seed()};
  QuaternionAlgebra witness = algebra_from_tokens(*found, options);
  report.witness_matches_first = tensor_matches(witness, a1);
  report.witness_matches_second = tensor_matches(witness, a2);
  if (report.witness_matches_first == report.witness_matches_second) {
    throw std::logic_error("witness " + witness.to_string() + " failed re-verification");
  }
  report.agree = false;
  report.witness = std::move(witness);
  return report;
}

MatchReport same_subalgebra_report(const QuaternionAlgebra& a1, const QuaternionAlgebra& a2, u64 bound) {
  return compare_matching(a1, a2, bound, false);
}

}  // namespace brauerq
