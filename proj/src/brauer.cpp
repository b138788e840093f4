#include "brauerq/brauer.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>
#include <set>

#include "brauerq/error.hpp"

namespace brauerq {

QmodZ::QmodZ(const mpq_class& value) : v_(value) {
  v_.canonicalize();
  mpz_class floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  v_ -= floor_part;
}

QmodZ QmodZ::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty invariant");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+')) {
      throw Error(ErrorKind::ParseError, "bad invariant '" + s + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw Error(ErrorKind::ParseError, "bad invariant '" + s + "'");
  return QmodZ(q);
}

std::string QmodZ::to_string() const {
  if (v_ == 0) return "0";
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

QmodZ BrauerClass::invariant(const Place& place) const {
  auto it = support_.find(place);
  return it == support_.end() ? QmodZ() : it->second;
}

std::vector<u64> BrauerClass::support_primes() const {
  std::vector<u64> out;
  for (const auto& [place, value] : support_) {
    if (place.is_finite() && (out.empty() || out.back() != place.p)) out.push_back(place.p);
  }
  return out;
}

BrauerClass make_class(const NumberField& k, const std::vector<std::pair<Place, QmodZ>>& assignments) {
  BrauerClass::Support support;
  std::set<Place> seen;
  QmodZ total;
  for (const auto& [place, value] : assignments) {
    validate_place(k, place);
    if (!seen.insert(place).second) throw Error(ErrorKind::BadPlace, "duplicate place " + place.to_string());
    if (place.is_complex() && !value.is_zero()) {
      throw Error(ErrorKind::BadArchimedean, "complex place " + place.to_string() + " cannot carry an invariant");
    }
    if (place.is_real() && !value.is_zero() && !value.is_half()) {
      throw Error(ErrorKind::BadArchimedean, "real place " + place.to_string() + " has invariant " + value.to_string());
    }
    if (value.is_zero()) continue;
    support.emplace(place, value);
    total = total + value;
  }
  if (!total.is_zero()) {
    throw Error(ErrorKind::ReciprocityViolation, "local invariants sum to " + total.to_string() + ", not 0");
  }
  return BrauerClass(k, std::move(support));
}

BrauerClass trivial_class(const NumberField& k) { return make_class(k, {}); }

mpz_class class_index(const BrauerClass& c) {
  mpz_class index = 1;
  for (const auto& [place, value] : c.support()) index = lcm(index, value.denominator());
  return index;
}

namespace {

void require_same_field(const NumberField& a, const NumberField& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::FieldMismatch,
                a.defining_poly().to_string() + " and " + b.defining_poly().to_string() + " define different fields");
  }
}

}  // namespace

BrauerClass add(const BrauerClass& a, const BrauerClass& b) {
  require_same_field(a.field(), b.field());
  std::map<Place, QmodZ> sum(a.support().begin(), a.support().end());
  for (const auto& [place, value] : b.support()) sum[place] = sum[place] + value;
  return make_class(a.field(), {sum.begin(), sum.end()});
}

BrauerClass restrict_from_Q(const BrauerClass& c, const NumberField& k) {
  if (!c.field().is_rationals()) throw Error(ErrorKind::FieldMismatch, "restrict_from_Q needs a class over Q");
  std::vector<std::pair<Place, QmodZ>> out;
  for (const auto& [place, value] : c.support()) {
    if (place.is_real()) {
      for (const auto& r : real_places(k)) out.emplace_back(r, value);
      continue;
    }
    const auto type = splitting_type(k, place.p);
    for (std::size_t i = 0; i < type.pairs.size(); ++i) {
      const long local = static_cast<long>(type.pairs[i].e) * type.pairs[i].f;
      out.emplace_back(Place::finite(place.p, i), mpz_class(local) * value);
    }
  }
  return make_class(k, out);
}

BrauerClass restrict_relative(const BrauerClass& c, const NumberField& l, u64 bound) {
  const NumberField& f = c.field();
  if (f.is_rationals()) return restrict_from_Q(c, l);
  if (l.degree() % f.degree() != 0) {
    throw Error(ErrorKind::NonIntegralRelativeDegree,
                "[L:Q] = " + std::to_string(l.degree()) + " is not a multiple of [F:Q] = " + std::to_string(f.degree()));
  }
  const int rel_degree = l.degree() / f.degree();

  for (const NumberField* k : {&f, &l}) {
    const auto evidence = uniform_splitting_evidence(*k, bound);
    if (!evidence.uniform) {
      throw Error(ErrorKind::NonUniformSplitting, k->defining_poly().to_string() + " splits non-uniformly at " +
                                                      std::to_string(evidence.nonuniform_primes.front()));
    }
    const int r1 = k->signature().r1;
    if (r1 != 0 && r1 != k->degree()) {
      throw Error(ErrorKind::NonUniformSplitting, k->defining_poly().to_string() + " is neither totally real nor totally complex");
    }
  }

  std::vector<std::pair<Place, QmodZ>> out;
  for (u64 p : c.support_primes()) {
    const auto tf = splitting_type(f, p);
    const auto tl = splitting_type(l, p);
    if (!tf.uniform() || !tl.uniform()) {
      throw Error(ErrorKind::NonUniformSplitting, "splitting at " + std::to_string(p) + " is not uniform");
    }
    const int ef_f = tf.pairs.front().e * tf.pairs.front().f;
    const int ef_l = tl.pairs.front().e * tl.pairs.front().f;
    if (ef_l % ef_f != 0 || tl.pairs.size() % tf.pairs.size() != 0) {
      throw Error(ErrorKind::NonIntegralRelativeDegree, "local degrees at " + std::to_string(p) + " are incompatible");
    }
    const mpz_class local(ef_l / ef_f);
    const std::size_t block = tl.pairs.size() / tf.pairs.size();
    for (std::size_t j = 0; j < tf.pairs.size(); ++j) {
      const QmodZ value = c.invariant(Place::finite(p, j));
      if (value.is_zero()) continue;
      for (std::size_t i = 0; i < block; ++i) out.emplace_back(Place::finite(p, j * block + i), local * value);
    }
  }
  if (l.signature().r1 > 0) {
    for (int j = 0; j < f.signature().r1; ++j) {
      const QmodZ value = c.invariant(Place::real(static_cast<std::size_t>(j)));
      if (value.is_zero()) continue;
      for (int i = 0; i < rel_degree; ++i) out.emplace_back(Place::real(static_cast<std::size_t>(j * rel_degree + i)), value);
    }
  }
  return make_class(l, out);
}

BrauerClass transport_phi(const BrauerClass& c, const NumberField& k2, u64 bound) {
  const NumberField& k1 = c.field();
  if (k1.signature() != k2.signature()) throw Error(ErrorKind::NotSplittingEquivalent, "signatures differ");
  const auto sweep = compare_splitting_types(k1, k2, bound);
  if (!sweep.holds) {
    throw Error(ErrorKind::NotSplittingEquivalent,
                "splitting types differ at " + std::to_string(sweep.mismatches.front()));
  }

  std::vector<std::pair<Place, QmodZ>> out;
  for (u64 p : c.support_primes()) {
    const auto t1 = try_splitting_type(k1, p);
    const auto t2 = try_splitting_type(k2, p);
    if (!t1 || !t2 || !same_multiset(*t1, *t2)) {
      throw Error(ErrorKind::NotSplittingEquivalent, "splitting types at support prime " + std::to_string(p) + " differ or are undetermined");
    }
    std::map<SplitPair, std::vector<QmodZ>> groups;
    for (std::size_t i = 0; i < t1->pairs.size(); ++i) groups[t1->pairs[i]].push_back(c.invariant(Place::finite(p, i)));
    for (const auto& [pair, values] : groups) {
      if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end()) {
        throw Error(ErrorKind::AmbiguousTransport, "places over " + std::to_string(p) + " with (e,f) = (" +
                                                       std::to_string(pair.e) + "," + std::to_string(pair.f) +
                                                       ") carry different invariants");
      }
    }
    for (std::size_t i = 0; i < t2->pairs.size(); ++i) {
      const QmodZ& value = groups.at(t2->pairs[i]).front();
      if (!value.is_zero()) out.emplace_back(Place::finite(p, i), value);
    }
  }
  const int r1 = k1.signature().r1;
  if (r1 > 0) {
    const QmodZ first = c.invariant(Place::real(0));
    for (int i = 1; i < r1; ++i) {
      if (!(c.invariant(Place::real(static_cast<std::size_t>(i))) == first)) {
        throw Error(ErrorKind::AmbiguousTransport, "real places carry different invariants");
      }
    }
    if (!first.is_zero()) {
      for (const auto& r : real_places(k2)) out.emplace_back(r, first);
    }
  }
  return make_class(k2, out);
}

bool classes_equal(const BrauerClass& a, const BrauerClass& b, bool up_to_block_matching) {
  require_same_field(a.field(), b.field());
  if (!up_to_block_matching) return a.support() == b.support();

  // Block key: (p, e, f) for finite places, p = 0 for the real places.
  using Key = std::tuple<u64, int, int>;
  auto blocks = [](const BrauerClass& c) {
    std::map<Key, std::vector<QmodZ>> out;
    for (const auto& [place, value] : c.support()) {
      if (place.is_real()) {
        out[{0, 0, 0}].push_back(value);
        continue;
      }
      const auto pair = splitting_type(c.field(), place.p).pairs.at(place.index);
      out[{place.p, pair.e, pair.f}].push_back(value);
    }
    for (auto& [key, values] : out) std::sort(values.begin(), values.end());
    return out;
  };
  return blocks(a) == blocks(b);
}

}  // namespace brauerq
