#ifndef BRAUERQ_SPLITTING_CACHE_HPP
#define BRAUERQ_SPLITTING_CACHE_HPP

#include <atomic>
#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "brauerq/arith.hpp"

namespace brauerq {

struct SplitPair {
  int e = 1;  // ramification index
  int f = 1;  // inertia degree
  friend auto operator<=>(const SplitPair&, const SplitPair&) = default;
};

/// Factorization shape of a rational prime. `pairs[i]` belongs to the finite
/// place with index i, i.e. follows the canonical factor order mod p.
struct SplittingType {
  u64 p = 0;
  std::vector<SplitPair> pairs;

  /// The (e, f) multiset, sorted ascending.
  std::vector<SplitPair> sorted() const;
  int degree_sum() const;
  /// Every place has the same (e, f).
  bool uniform() const;
  std::string to_string() const;  // "e1,f1;e2,f2;..."

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

bool same_multiset(const SplittingType& a, const SplittingType& b);

/// Splitting results keyed by (polyhash, p). Reads take a shared lock,
/// writes an exclusive one. Index primes are remembered in memory only.
class SplittingCache {
 public:
  using Entry = std::optional<SplittingType>;  // nullopt marks an index prime

  std::optional<Entry> lookup(const std::string& polyhash, u64 p) const;
  void store(const std::string& polyhash, u64 p, Entry entry);

  std::size_t size() const;
  std::size_t hits() const noexcept { return hits_.load(); }
  std::size_t misses() const noexcept { return misses_.load(); }
  void clear();

  /// Reads `polyhash p e1,f1;e2,f2;...` records; malformed lines are skipped.
  /// Returns the number of records loaded. A missing file loads nothing.
  std::size_t load(const std::filesystem::path& path);
  /// Merges this cache into the file under an exclusive advisory lock.
  void save(const std::filesystem::path& path) const;

  static std::string format_record(const std::string& polyhash, const SplittingType& type);
  static std::optional<std::pair<std::string, SplittingType>> parse_record(const std::string& line);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::string, u64>, Entry> table_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

}  // namespace brauerq

#endif  // BRAUERQ_SPLITTING_CACHE_HPP
