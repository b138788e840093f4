#include "brauerq/splitting_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "brauerq/error.hpp"

namespace brauerq {

std::vector<SplitPair> SplittingType::sorted() const {
  std::vector<SplitPair> out = pairs;
  std::sort(out.begin(), out.end());
  return out;
}

int SplittingType::degree_sum() const {
  int sum = 0;
  for (const auto& pr : pairs) sum += pr.e * pr.f;
  return sum;
}

bool SplittingType::uniform() const {
  return std::all_of(pairs.begin(), pairs.end(), [&](const SplitPair& pr) { return pr == pairs.front(); });
}

std::string SplittingType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(pairs[i].e) + "," + std::to_string(pairs[i].f);
  }
  return out;
}

bool same_multiset(const SplittingType& a, const SplittingType& b) { return a.sorted() == b.sorted(); }

std::optional<SplittingCache::Entry> SplittingCache::lookup(const std::string& polyhash, u64 p) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find({polyhash, p});
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void SplittingCache::store(const std::string& polyhash, u64 p, Entry entry) {
  std::unique_lock lock(mutex_);
  table_.insert_or_assign({polyhash, p}, std::move(entry));
}

std::size_t SplittingCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void SplittingCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

std::string SplittingCache::format_record(const std::string& polyhash, const SplittingType& type) {
  return polyhash + " " + std::to_string(type.p) + " " + type.to_string();
}

std::optional<std::pair<std::string, SplittingType>> SplittingCache::parse_record(const std::string& line) {
  std::istringstream in(line);
  std::string hash;
  std::string pairs_text;
  u64 p = 0;
  if (!(in >> hash >> p >> pairs_text)) return std::nullopt;
  std::string rest;
  if (in >> rest) return std::nullopt;
  SplittingType type{p, {}};
  std::istringstream pairs_in(pairs_text);
  std::string item;
  while (std::getline(pairs_in, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
      std::size_t used_e = 0;
      std::size_t used_f = 0;
      const int e = std::stoi(item.substr(0, comma), &used_e);
      const int f = std::stoi(item.substr(comma + 1), &used_f);
      if (used_e != comma || used_f != item.size() - comma - 1 || e < 1 || f < 1) return std::nullopt;
      type.pairs.push_back({e, f});
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (type.pairs.empty()) return std::nullopt;
  return std::make_pair(hash, type);
}

namespace {

class FileLock {
 public:
  FileLock(const std::filesystem::path& path, int operation) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw Error(ErrorKind::InvalidArgument, "cannot open lock file " + path.string());
    if (::flock(fd_, operation) != 0) {
      ::close(fd_);
      throw Error(ErrorKind::InvalidArgument, "cannot lock " + path.string());
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }

 private:
  int fd_ = -1;
};

std::filesystem::path lock_path(const std::filesystem::path& path) {
  return std::filesystem::path(path.string() + ".lock");
}

}  // namespace

std::size_t SplittingCache::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return 0;
  FileLock lock(lock_path(path), LOCK_SH);
  std::ifstream in(path);
  std::size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto record = parse_record(line);
    if (!record) continue;
    const u64 p = record->second.p;
    store(record->first, p, std::move(record->second));
    ++loaded;
  }
  return loaded;
}

void SplittingCache::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  FileLock lock(lock_path(path), LOCK_EX);

  std::map<std::pair<std::string, u64>, SplittingType> merged;
  if (std::ifstream in(path); in) {
    std::string line;
    while (std::getline(in, line)) {
      if (auto record = parse_record(line)) {
        const u64 p = record->second.p;
        merged.insert_or_assign({record->first, p}, std::move(record->second));
      }
    }
  }
  {
    std::shared_lock guard(mutex_);
    for (const auto& [key, entry] : table_) {
      if (entry) merged.insert_or_assign(key, *entry);
    }
  }

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write cache file " + tmp.string());
    for (const auto& [key, type] : merged) out << format_record(key.first, type) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace brauerq
