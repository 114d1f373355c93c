#pragma once

#include <cstdint>
#include <cstring>
#include <vector>

namespace tritris::detail {

// Stable 64-bit hash of a word sequence (splitmix-style mixing).  Used for
// dedup tables and for content hashes of cache files, so it must not depend
// on anything run-specific.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

template <typename Word>
std::uint64_t hash_row(const Word* row, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (n * 0xff51afd7ed558ccdULL);
  for (std::size_t i = 0; i < n; ++i) {
    h = mix64(h ^ (static_cast<std::uint64_t>(row[i]) + 0x2545f4914f6cdd1dULL * i));
  }
  return h;
}

// Interning table for fixed-width rows kept in one flat arena.  Open
// addressing over (hash, exact compare); ids are dense and assigned in
// insertion order, which is what makes enumerations deterministic.
template <typename Word>
class RowDedup {
 public:
  explicit RowDedup(std::size_t row_width, std::size_t expected_rows = 1024)
      : width_(row_width) {
    std::size_t slots = 16;
    while (slots < expected_rows * 2) slots <<= 1;
    slots_.assign(slots, kEmpty);
    arena_.reserve(row_width * expected_rows);
  }

  std::size_t size() const { return hashes_.size(); }
  std::size_t row_width() const { return width_; }

  const Word* row(std::uint32_t id) const { return arena_.data() + std::size_t(id) * width_; }

  // Returns (id, true) if the row was new, (id, false) if already present.
  std::pair<std::uint32_t, bool> intern(const Word* row_data) {
    if ((hashes_.size() + 1) * 2 > slots_.size()) grow();
    const std::uint64_t h = hash_row(row_data, width_);
    std::size_t mask = slots_.size() - 1;
    std::size_t pos = h & mask;
    while (slots_[pos] != kEmpty) {
      std::uint32_t id = slots_[pos];
      if (hashes_[id] == h &&
          std::memcmp(row(id), row_data, width_ * sizeof(Word)) == 0) {
        return {id, false};
      }
      pos = (pos + 1) & mask;
    }
    const std::uint32_t id = static_cast<std::uint32_t>(hashes_.size());
    slots_[pos] = id;
    hashes_.push_back(h);
    arena_.insert(arena_.end(), row_data, row_data + width_);
    return {id, true};
  }

  // Lookup without insertion; returns kNotFound when absent.
  static constexpr std::uint32_t kNotFound = 0xffffffffu;
  std::uint32_t find(const Word* row_data) const {
    const std::uint64_t h = hash_row(row_data, width_);
    std::size_t mask = slots_.size() - 1;
    std::size_t pos = h & mask;
    while (slots_[pos] != kEmpty) {
      std::uint32_t id = slots_[pos];
      if (hashes_[id] == h &&
          std::memcmp(row(id), row_data, width_ * sizeof(Word)) == 0) {
        return id;
      }
      pos = (pos + 1) & mask;
    }
    return kNotFound;
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void grow() {
    std::size_t slots = slots_.size() * 2;
    std::vector<std::uint32_t> next(slots, kEmpty);
    std::size_t mask = slots - 1;
    for (std::uint32_t id = 0; id < hashes_.size(); ++id) {
      std::size_t pos = hashes_[id] & mask;
      while (next[pos] != kEmpty) pos = (pos + 1) & mask;
      next[pos] = id;
    }
    slots_.swap(next);
  }

  std::size_t width_;
  std::vector<Word> arena_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace tritris::detail
