#pragma once

#include <bit>
#include <cstdint>
#include <cstring>

namespace tritris::detail {

// Fixed-width bitsets stored as raw uint64_t rows, little-endian bit order.

inline std::size_t bitset_words(std::size_t bits) { return (bits + 63) / 64; }

inline void set_bit(std::uint64_t* row, std::uint32_t i) {
  row[i >> 6] |= std::uint64_t(1) << (i & 63);
}

inline bool test_bit(const std::uint64_t* row, std::uint32_t i) {
  return (row[i >> 6] >> (i & 63)) & 1;
}

inline std::uint32_t popcount_row(const std::uint64_t* row, std::size_t words) {
  std::uint32_t n = 0;
  for (std::size_t w = 0; w < words; ++w) n += std::popcount(row[w]);
  return n;
}

// a ⊆ b
inline bool subset_row(const std::uint64_t* a, const std::uint64_t* b,
                       std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

inline bool equal_row(const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t words) {
  return std::memcmp(a, b, words * sizeof(std::uint64_t)) == 0;
}

inline void or_into(std::uint64_t* acc, const std::uint64_t* row,
                    std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) acc[w] |= row[w];
}

}  // namespace tritris::detail
