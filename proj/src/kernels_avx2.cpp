#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace tritris::kernels {

// Eight gathers per iteration; the tail is handled scalar.  Indices are
// state numbers and stay far below 2^31, so reinterpreting them as signed
// gather offsets is safe.
void apply_table_avx2(std::uint32_t* dst, const std::uint32_t* src,
                      const std::uint32_t* table, std::size_t n) {
  std::size_t i = 0;
  const int* t = reinterpret_cast<const int*>(table);
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i v = _mm256_i32gather_epi32(t, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
  }
  for (; i < n; ++i) dst[i] = table[src[i]];
}

}  // namespace tritris::kernels
