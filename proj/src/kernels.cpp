#include "tritris/kernels.hpp"

#include <cstdlib>

#include "tritris/errors.hpp"

namespace tritris::kernels {

void apply_table_scalar(std::uint32_t* dst, const std::uint32_t* src,
                        const std::uint32_t* table, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::uint32_t a = table[src[i]];
    std::uint32_t b = table[src[i + 1]];
    std::uint32_t c = table[src[i + 2]];
    std::uint32_t d = table[src[i + 3]];
    dst[i] = a;
    dst[i + 1] = b;
    dst[i + 2] = c;
    dst[i + 3] = d;
  }
  for (; i < n; ++i) dst[i] = table[src[i]];
}

const std::vector<KernelInfo>& available_kernels() {
  static const std::vector<KernelInfo> kernels = [] {
    std::vector<KernelInfo> out;
    out.push_back({"scalar", &apply_table_scalar});
#if defined(TRITRIS_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) {
      out.push_back({"avx2", &apply_table_avx2});
    }
#endif
    return out;
  }();
  return kernels;
}

const KernelInfo& selected_kernel() {
  const auto& kernels = available_kernels();
  if (const char* want = std::getenv("TRITRIS_KERNEL")) {
    for (const auto& k : kernels) {
      if (k.name == want) return k;
    }
    throw ValidationError("TRITRIS_KERNEL=" + std::string(want) +
                          " is not available on this machine");
  }
  return kernels.back();
}

}  // namespace tritris::kernels
