#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tritris::kernels {

// dst[i] = table[src[i]] for i in [0, n).
//
// This gather is the inner loop of everything hot in the project:
// transformation composition, word evaluation over generator tables, and
// power iteration for the aperiodicity test.  In-place use (dst == src) is
// allowed; src and table may alias each other but dst must not partially
// overlap either input.
using ApplyTableFn = void (*)(std::uint32_t* dst, const std::uint32_t* src,
                              const std::uint32_t* table, std::size_t n);

void apply_table_scalar(std::uint32_t* dst, const std::uint32_t* src,
                        const std::uint32_t* table, std::size_t n);

#if defined(TRITRIS_HAVE_AVX2)
void apply_table_avx2(std::uint32_t* dst, const std::uint32_t* src,
                      const std::uint32_t* table, std::size_t n);
#endif

struct KernelInfo {
  std::string name;
  ApplyTableFn fn;
};

// All kernels usable on this machine, scalar first.  Variants compiled in
// but not supported by the CPU are omitted.
const std::vector<KernelInfo>& available_kernels();

// The kernel apply_table() dispatches to: the last usable entry of
// available_kernels(), unless the TRITRIS_KERNEL environment variable names
// a specific one ("scalar", "avx2").  Reads the environment on each call;
// hot loops should hoist .fn once.
const KernelInfo& selected_kernel();

inline void apply_table(std::uint32_t* dst, const std::uint32_t* src,
                        const std::uint32_t* table, std::size_t n) {
  selected_kernel().fn(dst, src, table, n);
}

}  // namespace tritris::kernels
