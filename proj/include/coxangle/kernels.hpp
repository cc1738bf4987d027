#pragma once

// Integer inner loops of Weyl-orbit enumeration. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant; the active table
// is chosen at runtime from the CPU features.
//
// Frontiers are stored lane-major: label a of element n lives at
// data[a * stride + n], so eight consecutive elements fill one AVX2 register.

#include <cstddef>
#include <cstdint>

namespace coxangle::kernels {

inline constexpr std::size_t kLanes = 8;

/// Applies the simple reflection j to every element of the frontier whose
/// j-th label is positive and keeps the child only when j is its smallest
/// descent (every label of index < j stays non-negative). Accepted children
/// are appended at out[a * out_stride + out_offset + k]; returns their count.
///
/// `cartan_row[a]` holds <alpha_j, alpha_a^vee>.
using ExpandFn = std::size_t (*)(const std::int32_t* in, std::size_t in_stride, std::size_t count, int rank, int j,
                                 const std::int32_t* cartan_row, std::int32_t* out, std::size_t out_stride,
                                 std::size_t out_offset);

/// max(init, max_n sum_a in[a * stride + n] * weights[a]), exact in 64 bits.
using MaxDotFn = std::int64_t (*)(const std::int32_t* in, std::size_t stride, std::size_t count, int rank,
                                  const std::int32_t* weights, std::int64_t init);

struct KernelTable {
  const char* name;
  ExpandFn expand;
  MaxDotFn max_dot;
};

const KernelTable& scalar();

/// Null when the build has no AVX2 kernels or the CPU lacks AVX2.
const KernelTable* avx2();

/// Table used by the library. Honours COXANGLE_KERNEL=scalar|avx2, otherwise
/// picks the widest supported variant.
const KernelTable& active();

/// Forces a table (tests, benchmarks); nullptr restores automatic selection.
void set_active(const KernelTable* table);

}  // namespace coxangle::kernels
