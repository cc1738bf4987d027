#include <immintrin.h>

#include "coxangle/kernels.hpp"

namespace coxangle::kernels {

namespace {

std::size_t expand_avx2(const std::int32_t* in, std::size_t in_stride, std::size_t count, int rank, int j,
                        const std::int32_t* cartan_row, std::int32_t* out, std::size_t out_stride,
                        std::size_t out_offset) {
  std::size_t produced = 0;
  const std::int32_t* kj = in + static_cast<std::size_t>(j) * in_stride;
  const __m256i zero = _mm256_setzero_si256();

  auto emit = [&](std::size_t n, std::int32_t k) {
    const std::size_t slot = out_offset + produced++;
    for (int a = 0; a < rank; ++a) out[a * out_stride + slot] = in[a * in_stride + n] - k * cartan_row[a];
  };

  std::size_t n = 0;
  for (; n + kLanes <= count; n += kLanes) {
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(kj + n));
    __m256i ok = _mm256_cmpgt_epi32(k, zero);
    if (_mm256_testz_si256(ok, ok)) continue;
    for (int a = 0; a < j; ++a) {
      const __m256i label = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + a * in_stride + n));
      const __m256i child = _mm256_sub_epi32(label, _mm256_mullo_epi32(k, _mm256_set1_epi32(cartan_row[a])));
      ok = _mm256_andnot_si256(_mm256_cmpgt_epi32(zero, child), ok);
    }
    unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(ok)));
    while (mask != 0) {
      const int lane = __builtin_ctz(mask);
      mask &= mask - 1;
      emit(n + lane, kj[n + lane]);
    }
  }
  for (; n < count; ++n) {
    const std::int32_t k = kj[n];
    if (k <= 0) continue;
    bool canonical = true;
    for (int a = 0; a < j && canonical; ++a) canonical = in[a * in_stride + n] - k * cartan_row[a] >= 0;
    if (canonical) emit(n, k);
  }
  return produced;
}

// Four 64-bit lanes per step: sign-extend the int32 labels and use the
// signed 32x32->64 multiply so no intermediate can overflow.
std::int64_t max_dot_avx2(const std::int32_t* in, std::size_t stride, std::size_t count, int rank,
                          const std::int32_t* weights, std::int64_t init) {
  std::int64_t best = init;
  std::size_t n = 0;
  __m256i vbest = _mm256_set1_epi64x(init);
  for (; n + 4 <= count; n += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (int a = 0; a < rank; ++a) {
      const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + a * stride + n));
      const __m256i wide = _mm256_cvtepi32_epi64(raw);
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(wide, _mm256_set1_epi64x(weights[a])));
    }
    const __m256i greater = _mm256_cmpgt_epi64(acc, vbest);
    vbest = _mm256_blendv_epi8(vbest, acc, greater);
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vbest);
  for (std::int64_t v : lanes)
    if (v > best) best = v;
  for (; n < count; ++n) {
    std::int64_t acc = 0;
    for (int a = 0; a < rank; ++a) acc += static_cast<std::int64_t>(in[a * stride + n]) * weights[a];
    if (acc > best) best = acc;
  }
  return best;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &expand_avx2, &max_dot_avx2};
  return table;
}

}  // namespace coxangle::kernels
