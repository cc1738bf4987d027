#include "coxangle/kernels.hpp"

namespace coxangle::kernels {

namespace {

std::size_t expand_scalar(const std::int32_t* in, std::size_t in_stride, std::size_t count, int rank, int j,
                          const std::int32_t* cartan_row, std::int32_t* out, std::size_t out_stride,
                          std::size_t out_offset) {
  std::size_t produced = 0;
  const std::int32_t* kj = in + static_cast<std::size_t>(j) * in_stride;
  for (std::size_t n = 0; n < count; ++n) {
    const std::int32_t k = kj[n];
    if (k <= 0) continue;
    bool canonical = true;
    for (int a = 0; a < j && canonical; ++a) canonical = in[a * in_stride + n] - k * cartan_row[a] >= 0;
    if (!canonical) continue;
    const std::size_t slot = out_offset + produced++;
    for (int a = 0; a < rank; ++a) out[a * out_stride + slot] = in[a * in_stride + n] - k * cartan_row[a];
  }
  return produced;
}

std::int64_t max_dot_scalar(const std::int32_t* in, std::size_t stride, std::size_t count, int rank,
                            const std::int32_t* weights, std::int64_t init) {
  std::int64_t best = init;
  for (std::size_t n = 0; n < count; ++n) {
    std::int64_t acc = 0;
    for (int a = 0; a < rank; ++a) acc += static_cast<std::int64_t>(in[a * stride + n]) * weights[a];
    if (acc > best) best = acc;
  }
  return best;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", &expand_scalar, &max_dot_scalar};
  return table;
}

}  // namespace coxangle::kernels
