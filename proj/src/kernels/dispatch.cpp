#include <atomic>
#include <cstdlib>
#include <string_view>

#include "coxangle/kernels.hpp"

namespace coxangle::kernels {

#if defined(COXANGLE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif

namespace {

std::atomic<const KernelTable*> forced{nullptr};

const KernelTable& automatic() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("COXANGLE_KERNEL");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
    if (const KernelTable* wide = avx2()) return wide;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace

const KernelTable* avx2() {
#if defined(COXANGLE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  if (const KernelTable* t = forced.load(std::memory_order_acquire)) return *t;
  return automatic();
}

void set_active(const KernelTable* table) { forced.store(table, std::memory_order_release); }

}  // namespace coxangle::kernels
