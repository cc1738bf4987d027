#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxangle/kernels.hpp"
#include "coxangle/weyl.hpp"

using namespace coxangle;
namespace k = coxangle::kernels;

namespace {

struct Frontier {
  std::size_t count;
  std::size_t stride;
  int rank;
  std::vector<std::int32_t> data;
};

Frontier random_frontier(std::mt19937& rng, std::size_t count, int rank, std::int32_t bound) {
  const std::size_t stride = (count + k::kLanes - 1) / k::kLanes * k::kLanes + k::kLanes;
  Frontier f{count, stride, rank, std::vector<std::int32_t>(stride * rank, 0)};
  std::uniform_int_distribution<std::int32_t> value(-bound, bound);
  for (int a = 0; a < rank; ++a)
    for (std::size_t n = 0; n < count; ++n) f.data[a * stride + n] = value(rng);
  return f;
}

// Both tables applied to the same input must write the same children.
void compare_expand(const k::KernelTable& x, const k::KernelTable& y, const Frontier& f, int j,
                    const std::vector<std::int32_t>& row) {
  const std::size_t out_stride = f.stride + 16;
  std::vector<std::int32_t> out_x(out_stride * f.rank, -7), out_y(out_stride * f.rank, -7);
  const std::size_t nx = x.expand(f.data.data(), f.stride, f.count, f.rank, j, row.data(), out_x.data(), out_stride, 3);
  const std::size_t ny = y.expand(f.data.data(), f.stride, f.count, f.rank, j, row.data(), out_y.data(), out_stride, 3);
  REQUIRE(nx == ny);
  for (int a = 0; a < f.rank; ++a)
    for (std::size_t n = 0; n < 3 + nx; ++n) CHECK(out_x[a * out_stride + n] == out_y[a * out_stride + n]);
}

}  // namespace

TEST_CASE("scalar expand follows the canonical-parent rule") {
  // A2 orbit of rho = (1, 1). The lowest element (-1, -1) has two parents,
  // (1, -2) via s_1 and (-2, 1) via s_2; only s_1 (its smallest descent) keeps it.
  const std::vector<std::int32_t> row0 = {2, -1}, row1 = {-1, 2};
  auto one = [](std::int32_t x, std::int32_t y) {
    std::vector<std::int32_t> v(16, 0);
    v[0] = x;
    v[8] = y;
    return v;
  };
  std::vector<std::int32_t> out(16, 0);
  auto expand = [&](const std::vector<std::int32_t>& in, int j) {
    return k::scalar().expand(in.data(), 8, 1, 2, j, j == 0 ? row0.data() : row1.data(), out.data(), 8, 0);
  };
  CHECK(expand(one(1, 1), 0) == 1);
  CHECK(out[0] == -1);
  CHECK(out[8] == 2);
  CHECK(expand(one(1, 1), 1) == 1);
  CHECK(out[0] == 2);
  CHECK(out[8] == -1);
  CHECK(expand(one(-1, 2), 0) == 0);
  CHECK(expand(one(1, -2), 0) == 1);
  CHECK(out[0] == -1);
  CHECK(out[8] == -1);
  CHECK(expand(one(-2, 1), 1) == 0);
}

TEST_CASE("max_dot reference") {
  const std::vector<std::int32_t> in = {1, -3, 5, 0, 0, 0, 0, 0, 2, 4, -1, 0, 0, 0, 0, 0};
  const std::vector<std::int32_t> w = {3, 1};
  CHECK(k::scalar().max_dot(in.data(), 8, 3, 2, w.data(), -1000) == 14);
  CHECK(k::scalar().max_dot(in.data(), 8, 3, 2, w.data(), 20) == 20);
  CHECK(k::scalar().max_dot(in.data(), 8, 0, 2, w.data(), -5) == -5);
}

#if COXANGLE_AVX2_KERNELS
TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const k::KernelTable* v = k::avx2();
  if (!v) {
    MESSAGE("CPU without AVX2; equivalence not exercised");
    return;
  }
  std::mt19937 rng(42);
  for (std::size_t count : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 100u, 1031u}) {
    for (int rank = 1; rank <= 8; ++rank) {
      for (int trial = 0; trial < 6; ++trial) {
        const std::int32_t bound = trial % 2 ? 4 : (1 << 20);
        const Frontier f = random_frontier(rng, count, rank, bound);
        const int j = static_cast<int>(rng() % rank);
        std::vector<std::int32_t> row(rank);
        for (int a = 0; a < rank; ++a) row[a] = a == j ? 2 : static_cast<std::int32_t>(rng() % 4) - 3;
        CAPTURE(count);
        CAPTURE(rank);
        compare_expand(k::scalar(), *v, f, j, row);

        std::vector<std::int32_t> w(rank);
        for (auto& x : w) x = static_cast<std::int32_t>(rng() % (1u << 30)) - (1 << 29);
        const std::int64_t init = trial % 3 == 0 ? INT64_MIN : static_cast<std::int64_t>(rng() % 1000) - 500;
        CHECK(k::scalar().max_dot(f.data.data(), f.stride, count, rank, w.data(), init) ==
              v->max_dot(f.data.data(), f.stride, count, rank, w.data(), init));
      }
    }
  }
}

TEST_CASE("orbit results do not depend on the kernel table") {
  const k::KernelTable* v = k::avx2();
  if (!v) return;
  for (const std::string name : {"A5", "B4", "D6", "E6", "E7", "F4", "G2"}) {
    const Realization r = realize(builtin(name));
    for (Node i : r.diagram().nodes()) {
      k::set_active(&k::scalar());
      const WeightOrbitSummary s = weight_orbit_summary(r, i);
      const Orbit o = weyl_orbit(r, r.fundamental_weight(i));
      k::set_active(v);
      const WeightOrbitSummary t = weight_orbit_summary(r, i);
      const Orbit p = weyl_orbit(r, r.fundamental_weight(i));
      CAPTURE(name);
      CAPTURE(i);
      CHECK(s.size == t.size);
      CHECK(s.max_other_inner == t.max_other_inner);
      CHECK(s.norm2 == t.norm2);
      CHECK(o.vectors() == p.vectors());
    }
  }
  k::set_active(nullptr);
}
#endif

TEST_CASE("kernel selection") {
  k::set_active(&k::scalar());
  CHECK(std::string(k::active().name) == "scalar");
  k::set_active(nullptr);
  CHECK(k::active().expand != nullptr);
}
