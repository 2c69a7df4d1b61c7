#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "minbu/simd/float_series.hpp"
#include "minbu/simd/kernels.hpp"

using namespace minbu::simd;

namespace {

std::vector<double> random_vector(size_t n, unsigned seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(g);
  return v;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree") {
  if (!backend_available(Backend::avx2)) {
    MESSAGE("avx2 unavailable, scalar only");
    return;
  }
  for (size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 1000u}) {
    auto a = random_vector(n, 1 + static_cast<unsigned>(n));
    auto b = random_vector(n, 100 + static_cast<unsigned>(n));
#ifdef MINBU_ARCH_X86
    double s = scalar::dot(a.data(), b.data(), n);
    double v = avx2::dot(a.data(), b.data(), n);
    CHECK(std::abs(s - v) <= 1e-13 * (1.0 + std::abs(s)));
    auto y1 = b, y2 = b;
    scalar::axpy(0.75, a.data(), y1.data(), n);
    avx2::axpy(0.75, a.data(), y2.data(), n);
    for (size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-15);
#endif
  }
}

TEST_CASE("series products match under both backends") {
  auto a = random_vector(200, 7), b = random_vector(200, 8);
  a[0] = 1.0;
  force_backend(Backend::scalar);
  auto p1 = series_product(a, b, 200);
  auto i1 = series_inverse(a, 60);
  std::vector<double> p2 = p1, i2 = i1;
  if (backend_available(Backend::avx2)) {
    force_backend(Backend::avx2);
    p2 = series_product(a, b, 200);
    i2 = series_inverse(a, 60);
  }
  reset_backend();
  for (size_t i = 0; i < p1.size(); ++i) CHECK(std::abs(p1[i] - p2[i]) <= 1e-12 * (1 + std::abs(p1[i])));
  for (size_t i = 0; i < i1.size(); ++i) CHECK(std::abs(i1[i] - i2[i]) <= 1e-9 * (1 + std::abs(i1[i])));
  auto one = series_product(a, i1, 60);
  CHECK(one[0] == doctest::Approx(1.0));
  for (size_t i = 1; i < 20; ++i) CHECK(std::abs(one[i]) < 1e-9);
}

TEST_CASE("Horner evaluation") {
  std::vector<double> c = {1, 2, 3};
  CHECK(series_eval(c, 2.0) == doctest::Approx(17.0));
}
