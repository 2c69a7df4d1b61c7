#include <atomic>

#include "minbu/errors.hpp"
#include "minbu/simd/kernels.hpp"

namespace minbu::simd {

namespace {

Backend detect() {
#ifdef MINBU_ARCH_X86
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::avx2;
#endif
  return Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) { return b == Backend::scalar || detected_backend() == Backend::avx2; }

Backend detected_backend() {
  static const Backend b = detect();
  return b;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
  if (!backend_available(b)) throw DomainError(std::string("backend unavailable: ") + backend_name(b));
  current().store(b, std::memory_order_relaxed);
}

void reset_backend() { current().store(detected_backend(), std::memory_order_relaxed); }

double dot(const double* a, const double* b, std::size_t n) {
#ifdef MINBU_ARCH_X86
  if (active_backend() == Backend::avx2) return avx2::dot(a, b, n);
#endif
  return scalar::dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
#ifdef MINBU_ARCH_X86
  if (active_backend() == Backend::avx2) return avx2::axpy(alpha, x, y, n);
#endif
  scalar::axpy(alpha, x, y, n);
}

}  // namespace minbu::simd
