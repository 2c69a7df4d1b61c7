#pragma once

#include <cstddef>

#if defined(__x86_64__) || defined(_M_X64)
#define MINBU_ARCH_X86 1
#endif

namespace minbu::simd {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);
// best available backend, detected once
Backend detected_backend();
Backend active_backend();
// for equivalence tests; throws DomainError if the backend is unavailable
void force_backend(Backend b);
void reset_backend();

double dot(const double* a, const double* b, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace scalar

#ifdef MINBU_ARCH_X86
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace avx2
#endif

}  // namespace minbu::simd
