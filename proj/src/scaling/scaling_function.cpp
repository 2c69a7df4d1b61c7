#include <cmath>

#include "minbu/errors.hpp"
#include "minbu/scaling/scaling.hpp"

namespace minbu {

namespace {

constexpr double kMinL = 1e-9;

void check_args(double L, double alpha_abs) {
  if (!(L >= kMinL)) throw SingularityError("L = " + std::to_string(L) + " is at the pole (need L >= 1e-9)");
  if (alpha_abs == 0) throw DomainError("alpha must be nonzero");
}

template <class T>
T real_part(const T& x) {
  return x;
}
template <class T>
T real_part(const std::complex<T>& x) {
  return x.real();
}

// 1/sinh^2(x) and cosh(x)/sinh^3(x); for Re x > 1 through u = e^{-2x}
template <class T>
T inv_sinh2(const T& x) {
  if (real_part(x) > 1.0) {
    T u = std::exp(-2.0 * x);
    T d = 1.0 - u;
    return 4.0 * u / (d * d);
  }
  T s = std::sinh(x);
  return 1.0 / (s * s);
}

template <class T>
T cosh_over_sinh3(const T& x) {
  if (real_part(x) > 1.0) {
    T u = std::exp(-2.0 * x);
    T d = 1.0 - u;
    return 4.0 * u * (1.0 + u) / (d * d * d);
  }
  T s = std::sinh(x);
  return std::cosh(x) / (s * s * s);
}

template <class T>
T F_impl(double L, const T& a) {
  check_args(L, std::abs(a));
  return (2.0 * a * a / 3.0) * (1.0 + 3.0 * inv_sinh2(a * L));
}

template <class T>
T F_prime_impl(double L, const T& a) {
  check_args(L, std::abs(a));
  return -4.0 * a * a * a * cosh_over_sinh3(a * L);
}

}  // namespace

double scaling_F(double L, double alpha) { return F_impl(L, std::abs(alpha)); }

std::complex<double> scaling_F(double L, std::complex<double> alpha) {
  // F is even in alpha; take the representative with Re >= 0
  if (alpha.real() < 0) alpha = -alpha;
  return F_impl(L, alpha);
}

double scaling_F_prime(double L, double alpha) {
  // odd powers cancel: a^3 cosh/sinh^3 is even in a
  return F_prime_impl(L, std::abs(alpha));
}

std::complex<double> scaling_F_prime(double L, std::complex<double> alpha) {
  if (alpha.real() < 0) alpha = -alpha;
  return F_prime_impl(L, alpha);
}

}  // namespace minbu
