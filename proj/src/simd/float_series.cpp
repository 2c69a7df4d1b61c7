#include "minbu/simd/float_series.hpp"

#include <algorithm>

#include "minbu/errors.hpp"
#include "minbu/simd/kernels.hpp"

namespace minbu::simd {

std::vector<double> series_product(std::span<const double> a, std::span<const double> b, std::size_t n) {
  std::vector<double> pa(n, 0.0), rb(n, 0.0);
  std::copy_n(a.begin(), std::min(n, a.size()), pa.begin());
  // rb[n-1-j] = b_j so that c_k is a contiguous dot product
  for (std::size_t j = 0; j < std::min(n, b.size()); ++j) rb[n - 1 - j] = b[j];
  std::vector<double> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = dot(pa.data(), rb.data() + (n - 1 - k), k + 1);
  return c;
}

std::vector<double> series_inverse(std::span<const double> a, std::size_t n) {
  if (n == 0) return {};
  if (a.empty() || a[0] == 0.0) throw ZeroDivisor("float series inverse needs a nonzero constant term");
  std::vector<double> pa(n, 0.0), rb(n, 0.0);
  std::copy_n(a.begin(), std::min(n, a.size()), pa.begin());
  const double inv0 = 1.0 / pa[0];
  std::vector<double> out(n);
  out[0] = inv0;
  rb[n - 1] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    double s = dot(pa.data() + 1, rb.data() + (n - k), k);
    out[k] = -s * inv0;
    rb[n - 1 - k] = out[k];
  }
  return out;
}

double series_eval(std::span<const double> a, double x) {
  double s = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) s = s * x + a[i];
  return s;
}

}  // namespace minbu::simd
