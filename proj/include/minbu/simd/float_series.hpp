#pragma once

#include <span>
#include <vector>

namespace minbu::simd {

// truncated products and reciprocals of double-precision power series, n terms
std::vector<double> series_product(std::span<const double> a, std::span<const double> b, std::size_t n);
std::vector<double> series_inverse(std::span<const double> a, std::size_t n);

// sum_k a_k x^k by Horner
double series_eval(std::span<const double> a, double x);

}  // namespace minbu::simd
