#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minbu/series/big_rational.hpp"

namespace minbu {

enum class Variable { g, z, t, x, y, eta };

const char* variable_name(Variable v);

// Power series known exactly for exponents 0..order.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(int order, Variable var = Variable::z);
  TruncatedSeries(std::vector<BigRational> coefficients, Variable var = Variable::z);

  static TruncatedSeries zero(int order, Variable var = Variable::z);
  static TruncatedSeries one(int order, Variable var = Variable::z);
  static TruncatedSeries constant(const BigRational& c, int order, Variable var = Variable::z);
  // c * v^power, truncated to `order`
  static TruncatedSeries monomial(int power, const BigRational& c, int order,
                                  Variable var = Variable::z);
  static TruncatedSeries from_integers(std::initializer_list<long> coeffs,
                                       Variable var = Variable::z);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Variable variable() const { return var_; }
  const BigRational& operator[](int n) const;
  std::span<const BigRational> coefficients() const { return coeffs_; }

  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  TruncatedSeries truncated(int order) const;
  TruncatedSeries with_variable(Variable var) const;

  // exact equality of order and all coefficients
  bool operator==(const TruncatedSeries& other) const;
  // equal coefficients up to `order` (both must reach it)
  bool agrees_with(const TruncatedSeries& other, int order) const;

  std::string to_string() const;

 private:
  std::vector<BigRational> coeffs_;
  Variable var_ = Variable::z;
};

// order of the result: min(order(a), order(b))
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const BigRational& c);
TruncatedSeries negate(const TruncatedSeries& a);
// multiply by v^k (k >= 0): order grows by k
TruncatedSeries shift_up(const TruncatedSeries& a, int k);
// divide by v^k; coefficients below k must vanish; order shrinks by k
TruncatedSeries shift_down(const TruncatedSeries& a, int k);
TruncatedSeries derivative(const TruncatedSeries& a);

// order: min(order(a), order(b)) - valuation(b)
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

// f(g) with g(0) = 0; order min(order(f), order(g))
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

// compositional inverse, f(0) = 0, f'(0) != 0; same order as f
TruncatedSeries revert(const TruncatedSeries& f);

// u = 1 + c v u^d
TruncatedSeries solve_polynomial_fixed_point(const BigRational& c, int d, int order,
                                             Variable var = Variable::z);

// Li2(t) = sum t^k / k^2
TruncatedSeries dilog_series(int order);
// log(1 - t) = - sum t^k / k
TruncatedSeries log_one_minus_series(int order);

TruncatedSeries power(const TruncatedSeries& a, int e);

// Precomputed powers of an inner series for repeated composition.
class Composer {
 public:
  Composer(const TruncatedSeries& inner, int max_power);
  TruncatedSeries operator()(const TruncatedSeries& f) const;
  int order() const { return order_; }

 private:
  int order_;
  Variable var_;
  // integer numerators of inner^k over common denominators
  std::vector<std::vector<BigInt>> powers_;
  std::vector<BigInt> denominators_;
};

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return div(a, b); }
inline TruncatedSeries operator*(const BigRational& c, const TruncatedSeries& a) { return scale(a, c); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }

}  // namespace minbu
