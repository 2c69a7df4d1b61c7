#pragma once

#include "minbu/series/truncated_series.hpp"

namespace minbu {

// value = rational_part * 3^(radical_power/2), radical_power in {-1, 0}
struct RadicalScalar {
  BigRational rational_part;
  int radical_power = 0;

  double value() const;
};

class RadicalScaledSeries {
 public:
  RadicalScaledSeries(TruncatedSeries rational_part, int radical_power);

  const TruncatedSeries& rational_part() const { return rational_; }
  int radical_power() const { return k_; }
  int order() const { return rational_.order(); }

  // exact rational coefficient when radical_power == 0; DomainError otherwise
  BigRational rational_coefficient(int n) const;
  double coefficient_value(int n) const;

 private:
  TruncatedSeries rational_;
  int k_;
};

RadicalScaledSeries operator*(const RadicalScalar& c, const RadicalScaledSeries& s);
RadicalScaledSeries operator*(const RadicalScaledSeries& a, const RadicalScaledSeries& b);
RadicalScaledSeries operator+(const RadicalScaledSeries& a, const RadicalScaledSeries& b);
RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);

}  // namespace minbu
