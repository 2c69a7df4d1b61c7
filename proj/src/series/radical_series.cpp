#include "minbu/series/radical_series.hpp"

#include <cmath>

#include "minbu/errors.hpp"

namespace minbu {

namespace {

// fold 3^(k/2) with k in [-2, 0] back into {-1, 0}
void reduce(BigRational& q, int& k) {
  if (k == -2) {
    q /= 3;
    k = 0;
  }
  if (k != 0 && k != -1) throw DomainError("radical power out of range: " + std::to_string(k));
}

void reduce(TruncatedSeries& s, int& k) {
  if (k == -2) {
    s = scale(s, BigRational(1, 3));
    k = 0;
  }
  if (k != 0 && k != -1) throw DomainError("radical power out of range: " + std::to_string(k));
}

}  // namespace

double RadicalScalar::value() const {
  return to_double(rational_part) * std::pow(3.0, radical_power / 2.0);
}

RadicalScaledSeries::RadicalScaledSeries(TruncatedSeries rational_part, int radical_power)
    : rational_(std::move(rational_part)), k_(radical_power) {
  reduce(rational_, k_);
}

BigRational RadicalScaledSeries::rational_coefficient(int n) const {
  if (k_ != 0) throw DomainError("coefficient carries a factor 3^(-1/2)");
  return rational_[n];
}

double RadicalScaledSeries::coefficient_value(int n) const {
  return to_double(rational_[n]) * std::pow(3.0, k_ / 2.0);
}

RadicalScaledSeries operator*(const RadicalScalar& c, const RadicalScaledSeries& s) {
  return RadicalScaledSeries(scale(s.rational_part(), c.rational_part), c.radical_power + s.radical_power());
}

RadicalScaledSeries operator*(const RadicalScaledSeries& a, const RadicalScaledSeries& b) {
  return RadicalScaledSeries(mul(a.rational_part(), b.rational_part()), a.radical_power() + b.radical_power());
}

RadicalScaledSeries operator+(const RadicalScaledSeries& a, const RadicalScaledSeries& b) {
  if (a.radical_power() != b.radical_power()) {
    throw DomainError("cannot add series with different radical powers");
  }
  return RadicalScaledSeries(add(a.rational_part(), b.rational_part()), a.radical_power());
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar r{a.rational_part * b.rational_part, a.radical_power + b.radical_power};
  reduce(r.rational_part, r.radical_power);
  return r;
}

}  // namespace minbu
