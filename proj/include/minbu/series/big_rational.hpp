#pragma once

#include <gmpxx.h>

#include <string>

namespace minbu {

// mpq_class keeps numerator/denominator canonical after every operation.
using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational rational(long num, long den = 1);
BigRational rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigRational pow(const BigRational& base, unsigned long e);

// "num/den", or "num" when the denominator is 1
std::string to_fraction(const BigRational& q);

// significant-digit rendering with round-half-even on the exact value
std::string to_decimal(const BigRational& q, int significant = 12);

double to_double(const BigRational& q);

}  // namespace minbu
