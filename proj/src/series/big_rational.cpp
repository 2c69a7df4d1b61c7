#include "minbu/series/big_rational.hpp"

#include <gmp.h>

#include <cmath>
#include <stdexcept>

namespace minbu {

BigRational rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational pow(const BigRational& base, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return BigRational(num, den);  // already coprime
}

std::string to_fraction(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// floor(log10 |q|) for q != 0
long decimal_exponent(const BigRational& a) {
  long e = static_cast<long>(std::floor(std::log10(std::abs(a.get_d()))));
  if (!std::isfinite(a.get_d()) || a.get_d() == 0.0) {
    // far outside double range: fall back to digit counts
    e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
        static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  }
  auto ten_pow = [](long k) {
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(k)));
    return k >= 0 ? BigRational(t) : BigRational(BigInt(1), t);
  };
  BigRational abs_a = abs(a);
  while (ten_pow(e) > abs_a) --e;
  while (ten_pow(e + 1) <= abs_a) ++e;
  return e;
}

}  // namespace

std::string to_decimal(const BigRational& q, int significant) {
  if (significant < 1) significant = 1;
  if (q == 0) return "0";
  bool negative = q < 0;
  BigRational a = abs(q);
  long e = decimal_exponent(a);
  long shift = significant - 1 - e;  // a * 10^shift has `significant` integer digits
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  BigRational scaled = a;
  if (shift >= 0) scaled *= p;
  else scaled /= p;
  scaled.canonicalize();
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  BigRational frac = scaled - BigRational(fl);
  if (frac > BigRational(1, 2) || (frac == BigRational(1, 2) && mpz_odd_p(fl.get_mpz_t()))) {
    fl += 1;
  }
  std::string digits = fl.get_str();
  if (static_cast<long>(digits.size()) > significant) {
    // rounding carried into a new digit (e.g. 9.99.. -> 10.0)
    digits.pop_back();
    ++e;
  }
  std::string out;
  if (e >= 0 && e < significant) {
    out = digits.substr(0, e + 1);
    std::string rest = digits.substr(e + 1);
    while (!rest.empty() && rest.back() == '0') rest.pop_back();
    if (!rest.empty()) out += "." + rest;
  } else if (e < 0 && e >= -6) {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
    while (out.back() == '0') out.pop_back();
  } else {
    std::string mant = digits.substr(0, 1);
    std::string rest = digits.substr(1);
    while (!rest.empty() && rest.back() == '0') rest.pop_back();
    if (!rest.empty()) mant += "." + rest;
    out = mant + "e" + (e >= 0 ? "+" : "-") + std::to_string(std::labs(e));
  }
  return negative ? "-" + out : out;
}

double to_double(const BigRational& q) {
  // mpq_get_d truncates; go through mpf for a correctly scaled value of huge operands
  double d = q.get_d();
  if (std::isfinite(d) && d != 0.0) return d;
  if (q == 0) return 0.0;
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

}  // namespace minbu
