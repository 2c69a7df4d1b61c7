#include "minbu/series/truncated_series.hpp"

#include <algorithm>
#include <sstream>

#include "minbu/errors.hpp"

namespace minbu {

const char* variable_name(Variable v) {
  switch (v) {
    case Variable::g: return "g";
    case Variable::z: return "z";
    case Variable::t: return "t";
    case Variable::x: return "x";
    case Variable::y: return "y";
    case Variable::eta: return "eta";
  }
  return "?";
}

TruncatedSeries::TruncatedSeries(int order, Variable var) : var_(var) {
  if (order < 0) throw DomainError("negative truncation order");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coefficients, Variable var)
    : coeffs_(std::move(coefficients)), var_(var) {
  if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::zero(int order, Variable var) { return TruncatedSeries(order, var); }

TruncatedSeries TruncatedSeries::one(int order, Variable var) {
  return constant(BigRational(1), order, var);
}

TruncatedSeries TruncatedSeries::constant(const BigRational& c, int order, Variable var) {
  TruncatedSeries s(order, var);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int power, const BigRational& c, int order, Variable var) {
  if (power < 0) throw DomainError("negative monomial power");
  TruncatedSeries s(order, var);
  if (power <= order) s.coeffs_[static_cast<size_t>(power)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::initializer_list<long> coeffs, Variable var) {
  std::vector<BigRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return TruncatedSeries(std::move(c), var);
}

const BigRational& TruncatedSeries::operator[](int n) const {
  if (n < 0 || n > order()) {
    throw DomainError("coefficient " + std::to_string(n) + " outside order " + std::to_string(order()));
  }
  return coeffs_[static_cast<size_t>(n)];
}

std::optional<int> TruncatedSeries::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order()) {
    throw DomainError("cannot extend series of order " + std::to_string(this->order()) + " to " +
                      std::to_string(order));
  }
  TruncatedSeries s(order, var_);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
  return s;
}

TruncatedSeries TruncatedSeries::with_variable(Variable var) const {
  TruncatedSeries s = *this;
  s.var_ = var;
  return s;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return coeffs_ == other.coeffs_;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other, int order) const {
  if (order > this->order() || order > other.order()) return false;
  for (int i = 0; i <= order; ++i) {
    if (coeffs_[static_cast<size_t>(i)] != other.coeffs_[static_cast<size_t>(i)]) return false;
  }
  return true;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order(); ++i) {
    const auto& c = coeffs_[static_cast<size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_fraction(c);
    if (i > 0) os << "*" << variable_name(var_) << "^" << i;
  }
  if (first) os << "0";
  os << " + O(" << variable_name(var_) << "^" << order() + 1 << ")";
  return os.str();
}

namespace {

// value_i = num[i] / den
struct IntegerVector {
  std::vector<BigInt> num;
  BigInt den;
};

IntegerVector to_integers(std::span<const BigRational> c, int upto) {
  IntegerVector v;
  v.den = 1;
  for (int i = 0; i <= upto; ++i) {
    const BigInt& d = c[static_cast<size_t>(i)].get_den();
    if (d != 1) mpz_lcm(v.den.get_mpz_t(), v.den.get_mpz_t(), d.get_mpz_t());
  }
  v.num.resize(static_cast<size_t>(upto) + 1);
  for (int i = 0; i <= upto; ++i) {
    const BigRational& q = c[static_cast<size_t>(i)];
    if (sgn(q) == 0) continue;
    if (q.get_den() == v.den) {
      v.num[static_cast<size_t>(i)] = q.get_num();
    } else {
      BigInt f;
      mpz_divexact(f.get_mpz_t(), v.den.get_mpz_t(), q.get_den_mpz_t());
      v.num[static_cast<size_t>(i)] = q.get_num() * f;
    }
  }
  return v;
}

std::vector<size_t> nonzero_indices(const std::vector<BigInt>& v) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) idx.push_back(i);
  }
  return idx;
}

// truncated integer convolution, iterating over the sparser operand
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int order) {
  std::vector<BigInt> c(static_cast<size_t>(order) + 1);
  auto ia = nonzero_indices(a);
  auto ib = nonzero_indices(b);
  const auto& outer = ia.size() <= ib.size() ? a : b;
  const auto& inner = ia.size() <= ib.size() ? b : a;
  const auto& outer_idx = ia.size() <= ib.size() ? ia : ib;
  const auto& inner_idx = ia.size() <= ib.size() ? ib : ia;
  for (size_t i : outer_idx) {
    if (static_cast<int>(i) > order) break;
    for (size_t j : inner_idx) {
      size_t k = i + j;
      if (static_cast<int>(k) > order) break;
      mpz_addmul(c[k].get_mpz_t(), outer[i].get_mpz_t(), inner[j].get_mpz_t());
    }
  }
  return c;
}

TruncatedSeries from_integers_over(const std::vector<BigInt>& num, const BigInt& den, Variable var) {
  std::vector<BigRational> c(num.size());
  for (size_t i = 0; i < num.size(); ++i) {
    if (sgn(num[i]) == 0) continue;
    c[i] = BigRational(num[i], den);
    c[i].canonicalize();
  }
  return TruncatedSeries(std::move(c), var);
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<BigRational> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
  return TruncatedSeries(std::move(c), a.variable());
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<BigRational> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a[i] - b[i];
  return TruncatedSeries(std::move(c), a.variable());
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  IntegerVector ia = to_integers(a.coefficients(), n);
  IntegerVector ib = to_integers(b.coefficients(), n);
  auto c = convolve(ia.num, ib.num, n);
  return from_integers_over(c, ia.den * ib.den, a.variable());
}

TruncatedSeries scale(const TruncatedSeries& a, const BigRational& c) {
  std::vector<BigRational> out(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : out) x *= c;
  return TruncatedSeries(std::move(out), a.variable());
}

TruncatedSeries negate(const TruncatedSeries& a) { return scale(a, BigRational(-1)); }

TruncatedSeries shift_up(const TruncatedSeries& a, int k) {
  if (k < 0) throw DomainError("shift_up by negative amount");
  std::vector<BigRational> c(static_cast<size_t>(a.order() + k) + 1);
  for (int i = 0; i <= a.order(); ++i) c[static_cast<size_t>(i + k)] = a[i];
  return TruncatedSeries(std::move(c), a.variable());
}

TruncatedSeries shift_down(const TruncatedSeries& a, int k) {
  if (k < 0) throw DomainError("shift_down by negative amount");
  if (k > a.order()) throw ValuationError("shift_down past truncation order");
  for (int i = 0; i < k; ++i) {
    if (sgn(a[i]) != 0) throw ValuationError("nonzero coefficient below shift");
  }
  std::vector<BigRational> c(a.coefficients().begin() + k, a.coefficients().end());
  return TruncatedSeries(std::move(c), a.variable());
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries::zero(0, a.variable());
  std::vector<BigRational> c(static_cast<size_t>(a.order()));
  for (int i = 1; i <= a.order(); ++i) c[static_cast<size_t>(i - 1)] = a[i] * i;
  return TruncatedSeries(std::move(c), a.variable());
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  auto vb = b.valuation();
  if (!vb) throw ZeroDivisor("divisor vanishes to order " + std::to_string(b.order()));
  int v = *vb;
  int m = std::min(a.order(), b.order()) - v;
  if (m < 0) throw ValuationError("divisor valuation exceeds truncation order");
  for (int i = 0; i < v; ++i) {
    if (sgn(a[i]) != 0) {
      throw ValuationError("valuation of divisor (" + std::to_string(v) +
                           ") exceeds valuation of dividend (" + std::to_string(i) + ")");
    }
  }
  // shifted operands a' = A/da, b' = B/db; quotient A/B = U_n / B0^{n+1}
  std::vector<BigRational> as(a.coefficients().begin() + v, a.coefficients().begin() + v + m + 1);
  std::vector<BigRational> bs(b.coefficients().begin() + v, b.coefficients().begin() + v + m + 1);
  IntegerVector A = to_integers(as, m);
  IntegerVector B = to_integers(bs, m);
  const BigInt& b0 = B.num[0];
  std::vector<BigInt> b0pow(static_cast<size_t>(m) + 2);
  b0pow[0] = 1;
  for (int i = 1; i <= m + 1; ++i) b0pow[static_cast<size_t>(i)] = b0pow[static_cast<size_t>(i - 1)] * b0;
  // C_k = B_k * B0^{k-1}
  std::vector<BigInt> ck(static_cast<size_t>(m) + 1);
  std::vector<size_t> ck_nz;
  for (int k = 1; k <= m; ++k) {
    if (sgn(B.num[static_cast<size_t>(k)]) == 0) continue;
    ck[static_cast<size_t>(k)] = B.num[static_cast<size_t>(k)] * b0pow[static_cast<size_t>(k - 1)];
    ck_nz.push_back(static_cast<size_t>(k));
  }
  std::vector<BigInt> u(static_cast<size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    BigInt acc = A.num[static_cast<size_t>(n)] * b0pow[static_cast<size_t>(n)];
    for (size_t k : ck_nz) {
      if (static_cast<int>(k) > n) break;
      mpz_submul(acc.get_mpz_t(), ck[k].get_mpz_t(), u[static_cast<size_t>(n) - k].get_mpz_t());
    }
    u[static_cast<size_t>(n)] = std::move(acc);
  }
  // q_n = (db/da) * U_n / B0^{n+1}
  std::vector<BigRational> q(static_cast<size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    if (sgn(u[static_cast<size_t>(n)]) == 0) continue;
    BigRational x(u[static_cast<size_t>(n)] * B.den, A.den * b0pow[static_cast<size_t>(n + 1)]);
    x.canonicalize();
    q[static_cast<size_t>(n)] = std::move(x);
  }
  return TruncatedSeries(std::move(q), a.variable());
}

Composer::Composer(const TruncatedSeries& inner, int max_power) : order_(inner.order()), var_(inner.variable()) {
  if (sgn(inner[0]) != 0) throw CompositionError("inner series has nonzero constant term");
  auto v = inner.valuation();
  int kmax = max_power;
  if (v) kmax = std::min(kmax, order_ / *v);
  else kmax = 0;
  IntegerVector g = to_integers(inner.coefficients(), order_);
  powers_.resize(static_cast<size_t>(kmax) + 1);
  denominators_.resize(static_cast<size_t>(kmax) + 1);
  powers_[0].assign(static_cast<size_t>(order_) + 1, BigInt(0));
  powers_[0][0] = 1;
  denominators_[0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    powers_[static_cast<size_t>(k)] = convolve(powers_[static_cast<size_t>(k - 1)], g.num, order_);
    denominators_[static_cast<size_t>(k)] = denominators_[static_cast<size_t>(k - 1)] * g.den;
  }
}

TruncatedSeries Composer::operator()(const TruncatedSeries& f) const {
  int m = std::min(order_, f.order());
  int kmax = std::min(static_cast<int>(powers_.size()) - 1, f.order());
  IntegerVector F = to_integers(f.coefficients(), f.order());
  const BigInt& dmax = denominators_[static_cast<size_t>(kmax)];
  std::vector<BigInt> acc(static_cast<size_t>(m) + 1);
  BigInt w;
  for (int k = 0; k <= kmax; ++k) {
    const BigInt& fk = F.num[static_cast<size_t>(k)];
    if (sgn(fk) == 0) continue;
    // scale term k to the common denominator dmax
    mpz_divexact(w.get_mpz_t(), dmax.get_mpz_t(), denominators_[static_cast<size_t>(k)].get_mpz_t());
    w *= fk;
    const auto& pk = powers_[static_cast<size_t>(k)];
    for (int n = 0; n <= m; ++n) {
      if (sgn(pk[static_cast<size_t>(n)]) == 0) continue;
      mpz_addmul(acc[static_cast<size_t>(n)].get_mpz_t(), w.get_mpz_t(), pk[static_cast<size_t>(n)].get_mpz_t());
    }
  }
  return from_integers_over(acc, F.den * dmax, f.variable());
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (sgn(g[0]) != 0) throw CompositionError("g(0) must vanish");
  int m = std::min(f.order(), g.order());
  Composer c(g.truncated(m), m);
  return c(f.truncated(m)).with_variable(g.variable());
}

TruncatedSeries revert(const TruncatedSeries& f) {
  int n = f.order();
  if (n < 1) throw ReversionError("order must be at least 1");
  if (sgn(f[0]) != 0) throw ReversionError("f(0) must vanish");
  if (sgn(f[1]) == 0) throw ReversionError("f'(0) must not vanish");
  // Lagrange: [u^k] w = (1/k) [w^{k-1}] phi^k with phi = w / f(w)
  TruncatedSeries h = shift_down(f, 1);  // order n-1
  TruncatedSeries phi = div(TruncatedSeries::one(n - 1, f.variable()), h);
  std::vector<BigRational> w(static_cast<size_t>(n) + 1);
  TruncatedSeries p = phi;
  for (int k = 1; k <= n; ++k) {
    w[static_cast<size_t>(k)] = p[k - 1] / k;
    if (k < n) p = mul(p, phi);
  }
  return TruncatedSeries(std::move(w), f.variable());
}

TruncatedSeries solve_polynomial_fixed_point(const BigRational& c, int d, int order, Variable var) {
  if (d < 1) throw DomainError("fixed point degree must be >= 1");
  if (order < 0) throw DomainError("negative order");
  // P = u^d by the power recurrence n P_n = sum_k ((d+1)k - n) u_k P_{n-k}
  std::vector<BigRational> u(static_cast<size_t>(order) + 1), p(static_cast<size_t>(order) + 1);
  u[0] = 1;
  p[0] = 1;
  for (int n = 1; n <= order; ++n) {
    u[static_cast<size_t>(n)] = c * p[static_cast<size_t>(n - 1)];
    BigRational acc;
    for (int k = 1; k <= n; ++k) {
      long w = static_cast<long>(d + 1) * k - n;
      if (w == 0) continue;
      acc += BigRational(w) * u[static_cast<size_t>(k)] * p[static_cast<size_t>(n - k)];
    }
    acc /= n;
    p[static_cast<size_t>(n)] = acc;
  }
  return TruncatedSeries(std::move(u), var);
}

TruncatedSeries dilog_series(int order) {
  std::vector<BigRational> c(static_cast<size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) c[static_cast<size_t>(k)] = BigRational(1, static_cast<unsigned long>(k) * k);
  return TruncatedSeries(std::move(c), Variable::t);
}

TruncatedSeries log_one_minus_series(int order) {
  std::vector<BigRational> c(static_cast<size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) c[static_cast<size_t>(k)] = BigRational(-1, k);
  return TruncatedSeries(std::move(c), Variable::t);
}

TruncatedSeries power(const TruncatedSeries& a, int e) {
  if (e < 0) throw DomainError("negative power");
  TruncatedSeries result = TruncatedSeries::one(a.order(), a.variable());
  TruncatedSeries base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

}  // namespace minbu
