#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "minbu/errors.hpp"
#include "minbu/scaling/scaling.hpp"

namespace minbu {

namespace {

using cplx = std::complex<double>;

struct Rule {
  std::vector<double> x, w;  // nodes and weights on [-1, 1]
};

template <unsigned N>
Rule make_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  Rule r;
  const auto& a = G::abscissa();
  const auto& wt = G::weights();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      r.x.push_back(0);
      r.w.push_back(wt[i]);
      continue;
    }
    r.x.push_back(a[i]);
    r.w.push_back(wt[i]);
    r.x.push_back(-a[i]);
    r.w.push_back(wt[i]);
  }
  return r;
}

const Rule& rule(int n) {
  static const Rule r20 = make_rule<20>();
  static const Rule r40 = make_rule<40>();
  if (n == 20) return r20;
  if (n == 40) return r40;
  throw DomainError("nodes_per_panel must be 20 or 40, got " + std::to_string(n));
}

std::string scheme_id(const QuadratureSpec& q) {
  return "gl-geometric-" + std::to_string(q.panels) + "x" + std::to_string(q.nodes_per_panel);
}

// pref * int_R dzeta i zeta e^{-zeta^2} F'(r; base sqrt(-i zeta))
ScalingEval density(double r, double pref, double base, const QuadratureSpec& q) {
  if (!(r > 0)) throw DomainError("r must be positive");
  if (q.panels < 1 || !(q.zeta_min > 0) || !(q.zeta_cutoff > q.zeta_min)) throw DomainError("bad quadrature spec");
  const Rule& R = rule(q.nodes_per_panel);
  double ratio = std::pow(q.zeta_cutoff / q.zeta_min, 1.0 / q.panels);
  cplx sum = 0;
  double lo = q.zeta_min;
  for (int p = 0; p < q.panels; ++p) {
    double hi = lo * ratio;
    double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
    for (size_t i = 0; i < R.x.size(); ++i) {
      double zeta = mid + half * R.x[i];
      double w = half * R.w[i] * zeta * std::exp(-zeta * zeta);
      for (double s : {1.0, -1.0}) {
        // principal branch of sqrt(-i zeta)
        cplx alpha = base * std::sqrt(cplx(0, -s * zeta));
        sum += cplx(0, s) * w * scaling_F_prime(r, alpha);
      }
    }
    lo = hi;
  }
  sum *= pref;
  ScalingEval ev;
  ev.r = r;
  ev.alpha = base;
  ev.quadrature = {q.zeta_cutoff, 2 * q.panels * q.nodes_per_panel, scheme_id(q)};
  ev.value = sum.real();
  ev.imag_residual = std::abs(sum.imag());
  if (ev.imag_residual > 1e-8 * std::abs(ev.value) + 1e-15) {
    throw QuadratureError("imaginary residual " + std::to_string(ev.imag_residual) + " at r = " + std::to_string(r) +
                          " (" + std::to_string(ev.quadrature.node_count) + " nodes, cutoff " +
                          std::to_string(q.zeta_cutoff) + ")");
  }
  return ev;
}

}  // namespace

ScalingEval density_general(double r, const QuadratureSpec& q) {
  return density(r, 2.0 / std::sqrt(std::numbers::pi), std::sqrt(1.5), q);
}

ScalingEval density_nomulti(double r, const QuadratureSpec& q) {
  return density(r, 2.0 * std::sqrt(3.0) / std::sqrt(std::numbers::pi), std::pow(3.0, 0.25) / std::sqrt(2.0), q);
}

double density_integral(bool nomulti, double r_max, const QuadratureSpec& q) {
  if (!(r_max > 0)) throw DomainError("r_max must be positive");
  const Rule& R = rule(20);
  int panels = static_cast<int>(std::ceil(r_max / 0.25));
  double width = r_max / panels;
  double total = 0;
  for (int p = 0; p < panels; ++p) {
    double mid = (p + 0.5) * width;
    for (size_t i = 0; i < R.x.size(); ++i) {
      double r = mid + 0.5 * width * R.x[i];
      double v = nomulti ? density_nomulti(r, q).value : density_general(r, q).value;
      total += 0.5 * width * R.w[i] * v;
    }
  }
  return total;
}

}  // namespace minbu
