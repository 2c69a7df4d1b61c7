#pragma once

#include <complex>
#include <string>
#include <vector>

namespace minbu {

// F(L; a) = (2a^2/3)(1 + 3/sinh^2(aL))
double scaling_F(double L, double alpha);
std::complex<double> scaling_F(double L, std::complex<double> alpha);
// dF/dL = -4 a^3 cosh(aL)/sinh^3(aL)
double scaling_F_prime(double L, double alpha);
std::complex<double> scaling_F_prime(double L, std::complex<double> alpha);

// composite Gauss-Legendre on each half line of zeta, geometric panels from zeta_min to zeta_cutoff
struct QuadratureSpec {
  double zeta_cutoff = 8.0;
  double zeta_min = 1e-6;
  int panels = 40;
  int nodes_per_panel = 20;  // 20 or 40
};

struct QuadratureInfo {
  double zeta_cutoff = 0;
  int node_count = 0;  // total over both half lines
  std::string scheme_id;
};

struct ScalingEval {
  double r = 0;
  double alpha = 0;  // alpha base multiplying sqrt(-i zeta)
  QuadratureInfo quadrature;
  double value = 0;
  double imag_residual = 0;
};

// rho(r), general quadrangulations
ScalingEval density_general(double r, const QuadratureSpec& q = {});
// rho-tilde(r), no multiple edges
ScalingEval density_nomulti(double r, const QuadratureSpec& q = {});

// int_0^r_max of rho (or rho-tilde) over panels of width <= 0.25
double density_integral(bool nomulti, double r_max = 12.0, const QuadratureSpec& q = {});

struct CriticalRow {
  double eta = 0;
  double L_target = 0;
  int l = 0;
  double L = 0;  // l sqrt(eta)
  double h = 0;
  double g = 0;
  double F_prime = 0;
  double ratio_h = 0;  // h / (-(9/2) eta^{3/2} F')
  double ratio_g = 0;  // g / (-(8/9) eta^{3/2} F')
};

struct CriticalReport {
  std::vector<CriticalRow> rows;
  int l_crit = 60;
  double g_crit = 0;         // g_l(4/27)
  double g_crit_scaled = 0;  // g_l(4/27) l^3, -> 32/9
  double h_crit = 0;         // h_l(4/27) from the ladder
  double h_crit_closed = 0;  // 9(2l+3)/((l+1)^2(l+2)^2)
  bool g_crit_within_tol = false;
  std::vector<std::pair<int, double>> g_crit_trend;  // (l, g_l(4/27) l^3) for l = l_crit, 2 l_crit, ...
};

// h_l(z) and g_l(z) for l = 0..l_max at z = (4/27)(1 - eta^2), eta >= 0, in double precision
struct LadderValues {
  std::vector<double> h, g;
};
LadderValues ladder_values(double eta, int l_max);

// rows for every (eta, L); throws ConvergenceError unless |ratio - 1| shrinks along each L column
// and is below tol at the smallest eta. The g_{l_crit}(4/27) l^3 check is reported, not thrown.
CriticalReport critical_scaling_check(const std::vector<double>& eta_list, const std::vector<double>& L_list,
                                      double tol = 0.05, int l_crit = 60);

}  // namespace minbu
