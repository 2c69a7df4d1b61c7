#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>

#include "minbu/errors.hpp"
#include "minbu/local/laws.hpp"
#include "minbu/scaling/scaling.hpp"

namespace minbu {

namespace {

// r = 1 + z r^3 with 1 - 27z/4 = eta^2; returns d = 3 - 2r, using eta^2 = d^2 (r+3)/(4 r^3)
double solve_d(double eta) {
  auto f = [eta](double d) {
    double r = (3.0 - d) / 2.0;
    return d * std::sqrt((r + 3.0) / (4.0 * r * r * r)) - eta;
  };
  auto tol = boost::math::tools::eps_tolerance<double>(52);
  auto [lo, hi] = boost::math::tools::bisect(f, 0.0, 1.0, tol);
  return 0.5 * (lo + hi);
}

}  // namespace

LadderValues ladder_values(double eta, int l_max) {
  if (!(eta >= 0 && eta < 1)) throw DomainError("eta must lie in [0, 1)");
  if (l_max < 1) throw DomainError("l_max must be >= 1");
  std::vector<double> r(static_cast<size_t>(l_max) + 2);
  if (eta == 0) {
    for (int l = 0; l <= l_max + 1; ++l) r[static_cast<size_t>(l)] = 1.5 * l * (l + 3.0) / ((l + 1.0) * (l + 2.0));
  } else {
    double d = solve_d(eta);
    double rb = (3.0 - d) / 2.0;
    // y + 1/y + 1 = 1/(z r^2) = r/(r-1), so c = y + 1/y = 2 + d/(r-1)
    double cm2 = d / (rb - 1.0);
    double y = (2.0 + cm2 - std::sqrt(cm2 * (4.0 + cm2))) / 2.0;
    double ly = std::log(y);
    auto om = [ly](int k) { return -std::expm1(k * ly); };
    for (int l = 0; l <= l_max + 1; ++l) {
      r[static_cast<size_t>(l)] = l == 0 ? 0.0 : rb * om(l) * om(l + 3) / (om(l + 1) * om(l + 2));
    }
  }
  LadderValues out;
  out.h.assign(static_cast<size_t>(l_max) + 1, 0.0);
  out.g.assign(static_cast<size_t>(l_max) + 1, 0.0);
  for (int l = 1; l <= l_max; ++l) {
    size_t i = static_cast<size_t>(l);
    out.h[i] = r[i] * (r[i + 1] - r[i - 1]);
  }
  // h_l = delta_{l,1} + sum_{k<=l} g_k h_{l+1-k}
  for (int l = 1; l <= l_max; ++l) {
    double acc = out.h[static_cast<size_t>(l)] - (l == 1 ? 1.0 : 0.0);
    for (int k = 1; k < l; ++k) acc -= out.g[static_cast<size_t>(k)] * out.h[static_cast<size_t>(l + 1 - k)];
    out.g[static_cast<size_t>(l)] = acc / out.h[1];
  }
  return out;
}

CriticalReport critical_scaling_check(const std::vector<double>& eta_list, const std::vector<double>& L_list,
                                      double tol, int l_crit) {
  if (eta_list.empty() || L_list.empty()) throw DomainError("eta and L lists must be nonempty");
  if (l_crit < 1) throw DomainError("l_crit must be >= 1");
  std::vector<double> etas = eta_list;
  std::sort(etas.begin(), etas.end(), std::greater<>());
  for (double e : etas) {
    if (!(e > 0 && e < 1)) throw DomainError("eta values must lie in (0, 1)");
  }
  for (double L : L_list) {
    if (!(L > 0)) throw DomainError("L values must be positive");
  }
  const double alpha = std::pow(3.0, 0.25) / std::sqrt(2.0);
  CriticalReport rep;
  rep.l_crit = l_crit;
  std::ostringstream problems;

  for (double eta : etas) {
    int l_top = 1;
    for (double L : L_list) l_top = std::max(l_top, static_cast<int>(std::lround(L / std::sqrt(eta))));
    auto vals = ladder_values(eta, l_top);
    for (double Lt : L_list) {
      CriticalRow row;
      row.eta = eta;
      row.L_target = Lt;
      row.l = std::max(1, static_cast<int>(std::lround(Lt / std::sqrt(eta))));
      row.L = row.l * std::sqrt(eta);
      row.h = vals.h[static_cast<size_t>(row.l)];
      row.g = vals.g[static_cast<size_t>(row.l)];
      row.F_prime = scaling_F_prime(row.L, alpha);
      double e32 = std::pow(eta, 1.5);
      row.ratio_h = row.h / (-4.5 * e32 * row.F_prime);
      row.ratio_g = row.g / (-(8.0 / 9.0) * e32 * row.F_prime);
      rep.rows.push_back(row);
    }
  }
  // each L column must approach 1 as eta decreases
  size_t nL = L_list.size();
  for (size_t j = 0; j < nL; ++j) {
    double prev_h = INFINITY, prev_g = INFINITY;
    for (size_t i = 0; i < etas.size(); ++i) {
      const auto& row = rep.rows[i * nL + j];
      double dh = std::abs(row.ratio_h - 1), dg = std::abs(row.ratio_g - 1);
      if (dh > prev_h || dg > prev_g) {
        problems << "ratio moved away from 1 at eta=" << row.eta << " L=" << row.L_target << "; ";
      }
      prev_h = dh;
      prev_g = dg;
    }
    if (prev_h > tol || prev_g > tol) {
      const auto& row = rep.rows[(etas.size() - 1) * nL + j];
      problems << "at eta=" << row.eta << " L=" << row.L_target << " ratios h=" << row.ratio_h
               << " g=" << row.ratio_g << " exceed tolerance " << tol << "; ";
    }
  }

  auto crit = ladder_values(0.0, l_crit);
  rep.g_crit = crit.g[static_cast<size_t>(l_crit)];
  rep.g_crit_scaled = rep.g_crit * std::pow(static_cast<double>(l_crit), 3);
  rep.h_crit = crit.h[static_cast<size_t>(l_crit)];
  rep.h_crit_closed = to_double(h_critical(l_crit));
  if (std::abs(rep.h_crit / rep.h_crit_closed - 1) > 1e-9) {
    problems << "h_l(4/27) ladder value " << rep.h_crit << " vs closed form " << rep.h_crit_closed << "; ";
  }
  rep.g_crit_within_tol = std::abs(rep.g_crit_scaled / (32.0 / 9.0) - 1) <= tol;
  auto trend = ladder_values(0.0, 8 * l_crit);
  for (int l = l_crit; l <= 8 * l_crit; l *= 2) {
    rep.g_crit_trend.emplace_back(l, trend.g[static_cast<size_t>(l)] * std::pow(static_cast<double>(l), 3));
  }
  std::string msg = problems.str();
  if (!msg.empty()) throw ConvergenceError(msg);
  return rep;
}

}  // namespace minbu
