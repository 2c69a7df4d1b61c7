#include <doctest.h>

#include <cmath>

#include "minbu/errors.hpp"
#include "minbu/scaling/scaling.hpp"

using namespace minbu;

TEST_CASE("F and F' on the real line") {
  double L = 0.7, a = 1.3;
  double s = std::sinh(a * L);
  CHECK(scaling_F(L, a) == doctest::Approx(2 * a * a / 3 * (1 + 3 / (s * s))));
  double h = 1e-5;
  double fd = (scaling_F(L + h, a) - scaling_F(L - h, a)) / (2 * h);
  CHECK(std::abs(fd - scaling_F_prime(L, a)) < 1e-6 * std::abs(fd));
  // the stable branch takes over for large aL
  CHECK(scaling_F_prime(40.0, 1.0) < 0);
  CHECK(std::isfinite(scaling_F_prime(400.0, 1.0)));
}

TEST_CASE("complex arguments reduce to real ones") {
  auto z = scaling_F(0.9, std::complex<double>(1.1, 0.0));
  CHECK(z.real() == doctest::Approx(scaling_F(0.9, 1.1)));
  CHECK(std::abs(z.imag()) < 1e-14);
  auto w = scaling_F_prime(0.9, std::complex<double>(-1.1, 0.0));
  CHECK(w.real() == doctest::Approx(scaling_F_prime(0.9, 1.1)));
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(scaling_F(0.0, 1.0), SingularityError);
  CHECK_THROWS_AS(scaling_F_prime(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(density_general(-1.0), DomainError);
}

TEST_CASE("densities: rescaling, positivity, quadrature refinement") {
  double s = std::pow(3.0, 0.25);
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    auto rt = density_nomulti(r);
    CHECK(std::abs(rt.value - density_general(r / s).value / s) < 1e-8);
    CHECK(rt.value > 0);
    CHECK(rt.imag_residual <= 1e-8 * rt.value + 1e-15);
    QuadratureSpec q;
    q.nodes_per_panel = 40;
    CHECK(std::abs(density_general(r, q).value - density_general(r).value) < 1e-10);
  }
  CHECK(density_general(1.0).quadrature.node_count > 0);
}

TEST_CASE("densities integrate to one") {
  CHECK(std::abs(density_integral(false) - 1) < 1e-6);
  CHECK(std::abs(density_integral(true) - 1) < 1e-6);
}

TEST_CASE("ladder values at the critical point") {
  auto v = ladder_values(0.0, 10);
  for (int l = 1; l <= 10; ++l) {
    double want = 9.0 * (2 * l + 3) / ((l + 1.0) * (l + 1) * (l + 2) * (l + 2));
    CHECK(v.h[static_cast<size_t>(l)] == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("approach to the scaling function") {
  auto rep = critical_scaling_check({1e-3, 1e-4, 1e-5}, {1.0, 2.0});
  CHECK(rep.rows.size() == 6);
  CHECK(std::abs(rep.h_crit - rep.h_crit_closed) < 1e-9 * rep.h_crit_closed);
  for (const auto& r : rep.rows) {
    if (r.eta == 1e-5) CHECK(std::abs(r.ratio_h - 1) < 0.05);
  }
  // g_l(4/27) l^3 creeps up to 32/9
  for (size_t i = 1; i < rep.g_crit_trend.size(); ++i) {
    CHECK(rep.g_crit_trend[i].second > rep.g_crit_trend[i - 1].second);
    CHECK(rep.g_crit_trend[i].second < 32.0 / 9);
  }
}
