#include <doctest.h>

#include "minbu/errors.hpp"
#include "minbu/local/laws.hpp"

using namespace minbu;

TEST_CASE("mean profiles") {
  auto p = mean_profile_rooted(3, 2);
  CHECK(p.V[0] == rational(133, 25));
  CHECK(p.V[2] == rational(90747, 3125));
  CHECK(p.E[1] == rational(2727, 125));
  auto e = mean_profile_pointed(3, 2);
  CHECK(e[0] == 4);
  CHECK(e[2] == rational(5076, 125));
}

TEST_CASE("critical values") {
  CHECK(h_critical(1) == rational(45, 36));
  CHECK(A_closed(1) == rational(80, 36));
  auto a = A_H_series(6);
  for (int l = 1; l <= 7; ++l) CHECK(a[l - 1] == A_closed(l));
}

TEST_CASE("neck laws") {
  CHECK(pi_closed(0) == rational(5, 9));
  CHECK(pi_closed(1) == rational(7, 36));
  CHECK(wp_law(0) == rational(4, 9));
  CHECK(w_law(0) == rational(16, 81));
  CHECK_NOTHROW(neck_and_mother_laws(20, 10, 30, 30));
  auto P = first_neck_law(4);
  CHECK(P[3] == rational(699, 50000));
}

TEST_CASE("kernel laws") {
  CHECK(kernel_size_law(1, 3)[0] == rational(2, 7));
  CHECK(same_minbu_probability(1) == rational(4, 7));
  CHECK(minbu_two_point(1) == rational(6 * 4 * 5 * 8, 5 * 4 * 9));
  CHECK_THROWS_AS(kernel_size_law(0, 3), DomainError);
}

TEST_CASE("law table by id") {
  auto t = tabulate_law("pi-d", 0, 3);
  CHECK(t.values.size() == 4);
  CHECK(t.values[3] == rational(11, 225));
  CHECK_THROWS_AS(tabulate_law("nope", 0, 1), DomainError);
}

TEST_CASE("numeric constants") {
  auto c = numeric_minbu_constants(2000);
  CHECK(c.sum_P == doctest::Approx(5.0 / 9));
  CHECK(std::abs(c.mean_mother_distance - c.mean_mother_distance_target) < 1e-4);
  CHECK(std::abs(c.mean_first_neck - c.mean_first_neck_target) < 1e-4);
}

TEST_CASE("large-l profile ratios approach one slowly") {
  auto p = mean_profile_rooted(100, 100);
  auto e = mean_profile_pointed(100, 100);
  auto ratio = [](const BigRational& x, double den) { return x.get_d() / den; };
  double v50 = ratio(p.V[49], 50.0 * 50 * 50 / 7), v100 = ratio(p.V[99], 100.0 * 100 * 100 / 7);
  CHECK(v50 == doctest::Approx(1.28035).epsilon(1e-5));
  CHECK(v100 == doctest::Approx(1.14151).epsilon(1e-5));
  CHECK(ratio(e[99], 2.0 * 100 * 100 * 100 / 7) == doctest::Approx(1.12508).epsilon(1e-5));
  // 1 + c/l with c near 14
  CHECK(std::abs((v50 - 1) * 50 - (v100 - 1) * 100) < 0.5);
}
