#include <doctest.h>

#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"

using namespace minbu;

TEST_CASE("r_1 = 1 and r_2 = 1 + z + 2z^2 + 6z^3 + 22z^4") {
  auto r = compute_r_family(2, 5);
  for (int n = 0; n <= 5; ++n) CHECK(r.at(1, n) == (n == 0 ? 1 : 0));
  long want[] = {1, 1, 2, 6, 22};
  for (int n = 0; n <= 4; ++n) CHECK(r.at(2, n) == want[n]);
}

TEST_CASE("R = 1 + 3 g R^2 counts rooted quadrangulations") {
  auto R = bulk_R(4);
  long want[] = {1, 3, 18, 135, 1134};
  for (int n = 0; n <= 4; ++n) CHECK(R[n] == want[n]);
}

TEST_CASE("small z table of p, g, e") {
  auto z = compute_z_families(3, 9);
  long p1[] = {0, 2, 1, 2, 6, 22, 91, 408, 1938, 9614};
  long g2[] = {0, 1, 2, 7, 29, 132, 639, 3232, 16896, 90643};
  long e3[] = {0, 0, 0, 0, 1, 9, 64, 422, 2698, 17011};
  for (int n = 0; n <= 9; ++n) {
    CHECK(z.balanced.p.at(1, n) == p1[n]);
    CHECK(z.balanced.g.at(2, n) == g2[n]);
    CHECK(z.balanced.e.at(3, n) == e3[n]);
    CHECK(z.balanced.p.at(2, n) == z.balanced.g.at(1, n));
    CHECK(z.balanced.e.at(1, n) == z.balanced.g.at(1, n));
  }
}

TEST_CASE("identity battery at a small order") {
  CHECK_NOTHROW(verify_conservation(compute_r_family(8, 12)));
  CHECK_NOTHROW(verify_conservation(compute_R_family(8, 12)));
  CHECK_NOTHROW(verify_substitution(6, 12));
  auto z = compute_z_families(6, 12);
  CHECK_NOTHROW(verify_convolution_reexpansion(z.marked, z.balanced));
  CHECK(sum_rules(12).checks.size() >= 3);
}

TEST_CASE("family names") {
  CHECK(parse_family("H") == FamilyId::H);
  CHECK(std::string(family_name(FamilyId::e)) == "e");
  CHECK_THROWS_AS(parse_family("x"), DomainError);
  CHECK_THROWS_AS(compute_r_family(0, 3), DomainError);
}

TEST_CASE("no-multiple-edge 2p-angulations at p = 2 match p_1") {
  auto q = twop_angulation_root_gf(2, 8);
  auto z = compute_z_families(1, 8);
  for (int n = 1; n <= 8; ++n) CHECK(q[n] == z.balanced.p.at(1, n));
}
