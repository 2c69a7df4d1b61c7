#include "verify_suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"
#include "minbu/local/laws.hpp"
#include "minbu/maps/necks.hpp"
#include "minbu/maps/schaeffer.hpp"
#include "minbu/sampler/enumerate.hpp"
#include "minbu/sampler/samplers.hpp"
#include "minbu/scaling/scaling.hpp"

namespace minbu::cli {

namespace {

using Check = std::function<std::string()>;

struct Named {
  std::string name;
  Check run;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

template <class T>
std::string str(const T& x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

std::vector<Named> algebra(const VerifyConfig& c) {
  return {
      {"conservation r ladder", [c] { verify_conservation(compute_r_family(c.l_max + 1, c.order)); return std::string(); }},
      {"conservation R ladder", [c] { verify_conservation(compute_R_family(c.l_max + 1, c.order)); return std::string(); }},
      {"substitution identities for R F H and R1", [c] { verify_substitution(c.l_max, c.order); return std::string(); }},
      {"convolution re-expansion",
       [c] {
         auto z = compute_z_families(c.l_max, c.order);
         verify_convolution_reexpansion(z.marked, z.balanced);
         return std::string();
       }},
      {"sum rules",
       [c] {
         auto rep = sum_rules(c.order);
         return str(rep.checks.size()) + " rules";
       }},
      {"closed-form counts p1 and r",
       [c] {
         auto z = compute_z_families(1, c.order);
         auto r = bulk_r(c.order);
         for (int n = 1; n <= c.order; ++n) {
           unsigned long u = static_cast<unsigned long>(n);
           BigRational p1 = BigRational(2 * factorial(3 * u - 3)) / BigRational(factorial(2 * u - 1) * factorial(u));
           BigRational rn = BigRational(factorial(3 * u)) / BigRational(factorial(2 * u + 1) * factorial(u));
           expect(z.balanced.p.at(1, n) == p1, "p1 at z^" + str(n));
           expect(r[n] == rn, "r at z^" + str(n));
         }
         return std::string();
       }},
  };
}

std::vector<Named> local(const VerifyConfig&) {
  return {
      {"mean profiles",
       [] {
         auto p = mean_profile_rooted(3, 2);
         auto e = mean_profile_pointed(3, 2);
         expect(p.V[0] == rational(133, 25) && p.V[1] == rational(1809, 125) && p.V[2] == rational(90747, 3125), "<V_l>");
         expect(p.E[0] == rational(133, 25) && p.E[1] == rational(2727, 125) && p.E[2] == rational(598563, 12500), "<E_l>");
         expect(e[0] == 4 && e[1] == rational(432, 25) && e[2] == rational(5076, 125), "pointed <E_l>");
         return std::string();
       }},
      {"neck and mother laws", [] { neck_and_mother_laws(50, 20, 200, 200); return std::string(); }},
      {"first-neck law",
       [] {
         auto P = first_neck_law(4);
         expect(P[0] == rational(1, 5) && P[1] == rational(7, 25) && P[2] == rational(79, 2500) &&
                    P[3] == rational(699, 50000) && P[4] == rational(1910211, 245000000),
                "P(0..4)");
         return std::string();
       }},
      {"kernel at l = 1",
       [] {
         expect(kernel_size_law(1, 0)[0] == rational(2, 7), "P_1(0) = 2/7");
         expect(same_minbu_probability(1) == rational(4, 7), "same minbu at l = 1");
         return std::string();
       }},
  };
}

std::vector<Named> codec(const VerifyConfig& c) {
  return {
      {"exhaustive round trips",
       [c] {
         long long maps = 0;
         for (int n = 1; n <= c.enum_max; ++n) {
           EnumerationOptions o;
           o.check_maps = true;
           auto k = enumerate_planted_well_labeled_trees(n, o);
           expect(k.codec_failures == 0, "codec failure at n = " + str(n));
           expect(k.label_distance_failures == 0, "labels differ from distances at n = " + str(n));
           expect(k.equivalence_failures == 0, "well-balanced vs simple at n = " + str(n));
           maps += k.maps_checked;
         }
         return str(maps) + " maps";
       }},
      {"random round trips and necks",
       [c] {
         for (int i = 0; i < c.random_maps; ++i) {
           RngStream rng(c.seed, static_cast<std::uint64_t>(i));
           LabeledPlaneTree t = sample_planted_well_labeled_tree(c.random_n, rng);
           int sign = rng.below(2) ? 1 : -1;
           QuadMap m = schaeffer_decode(t, sign);
           m.validate();
           int back_sign = 0;
           expect(schaeffer_encode(m, &back_sign) == t && back_sign == sign, "round trip, sample " + str(i));
           auto d = neck_decompose(m);
           int faces = 0;
           for (int f : d.faces) faces += f;
           expect(faces == c.random_n, "face conservation");
           expect(static_cast<int>(d.tree.size()) == d.component_count() - 1, "component tree size");
           for (const auto& q : d.components) {
             q.validate();
             expect(!has_multiple_edges(q), "component with a multiple edge");
           }
           expect(d.faces[0] == *std::max_element(d.faces.begin(), d.faces.end()), "mother is largest");
         }
         return str(c.random_maps) + " maps at n = " + str(c.random_n);
       }},
  };
}

std::vector<Named> enumeration(const VerifyConfig& c) {
  return {
      {"enumeration vs series",
       [c] {
         int N = c.enum_max;
         auto z = compute_z_families(3, N);
         auto R = compute_R_family(N + 1, N);
         for (int n = 1; n <= N; ++n) {
           auto k = enumerate_planted_well_labeled_trees(n);
           for (int l = 1; l <= 3; ++l) {
             expect(BigRational(static_cast<long>(k.at(k.wb_root_label, l))) == z.balanced.p.at(l, n), "p_" + str(l) + " at n = " + str(n));
             expect(BigRational(static_cast<long>(k.at(k.wb_corner_label, l))) == z.balanced.g.at(l, n), "g_" + str(l) + " at n = " + str(n));
             expect(BigRational(static_cast<long>(k.at(k.wb_vertex_label, l))) == z.balanced.e.at(l, n), "e_" + str(l) + " at n = " + str(n));
           }
           for (int l = 1; l <= n + 1; ++l) {
             expect(BigRational(static_cast<long>(k.at(k.root_label, l))) == R.at(l, n) - R.at(l - 1, n), "Q_" + str(l) + " at n = " + str(n));
           }
         }
         return "n <= " + str(N);
       }},
  };
}

std::vector<Named> scaling(const VerifyConfig&) {
  return {
      {"rescaling identity",
       [] {
         double worst = 0, s = std::pow(3.0, 0.25);
         for (int i = 1; i <= 40; ++i) {
           double r = 0.15 * i;
           worst = std::max(worst, std::abs(density_nomulti(r).value - density_general(r / s).value / s));
         }
         expect(worst < 1e-8, "residual " + str(worst));
         return "max residual " + str(worst);
       }},
      {"normalization",
       [] {
         double a = density_integral(false) - 1, b = density_integral(true) - 1;
         expect(std::abs(a) < 1e-6 && std::abs(b) < 1e-6, "integrals off by " + str(a) + ", " + str(b));
         return std::string();
       }},
      {"F' vs finite differences",
       [] {
         double worst = 0;
         for (double L : {0.3, 1.0, 2.5}) {
           for (double a : {0.5, 1.0, 2.0}) {
             double h = 1e-5;
             double fd = (scaling_F(L + h, a) - scaling_F(L - h, a)) / (2 * h);
             worst = std::max(worst, std::abs(fd - scaling_F_prime(L, a)) / std::max(1.0, std::abs(fd)));
           }
         }
         expect(worst < 1e-6, "relative gap " + str(worst));
         return std::string();
       }},
  };
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "local", "codec", "enumeration", "scaling"};
  return names;
}

std::vector<CheckResult> run_suites(const std::string& suite, const VerifyConfig& config,
                                    const std::function<void(const CheckResult&)>& progress) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown suite '" + suite + "'");
  }
  std::vector<CheckResult> out;
  for (const auto& s : names) {
    if (suite != "all" && suite != s) continue;
    std::vector<Named> checks = s == "algebra"       ? algebra(config)
                                : s == "local"       ? local(config)
                                : s == "codec"       ? codec(config)
                                : s == "enumeration" ? enumeration(config)
                                                     : scaling(config);
    for (auto& ch : checks) {
      CheckResult r;
      r.suite = s;
      r.name = ch.name;
      auto t0 = std::chrono::steady_clock::now();
      try {
        r.detail = ch.run();
        r.pass = true;
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (progress) progress(r);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace minbu::cli
