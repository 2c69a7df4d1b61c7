#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "minbu/ladder/ladder.hpp"
#include "minbu/local/laws.hpp"
#include "minbu/maps/necks.hpp"
#include "minbu/maps/schaeffer.hpp"
#include "minbu/sampler/enumerate.hpp"
#include "minbu/sampler/experiment.hpp"
#include "minbu/sampler/samplers.hpp"
#include "minbu/scaling/scaling.hpp"

using namespace minbu;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void need(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

std::string fixed(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.need(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.need(s < budget_s, "took " + fixed(s, 2) + " s, budget " + fixed(budget_s, 0) + " s");
  if (!o.pass) ++failures;
  std::printf("%s %d %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), s, o.detail.c_str());
  std::fflush(stdout);
}

BigRational big(long x) { return BigRational(x); }

}  // namespace

int main() {
  criterion(1, "golden z table", 1, [](Outcome& o) {
    auto z = compute_z_families(3, 9);
    const auto& b = z.balanced;
    long p1[] = {0, 2, 1, 2, 6, 22, 91, 408, 1938, 9614};
    long p2[] = {0, 1, 1, 3, 11, 46, 209, 1006, 5053, 26227};
    long g2[] = {0, 1, 2, 7, 29, 132, 639, 3232, 16896, 90643};
    long e2[] = {0, 1, 1, 3, 12, 55, 272, 1411, 7565, 41560};
    long p3[] = {0, 0, 0, 0, 1, 9, 63, 405, 2512, 15333};
    long g3[] = {0, 0, 0, 0, 2, 20, 151, 1030, 6705, 42617};
    long e3[] = {0, 0, 0, 0, 1, 9, 64, 422, 2698, 17011};
    for (int n = 0; n <= 9; ++n) {
      std::string at = " at z^" + str(n);
      o.need(b.p.at(1, n) == big(p1[n]), "p1" + at);
      o.need(b.p.at(2, n) == big(p2[n]), "p2" + at);
      o.need(b.g.at(1, n) == big(p2[n]), "g1" + at);
      o.need(b.e.at(1, n) == big(p2[n]), "e1" + at);
      o.need(b.g.at(2, n) == big(g2[n]), "g2" + at);
      o.need(b.e.at(2, n) == big(e2[n]), "e2" + at);
      o.need(b.p.at(3, n) == big(p3[n]), "p3" + at);
      o.need(b.g.at(3, n) == big(g3[n]), "g3" + at);
      o.need(b.e.at(3, n) == big(e3[n]), "e3" + at);
    }
    o.note("70 coefficients");
  });

  criterion(2, "closed-form counts", 5, [](Outcome& o) {
    const int N = 100;
    auto z = compute_z_families(1, N);
    auto r = bulk_r(N);
    for (int n = 1; n <= N; ++n) {
      unsigned long u = static_cast<unsigned long>(n);
      BigRational p1 = BigRational(2 * factorial(3 * u - 3)) / BigRational(factorial(2 * u - 1) * factorial(u));
      BigRational rn = BigRational(factorial(3 * u)) / BigRational(factorial(2 * u + 1) * factorial(u));
      o.need(z.balanced.p.at(1, n) == p1, "p1 at z^" + str(n));
      o.need(r[n] == rn, "r at z^" + str(n));
    }
    o.note("n <= 100");
  });

  criterion(3, "identity battery N = 60, L = 40", 30, [](Outcome& o) {
    const int N = 60, L = 40;
    verify_conservation(compute_r_family(L + 1, N));
    verify_conservation(compute_R_family(L + 1, N));
    verify_substitution(L, N);
    auto z = compute_z_families(L, N);
    verify_convolution_reexpansion(z.marked, z.balanced);
    auto rules = sum_rules(N);
    o.need(rules.checks.size() >= 3, "only " + str(rules.checks.size()) + " sum rules");
    o.note(str(rules.checks.size()) + " sum rules");
  });

  criterion(4, "local-limit profiles", 5, [](Outcome& o) {
    auto p = mean_profile_rooted(3, 2);
    auto e = mean_profile_pointed(3, 2);
    o.need(p.V[0] == rational(133, 25) && p.V[1] == rational(1809, 125) && p.V[2] == rational(90747, 3125), "<V_l>");
    o.need(p.E[0] == rational(133, 25) && p.E[1] == rational(2727, 125) && p.E[2] == rational(598563, 12500), "<E_l>");
    o.need(e[0] == big(4) && e[1] == rational(432, 25) && e[2] == rational(5076, 125), "pointed <E_l>");
  });

  criterion(5, "minbu laws", 5, [](Outcome& o) {
    auto laws = neck_and_mother_laws(50, 4, 200, 200);
    const auto& P = laws.P.values;
    o.need(P.size() >= 5, "P table too short");
    if (P.size() >= 5) {
      o.need(P[0] == rational(1, 5) && P[1] == rational(7, 25) && P[2] == rational(79, 2500) &&
                 P[3] == rational(699, 50000) && P[4] == rational(1910211, 245000000),
             "P(0..4)");
    }
    auto A = A_H_series(202);
    for (int D = 0; D <= 200; ++D) {
      BigRational pi = A[D] / big(4);
      BigRational want = BigRational(4 * (5 + 2 * D)) / BigRational(static_cast<long>((D + 2) * (D + 2) * (D + 3) * (D + 3)));
      o.need(pi == want, "pi(" + str(D) + ")");
      o.need(laws.pi.values[static_cast<size_t>(D)] == want, "tabulated pi(" + str(D) + ")");
    }
    o.need(kernel_size_law(1, 0)[0] == rational(2, 7), "P_1(0)");
    o.need(same_minbu_probability(1) == rational(4, 7), "same minbu at l = 1");
    for (int m = 0; m <= 50; ++m) {
      BigRational c(0);
      for (int j = 0; j <= m; ++j) c += wp_law(j) * wp_law(m - j);
      o.need(c == w_law(m), "wp * wp at m = " + str(m));
      o.need(laws.w.values[static_cast<size_t>(m)] == w_law(m), "tabulated w(" + str(m) + ")");
    }
  });

  criterion(6, "numeric constants", 60, [](Outcome& o) {
    // A-hat(1) telescopes: sum_{l <= L} A_l = 4 - 16/(L+2)^2
    BigRational partial(0);
    for (int l = 1; l <= 400; ++l) {
      partial += A_closed(l);
      o.need(partial == big(4) - BigRational(16) / BigRational(static_cast<long>((l + 2) * (l + 2))), "A partial sum at " + str(l));
    }
    BigRational sum_P = big(1) - BigRational(16) / (BigRational(9) * big(4));
    o.need(sum_P == rational(5, 9), "sum P != 5/9");
    auto c = numeric_minbu_constants(4000);
    o.need(std::abs(c.sum_P_partial - 5.0 / 9) < 1e-6, "truncated sum P " + fixed(c.sum_P_partial, 8));
    double fn = 0.8 * (2 * M_PI * M_PI / 3 - 5), md = 2 * M_PI * M_PI / 3 - 5;
    o.need(std::abs(c.mean_first_neck - fn) < 1e-4, "mean first-neck distance " + fixed(c.mean_first_neck, 6));
    o.need(std::abs(c.mean_mother_distance - md) < 1e-4, "mean mother distance " + fixed(c.mean_mother_distance, 6));
    auto a = p1_singular_amplitude(400);
    o.need(a.relative_error() < 0.01, "p1 amplitude off by " + fixed(100 * a.relative_error(), 3) + "%");
    double raw = a.raw.empty() ? 0 : std::abs(a.raw.back() / a.target - 1);
    o.note("mean D " + fixed(c.mean_mother_distance, 6) + ", amplitude error " + str(100 * a.relative_error()) +
           "% extrapolated, " + fixed(100 * raw, 3) + "% at n = 400");
  });

  EnumerationCounts by_size[8];
  double enum_seconds = 0;

  criterion(7, "exhaustive oracle n <= 7", 600, [&](Outcome& o) {
    const int N = 7;
    auto t0 = std::chrono::steady_clock::now();
    EnumerationOptions opt;
    opt.check_maps = true;
    for (int n = 1; n <= N; ++n) by_size[n] = enumerate_planted_well_labeled_trees(n, opt);
    enum_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto z = compute_z_families(3, N);
    auto R = compute_R_family(N + 2, N);
    long long objects = 0;
    for (int n = 1; n <= N; ++n) {
      const auto& k = by_size[n];
      std::string at = " at n = " + str(n);
      auto count = [](long long x) { return BigRational(static_cast<long>(x)); };
      for (int l = 1; l <= 3; ++l) {
        o.need(count(k.at(k.wb_root_label, l)) == z.balanced.p.at(l, n), "p" + str(l) + at);
        o.need(count(k.at(k.wb_corner_label, l)) == z.balanced.g.at(l, n), "g" + str(l) + at);
        o.need(count(k.at(k.wb_vertex_label, l)) == z.balanced.e.at(l, n), "e" + str(l) + at);
      }
      for (int l = 1; l <= n + 1; ++l) {
        o.need(count(k.at(k.root_label, l)) == R.at(l, n) - R.at(l - 1, n), "Q" + str(l) + at);
      }
      o.need(k.equivalence_failures == 0, str(k.equivalence_failures) + " equivalence failures" + at);
      objects += k.total;
    }
    o.note(str(objects) + " trees");
  });

  criterion(8, "codec", 120 + enum_seconds, [&](Outcome& o) {
    long long maps = 0;
    for (int n = 1; n <= 7; ++n) {
      const auto& k = by_size[n];
      o.need(k.maps_checked > 0, "no maps checked at n = " + str(n));
      o.need(k.codec_failures == 0, str(k.codec_failures) + " codec failures at n = " + str(n));
      o.need(k.label_distance_failures == 0, str(k.label_distance_failures) + " label failures at n = " + str(n));
      maps += k.maps_checked;
    }
    const int n = 50, samples = 10000;
    long long bad = 0;
    for (int i = 0; i < samples; ++i) {
      RngStream rng(2024, static_cast<std::uint64_t>(i));
      LabeledPlaneTree t = sample_planted_well_labeled_tree(n, rng);
      int sign = rng.below(2) ? 1 : -1;
      QuadMap m = schaeffer_decode(t, sign);
      m.validate();
      auto d = bfs_distances(m, m.origin);
      for (int v = 0; v <= n; ++v) {
        if (d[static_cast<size_t>(v)] != t.labels[static_cast<size_t>(v)]) {
          ++bad;
          break;
        }
      }
      int back = 0;
      if (!(schaeffer_encode(m, &back) == t) || back != sign) ++bad;
    }
    o.need(bad == 0, str(bad) + " failures on random maps");
    o.note(str(maps) + " enumerated maps (checked during criterion 7), " + str(samples) + " random maps at n = 50");
  });

  criterion(9, "scaling limit", 30, [](Outcome& o) {
    double worst = 0, s = std::pow(3.0, 0.25);
    for (int i = 1; i <= 40; ++i) {
      double r = 0.15 * i;
      worst = std::max(worst, std::abs(density_nomulti(r).value - density_general(r / s).value / s));
    }
    o.need(worst < 1e-8, "rescaling residual " + str(worst));
    double a = density_integral(false) - 1, b = density_integral(true) - 1;
    o.need(std::abs(a) < 1e-6 && std::abs(b) < 1e-6, "integrals off by " + str(a) + ", " + str(b));
    double fd_gap = 0;
    for (double L : {0.3, 1.0, 2.5}) {
      for (double al : {0.5, 1.0, 2.0}) {
        double h = 1e-5;
        double fd = (scaling_F(L + h, al) - scaling_F(L - h, al)) / (2 * h);
        fd_gap = std::max(fd_gap, std::abs(fd - scaling_F_prime(L, al)) / std::max(1.0, std::abs(fd)));
      }
    }
    o.need(fd_gap < 1e-6, "F' gap " + str(fd_gap));
    auto rep = critical_scaling_check({1e-3, 1e-4, 1e-5}, {1.0, 2.0}, 0.05, 60);
    double target = 32.0 / 9;
    o.need(std::abs(rep.g_crit_scaled - target) < 0.05 * target,
           "g_60(4/27) 60^3 = " + fixed(rep.g_crit_scaled, 4) + ", target " + fixed(target, 4));
    o.note("rescaling residual " + str(worst) + ", g_60(4/27) 60^3 = " + fixed(rep.g_crit_scaled, 4));
  });

  criterion(10, "sampled laws", 900, [](Outcome& o) {
    ExperimentConfig c;
    c.n = 10000;
    c.samples = 20000;
    c.seed = 20240601;
    c.id = "mother-distance";
    auto d = run_experiment(c);
    double p0 = d.frequency(0);
    o.need(std::abs(p0 - 5.0 / 9) < 0.03, "P(D = 0) = " + fixed(p0));
    c.id = "necks-to-mother";
    auto m = run_experiment(c);
    double m0 = m.frequency(0);
    o.need(std::abs(m0 - 4.0 / 9) < 0.03, "P(m = 0) = " + fixed(m0));
    c.id = "root-label-profile";
    c.n = 30;
    c.samples = 1000000;
    auto q = run_experiment(c);
    o.need(q.p_value > 1e-3, "root label chi2 p = " + str(q.p_value));
    o.note("P(D = 0) = " + fixed(p0) + ", P(m = 0) = " + fixed(m0) + ", root label chi2 " + fixed(q.chi2, 2) + " on " +
           str(q.dof) + " dof, p = " + fixed(q.p_value, 4));
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
