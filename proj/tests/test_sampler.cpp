#include <doctest.h>

#include <cmath>
#include <map>

#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"
#include "minbu/maps/necks.hpp"
#include "minbu/maps/schaeffer.hpp"
#include "minbu/sampler/enumerate.hpp"
#include "minbu/sampler/experiment.hpp"
#include "minbu/sampler/report.hpp"

using namespace minbu;

TEST_CASE("rng streams are keyed and replayable") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  for (int i = 0; i < 10; ++i) {
    auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
    CHECK(x != d.next());
  }
  RngStream u(1, 0);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) ++hist[u.below(7)];
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
  double x = u.uniform();
  CHECK(x >= 0.0);
  CHECK(x < 1.0);
}

TEST_CASE("plane trees at n = 3 are uniform over the 5 shapes") {
  std::map<std::vector<int>, int> hist;
  const int N = 100000;
  for (int i = 0; i < N; ++i) {
    RngStream r(5, static_cast<std::uint64_t>(i));
    auto t = sample_plane_tree(3, r);
    t.validate_shape();
    ++hist[t.parent];
  }
  CHECK(hist.size() == 5);
  double chi2 = 0;
  for (const auto& [k, v] : hist) chi2 += (v - N / 5.0) * (v - N / 5.0) / (N / 5.0);
  CHECK(chi_square_p_value(chi2, 4) > 1e-3);
  RngStream r(1, 0);
  CHECK(sample_plane_tree(1, r).parent == std::vector<int>{-1, 0});
}

TEST_CASE("planted well-labeled trees at n = 1 and n = 2") {
  std::map<std::vector<int>, int> one;
  std::map<int, int> root;
  const int N = 100000;
  for (int i = 0; i < N; ++i) {
    RngStream r(9, static_cast<std::uint64_t>(i));
    auto t = sample_planted_well_labeled_tree(1, r);
    ++one[t.labels];
    auto u = sample_planted_well_labeled_tree(2, r);
    CHECK(u.is_well_labeled());
    ++root[u.root_label()];
  }
  CHECK(one.size() == 3);
  for (const auto& [k, v] : one) CHECK(std::abs(v - N / 3.0) < 3 * std::sqrt(N * (1 / 3.0) * (2 / 3.0)));
  double want[] = {0, 9 / 18.0, 8 / 18.0, 1 / 18.0};
  for (int l = 1; l <= 3; ++l) CHECK(std::abs(root[l] - N * want[l]) < 3 * std::sqrt(N * want[l] * (1 - want[l])));
}

TEST_CASE("rooted sampler: both methods give the two n = 1 maps uniformly") {
  for (auto method : {RootedMethod::sign, RootedMethod::rejection}) {
    std::map<std::vector<int>, int> hist;
    RootedSampleStats st;
    for (int i = 0; i < 20000; ++i) {
      RngStream r(3, static_cast<std::uint64_t>(i));
      QuadMap m = sample_rooted_quadrangulation(1, r, method, &st);
      m.validate();
      QuadMap unpointed = m;
      unpointed.origin = -1;
      ++hist[canonical_code(unpointed)];
    }
    CHECK(hist.size() == 2);
    for (const auto& [k, v] : hist) CHECK(std::abs(v - 10000) < 450);
    if (method == RootedMethod::rejection) CHECK(st.acceptance() == doctest::Approx(2.0 / 3).epsilon(0.03));
  }
}

TEST_CASE("rooted sampler at n = 3 is uniform over the 54 rooted maps") {
  std::map<std::vector<int>, int> hist;
  const int N = 108000;
  for (int i = 0; i < N; ++i) {
    RngStream r(11, static_cast<std::uint64_t>(i));
    QuadMap m = sample_rooted_quadrangulation(3, r);
    m.origin = -1;
    ++hist[canonical_code(m)];
  }
  CHECK(hist.size() == 54);
  double chi2 = 0, e = N / 54.0;
  for (const auto& [k, v] : hist) chi2 += (v - e) * (v - e) / e;
  CHECK(chi_square_p_value(chi2, 53) > 1e-3);
}

TEST_CASE("enumeration counts") {
  auto c = enumerate_planted_well_labeled_trees(2);
  CHECK(c.total == 18);
  CHECK(c.root_label == std::vector<long long>{0, 9, 8, 1});
  CHECK_THROWS_AS(enumerate_planted_well_labeled_trees(10), SizeError);
  auto z = compute_z_families(3, 5);
  for (int n = 1; n <= 5; ++n) {
    EnumerationOptions o;
    o.check_maps = true;
    auto k = enumerate_planted_well_labeled_trees(n, o);
    CHECK(k.codec_failures == 0);
    CHECK(k.equivalence_failures == 0);
    CHECK(k.label_distance_failures == 0);
    for (int l = 1; l <= 3; ++l) {
      CHECK(BigRational(static_cast<long>(k.at(k.wb_root_label, l))) == z.balanced.p.at(l, n));
      CHECK(BigRational(static_cast<long>(k.at(k.wb_corner_label, l))) == z.balanced.g.at(l, n));
      CHECK(BigRational(static_cast<long>(k.at(k.wb_vertex_label, l))) == z.balanced.e.at(l, n));
    }
  }
}

TEST_CASE("root-label law at n = 2") {
  auto q = root_label_law(2);
  CHECK(q == std::vector<BigRational>{rational(1, 2), rational(4, 9), rational(1, 18)});
}

TEST_CASE("bin pooling") {
  auto g = pool_bins({50, 20, 5, 3, 1, 0.5});
  CHECK(g == std::vector<int>{0, 1, 1, 1, 1, 1});
  auto h = pool_bins({3, 3, 3, 30});
  CHECK(h == std::vector<int>{0, 0, 0, 0});
  CHECK(chi_square_p_value(0.0, 3) == doctest::Approx(1.0));
  CHECK(chi_square_p_value(11.345, 3) == doctest::Approx(0.01).epsilon(0.01));
}

TEST_CASE("experiments are reproducible across worker counts") {
  for (const std::string id : {"mother-distance", "kernel-size", "same-minbu", "root-label-profile"}) {
    ExperimentConfig c;
    c.id = id;
    c.n = 60;
    c.samples = 400;
    c.seed = 17;
    c.workers = 1;
    auto a = run_experiment(c);
    c.workers = 3;
    auto b = run_experiment(c);
    CHECK(report_to_csv(a) == report_to_csv(b));
    CHECK(report_to_json(a, false) != "");
    long long total = 0;
    for (const auto& bin : a.bins) total += bin.count;
    CHECK(total == a.weight_total);
    if (!a.edge_weighted) CHECK(total == c.samples);
  }
}

TEST_CASE("experiment budget and ids") {
  ExperimentConfig c;
  c.id = "nope";
  CHECK_THROWS_AS(run_experiment(c), DomainError);
  c.id = "mother-distance";
  c.n = 2000000;
  CHECK_THROWS_AS(check_experiment_budget(c), ResourceError);
  c.n = 500;
  c.id = "root-label-profile";
  CHECK_THROWS_AS(check_experiment_budget(c), ResourceError);
}

TEST_CASE("finite kernel law against all small maps") {
  const int N = 5;
  for (int l = 1; l <= 3; ++l) {
    for (int n = 1; n <= N; ++n) {
      std::map<long, long> count;
      long total = 0;
      for_each_planted_well_labeled_tree(n, [&](const LabeledPlaneTree& t) {
        if (t.root_label() != 1) return;
        QuadMap m = schaeffer_decode(t, 1);
        auto d = neck_decompose(m, false);
        auto dist = bfs_distances(m, m.root_vertex());
        if (l == 1) {
          ++count[0];
          ++total;
        }
        for (int h = 0; h < m.half_edge_count(); ++h) {
          int a = m.alpha[static_cast<size_t>(h)];
          if (a < h) continue;
          int du = dist[static_cast<size_t>(m.vertex_of[static_cast<size_t>(h)])];
          int dw = dist[static_cast<size_t>(m.vertex_of[static_cast<size_t>(a)])];
          if (std::min(du, dw) != l - 1 || std::max(du, dw) != l) continue;
          ++count[kernel_between(m, d, m.root, h).k];
          ++total;
        }
      });
      if (total == 0) {
        CHECK_THROWS_AS(kernel_size_law_finite(l, n, n), DomainError);
        continue;
      }
      auto law = kernel_size_law_finite(l, n, n);
      BigRational sum(0);
      for (int k = 0; k <= n; ++k) {
        CHECK(law[static_cast<size_t>(k)] * BigRational(total) == BigRational(count[k]));
        sum += law[static_cast<size_t>(k)];
      }
      CHECK(sum == BigRational(1));
    }
  }
}

TEST_CASE("kernel experiments at l = 1") {
  ExperimentConfig c;
  c.id = "kernel-size";
  c.n = 100;
  c.samples = 3000;
  c.seed = 5;
  auto k = run_experiment(c);
  CHECK(std::abs(k.bins[0].theory - 0.3036) < 1e-3);
  CHECK(k.p_value > 1e-3);
  c.id = "same-minbu";
  c.n = 400;
  auto r = run_experiment(c);
  MESSAGE("same-minbu at n = 400: " << r.frequency(1));
  CHECK(std::abs(r.frequency(1) - 4.0 / 7) < 0.05);
}
