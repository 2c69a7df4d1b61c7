#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>

#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"
#include "minbu/local/laws.hpp"
#include "minbu/maps/necks.hpp"
#include "minbu/sampler/experiment.hpp"

namespace minbu {

namespace {

// largest n for which the kernel law is taken at finite size
constexpr int kExactKernelMax = 400;


enum class Kind { mother_distance, necks_to_mother, root_label_profile, kernel_size, same_minbu };

Kind parse_kind(const std::string& id) {
  const auto& ids = experiment_ids();
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw DomainError("unknown experiment '" + id + "'");
  return static_cast<Kind>(it - ids.begin());
}

// per-group sums; for edge-weighted runs c is the number of marked edges of one
// sample falling in the group and N the sample's marked-edge total
struct Accumulator {
  std::vector<long long> bin_count;
  std::vector<long long> sc, scc, scn;
  long long sn = 0, snn = 0;

  Accumulator(size_t bins, size_t groups) : bin_count(bins, 0), sc(groups, 0), scc(groups, 0), scn(groups, 0) {}

  void merge(const Accumulator& o) {
    for (size_t i = 0; i < bin_count.size(); ++i) bin_count[i] += o.bin_count[i];
    for (size_t g = 0; g < sc.size(); ++g) {
      sc[g] += o.sc[g];
      scc[g] += o.scc[g];
      scn[g] += o.scn[g];
    }
    sn += o.sn;
    snn += o.snn;
  }
};

struct Setup {
  Kind kind;
  bool edge_weighted = false;
  std::vector<long> values;  // bin values, overflow last as -1
  std::vector<BigRational> theory;
};

Setup make_setup(const ExperimentConfig& c) {
  Setup s;
  s.kind = parse_kind(c.id);
  auto tail = [&](int last, auto law) {
    BigRational total = 0;
    for (int v = 0; v <= last; ++v) {
      s.values.push_back(v);
      s.theory.push_back(law(v));
      total += s.theory.back();
    }
    s.values.push_back(-1);
    s.theory.push_back(1 - total);
  };
  switch (s.kind) {
    case Kind::mother_distance:
      tail(c.max_value >= 0 ? c.max_value : 40, pi_closed);
      break;
    case Kind::necks_to_mother:
      tail(c.max_value >= 0 ? c.max_value : 30, wp_law);
      break;
    case Kind::root_label_profile: {
      auto law = root_label_law(c.n);
      for (size_t i = 0; i < law.size(); ++i) {
        s.values.push_back(static_cast<long>(i) + 1);
        s.theory.push_back(law[i]);
      }
      break;
    }
    case Kind::kernel_size: {
      s.edge_weighted = true;
      int last = std::min(c.max_value >= 0 ? c.max_value : 20, c.n);
      auto law = c.n <= kExactKernelMax ? kernel_size_law_finite(c.ell, c.n, last) : kernel_size_law(c.ell, last);
      tail(last, [&](int k) { return law[static_cast<size_t>(k)]; });
      break;
    }
    case Kind::same_minbu: {
      s.edge_weighted = true;
      BigRational p = same_minbu_probability(c.ell);
      s.values = {0, 1};
      s.theory = {1 - p, p};
      break;
    }
  }
  return s;
}

// edges whose ends sit at distances l-1 and l from the root vertex
template <class F>
void for_each_typed_edge(const QuadMap& m, int l, F&& f) {
  auto d = bfs_distances(m, m.root_vertex());
  for (int h = 0; h < m.half_edge_count(); ++h) {
    int a = m.alpha[static_cast<size_t>(h)];
    if (a < h) continue;
    int du = d[static_cast<size_t>(m.vertex_of[static_cast<size_t>(h)])];
    int dw = d[static_cast<size_t>(m.vertex_of[static_cast<size_t>(a)])];
    if (std::min(du, dw) == l - 1 && std::max(du, dw) == l) f(h);
  }
}

}  // namespace

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {"mother-distance", "necks-to-mother", "root-label-profile",
                                               "kernel-size", "same-minbu"};
  return ids;
}

void check_experiment_budget(const ExperimentConfig& c) {
  parse_kind(c.id);
  if (c.n < 1) throw DomainError("n must be >= 1");
  if (c.samples < 1) throw DomainError("samples must be >= 1");
  if (c.ell < 1) throw DomainError("ell must be >= 1");
  if (c.n > 1000000) throw ResourceError("n above 10^6");
  if (static_cast<double>(c.samples) * c.n > 1e11) throw ResourceError("samples * n above 10^11");
  if (c.id == "root-label-profile" && c.n > 400) throw ResourceError("root-label profile needs exact coefficients, n <= 400");
  if (c.max_value > 100000) throw ResourceError("more than 10^5 bins");
}

double ExperimentReport::frequency(long value) const {
  for (const auto& b : bins) {
    if (b.value == value) return b.frequency;
  }
  return 0.0;
}

std::vector<BigRational> root_label_law(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  LadderFamily R = compute_R_family(n + 1, n);
  std::vector<BigRational> q(static_cast<size_t>(n) + 1);
  BigRational total = 0;
  for (int l = 1; l <= n + 1; ++l) {
    q[static_cast<size_t>(l - 1)] = R.at(l, n) - R.at(l - 1, n);
    total += q[static_cast<size_t>(l - 1)];
  }
  for (auto& x : q) x /= total;
  return q;
}

std::vector<BigRational> kernel_size_law_finite(int l, int n, int k_max) {
  if (l < 1 || n < 1 || k_max < 0) throw DomainError("need l >= 1, n >= 1, k_max >= 0");
  int last = std::min(k_max, n);
  MarkedFamilies z = derive_marked_families(compute_r_family(l + 2, std::max(last, 1)));
  LadderFamily R = compute_R_family(l + 2, n);
  MarkedFamilies G = derive_marked_families(R);
  TruncatedSeries g = TruncatedSeries::monomial(1, BigRational(1), n, Variable::g);
  TruncatedSeries x = mul(R[1], R[1]);
  TruncatedSeries step = mul(g, x);
  const BigRational& total = G.h.at(l, n);
  if (total == 0) throw DomainError("no edge of type (l-1) -> l at this size");
  std::vector<BigRational> out(static_cast<size_t>(k_max) + 1, BigRational(0));
  for (int k = 0; k <= last; ++k) {
    out[static_cast<size_t>(k)] = z.h.at(l, k) * x[n] / total;
    if (k < last) x = mul(x, step);
  }
  return out;
}

std::vector<int> pool_bins(const std::vector<double>& expected, double min_expected) {
  std::vector<int> group(expected.size(), 0);
  int g = 0;
  double acc = 0;
  for (size_t i = 0; i < expected.size(); ++i) {
    group[i] = g;
    acc += expected[i];
    if (acc >= min_expected && i + 1 < expected.size()) {
      ++g;
      acc = 0;
    }
  }
  // a short last group joins its neighbour
  if (acc < min_expected && g > 0) {
    for (auto& x : group) {
      if (x == g) x = g - 1;
    }
  }
  return group;
}

double chi_square_p_value(double chi2, int dof) {
  if (dof <= 0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * chi2);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  check_experiment_budget(config);
  auto t0 = std::chrono::steady_clock::now();
  Setup s = make_setup(config);
  size_t B = s.values.size();
  std::vector<double> theory(B);
  for (size_t i = 0; i < B; ++i) theory[i] = to_double(s.theory[i]);

  // groups fixed before sampling; edge-weighted runs use one edge per sample as the scale
  std::vector<double> expected(B);
  for (size_t i = 0; i < B; ++i) expected[i] = theory[i] * static_cast<double>(config.samples);
  std::vector<int> group = pool_bins(expected);
  size_t G = static_cast<size_t>(group.back()) + 1;
  std::vector<size_t> bin_of_value;
  long top = 0;
  for (long v : s.values) top = std::max(top, v);
  bin_of_value.assign(static_cast<size_t>(top) + 1, B - 1);
  for (size_t i = 0; i < B; ++i) {
    if (s.values[i] >= 0) bin_of_value[static_cast<size_t>(s.values[i])] = i;
  }
  auto bin_for = [&](long v) { return v >= 0 && v <= top ? bin_of_value[static_cast<size_t>(v)] : B - 1; };

  int workers = config.workers > 0 ? config.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<long long>(workers, config.samples));
  std::vector<Accumulator> acc(static_cast<size_t>(workers), Accumulator(B, G));
  std::vector<RootedSampleStats> stats(static_cast<size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));

  auto work = [&](int w) {
    try {
      Accumulator& a = acc[static_cast<size_t>(w)];
      std::vector<long long> local(B, 0);
      std::vector<long long> gl(G, 0);
      for (long long i = w; i < config.samples; i += workers) {
        // stream = sample index, so the histogram does not depend on the worker count
        RngStream rng(config.seed, static_cast<std::uint64_t>(i));
        std::fill(local.begin(), local.end(), 0);
        if (s.kind == Kind::root_label_profile) {
          ++local[bin_for(sample_planted_well_labeled_tree(config.n, rng).root_label())];
        } else {
          QuadMap m = sample_rooted_quadrangulation(config.n, rng, config.method, &stats[static_cast<size_t>(w)]);
          NeckDecomposition d = neck_decompose(m, false);
          if (s.kind == Kind::mother_distance) {
            ++local[bin_for(distance_to_mother(m, d))];
          } else if (s.kind == Kind::necks_to_mother) {
            ++local[bin_for(necks_to_mother(m, d))];
          } else {
            // the coincident copy of the root edge at l = 1
            if (config.ell == 1) ++local[s.kind == Kind::kernel_size ? bin_for(0) : 1];
            for_each_typed_edge(m, config.ell, [&](int h) {
              Kernel k = kernel_between(m, d, m.root, h);
              if (s.kind == Kind::kernel_size) {
                ++local[bin_for(k.k)];
              } else {
                ++local[k.same_minbu ? 1 : 0];
              }
            });
          }
        }
        long long N = 0;
        std::fill(gl.begin(), gl.end(), 0);
        for (size_t b = 0; b < B; ++b) {
          a.bin_count[b] += local[b];
          gl[static_cast<size_t>(group[b])] += local[b];
          N += local[b];
        }
        for (size_t g = 0; g < G; ++g) {
          a.sc[g] += gl[g];
          a.scc[g] += gl[g] * gl[g];
          a.scn[g] += gl[g] * N;
        }
        a.sn += N;
        a.snn += N * N;
      }
    } catch (...) {
      errors[static_cast<size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Accumulator total(B, G);
  for (const auto& a : acc) total.merge(a);

  ExperimentReport r;
  r.experiment_id = config.id;
  r.n = config.n;
  r.samples = config.samples;
  r.seed = config.seed;
  r.workers = workers;
  r.ell = config.ell;
  r.edge_weighted = s.edge_weighted;
  r.weight_total = total.sn;
  r.rng_algorithm = RngStream::algorithm_id;
  for (const auto& st : stats) {
    r.sampler.attempts += st.attempts;
    r.sampler.accepted += st.accepted;
  }
  double W = static_cast<double>(std::max<long long>(total.sn, 1));
  for (size_t i = 0; i < B; ++i) {
    ExperimentBin b;
    b.value = s.values[i];
    b.count = total.bin_count[i];
    b.frequency = static_cast<double>(b.count) / W;
    b.theory = theory[i];
    b.theory_exact = to_fraction(s.theory[i]);
    r.max_dev = std::max(r.max_dev, std::abs(b.frequency - b.theory));
    r.bins.push_back(std::move(b));
  }
  // pooled statistic: Pearson for one observation per sample, otherwise the
  // ratio-estimator variance of each group (clustered marked edges)
  std::vector<double> gtheory(G, 0.0);
  for (size_t i = 0; i < B; ++i) gtheory[static_cast<size_t>(group[i])] += theory[i];
  double chi2 = 0;
  for (size_t g = 0; g < G; ++g) {
    double p = gtheory[g];
    double phat = static_cast<double>(total.sc[g]) / W;
    if (!s.edge_weighted) {
      if (p > 0) chi2 += (phat - p) * (phat - p) * W / p;
    } else {
      double var = (static_cast<double>(total.scc[g]) - 2 * p * static_cast<double>(total.scn[g]) +
                    p * p * static_cast<double>(total.snn)) / (W * W);
      if (var > 0) chi2 += (phat - p) * (phat - p) / var;
    }
  }
  r.chi2 = chi2;
  r.dof = static_cast<int>(G) - 1;
  r.p_value = chi_square_p_value(chi2, r.dof);
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace minbu
