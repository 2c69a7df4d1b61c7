#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <locale>
#include <sstream>

#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"
#include "minbu/local/laws.hpp"
#include "minbu/sampler/enumerate.hpp"
#include "minbu/sampler/experiment.hpp"
#include "minbu/sampler/report.hpp"
#include "minbu/scaling/scaling.hpp"
#include "minbu/simd/kernels.hpp"
#include "verify_suites.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using namespace minbu;
using nlohmann::ordered_json;

struct Common {
  std::string format = "csv";
  std::string out;
};

std::string num(double x, int digits = 12) {
  std::ostringstream ss;
  ss.imbue(std::locale::classic());
  ss.precision(digits);
  ss << x;
  return ss.str();
}

void header(const std::string& command, const std::vector<std::pair<std::string, std::string>>& config) {
  std::cerr << "# minbu " << kVersion << " (" << simd::backend_name(simd::active_backend()) << ")\n";
  std::cerr << "# command: " << command << "\n";
  for (const auto& [k, v] : config) std::cerr << "# " << k << " = " << v << "\n";
}

void emit(const Common& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw DomainError("cannot write " + c.out);
  f << body;
}

int cmd_series(const std::string& family, int lmax, int order, const Common& c) {
  if (order < 1 || order > 400) throw DomainError("order must lie in 1..400");
  if (lmax < 1) throw DomainError("lmax must be >= 1");
  FamilyId id = parse_family(family);
  header("series", {{"family", family}, {"lmax", std::to_string(lmax)}, {"order", std::to_string(order)}, {"format", c.format}});
  const LadderFamily* fam = nullptr;
  LadderFamily holder;
  ZFamilies z;
  MarkedFamilies marked;
  switch (id) {
    case FamilyId::r:
      holder = compute_r_family(lmax, order);
      fam = &holder;
      break;
    case FamilyId::R:
      holder = compute_R_family(lmax, order);
      fam = &holder;
      break;
    case FamilyId::q:
    case FamilyId::f:
    case FamilyId::h:
    case FamilyId::g:
    case FamilyId::e:
    case FamilyId::p:
      z = compute_z_families(lmax, order);
      fam = id == FamilyId::q   ? &z.marked.q
            : id == FamilyId::f ? &z.marked.f
            : id == FamilyId::h ? &z.marked.h
            : id == FamilyId::g ? &z.balanced.g
            : id == FamilyId::e ? &z.balanced.e
                                : &z.balanced.p;
      break;
    default:
      marked = derive_marked_families(compute_R_family(lmax + 1, order));
      fam = id == FamilyId::Q ? &marked.q : id == FamilyId::F ? &marked.f : &marked.h;
      break;
  }
  std::string var = variable_name(fam->variable);
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family;
    j["variable"] = var;
    j["lmax"] = lmax;
    j["order"] = order;
    auto rows = ordered_json::array();
    for (int l = 1; l <= lmax; ++l) {
      auto coeffs = ordered_json::array();
      for (int n = 0; n <= order; ++n) coeffs.push_back(to_fraction(fam->at(l, n)));
      rows.push_back({{"l", l}, {"coefficients", coeffs}});
    }
    j["rows"] = rows;
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream ss;
    ss << "family,l,n,coefficient\n";
    for (int l = 1; l <= lmax; ++l) {
      for (int n = 0; n <= order; ++n) ss << family << ',' << l << ',' << n << ',' << to_fraction(fam->at(l, n)) << '\n';
    }
    emit(c, ss.str());
  }
  return 0;
}

int cmd_exact(const std::string& law, int first, int last, const Common& c) {
  header("exact", {{"law", law}, {"first", std::to_string(first)}, {"last", std::to_string(last)}, {"format", c.format}});
  RationalLaw t = tabulate_law(law, first, last);
  if (c.format == "json") {
    ordered_json j;
    j["law"] = law;
    j["domain"] = t.domain;
    auto rows = ordered_json::array();
    for (size_t i = 0; i < t.values.size(); ++i) {
      rows.push_back({{t.domain, t.first + static_cast<int>(i)}, {"value", to_fraction(t.values[i])}, {"decimal", to_decimal(t.values[i])}});
    }
    j["rows"] = rows;
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream ss;
    ss << "law," << t.domain << ",value,decimal\n";
    for (size_t i = 0; i < t.values.size(); ++i) {
      ss << law << ',' << t.first + static_cast<int>(i) << ',' << to_fraction(t.values[i]) << ',' << to_decimal(t.values[i]) << '\n';
    }
    emit(c, ss.str());
  }
  return 0;
}

int cmd_scaling(const std::string& what, double rmin, double rmax, double step, int nodes, const std::vector<double>& etas,
                const std::vector<double>& Ls, const Common& c) {
  QuadratureSpec q;
  q.nodes_per_panel = nodes;
  if (what == "rho") {
    if (!(rmin > 0) || !(rmax >= rmin) || !(step > 0)) throw DomainError("need 0 < rmin <= rmax and step > 0");
    long count = std::lround(std::floor((rmax - rmin) / step + 1e-9)) + 1;
    if (count > 100000) throw ResourceError("more than 10^5 grid points");
    header("scaling rho", {{"rmin", num(rmin)}, {"rmax", num(rmax)}, {"step", num(step)}, {"nodes_per_panel", std::to_string(nodes)}, {"format", c.format}});
    double s = std::pow(3.0, 0.25);
    std::ostringstream ss;
    ordered_json rows = ordered_json::array();
    std::string scheme;
    ss << "r,rho,rho_tilde,rescaling_residual\n";
    for (long i = 0; i < count; ++i) {
      double r = rmin + static_cast<double>(i) * step;
      auto rho = density_general(r, q);
      auto rt = density_nomulti(r, q);
      double resid = std::abs(rt.value - density_general(r / s, q).value / s);
      scheme = rho.quadrature.scheme_id;
      ss << num(r) << ',' << num(rho.value) << ',' << num(rt.value) << ',' << num(resid, 3) << '\n';
      rows.push_back({{"r", r}, {"rho", rho.value}, {"rho_tilde", rt.value}, {"rescaling_residual", resid}});
    }
    if (c.format == "json") {
      ordered_json j;
      j["quadrature"] = scheme;
      j["rows"] = rows;
      emit(c, j.dump(2) + "\n");
    } else {
      emit(c, ss.str());
    }
    return 0;
  }
  if (what == "critical") {
    auto join = [](const std::vector<double>& v) {
      std::string out;
      for (double x : v) out += (out.empty() ? "" : ",") + num(x);
      return out;
    };
    header("scaling critical", {{"eta", join(etas)}, {"L", join(Ls)}, {"format", c.format}});
    auto rep = critical_scaling_check(etas, Ls);
    std::ostringstream ss;
    ss << "eta,L,l,h,g,F_prime,ratio_h,ratio_g\n";
    for (const auto& r : rep.rows) {
      ss << num(r.eta) << ',' << num(r.L_target) << ',' << r.l << ',' << num(r.h) << ',' << num(r.g) << ','
         << num(r.F_prime) << ',' << num(r.ratio_h) << ',' << num(r.ratio_g) << '\n';
    }
    ss << "# g_l(4/27) l^3 at l = " << rep.l_crit << ": " << num(rep.g_crit_scaled) << " (32/9 = " << num(32.0 / 9) << ")\n";
    emit(c, ss.str());
    return 0;
  }
  throw DomainError("scaling target must be rho or critical");
}

int cmd_sample(const ExperimentConfig& cfg, const std::string& method, const Common& c) {
  header("sample", {{"experiment", cfg.id}, {"n", std::to_string(cfg.n)}, {"samples", std::to_string(cfg.samples)},
                    {"seed", std::to_string(cfg.seed)}, {"workers", std::to_string(cfg.workers)},
                    {"ell", std::to_string(cfg.ell)}, {"max", std::to_string(cfg.max_value)}, {"method", method},
                    {"rng", RngStream::algorithm_id}, {"format", c.format}});
  ExperimentReport r = run_experiment(cfg);
  emit(c, c.format == "json" ? report_to_json(r) : report_to_csv(r));
  return 0;
}

int cmd_enumerate(int n, bool check_maps, const Common& c) {
  header("enumerate", {{"n", std::to_string(n)}, {"check_maps", check_maps ? "true" : "false"}, {"format", c.format}});
  EnumerationOptions o;
  o.check_maps = check_maps;
  auto k = enumerate_planted_well_labeled_trees(n, o);
  std::vector<std::pair<std::string, const std::vector<long long>*>> tables = {
      {"root_label", &k.root_label},
      {"wb_root_label", &k.wb_root_label},
      {"wb_root1_corner_label", &k.wb_corner_label},
      {"wb_root1_vertex_label", &k.wb_vertex_label}};
  std::vector<std::pair<std::string, long long>> scalars = {{"total", k.total}, {"well_balanced", k.well_balanced}};
  if (check_maps) {
    scalars.push_back({"maps_checked", k.maps_checked});
    scalars.push_back({"codec_failures", k.codec_failures});
    scalars.push_back({"label_distance_failures", k.label_distance_failures});
    scalars.push_back({"equivalence_failures", k.equivalence_failures});
  }
  if (c.format == "json") {
    ordered_json j;
    j["n"] = n;
    for (const auto& [name, v] : scalars) j[name] = v;
    for (const auto& [name, v] : tables) {
      ordered_json t = ordered_json::object();
      for (size_t l = 1; l < v->size(); ++l) t[std::to_string(l)] = (*v)[l];
      j[name] = t;
    }
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream ss;
    ss << "counter,label,count\n";
    for (const auto& [name, v] : scalars) ss << name << ",," << v << '\n';
    for (const auto& [name, v] : tables) {
      for (size_t l = 1; l < v->size(); ++l) ss << name << ',' << l << ',' << (*v)[l] << '\n';
    }
    emit(c, ss.str());
  }
  return (check_maps && (k.codec_failures || k.label_distance_failures || k.equivalence_failures)) ? 1 : 0;
}

int cmd_verify(const std::string& suite, const cli::VerifyConfig& v, const Common& c) {
  header("verify", {{"suite", suite}, {"order", std::to_string(v.order)}, {"lmax", std::to_string(v.l_max)},
                    {"enum_max", std::to_string(v.enum_max)}, {"seed", std::to_string(v.seed)}});
  std::ostringstream ss;
  int failures = 0;
  std::string first;
  auto results = cli::run_suites(suite, v, [&](const cli::CheckResult& r) {
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << num(r.seconds, 3) << " s)"
              << (r.detail.empty() ? "" : " " + r.detail) << "\n";
  });
  ss << "suite,check,result,seconds,detail\n";
  for (const auto& r : results) {
    if (!r.pass && !failures++) first = r.suite + ": " + r.name;
    std::string d = r.detail;
    for (auto& ch : d) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    ss << r.suite << ',' << r.name << ',' << (r.pass ? "pass" : "fail") << ',' << num(r.seconds, 3) << ',' << d << '\n';
  }
  emit(c, ss.str());
  if (failures) {
    std::cerr << "verification failed: " << first << " (" << failures << " failing)\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ladder generating functions, minbu laws and planar map experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common common;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", common.out, "write the table to PATH instead of stdout");
  };

  std::string family = "p";
  int lmax = 3, order = 9;
  auto* series = app.add_subcommand("series", "exact coefficients of a ladder family");
  series->add_option("--family", family, "R Q F H r q f h g e p")->required();
  series->add_option("--lmax", lmax, "largest distance label");
  series->add_option("--order", order, "truncation order (<= 400)");
  add_common(series);

  std::string law;
  int dmax = -1, emax = -1, mmax = -1, first = -1;
  auto* exact = app.add_subcommand("exact", "exact laws of the local limit");
  exact->add_option("law", law, "pi-d first-neck neck-count reach-mother h-crit d-h a-h same-minbu minbu-two-point mean-profile-v mean-profile-e mean-profile-pointed")->required();
  exact->add_option("--dmax", dmax, "last D or d");
  exact->add_option("--lmax", emax, "last l");
  exact->add_option("--mmax", mmax, "last m");
  exact->add_option("--first", first, "first index");
  add_common(exact);

  std::string what = "rho";
  double rmin = 0.1, rmax = 5.0, step = 0.1;
  int nodes = 20;
  // L = 0.5 reaches only l ~ 160 at eta = 1e-5, where g is still 9% off its limit
  std::vector<double> etas = {1e-2, 1e-3, 1e-4, 1e-5}, Ls = {1.0, 2.0};
  auto* scaling = app.add_subcommand("scaling", "continuum densities and the critical-point check");
  scaling->add_option("what", what, "rho or critical");
  scaling->add_option("--rmin", rmin);
  scaling->add_option("--rmax", rmax);
  scaling->add_option("--step", step);
  scaling->add_option("--nodes", nodes, "Gauss-Legendre nodes per panel")->check(CLI::IsMember({20, 40}));
  scaling->add_option("--eta", etas, "critical: distances to the critical point")->delimiter(',')->check(CLI::Range(0.0, 1.0));
  scaling->add_option("--L", Ls, "critical: rescaled distances l sqrt(eta)")->delimiter(',')->check(CLI::PositiveNumber);
  add_common(scaling);

  ExperimentConfig ecfg;
  std::string method = "sign";
  auto* sample = app.add_subcommand("sample", "Monte Carlo experiment against the exact law");
  sample->add_option("--experiment", ecfg.id, "mother-distance necks-to-mother root-label-profile kernel-size same-minbu")->required();
  sample->add_option("--n", ecfg.n, "size (faces or tree edges)");
  sample->add_option("--samples", ecfg.samples);
  sample->add_option("--seed", ecfg.seed);
  sample->add_option("--workers", ecfg.workers, "0 for one per logical core");
  sample->add_option("--ell", ecfg.ell, "distance for kernel-size and same-minbu");
  sample->add_option("--max", ecfg.max_value, "last explicit bin");
  sample->add_option("--method", method, "rooted sampler: sign or rejection")->check(CLI::IsMember({"sign", "rejection"}));
  add_common(sample);
  sample->callback([&] { if (sample->count("--format") == 0) common.format = "json"; });

  int en = 3;
  bool check_maps = false;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive counts of planted well-labeled trees");
  enumerate->add_option("--n", en, "tree edges (<= 9)")->required();
  enumerate->add_flag("--check-maps", check_maps, "decode, re-encode and compare every object");
  add_common(enumerate);

  std::string suite = "all";
  cli::VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "identity battery; exit 0 iff every check passes");
  verify->add_option("--suite", suite, "algebra local codec enumeration scaling all");
  verify->add_option("--order", vcfg.order);
  verify->add_option("--lmax", vcfg.l_max);
  verify->add_option("--n", vcfg.enum_max, "exhaustive checks up to this size");
  verify->add_option("--seed", vcfg.seed);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*series) return cmd_series(family, lmax, order, common);
    if (*exact) {
      int f = first >= 0 ? first : 0;
      int last = dmax >= 0 ? dmax : mmax >= 0 ? mmax : emax >= 0 ? emax : 10;
      if (first < 0 && (law.rfind("mean-profile", 0) == 0 || law == "h-crit" || law == "d-h" || law == "a-h" ||
                        law == "same-minbu" || law == "minbu-two-point")) {
        f = 1;
      }
      return cmd_exact(law, f, last, common);
    }
    if (*scaling) return cmd_scaling(what, rmin, rmax, step, nodes, etas, Ls, common);
    if (*sample) {
      ecfg.method = method == "rejection" ? RootedMethod::rejection : RootedMethod::sign;
      return cmd_sample(ecfg, method, common);
    }
    if (*enumerate) return cmd_enumerate(en, check_maps, common);
    if (*verify) return cmd_verify(suite, vcfg, common);
  } catch (const VerificationFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
