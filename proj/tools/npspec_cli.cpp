// Command-line front end for the npspec shared library. Subcommands emit CSV
// (plot data, with headers) or JSON (structured results); all floating-point
// output is printed with 17 significant digits so runs are reproducible and
// lossless. Talks to the library exclusively through its C interface.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "npspec.h"
#include "cache.hpp"
#include "run_config.hpp"

using nlohmann::json;

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void fail(npspec_status s) {
  std::cerr << "error (" << npspec_status_name(s) << "): " << npspec_last_error() << "\n";
  std::exit(1);
}

void check(npspec_status s) {
  if (s != NPSPEC_OK) fail(s);
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw CLI::ValidationError("list", "bad number '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

struct SpectrumRun {
  json record;
  std::string payload;   // serialized record as printed / cached
};

// discretize + eigensolve through the C API, with cache round-trip
SpectrumRun run_discretize(const RunConfig& cfg, const std::string& family, double R, double a,
                           int m, const std::string& parity, int N, bool use_cache) {
  std::string key = "family=" + family + ";R=" + g17(R);
  if (family == "oblate")
    key += ";a=" + g17(a) + ";m=" + std::to_string(m) + ";parity=" + parity;
  key += ";N=" + std::to_string(N);

  npspec_operator* op = nullptr;
  if (family == "prolate")
    check(npspec_discretize_prolate(R, N, &op));
  else
    check(npspec_discretize_oblate(R, a, m, parity == "odd" ? -1 : 1, N, &op));
  key += ";scheme=" + std::string(npspec_operator_scheme(op));

  if (use_cache) {
    if (auto hit = cache::lookup(cfg.cache_dir, key)) {
      npspec_operator_free(op);
      SpectrumRun out;
      out.payload = *hit;
      out.record = json::parse(*hit);
      return out;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  npspec_spectrum* sp = nullptr;
  check(npspec_operator_eigenvalues(op, &sp));
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json rec;
  rec["schema_version"] = 1;
  rec["family"] = family;
  rec["R"] = R;
  if (family == "oblate") {
    rec["a"] = a;
    rec["m"] = m;
    rec["parity"] = parity;
  }
  rec["N"] = npspec_operator_size(op);
  rec["scheme"] = npspec_operator_scheme(op);
  rec["asymmetry"] = npspec_operator_asymmetry(op);
  rec["imag_max"] = npspec_spectrum_imag_max(sp);
  rec["wall_ms"] = wall_ms;
  rec["library_version"] = npspec_version();
  json evs = json::array();
  json labels = json::array();
  for (int i = 0; i < npspec_spectrum_size(sp); ++i) {
    double re = 0.0, im = 0.0;
    check(npspec_spectrum_get(sp, i, &re, &im));
    evs.push_back(json::array({re, im}));
    labels.push_back(npspec_spectrum_label(sp, i));
  }
  rec["eigenvalues"] = evs;
  rec["labels"] = labels;
  npspec_spectrum_free(sp);
  npspec_operator_free(op);

  SpectrumRun out;
  out.record = rec;
  out.payload = rec.dump(2) + "\n";
  if (use_cache) cache::store(cfg.cache_dir, key, out.payload);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neumann-Poincare spectra on thin spheroids and flat two-sheet domains"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value configuration file");

  RunConfig cfg;
  std::function<void()> action;   // set during parse, run after config load

  // ---- prolate-eigs ----
  auto* c_eigs = app.add_subcommand("prolate-eigs", "analytic NP eigenvalues on a prolate spheroid");
  double pe_L = 0.0, pe_R = 0.0;
  int pe_nmax = 5;
  auto* pe_lopt = c_eigs->add_option("--L", pe_L, "spheroidal coordinate L > 1");
  auto* pe_ropt = c_eigs->add_option("--R", pe_R, "aspect ratio R > 1");
  c_eigs->add_option("--nmax", pe_nmax, "largest degree")->required();
  c_eigs->callback([&] { action = [&] {
    if (pe_lopt->count() == 0 && pe_ropt->count() == 0)
      throw CLI::RequiredError("prolate-eigs: one of --L or --R");
    double L = pe_L;
    if (pe_lopt->count() == 0) check(npspec_r_to_l(pe_R, &L));
    std::printf("n,m,lambda\n");
    for (int n = 1; n <= pe_nmax; ++n)
      for (int m = 0; m <= n; ++m) {
        double v = 0.0;
        check(npspec_prolate_eigenvalue(n, m, L, &v));
        std::printf("%d,%d,%s\n", n, m, g17(v).c_str());
      }
  }; });

  // ---- sphere-check ----
  auto* c_sph = app.add_subcommand("sphere-check", "Nystrom spectrum of the unit sphere vs 1/(4n+2)");
  int sc_N = 200;
  c_sph->add_option("--N", sc_N, "quadrature size")->required();
  c_sph->callback([&] { action = [&] {
    auto run = run_discretize(cfg, "prolate", 1.0, 1.0, 0, "even", sc_N, /*use_cache=*/false);
    std::printf("n,eigenvalue,reference,abs_error\n");
    double worst = 0.0;
    const auto& evs = run.record["eigenvalues"];
    for (int n = 0; n < 8 && n < static_cast<int>(evs.size()); ++n) {
      const double got = evs[n][0].get<double>();
      const double want = 0.5 / (2.0 * n + 1.0);
      worst = std::max(worst, std::abs(got - want));
      std::printf("%d,%s,%s,%s\n", n, g17(got).c_str(), g17(want).c_str(),
                  g17(std::abs(got - want)).c_str());
    }
    std::fprintf(stderr, "max abs error %.3e\n", worst);
    if (worst > 1e-4) std::exit(1);
  }; });

  // ---- half-property ----
  auto* c_half = app.add_subcommand("half-property", "sum_m lambda_{m,n}(L) - 1/2 per degree");
  double hp_L = 0.0;
  int hp_nmax = 10;
  c_half->add_option("--L", hp_L, "spheroidal coordinate L > 1")->required();
  c_half->add_option("--nmax", hp_nmax, "largest degree")->required();
  c_half->callback([&] { action = [&] {
    std::printf("n,defect\n");
    for (int n = 1; n <= hp_nmax; ++n) {
      double d = 0.0;
      check(npspec_half_property_defect(n, hp_L, &d));
      std::printf("%d,%s\n", n, g17(d).c_str());
    }
  }; });

  // ---- tune ----
  auto* c_tune = app.add_subcommand("tune", "find L with lambda_{m,n}(L) = target");
  int tn_n = 1, tn_m = 0;
  double tn_target = 0.0;
  c_tune->add_option("--n", tn_n)->required();
  c_tune->add_option("--m", tn_m)->required();
  c_tune->add_option("--target", tn_target)->required();
  c_tune->callback([&] { action = [&] {
    double L = 0.0, achieved = 0.0;
    check(npspec_tune_L(tn_n, tn_m, tn_target, &L, &achieved));
    std::printf("L_star,achieved_lambda,residual\n%s,%s,%s\n", g17(L).c_str(),
                g17(achieved).c_str(), g17(std::abs(achieved - tn_target)).c_str());
  }; });

  // ---- limit-symbol ----
  auto* c_sym = app.add_subcommand("limit-symbol", "plot data for the limiting Fourier symbols");
  std::string ls_which = "l0";
  double ls_ximax = 10.0;
  int ls_steps = 100;
  c_sym->add_option("--which", ls_which, "l0 | poisson")->check(CLI::IsMember({"l0", "poisson"}));
  c_sym->add_option("--xi-max", ls_ximax)->required();
  c_sym->add_option("--steps", ls_steps)->required();
  c_sym->callback([&] { action = [&] {
    std::printf("xi,symbol\n");
    for (int i = 0; i <= ls_steps; ++i) {
      const double xi = ls_ximax * i / ls_steps;
      double v = 0.0;
      if (ls_which == "l0")
        check(npspec_l0_hat(xi, &v));
      else
        check(npspec_poisson_hat(2.0, xi, 0.0, &v));
      std::printf("%s,%s\n", g17(xi).c_str(), g17(v).c_str());
    }
  }; });

  // ---- discretize ----
  auto* c_disc = app.add_subcommand("discretize", "Nystrom spectrum of one reduced operator");
  std::string di_family = "prolate", di_parity = "even";
  double di_R = 2.0, di_a = 0.0;
  int di_m = 0, di_N = 0;
  bool di_nocache = false;
  c_disc->add_option("--family", di_family)->check(CLI::IsMember({"prolate", "oblate"}))->required();
  c_disc->add_option("--R", di_R)->required();
  c_disc->add_option("--a", di_a, "oblate semi-axis scale");
  c_disc->add_option("--m", di_m, "oblate azimuthal order");
  c_disc->add_option("--parity", di_parity)->check(CLI::IsMember({"even", "odd"}));
  c_disc->add_option("--N", di_N)->required();
  c_disc->add_flag("--no-cache", di_nocache, "bypass the spectrum cache");
  c_disc->callback([&] { action = [&] {
    const double a = di_a > 0.0 ? di_a : cfg.a;
    auto run = run_discretize(cfg, di_family, di_R, a, di_m, di_parity, di_N, !di_nocache);
    std::fputs(run.payload.c_str(), stdout);
  }; });

  // ---- density-scan ----
  auto* c_scan = app.add_subcommand("density-scan", "eigenvalue coverage of a lambda grid");
  std::string ds_family = "prolate", ds_rlist, ds_lgrid;
  double ds_eps = 0.0;
  int ds_N = 0, ds_mmax = -1;
  c_scan->add_option("--family", ds_family)->check(CLI::IsMember({"prolate", "oblate"}))->required();
  c_scan->add_option("--r-list", ds_rlist, "comma-separated R values")->required();
  c_scan->add_option("--lambda-grid", ds_lgrid, "comma-separated targets")->required();
  c_scan->add_option("--eps", ds_eps)->required();
  c_scan->add_option("--N", ds_N, "override quadrature size");
  c_scan->add_option("--m-max", ds_mmax, "override oblate azimuthal truncation");
  c_scan->callback([&] { action = [&] {
    const auto R_list = parse_list(ds_rlist);
    const auto grid = parse_list(ds_lgrid);
    const int N = ds_N > 0 ? ds_N : cfg.default_N;
    const int m_max = ds_mmax >= 0 ? ds_mmax : cfg.m_max;

    std::vector<double> values;
    for (double R : R_list) {
      if (ds_family == "prolate") {
        auto run = run_discretize(cfg, "prolate", R, 1.0, 0, "even", N, true);
        for (const auto& ev : run.record["eigenvalues"]) values.push_back(ev[0].get<double>());
      } else {
        for (int m = 0; m <= m_max; ++m)
          for (const char* par : {"even", "odd"}) {
            auto run = run_discretize(cfg, "oblate", R, cfg.a, m, par, N, true);
            for (const auto& ev : run.record["eigenvalues"]) values.push_back(ev[0].get<double>());
          }
      }
    }

    json out;
    out["family"] = ds_family;
    out["eps"] = ds_eps;
    out["N"] = N;
    if (ds_family == "oblate") out["m_max"] = m_max;
    out["eigen_count"] = values.size();
    json pts = json::array();
    bool all = true;
    for (double lam : grid) {
      double nearest = std::numeric_limits<double>::infinity();
      for (double v : values) nearest = std::min(nearest, std::abs(v - lam));
      const bool covered = nearest <= ds_eps;
      all = all && covered;
      pts.push_back({{"lambda", lam}, {"nearest", nearest}, {"covered", covered}});
    }
    out["points"] = pts;
    out["all_covered"] = all;
    std::printf("%s\n", out.dump(2).c_str());
    if (!all) std::exit(3);
  }; });

  // ---- quasimode ----
  auto* c_qm = app.add_subcommand("quasimode", "quasi-mode residual decay over an R list");
  std::string qm_family = "prolate", qm_rlist;
  double qm_lambda = 0.3, qm_sigma = -1.0;
  c_qm->add_option("--family", qm_family)
      ->check(CLI::IsMember({"prolate", "oblate", "flat"}))
      ->required();
  c_qm->add_option("--lambda", qm_lambda)->required();
  c_qm->add_option("--sigma", qm_sigma, "support exponent, rho = R^{1-sigma}");
  c_qm->add_option("--r-list", qm_rlist)->required();
  c_qm->callback([&] { action = [&] {
    const auto R_list = parse_list(qm_rlist);
    const double sigma =
        qm_sigma > 0.0 ? qm_sigma : (qm_family == "prolate" ? cfg.sigma_prolate : cfg.sigma_planar);
    if (qm_family == "flat")
      std::printf("R,residual,sidewall\n");
    else
      std::printf("R,residual\n");
    for (double R : R_list) {
      if (qm_family == "prolate") {
        double res = 0.0;
        check(npspec_residual_prolate(qm_lambda, sigma, R, 0, &res, nullptr));
        std::printf("%s,%s\n", g17(R).c_str(), g17(res).c_str());
      } else if (qm_family == "oblate") {
        double res = 0.0;
        check(npspec_residual_oblate(qm_lambda, sigma, R, cfg.a, &res, nullptr, nullptr));
        std::printf("%s,%s\n", g17(R).c_str(), g17(res).c_str());
      } else {
        double sheet = 0.0, wall = 0.0;
        check(npspec_residual_flat(qm_lambda, sigma, R, &sheet, &wall, nullptr));
        std::printf("%s,%s,%s\n", g17(R).c_str(), g17(sheet).c_str(), g17(wall).c_str());
      }
      std::fflush(stdout);
    }
  }; });

  // ---- plasmon ----
  auto* c_pl = app.add_subcommand("plasmon", "dielectric constants resonant with NP eigenvalues");
  double pl_lambda = std::numeric_limits<double>::quiet_NaN();
  std::string pl_file;
  c_pl->add_option("--lambda", pl_lambda, "single NP eigenvalue");
  c_pl->add_option("--spectrum-file", pl_file, "JSON spectrum record from `discretize`");
  c_pl->callback([&] { action = [&] {
    std::vector<double> lambdas;
    if (!std::isnan(pl_lambda)) lambdas.push_back(pl_lambda);
    if (!pl_file.empty()) {
      std::ifstream in(pl_file);
      if (!in) {
        std::cerr << "error: cannot open " << pl_file << "\n";
        std::exit(1);
      }
      json rec = json::parse(in);
      for (const auto& ev : rec.at("eigenvalues")) lambdas.push_back(ev[0].get<double>());
    }
    if (lambdas.empty()) throw CLI::RequiredError("plasmon: --lambda or --spectrum-file");

    struct Pair {
      double lambda, k;
    };
    std::vector<Pair> table;
    int skipped = 0;
    for (double lam : lambdas) {
      if (std::abs(lam - 0.5) < 1e-12) {
        ++skipped;   // lambda = 1/2 is the pole of the map
        continue;
      }
      double k = 0.0;
      check(npspec_dielectric_for_eigenvalue(lam, &k));
      table.push_back({lam, k});
    }
    std::stable_sort(table.begin(), table.end(),
                     [](const Pair& a, const Pair& b) { return std::abs(a.k) < std::abs(b.k); });
    std::printf("lambda,k\n");
    for (const auto& p : table) std::printf("%s,%s\n", g17(p.lambda).c_str(), g17(p.k).c_str());
    if (skipped) std::fprintf(stderr, "skipped %d eigenvalue(s) at the lambda = 1/2 pole\n", skipped);
  }; });

  CLI11_PARSE(app, argc, argv);

  try {
    cfg = RunConfig::load(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (action) action();

  return 0;
}
