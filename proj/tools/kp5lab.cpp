// Command-line laboratory around the kp5 core: number theory queries, exact
// resonance arithmetic, 2D evolutions, residual measurements, and the
// separation experiments. Exit codes: 0 ok, 2 parameter error, 3 numerical
// failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kp5/ansatz.hpp"
#include "kp5/csv.hpp"
#include "kp5/errors.hpp"
#include "kp5/evolve.hpp"
#include "kp5/experiments.hpp"
#include "kp5/norms.hpp"
#include "kp5/numtheory.hpp"
#include "kp5/resonance.hpp"
#include "kp5/snapshot.hpp"

namespace {

using namespace kp5;

std::string rat_str(const Rational& q) { return q.get_str(); }

AdmissibleIndex index_for(long long n) {
  return admissible_from_n(mpz_class(static_cast<long>(n)));
}

int cmd_pell(std::size_t count, long long verify_limit) {
  const FundamentalUnit unit = pell_fundamental(7);
  std::cout << "fundamental unit of u^2 - 7 v^2 = 1: (" << unit.u.get_str() << ", "
            << unit.v.get_str() << ")\n";
  std::cout << "n,n1,alpha_index\n";
  for (const auto& idx : generate_admissible(count)) {
    std::cout << idx.n.get_str() << "," << idx.n1.get_str() << ","
              << idx.alpha_index.get_str() << "\n";
  }
  if (verify_limit > 0) {
    const auto fast = generate_admissible(64);
    const auto slow = brute_force_admissible(mpz_class(static_cast<long>(verify_limit)));
    std::size_t matched = 0;
    for (; matched < slow.size(); ++matched) {
      if (matched >= fast.size() || fast[matched].n != slow[matched].n) {
        std::cout << "verification FAILED at position " << matched << "\n";
        return 3;
      }
    }
    std::cout << "verified against exhaustive scan up to " << verify_limit << " ("
              << matched << " indices)\n";
  }
  return 0;
}

int cmd_resonance(long long n, long long max_m, long long max_k) {
  if (n > 0) {
    const AdmissibleIndex idx = index_for(n);
    const PhaseTriple tr = phases(idx);
    std::cout << "n = " << n << ", n1 = " << idx.n1.get_str()
              << ", alpha_index = " << idx.alpha_index.get_str() << "\n";
    std::cout << "omega(1,0)   = " << rat_str(tr.phi1.omega_val) << "\n";
    std::cout << "omega(n,a)   = " << rat_str(tr.phin.omega_val) << "\n";
    std::cout << "omega(n+1,a) = " << rat_str(tr.phinp1.omega_val) << "\n";
    const auto [lower, upper] = omega_npm1(idx);
    std::cout << "Omega_{n-1}  = " << rat_str(lower) << "\n";
    std::cout << "Omega_{n+1}  = " << rat_str(upper) << "\n";
    const Rational res = resonance_kpi5({1, 0}, {n, idx.alpha_ll()});
    std::cout << "Omega((1,0),(n,a)) = " << rat_str(res) << "\n";
  }
  if (max_m > 0) {
    const auto pairs = resonance_search(max_m, max_k);
    std::cout << "resonant pairs with 0 < |m_i| <= " << max_m << ", |k_i| <= " << max_k
              << ":\n";
    for (const auto& pr : pairs) {
      std::cout << "(" << pr.f1.m << "," << pr.f1.k << ") + (" << pr.f2.m << ","
                << pr.f2.k << ")\n";
    }
    std::cout << pairs.size() << " pairs\n";
  }
  return 0;
}

TorusGrid pick_grid(const AdmissibleIndex& idx, int nx, int ny) {
  TorusGrid g = TorusGrid::sized_for(idx);
  if (nx > 0) g.nx = nx;
  if (ny > 0) g.ny = ny;
  g.validate();
  return g;
}

int cmd_evolve(long long n, double sigma, double theta, double dt, double t_end,
               int log_every, int nx, int ny, const std::string& out_dir) {
  const AdmissibleIndex idx = index_for(n);
  const TorusGrid grid = pick_grid(idx, nx, ny);
  EvolveConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t_end;
  cfg.log_every = log_every;
  cfg.sigma = sigma;

  AnsatzParams p{theta, idx, sigma, true};
  Line l0(grid.nx);
  l0.add_cos(1, theta / static_cast<double>(n));
  Trajectory1D low = evolve_1d_kdv5(l0, dt, 0.0);
  SpectralField u0 = build_ansatz(p, 0.0, low, grid);

  CsvWriter csv({"t", "l2", "e2", "e_sigma", "hamiltonian"});
  SpectralField last(grid);
  Trajectory traj =
      evolve(u0, cfg, [&](double t, const SpectralField& u, const NormReport& r) {
        csv.add_row({t, r.l2, r.e2, r.e_sigma, r.hamiltonian});
        last = u;
      });
  const std::string base = out_dir + "/evolve_n" + std::to_string(n);
  csv.write(base + ".csv");
  write_snapshot(last, base + "_final.kp5");
  std::cout << "wrote " << base << ".csv and " << base << "_final.kp5\n";
  std::cout << "final l2 = " << format_double(traj.norm_history.back().l2) << "\n";
  return 0;
}

int cmd_residual(long long n, double sigma, double theta,
                 const std::vector<double>& times, const std::string& out_dir) {
  const AdmissibleIndex idx = index_for(n);
  const ExperimentManifest m = residual_experiment(idx, sigma, theta, times, out_dir);
  for (const auto& [k, v] : m.summary_metrics) {
    std::cout << k << " = " << format_double(v) << "\n";
  }
  return 0;
}

int cmd_ansatz_dump(long long n, double sigma, double theta, double t,
                    const std::string& out_dir) {
  const AdmissibleIndex idx = index_for(n);
  const TorusGrid grid = TorusGrid::sized_for(idx);
  const double dt = 1e-3;
  AnsatzParams p{theta, idx, sigma, true};
  Line l0(grid.nx);
  l0.add_cos(1, theta / static_cast<double>(n));
  Trajectory1D low = evolve_1d_kdv5(l0, dt, t);
  const SpectralField u = build_ansatz(p, t, low, grid);
  std::filesystem::create_directories(out_dir);
  const std::string path =
      out_dir + "/ansatz_n" + std::to_string(n) + "_t" + format_double(t) + ".kp5";
  write_snapshot(u, path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_separation(long long n, double sigma, double dt, double t_end, const std::string& out_dir) {
  const AdmissibleIndex idx = index_for(n);
  const TorusGrid grid = TorusGrid::sized_for(idx);
  EvolveConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t_end;
  cfg.log_every = 10;
  const ExperimentManifest m = separation_experiment(idx, sigma, grid, cfg, out_dir);
  for (const auto& [k, v] : m.summary_metrics) {
    std::cout << k << " = " << format_double(v) << "\n";
  }
  return 0;
}

int cmd_compare(long long n, double sigma, double theta, double dt, double t_end,
                const std::string& out_dir) {
  const AdmissibleIndex idx = index_for(n);
  const TorusGrid grid = TorusGrid::sized_for(idx);
  EvolveConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t_end;
  cfg.log_every = 10;
  const ExperimentManifest m = ansatz_vs_flow(idx, sigma, theta, grid, cfg, out_dir);
  for (const auto& [k, v] : m.summary_metrics) {
    std::cout << k << " = " << format_double(v) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for a fifth-order dispersive model on an "
               "irrational torus"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --out appear after the subcommand name

  std::string out_dir = "out";
  int threads = 1;
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--threads", threads,
                 "worker threads (reserved; current experiments are sequential)")
      ->capture_default_str();

  // pell
  auto* pell = app.add_subcommand("pell", "admissible indices from the Pell equation");
  std::size_t pell_count = 5;
  long long pell_verify = 0;
  pell->add_option("--count", pell_count, "how many indices")->capture_default_str();
  pell->add_option("--verify", pell_verify, "cross-check exhaustively up to this bound");

  // resonance
  auto* res = app.add_subcommand("resonance", "exact dispersion and resonance queries");
  long long res_n = 0, res_max_m = 0, res_max_k = 0;
  res->add_option("--n", res_n, "admissible index to report phases and gaps for");
  res->add_option("--max-m", res_max_m, "exhaustive search bound in m");
  res->add_option("--max-k", res_max_k, "exhaustive search bound in k");

  // evolve
  auto* evo = app.add_subcommand("evolve", "evolve one family member, log norms");
  long long evo_n = 2;
  double evo_sigma = 2.0, evo_theta = 1.0, evo_dt = 1e-3, evo_tend = 1.0;
  int evo_log = 10, evo_nx = 0, evo_ny = 0;
  evo->add_option("--n", evo_n, "admissible index")->capture_default_str();
  evo->add_option("--sigma", evo_sigma)->capture_default_str();
  evo->add_option("--theta", evo_theta)->capture_default_str();
  evo->add_option("--dt", evo_dt)->capture_default_str();
  evo->add_option("--t-end", evo_tend)->capture_default_str();
  evo->add_option("--log-every", evo_log)->capture_default_str();
  evo->add_option("--nx", evo_nx, "override grid nx");
  evo->add_option("--ny", evo_ny, "override grid ny");

  // residual
  auto* resid = app.add_subcommand("residual", "PDE defect of the approximate family");
  long long resid_n = 2;
  double resid_sigma = 2.0, resid_theta = 1.0;
  std::vector<double> resid_times{0.25, 0.5, 0.75};
  resid->add_option("--n", resid_n)->capture_default_str();
  resid->add_option("--sigma", resid_sigma)->capture_default_str();
  resid->add_option("--theta", resid_theta)->capture_default_str();
  resid->add_option("--times", resid_times, "evaluation times")->delimiter(',');

  // ansatz-dump
  auto* dump = app.add_subcommand("ansatz-dump", "write one family member as a snapshot");
  long long dump_n = 2;
  double dump_sigma = 2.0, dump_theta = 1.0, dump_t = 0.0;
  dump->add_option("--n", dump_n)->capture_default_str();
  dump->add_option("--sigma", dump_sigma)->capture_default_str();
  dump->add_option("--theta", dump_theta)->capture_default_str();
  dump->add_option("--t", dump_t)->capture_default_str();

  // separation
  auto* sep = app.add_subcommand("separation", "separation experiment for theta = -1 vs +1");
  long long sep_n = 2;
  double sep_sigma = 2.0, sep_dt = 1e-3, sep_tend = 1.0;
  sep->add_option("--n", sep_n)->capture_default_str();
  sep->add_option("--sigma", sep_sigma)->capture_default_str();
  sep->add_option("--dt", sep_dt)->capture_default_str();
  sep->add_option("--t-end", sep_tend)->capture_default_str();

  // compare
  auto* cmp = app.add_subcommand("compare", "evolved field vs analytic family");
  long long cmp_n = 2;
  double cmp_sigma = 2.0, cmp_theta = 1.0, cmp_dt = 1e-3, cmp_tend = 1.0;
  cmp->add_option("--n", cmp_n)->capture_default_str();
  cmp->add_option("--sigma", cmp_sigma)->capture_default_str();
  cmp->add_option("--theta", cmp_theta)->capture_default_str();
  cmp->add_option("--dt", cmp_dt)->capture_default_str();
  cmp->add_option("--t-end", cmp_tend)->capture_default_str();

  // run
  auto* run = app.add_subcommand("run", "dispatch an experiment from a JSON config");
  std::string run_config;
  run->add_option("config,--config", run_config, "JSON config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*pell) return cmd_pell(pell_count, pell_verify);
    if (*res) return cmd_resonance(res_n, res_max_m, res_max_k);
    if (*evo)
      return cmd_evolve(evo_n, evo_sigma, evo_theta, evo_dt, evo_tend, evo_log, evo_nx,
                        evo_ny, out_dir);
    if (*resid) return cmd_residual(resid_n, resid_sigma, resid_theta, resid_times, out_dir);
    if (*dump) return cmd_ansatz_dump(dump_n, dump_sigma, dump_theta, dump_t, out_dir);
    if (*sep) return cmd_separation(sep_n, sep_sigma, sep_dt, sep_tend, out_dir);
    if (*cmp) return cmd_compare(cmp_n, cmp_sigma, cmp_theta, cmp_dt, cmp_tend, out_dir);
    if (*run) {
      const ExperimentManifest m = run_manifest(run_config);
      std::cout << "experiment " << m.experiment_name << " complete\n";
      for (const auto& [k, v] : m.summary_metrics) {
        std::cout << k << " = " << format_double(v) << "\n";
      }
      return 0;
    }
  } catch (const parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
