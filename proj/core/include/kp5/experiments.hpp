#pragma once

#include <map>
#include <string>
#include <vector>

#include "kp5/ansatz.hpp"
#include "kp5/evolve.hpp"

namespace kp5 {

// Record of one experiment run: enough parameters to reproduce the outputs
// bit-identically in single-threaded mode, plus headline numbers.
struct ExperimentManifest {
  std::string experiment_name;
  std::map<std::string, std::string> parameters;
  std::string artifact_version;
  std::vector<std::string> outputs;
  std::map<std::string, double> summary_metrics;
  std::string notes;
};

void write_manifest_json(const ExperimentManifest& m, const std::string& path);

// Flagship separation experiment: evolves the theta = -1 and theta = +1
// members of the family from their exact initial data and tracks how the
// E^sigma distance grows. CSV columns: t, e_sigma_u, e_sigma_v, e_sigma_diff,
// dxsigma_l2_diff, hi_dxsigma_l2_diff, lower_envelope.
// hi_dxsigma_l2_diff drops the |m| <= 1 columns before applying d_x^sigma:
// the beat envelope 2|sin(t/2)| ((n+1)/n)^sigma sqrt(2 pi^2/lambda) bounds
// that component from below (the flow's up-transfer rate exceeds the
// family's by (n+1)/n, so the distance rides above the bound); the full
// E^sigma distance additionally carries the persistent low-frequency
// difference.
ExperimentManifest separation_experiment(const AdmissibleIndex& idx, double sigma,
                                         const TorusGrid& grid, EvolveConfig cfg,
                                         const std::string& out_dir);

// Evolves the approximate solution's initial data with the full 2D solver and
// measures the drift from the analytic family. CSV: t, l2_gap, dxsigma_gap.
ExperimentManifest ansatz_vs_flow(const AdmissibleIndex& idx, double sigma, double theta,
                                  const TorusGrid& grid, EvolveConfig cfg,
                                  const std::string& out_dir);

// PDE residual of the family on its product-exact grid at the given times.
// CSV: t, residual_l2, residual_l2_no_corrector (the latter ablates the
// detuned corrector modes).
ExperimentManifest residual_experiment(const AdmissibleIndex& idx, double sigma,
                                       double theta, const std::vector<double>& times,
                                       const std::string& out_dir);

// Distance of the low-frequency 1D flow from the free wave, per index and
// time. CSV: n, t, gap.
ExperimentManifest lowfreq_gap_experiment(double theta,
                                          const std::vector<AdmissibleIndex>& indices,
                                          const std::vector<double>& times,
                                          const std::string& out_dir);

// Reads a JSON config ({"experiment": ..., "n": ..., ...}), dispatches to the
// experiment, writes <name>_manifest.json beside the outputs. Missing grid
// fields are auto-sized by the sizing rule. On failure, partially written
// outputs are removed.
ExperimentManifest run_manifest(const std::string& config_path);

}  // namespace kp5
