// Microbenchmarks for the hot paths: transforms, one RK4 step, norms, and the
// exact arithmetic. Run manually; not part of the test suite.

#include <benchmark/benchmark.h>

#include <vector>

#include "kp5/evolve.hpp"
#include "kp5/norms.hpp"
#include "kp5/numtheory.hpp"
#include "kp5/resonance.hpp"
#include "kp5/transform.hpp"

using namespace kp5;

namespace {

SpectralField seeded_field(const TorusGrid& g) {
  SpectralField u(g);
  u.add_mode(1, 0, 0.25);
  u.add_mode(2, 6 <= g.max_k() ? 6 : 1, {0.125, -0.03});
  u.add_mode(3, 1, {0.01, 0.02});
  return u;
}

}  // namespace

static void bm_fft_roundtrip(benchmark::State& state) {
  TorusGrid g{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  Workspace2D ws(g);
  const SpectralField u = seeded_field(g);
  SpectralField back(g);
  std::vector<double> phys;
  for (auto _ : state) {
    ws.to_physical(u, phys);
    ws.to_spectral(phys, back);
    benchmark::DoNotOptimize(back.coef(1, 0));
  }
}
BENCHMARK(bm_fft_roundtrip)->Args({32, 32})->Args({256, 1024});

static void bm_nonlinear_term(benchmark::State& state) {
  TorusGrid g{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  Workspace2D ws(g);
  const SpectralField u = seeded_field(g);
  SpectralField out(g);
  for (auto _ : state) {
    ws.nonlinear_term(u, out);
    benchmark::DoNotOptimize(out.coef(2, 0));
  }
}
BENCHMARK(bm_nonlinear_term)->Args({32, 32})->Args({256, 1024});

static void bm_rk4_step(benchmark::State& state) {
  TorusGrid g{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  EvolveConfig cfg;
  cfg.dt = 1e-3;
  Evolver2D ev(g, cfg);
  ev.set_state(seeded_field(g));
  for (auto _ : state) {
    ev.advance(1);
    benchmark::DoNotOptimize(ev.time());
  }
}
BENCHMARK(bm_rk4_step)->Args({32, 32})->Args({256, 1024});

static void bm_norm_report(benchmark::State& state) {
  TorusGrid g{64, 64};
  Workspace2D ws(g);
  const SpectralField u = seeded_field(g);
  for (auto _ : state) {
    NormReport r = norms(u, 2.0, ws);
    benchmark::DoNotOptimize(r.e_sigma);
  }
}
BENCHMARK(bm_norm_report);

static void bm_resonance_closed_form(benchmark::State& state) {
  for (auto _ : state) {
    Rational r = resonance_kpi5({3, 5}, {4, -7});
    benchmark::DoNotOptimize(r.get_num().get_si());
  }
}
BENCHMARK(bm_resonance_closed_form);

static void bm_generate_admissible(benchmark::State& state) {
  for (auto _ : state) {
    auto v = generate_admissible(5);
    benchmark::DoNotOptimize(v.back().alpha_index.get_si());
  }
}
BENCHMARK(bm_generate_admissible);

BENCHMARK_MAIN();
