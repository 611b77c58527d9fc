#include "cech/bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "cech/highdim.hpp"
#include "cech/random.hpp"
#include "cech/rho.hpp"
#include "cech/solver.hpp"

namespace cech {
namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double seconds(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Keeps results observable so the timed calls are not optimized away.
volatile double g_sink = 0.0;

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const std::function<void(const BenchRow&)>& on_row) {
  if (config.step == 0) throw std::invalid_argument("step must be positive");
  if (config.repeats == 0) throw std::invalid_argument("repeats must be positive");

  std::vector<BenchRow> rows;
  auto emit = [&](BenchRow row) {
    if (on_row) on_row(row);
    rows.push_back(std::move(row));
  };

  SolverOptions options;
  options.threads = config.threads;
  for (std::size_t m = config.min_disks; m <= config.max_disks; m += config.step) {
    std::mt19937_64 rng(config.seed + m);
    std::vector<DiskSystem> systems;
    systems.reserve(config.repeats);
    for (std::size_t r = 0; r < config.repeats; ++r) systems.push_back(random_system(m, 2, rng));

    double naive = 0.0;
    double triplets = 0.0;
    for (const DiskSystem& s : systems) {
      naive += seconds([&] { g_sink = cech_scale_naive(s, options).cech_scale; });
      triplets += seconds([&] { g_sink = cech_scale(s, options).cech_scale; });
    }
    const double n = static_cast<double>(config.repeats);
    emit({"disks", m, "naive", naive / n});
    emit({"disks", m, "triplets", triplets / n});
  }

  for (std::size_t d : config.dims) {
    if (d < 2) throw std::invalid_argument("dimensions must be at least 2");
    std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ull * d));
    std::vector<DiskSystem> triples;
    triples.reserve(config.dim_repeats);
    for (std::size_t r = 0; r < config.dim_repeats; ++r) triples.push_back(random_system(3, d, rng));
    const double total = seconds([&] {
      for (const DiskSystem& t : triples) {
        const AffineTriple a = affine_project(t, 0, 1, 2);
        g_sink = cech_scale_triplet(PlanarTriple::from(a.planar_system, 0, 1, 2)).cech_scale;
      }
    });
    emit({"dim", d, "skeleton2-preprocess",
          config.dim_repeats ? total / static_cast<double>(config.dim_repeats) : 0.0});
  }
  return rows;
}

std::string csv_header() { return "parameter,value,algorithm,mean_seconds"; }

std::string csv_line(const BenchRow& row) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", row.mean_seconds);
  return row.parameter + "," + std::to_string(row.value) + "," + row.algorithm + "," + buf;
}

}  // namespace cech
