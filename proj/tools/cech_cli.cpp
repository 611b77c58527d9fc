// Command-line front end: Čech scales, filtrations, 2-skeleta, minimal
// enclosing circles, SVG drawings and the benchmark.
//
// Exit codes: 0 ok, 1 other failure, 2 input parse error, 3 unsupported
// dimension.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cech/bench.hpp"
#include "cech/complex.hpp"
#include "cech/highdim.hpp"
#include "cech/io.hpp"
#include "cech/miniball.hpp"
#include "cech/solver.hpp"
#include "cech/svg.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

unsigned thread_count(unsigned flag) {
  if (const char* env = std::getenv("CECH_SCALE_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring CECH_SCALE_THREADS=" << env << "\n";
    }
  }
  return flag;
}

cech::DiskSystem load(const std::string& path, std::size_t min_dim, std::size_t max_dim) {
  cech::DiskSystem system = cech::io::read_disk_file(path);
  const std::size_t d = system.dimension();
  if (d < min_dim || d > max_dim) {
    throw DimensionError("unsupported dimension " + std::to_string(d));
  }
  return system;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Čech scales and filtered Čech complexes of disk systems"};
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads, 0 for all cores (env CECH_SCALE_THREADS wins)");

  std::string input;
  std::string out_path;
  double tolerance = cech::kDefaultTolerance;
  double lambda = 0.0;
  std::size_t max_dim = 2;
  bool naive = false;

  auto* scale_cmd = app.add_subcommand("cech-scale", "Rips and Čech scale with witness point");
  scale_cmd->add_option("input", input, "Disk file")->required();
  scale_cmd->add_option("--tolerance", tolerance, "Bisection tolerance")->capture_default_str();
  scale_cmd->add_flag("--naive", naive, "Bisect rho over the whole system instead of triplets");

  auto* filt_cmd = app.add_subcommand("filtration", "Weighted Čech complex of a planar system");
  filt_cmd->add_option("input", input, "Disk file")->required();
  filt_cmd->add_option("--lambda", lambda, "Scale")->required();
  filt_cmd->add_option("--max-dim", max_dim, "Skeleton dimension")->capture_default_str();
  filt_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* skel_cmd = app.add_subcommand("skeleton2", "Weighted 2-skeleton of a system in any dimension");
  skel_cmd->add_option("input", input, "Disk file")->required();
  skel_cmd->add_option("--lambda", lambda, "Scale")->required();
  skel_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* ball_cmd = app.add_subcommand("miniball", "Smallest enclosing circle of a point file");
  ball_cmd->add_option("input", input, "Point file, one x,y per line")->required();

  std::optional<double> render_scale;
  auto* render_cmd = app.add_subcommand("render", "SVG drawing of the rescaled system");
  render_cmd->add_option("input", input, "Disk file")->required();
  render_cmd->add_option("--scale", render_scale, "Scale (default: the Čech scale)");
  render_cmd->add_option("--out", out_path, "SVG file")->required();

  cech::BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Timing of the naive and triplet solvers (CSV)");
  bench_cmd->add_option("--min-disks", bench.min_disks)->capture_default_str();
  bench_cmd->add_option("--max-disks", bench.max_disks)->capture_default_str();
  bench_cmd->add_option("--step", bench.step)->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Systems per disk count")->capture_default_str();
  bench_cmd->add_option("--dims", bench.dims, "Dimensions for the triple preprocessing timing");
  bench_cmd->add_option("--dim-repeats", bench.dim_repeats)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--out", out_path, "CSV file (default stdout)");

  auto* check_cmd = app.add_subcommand("check-filtration", "Validate a filtration file");
  check_cmd->add_option("input", input, "Filtration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFailure;
  }

  cech::SolverOptions options;
  options.threads = thread_count(threads);

  try {
    if (*scale_cmd) {
      options.tolerance = tolerance;
      const cech::DiskSystem system = load(input, 2, 2);
      const cech::ScaleResult r =
          naive ? cech::cech_scale_naive(system, options) : cech::cech_scale(system, options);
      std::cout << "rips_scale=" << num(r.rips_scale) << "\n"
                << "cech_scale=" << num(r.cech_scale) << "\n"
                << "witness=" << num(r.witness.x) << "," << num(r.witness.y) << "\n"
                << "bisection_calls=" << r.bisection_calls << "\n"
                << "status="
                << (r.status == cech::ScaleStatus::RipsEqualsCech ? "rips_equals_cech"
                                                                   : "root_found")
                << "\n";
    } else if (*filt_cmd) {
      const cech::DiskSystem system = load(input, 2, 2);
      write_output(out_path,
                   cech::io::format_filtration(cech::build_complex(system, lambda, max_dim)));
    } else if (*skel_cmd) {
      const cech::DiskSystem system = load(input, 2, static_cast<std::size_t>(-1));
      write_output(out_path, cech::io::format_filtration(cech::two_skeleton(system, lambda)));
    } else if (*ball_cmd) {
      const auto points = cech::io::read_point_file(input);
      const cech::Ball b = cech::miniball(points, options);
      std::cout << "center=" << num(b.center.x) << "," << num(b.center.y) << "\n"
                << "radius=" << num(b.radius) << "\n";
    } else if (*render_cmd) {
      const cech::DiskSystem system = load(input, 2, 2);
      const cech::ScaleResult r = cech::cech_scale(system, options);
      const double scale = render_scale.value_or(r.cech_scale);
      std::optional<cech::Point2> witness;
      if (r.cech_scale <= scale) witness = r.witness;
      write_output(out_path, cech::render_svg(system, scale, witness));
    } else if (*bench_cmd) {
      bench.threads = options.threads;
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        out = &file;
      }
      *out << cech::csv_header() << "\n";
      cech::run_bench(bench, [&](const cech::BenchRow& row) {
        *out << cech::csv_line(row) << "\n" << std::flush;
      });
    } else if (*check_cmd) {
      std::ifstream in(input);
      if (!in) throw cech::io::ParseError(0, "cannot open " + input);
      const auto steps = cech::io::parse_filtration(in);
      if (auto problem = cech::io::check_filtration(steps)) {
        std::cerr << "invalid filtration: " << *problem << "\n";
        return kExitFailure;
      }
      std::cout << "ok " << steps.size() << " simplices\n";
    }
  } catch (const cech::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
