#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cech {

struct BenchConfig {
  std::size_t min_disks = 10;
  std::size_t max_disks = 500;
  std::size_t step = 10;
  std::size_t repeats = 10;          // systems per disk count
  std::vector<std::size_t> dims;     // dimensions for the triplet preprocessing run
  std::size_t dim_repeats = 10000;   // triples per dimension
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
};

struct BenchRow {
  std::string parameter;  // "disks" or "dim"
  std::size_t value;
  std::string algorithm;  // naive, triplets, skeleton2-preprocess
  double mean_seconds;
};

/// Times the naive and the triplet solver on random planar systems for each
/// disk count, then the projection plus triplet solve on random triples in
/// each dimension. Instances for a given size depend only on the seed and
/// the size. on_row, when set, sees each row as soon as it is measured.
std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const std::function<void(const BenchRow&)>& on_row = {});

std::string csv_header();
std::string csv_line(const BenchRow& row);

}  // namespace cech
