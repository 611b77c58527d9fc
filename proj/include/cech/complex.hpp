#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cech/types.hpp"

namespace cech {

/// Strictly increasing, nonempty list of disk indices.
class Simplex {
 public:
  /// Sorts the input; throws std::invalid_argument on empty input or repeats.
  explicit Simplex(std::vector<std::size_t> vertices);
  Simplex(std::initializer_list<std::size_t> vertices);

  const std::vector<std::size_t>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t dimension() const { return vertices_.size() - 1; }

  /// The simplices obtained by dropping one vertex (none for a vertex).
  std::vector<Simplex> facets() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<std::size_t> vertices_;
};

/// Simplices with their weights.
class WeightedComplex {
 public:
  explicit WeightedComplex(std::size_t max_dim) : max_dim_(max_dim) {}

  std::size_t max_dim() const { return max_dim_; }
  const std::map<Simplex, double>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool contains(const Simplex& s) const { return entries_.contains(s); }
  std::optional<double> weight(const Simplex& s) const;
  std::size_t count(std::size_t dimension) const;

  void insert(Simplex s, double weight);

  /// Every face stored, weights monotone under inclusion, vertices at 0.
  bool is_valid() const;

 private:
  std::size_t max_dim_;
  std::map<Simplex, double> entries_;
};

/// Indices j < i with pair_scale(i, j) <= lambda, ascending.
std::vector<std::size_t> lower_nbrs(const DiskSystem& system, std::size_t i, double lambda);

/// The dim-skeleton of the Čech complex of a planar system at scale lambda,
/// weighted by Čech scale. Built level by level: each simplex is extended by
/// the common lower neighbours of its vertices. Edges and triangles get
/// their exact Čech scale; larger simplices the maximum of their facets (in
/// the plane that is their Čech scale too). A simplex is kept iff its
/// weight is <= lambda.
///
/// Throws std::invalid_argument for dim < 1, lambda < 0, a non-planar
/// system or non-positive radii.
WeightedComplex build_complex(const DiskSystem& system, double lambda, std::size_t dim,
                              double tolerance = kDefaultTolerance);

/// Entries sorted by weight, then dimension, then vertices. Every prefix is
/// a subcomplex.
std::vector<std::pair<double, Simplex>> filtration_steps(const WeightedComplex& complex);

}  // namespace cech
