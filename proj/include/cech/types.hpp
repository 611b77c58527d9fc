#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cech {

/// Default bisection width for every scale computation.
inline constexpr double kDefaultTolerance = 1e-12;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(Point2 a, Point2 b);

/// Closed ball in R^d. The radius may be zero only for rescaled copies
/// (scale 0 collapses a disk to its center); input systems require r > 0.
class Disk {
 public:
  Disk(std::vector<double> center, double radius);
  Disk(Point2 center, double radius);

  std::size_t dimension() const { return center_.size(); }
  std::span<const double> center() const { return center_; }
  double radius() const { return radius_; }
  Point2 center2() const;

  friend bool operator==(const Disk&, const Disk&) = default;

 private:
  std::vector<double> center_;
  double radius_;
};

/// Ordered list of disks sharing one ambient dimension. Index i is the
/// identity of disk i everywhere (simplices, complexes, file lines).
/// Centers are stored row-major so a single center is one contiguous span.
class DiskSystem {
 public:
  explicit DiskSystem(std::size_t dimension);
  DiskSystem(std::initializer_list<Disk> disks);
  explicit DiskSystem(std::span<const Disk> disks);

  void add(std::span<const double> center, double radius);
  void add(const Disk& disk);
  void add(Point2 center, double radius);

  std::size_t size() const { return radii_.size(); }
  bool empty() const { return radii_.empty(); }
  std::size_t dimension() const { return dim_; }

  std::span<const double> center(std::size_t i) const;
  double radius(std::size_t i) const { return radii_.at(i); }
  std::span<const double> radii() const { return radii_; }
  std::span<const double> coordinates() const { return coords_; }
  Point2 center2(std::size_t i) const;
  Disk disk(std::size_t i) const;

  /// Disks at the given indices, in the given order.
  DiskSystem subset(std::span<const std::size_t> indices) const;

  bool all_radii_positive() const;

  friend bool operator==(const DiskSystem&, const DiskSystem&) = default;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<double> radii_;
};

/// Structure-of-arrays copy of a planar system, the layout the vector
/// kernels consume.
struct PlanarDisks {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> r;

  explicit PlanarDisks(const DiskSystem& system);
  std::size_t size() const { return r.size(); }
  Point2 center(std::size_t i) const { return {x[i], y[i]}; }
};

}  // namespace cech
