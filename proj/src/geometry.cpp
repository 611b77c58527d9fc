#include "cech/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cech/kernels.hpp"

namespace cech {

double distance(Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return std::sqrt(dx * dx + dy * dy);
}

// ---------------------------------------------------------------- Disk

Disk::Disk(std::vector<double> center, double radius)
    : center_(std::move(center)), radius_(radius) {
  if (center_.empty()) throw std::invalid_argument("disk center needs at least one coordinate");
  if (!(radius_ >= 0.0) || !std::isfinite(radius_)) {
    throw std::invalid_argument("disk radius must be finite and non-negative");
  }
  for (double c : center_) {
    if (!std::isfinite(c)) throw std::invalid_argument("disk center must be finite");
  }
}

Disk::Disk(Point2 center, double radius) : Disk(std::vector<double>{center.x, center.y}, radius) {}

Point2 Disk::center2() const {
  if (center_.size() != 2) throw std::invalid_argument("expected a planar disk");
  return {center_[0], center_[1]};
}

// ---------------------------------------------------------- DiskSystem

DiskSystem::DiskSystem(std::size_t dimension) : dim_(dimension) {
  if (dim_ == 0) throw std::invalid_argument("dimension must be at least 1");
}

DiskSystem::DiskSystem(std::initializer_list<Disk> disks)
    : DiskSystem(std::span<const Disk>(disks.begin(), disks.size())) {}

DiskSystem::DiskSystem(std::span<const Disk> disks)
    : dim_(disks.empty() ? 0 : disks.front().dimension()) {
  if (disks.empty()) throw std::invalid_argument("disk system must not be empty");
  for (const Disk& d : disks) add(d);
}

void DiskSystem::add(std::span<const double> center, double radius) {
  if (center.size() != dim_) {
    throw std::invalid_argument("disk has dimension " + std::to_string(center.size()) +
                                ", system has " + std::to_string(dim_));
  }
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("disk radius must be finite and non-negative");
  }
  for (double c : center) {
    if (!std::isfinite(c)) throw std::invalid_argument("disk center must be finite");
  }
  coords_.insert(coords_.end(), center.begin(), center.end());
  radii_.push_back(radius);
}

void DiskSystem::add(const Disk& disk) { add(disk.center(), disk.radius()); }

void DiskSystem::add(Point2 center, double radius) {
  const double c[2] = {center.x, center.y};
  add(std::span<const double>(c, 2), radius);
}

std::span<const double> DiskSystem::center(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("disk index out of range");
  return std::span<const double>(coords_).subspan(i * dim_, dim_);
}

Point2 DiskSystem::center2(std::size_t i) const {
  if (dim_ != 2) throw std::invalid_argument("expected a planar disk system");
  auto c = center(i);
  return {c[0], c[1]};
}

Disk DiskSystem::disk(std::size_t i) const {
  auto c = center(i);
  return Disk(std::vector<double>(c.begin(), c.end()), radii_[i]);
}

DiskSystem DiskSystem::subset(std::span<const std::size_t> indices) const {
  DiskSystem out(dim_);
  for (std::size_t i : indices) out.add(center(i), radius(i));
  return out;
}

bool DiskSystem::all_radii_positive() const {
  return std::all_of(radii_.begin(), radii_.end(), [](double r) { return r > 0.0; });
}

PlanarDisks::PlanarDisks(const DiskSystem& system) {
  if (system.dimension() != 2) throw std::invalid_argument("expected a planar disk system");
  const std::size_t m = system.size();
  x.resize(m);
  y.resize(m);
  r.assign(system.radii().begin(), system.radii().end());
  auto coords = system.coordinates();
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = coords[2 * i];
    y[i] = coords[2 * i + 1];
  }
}

// ---------------------------------------------------------- operations

double rips_bound_factor(std::size_t dimension) {
  const double d = static_cast<double>(dimension);
  return std::sqrt(2.0 * d / (d + 1.0));
}

DiskSystem rescale(const DiskSystem& system, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("scale must be non-negative");
  DiskSystem out(system.dimension());
  for (std::size_t i = 0; i < system.size(); ++i) {
    out.add(system.center(i), lambda * system.radius(i));
  }
  return out;
}

namespace {

double pair_scale_raw(std::span<const double> ca, double ra, std::span<const double> cb,
                      double rb) {
  if (ca.size() != cb.size()) throw std::invalid_argument("disks differ in dimension");
  const double sum = ra + rb;
  const double d2 = kernels::active().squared_distance(ca.data(), cb.data(), ca.size());
  if (d2 == 0.0) return 0.0;
  if (!(sum > 0.0)) throw std::invalid_argument("pair scale needs positive radii");
  return std::sqrt(d2) / sum;
}

}  // namespace

double pair_scale(const Disk& a, const Disk& b) {
  return pair_scale_raw(a.center(), a.radius(), b.center(), b.radius());
}

double pair_scale(const DiskSystem& system, std::size_t i, std::size_t j) {
  return pair_scale_raw(system.center(i), system.radius(i), system.center(j), system.radius(j));
}

double rips_scale(const DiskSystem& system) {
  const std::size_t m = system.size();
  if (m == 0) throw std::invalid_argument("rips scale of an empty system");
  if (!system.all_radii_positive()) throw std::invalid_argument("rips scale needs positive radii");
  double best = 0.0;
  if (system.dimension() == 2) {
    const PlanarDisks p(system);
    const auto& k = kernels::active();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      best = std::max(best, k.max_pair_scale_row(p.x.data(), p.y.data(), p.r.data(), m, i).value);
    }
    return best;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) best = std::max(best, pair_scale(system, i, j));
  }
  return best;
}

std::optional<double> containment_scale(const Disk& a, const Disk& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("disks differ in dimension");
  const double d2 =
      kernels::active().squared_distance(a.center().data(), b.center().data(), a.dimension());
  if (d2 == 0.0) return 0.0;
  if (a.radius() == b.radius()) return std::nullopt;
  return std::sqrt(d2) / std::abs(a.radius() - b.radius());
}

Point2 d_point(const Disk& a, const Disk& b, double lambda) {
  if (a.dimension() != 2 || b.dimension() != 2) {
    throw std::invalid_argument("d_point is defined for planar disks only");
  }
  if (!(lambda >= 0.0)) throw std::invalid_argument("scale must be non-negative");
  if (a.center2() == b.center2()) return a.center2();
  if (lambda < pair_scale(a, b)) throw std::domain_error("disks disjoint at this scale");
  return detail::d_point(a.center2(), a.radius(), b.center2(), b.radius(), lambda);
}

namespace detail {

Point2 d_point(Point2 ci, double ri, Point2 cj, double rj, double lambda) {
  const double dx = cj.x - ci.x;
  const double dy = cj.y - ci.y;
  const double delta = std::sqrt(dx * dx + dy * dy);
  if (delta == 0.0) return ci;

  bool frozen = false;
  if (ri != rj) {
    const double contain = delta / std::abs(ri - rj);
    if (lambda >= contain) {
      lambda = contain;
      frozen = true;
    }
  }
  const double Ri = lambda * ri;
  const double Rj = lambda * rj;
  const double a = (delta * delta + Ri * Ri - Rj * Rj) / (2.0 * delta);
  double h = 0.0;
  if (!frozen) {
    // R_i^2 - a^2 in factored form; each factor clamped at zero.
    const double f1 = std::max(0.0, Ri + Rj - delta);
    const double f2 = std::max(0.0, delta + Rj - Ri);
    const double f3 = std::max(0.0, delta + Ri - Rj);
    const double f4 = delta + Ri + Rj;
    h = std::sqrt(f1 * f2 * f3 * f4) / (2.0 * delta);
  }
  const double ux = dx / delta;
  const double uy = dy / delta;
  return {ci.x + a * ux - h * uy, ci.y + a * uy + h * ux};
}

}  // namespace detail
}  // namespace cech
