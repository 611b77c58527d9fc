#include "cech/complex.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "cech/geometry.hpp"
#include "cech/rho.hpp"
#include "cech/solver.hpp"

namespace cech {

Simplex::Simplex(std::vector<std::size_t> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex must have a vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("simplex vertices must be distinct");
  }
}

Simplex::Simplex(std::initializer_list<std::size_t> vertices)
    : Simplex(std::vector<std::size_t>(vertices)) {}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t drop = 0; drop < vertices_.size(); ++drop) {
    std::vector<std::size_t> v;
    v.reserve(vertices_.size() - 1);
    for (std::size_t t = 0; t < vertices_.size(); ++t) {
      if (t != drop) v.push_back(vertices_[t]);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

std::optional<double> WeightedComplex::weight(const Simplex& s) const {
  auto it = entries_.find(s);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedComplex::count(std::size_t dimension) const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [&](const auto& e) {
    return e.first.dimension() == dimension;
  }));
}

void WeightedComplex::insert(Simplex s, double weight) {
  if (s.dimension() > max_dim_) throw std::invalid_argument("simplex above the complex dimension");
  if (!(weight >= 0.0)) throw std::invalid_argument("weights must be non-negative");
  entries_.insert_or_assign(std::move(s), weight);
}

bool WeightedComplex::is_valid() const {
  for (const auto& [s, w] : entries_) {
    if (s.size() == 1 && w != 0.0) return false;
    for (const Simplex& f : s.facets()) {
      auto fw = weight(f);
      if (!fw || *fw > w) return false;
    }
  }
  return true;
}

std::vector<std::size_t> lower_nbrs(const DiskSystem& system, std::size_t i, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("scale must be non-negative");
  if (i >= system.size()) throw std::out_of_range("disk index out of range");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < i; ++j) {
    if (pair_scale(system, i, j) <= lambda) out.push_back(j);
  }
  return out;
}

WeightedComplex build_complex(const DiskSystem& system, double lambda, std::size_t dim,
                              double tolerance) {
  if (dim < 1) throw std::invalid_argument("complex dimension must be at least 1");
  if (!(lambda >= 0.0)) throw std::invalid_argument("scale must be non-negative");
  if (system.dimension() != 2) throw std::invalid_argument("build_complex handles planar systems");
  if (!system.all_radii_positive()) throw std::invalid_argument("radii must be positive");

  const std::size_t m = system.size();
  const std::size_t d = system.dimension();
  WeightedComplex out(dim);

  std::vector<std::vector<std::size_t>> lower(m);
  for (std::size_t i = 0; i < m; ++i) lower[i] = lower_nbrs(system, i, lambda);

  std::vector<Simplex> level;
  for (std::size_t i = 0; i < m; ++i) {
    out.insert(Simplex{i}, 0.0);
    level.push_back(Simplex{i});
  }

  for (std::size_t n = 0; n < dim && !level.empty(); ++n) {
    std::vector<Simplex> next;
    for (const Simplex& sigma : level) {
      const auto& v = sigma.vertices();
      std::vector<std::size_t> common = lower[v.front()];
      for (std::size_t t = 1; t < v.size() && !common.empty(); ++t) {
        std::vector<std::size_t> both;
        std::set_intersection(common.begin(), common.end(), lower[v[t]].begin(),
                              lower[v[t]].end(), std::back_inserter(both));
        common = std::move(both);
      }
      for (std::size_t low : common) {
        std::vector<std::size_t> verts{low};
        verts.insert(verts.end(), v.begin(), v.end());
        Simplex N(std::move(verts));

        double w = 0.0;
        if (n == 0) {
          w = pair_scale(system, low, v.front());
        } else if (n + 1 <= d) {
          // n = 1 in the plane: a triangle, solved exactly.
          const auto& nv = N.vertices();
          w = cech_scale_triplet(PlanarTriple::from(system, nv[0], nv[1], nv[2]), tolerance)
                  .cech_scale;
        } else {
          bool closed = true;
          for (const Simplex& f : N.facets()) {
            auto fw = out.weight(f);
            if (!fw) {
              closed = false;
              break;
            }
            w = std::max(w, *fw);
          }
          if (!closed) continue;
        }
        if (w <= lambda) {
          out.insert(N, w);
          next.push_back(std::move(N));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<std::pair<double, Simplex>> filtration_steps(const WeightedComplex& complex) {
  std::vector<std::pair<double, Simplex>> out;
  out.reserve(complex.size());
  for (const auto& [s, w] : complex.entries()) out.emplace_back(w, s);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });
  return out;
}

}  // namespace cech
