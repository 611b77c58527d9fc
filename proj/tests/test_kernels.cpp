#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "cech/kernels.hpp"

using namespace cech::kernels;

namespace {

struct Cloud {
  std::vector<double> x, y, r;
};

Cloud cloud(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-5.0, 15.0), rad(0.1, 4.0);
  Cloud out;
  for (std::size_t k = 0; k < n; ++k) {
    out.x.push_back(c(rng));
    out.y.push_back(c(rng));
    out.r.push_back(rad(rng));
  }
  return out;
}

std::vector<const KernelTable*> vector_tables() {
  std::vector<const KernelTable*> out;
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (const KernelTable* t = table_for(isa)) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar table is always available and the active table is one of the tables") {
  REQUIRE(table_for(Isa::Scalar) != nullptr);
  const Isa current = active().isa;
  CHECK(table_for(current) == &active());
  MESSAGE("active kernels: " << isa_name(current));
}

TEST_CASE("force switches the active table") {
  const Isa before = active().isa;
  CHECK(force(Isa::Scalar));
  CHECK(active().isa == Isa::Scalar);
  if (!table_for(Isa::Neon)) CHECK_FALSE(force(Isa::Neon));
  CHECK(force(before));
}

TEST_CASE("min_signed_distance follows its contract") {
  std::mt19937_64 rng(1);
  const auto& k = *table_for(Isa::Scalar);
  for (std::size_t n : {1u, 3u, 8u, 9u, 17u, 40u}) {
    const Cloud c = cloud(n, rng);
    const double px = 4.0, py = 6.0, lambda = 1.3;
    double exact = std::numeric_limits<double>::infinity();
    std::size_t at = n;
    for (std::size_t t = 0; t < n; ++t) {
      if (t == 0 || t == 2) continue;
      const double v = lambda * c.r[t] - std::hypot(c.x[t] - px, c.y[t] - py);
      if (v < exact) exact = v, at = t;
    }
    const auto full = k.min_signed_distance(c.x.data(), c.y.data(), c.r.data(), n, px, py,
                                            lambda, 0, 2, -std::numeric_limits<double>::infinity());
    CHECK(full.index == at);
    if (at < n) CHECK(full.value == doctest::Approx(exact).epsilon(1e-14));
    const auto cut = k.min_signed_distance(c.x.data(), c.y.data(), c.r.data(), n, px, py, lambda,
                                           0, 2, full.value - 1.0);
    CHECK(cut.value == full.value);
  }
}

TEST_CASE("vector kernels agree with the scalar reference") {
  const auto& ref = *table_for(Isa::Scalar);
  const auto tables = vector_tables();
  if (tables.empty()) MESSAGE("no vector kernels on this machine");
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  for (const KernelTable* t : tables) {
    CAPTURE(isa_name(t->isa));
    for (std::size_t n = 1; n <= 70; ++n) {
      const Cloud c = cloud(n, rng);
      for (int rep = 0; rep < 8; ++rep) {
        const double px = 20 * u(rng) - 5, py = 20 * u(rng) - 5, lambda = 3 * u(rng);
        const std::size_t sa = rng() % (n + 2), sb = rng() % (n + 2);
        const double cutoffs[] = {-std::numeric_limits<double>::infinity(), -5.0, 0.0, 100.0};
        for (double cutoff : cutoffs) {
          const auto a = ref.min_signed_distance(c.x.data(), c.y.data(), c.r.data(), n, px, py,
                                                 lambda, sa, sb, cutoff);
          const auto b = t->min_signed_distance(c.x.data(), c.y.data(), c.r.data(), n, px, py,
                                                lambda, sa, sb, cutoff);
          CHECK(a.value == b.value);
          CHECK(a.index == b.index);
        }
        CHECK(ref.max_ratio(c.x.data(), c.y.data(), c.r.data(), n, px, py) ==
              t->max_ratio(c.x.data(), c.y.data(), c.r.data(), n, px, py));
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto a = ref.max_pair_scale_row(c.x.data(), c.y.data(), c.r.data(), n, i);
        const auto b = t->max_pair_scale_row(c.x.data(), c.y.data(), c.r.data(), n, i);
        CHECK(a.value == b.value);
        CHECK(a.index == b.index);
      }
    }
  }
}

TEST_CASE("vector kernels tie-break like the scalar reference") {
  // All disks identical: every k ties, the lowest index wins.
  std::vector<double> x(21, 1.0), y(21, 2.0), r(21, 0.5);
  for (const KernelTable* t : vector_tables()) {
    const auto a = t->min_signed_distance(x.data(), y.data(), r.data(), 21, 0, 0, 1.0, 0, 1,
                                          -std::numeric_limits<double>::infinity());
    CHECK(a.index == 2);
    const auto row = t->max_pair_scale_row(x.data(), y.data(), r.data(), 21, 3);
    CHECK(row.index == 4);
  }
}

TEST_CASE("R^d reductions agree up to rounding") {
  const auto& ref = *table_for(Isa::Scalar);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 3.0);
  for (const KernelTable* t : vector_tables()) {
    for (std::size_t d = 1; d <= 130; d += 3) {
      std::vector<double> o(d), a(d), b(d);
      for (std::size_t i = 0; i < d; ++i) o[i] = g(rng), a[i] = g(rng), b[i] = g(rng);
      const double s1 = ref.squared_distance(a.data(), b.data(), d);
      const double s2 = t->squared_distance(a.data(), b.data(), d);
      CHECK(std::abs(s1 - s2) <= 1e-14 * s1);
      const Gram3 g1 = ref.difference_gram(o.data(), a.data(), b.data(), d);
      const Gram3 g2 = t->difference_gram(o.data(), a.data(), b.data(), d);
      CHECK(std::abs(g1.aa - g2.aa) <= 1e-14 * g1.aa);
      CHECK(std::abs(g1.bb - g2.bb) <= 1e-14 * g1.bb);
      CHECK(std::abs(g1.ab - g2.ab) <= 1e-13 * std::sqrt(g1.aa * g1.bb));
    }
    // Two coordinates: the planar case is exact.
    const double p[2] = {0.1, 0.7}, q[2] = {3.3, -2.9};
    CHECK(ref.squared_distance(p, q, 2) == t->squared_distance(p, q, 2));
  }
}
