#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "pgsp/planar_graph.hpp"

namespace pgsp {

// Portable seeded source: mt19937_64's output sequence is fixed by the
// standard, and uniform() avoids the implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }
  bool coin() { return (eng_() >> 17) & 1; }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

struct GenParams {
  int width = 16;
  int height = 16;
  Weight max_len = 100;
  Weight max_cap = 0;  // 0: no capacities
};

// w x h grid, vertex (x, y) has id y*w + x. Independent random lengths per
// direction in [0, max_len], capacities in [0, max_cap].
EmbeddedPlanarGraph make_grid(const GenParams& p, std::uint64_t seed);

// Grid with a central block of vertices removed, leaving one large face.
EmbeddedPlanarGraph make_annulus_grid(const GenParams& p, std::uint64_t seed);

// Jittered lattice triangulated by a random diagonal per cell. Lengths are
// the rounded Euclidean length plus noise.
EmbeddedPlanarGraph make_delaunay_like(const GenParams& p, std::uint64_t seed);

// kind in {grid, annulus-grid, delaunay-like}; throws BadParams.
EmbeddedPlanarGraph generate(const std::string& kind, const GenParams& p, std::uint64_t seed);

}  // namespace pgsp
