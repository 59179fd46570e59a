#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polyrecon/cubical.hpp"
#include "polyrecon/lattice.hpp"

namespace polyrecon {

/// d+1 vertices, every d-subset a facet.
PolytopeSpec simplex(int d);
/// Vertices are the bit vectors 0..2^d-1; facets fix one coordinate.
PolytopeSpec cube(int d);
/// Vertices 2j and 2j+1 are antipodal; a facet picks one of each pair.
PolytopeSpec cross_polytope(int d);
/// k-gon with vertices in cyclic order.
PolytopeSpec polygon(int k);
/// Cone over the base with apex n_vertices(base).
PolytopeSpec pyramid(const PolytopeSpec& base);
/// Product of the base with a segment; copy of vertex v is v + n.
PolytopeSpec prism(const PolytopeSpec& base);
inline PolytopeSpec prism(int polygon_size) { return prism(polygon(polygon_size)); }
/// Cyclic d-polytope on n vertices, facets by Gale's evenness rule.
PolytopeSpec cyclic(int d, int n);

/// Unbiased draw from 0..bound-1 by rejection on a 64-bit Mersenne twister.
/// Both the engine and this rule are fully specified, so draws are the same
/// on every platform.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

struct CappedFixture {
  PolytopeSpec spec;
  std::uint64_t seed = 0;
  /// Facet capped at each step, as a vertex set of the polytope at that step.
  std::vector<VertexSet> capped_facets;
};

/// Start from cube(d) and cap a uniformly drawn facet n_caps times. The facet
/// is drawn by index into the lexicographically sorted facet list.
CappedFixture random_capped(int d, int n_caps, std::uint64_t seed);

/// 3-cube capped once on its first facet: two cubes glued along a square.
PolytopeSpec stacked_cubes();

/// Three quadrangles glued into a Möbius strip (bipartite graph, but three
/// facets in a line close up).
CubicalComplexSpec moebius_strip();

}  // namespace polyrecon
