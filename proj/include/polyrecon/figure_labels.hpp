#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polyrecon/graph.hpp"
#include "polyrecon/lattice.hpp"
#include "polyrecon/types.hpp"

namespace polyrecon {

/// Edge-labelled vertex figures: at[v] lists, for every facet through v, the
/// set of edges at v that the facet contains. Labels are sorted and distinct.
struct VertexFigureLabels {
  std::vector<std::vector<EdgeSet>> at;

  friend bool operator==(const VertexFigureLabels&, const VertexFigureLabels&) = default;
};

/// Intersection closure of the labels at one vertex, with the empty set and
/// the full edge star. Each element stands for a face containing the vertex:
/// the empty set for the vertex itself, the full star for the polytope.
struct VertexFigureLattice {
  int vertex = -1;
  std::vector<Edge> star;             // edges at the vertex, sorted
  std::vector<EdgeSet> elements;      // sorted by (size, lexicographic)
  std::vector<std::uint64_t> masks;   // elements as bitmasks over star
};

/// Ground-truth labels read off a face lattice.
VertexFigureLabels extract_labels(const FaceLattice& lat);

VertexFigureLattice vf_lattice_from_labels(const Graph& g, int v, std::span<const EdgeSet> labels);

/// All (d-1)-subsets of the edge star at each vertex of a d-regular graph.
/// Throws InvalidInput when the graph is not regular.
VertexFigureLabels simple_labels_from_graph(const Graph& g);

/// Throws InvalidInput unless every label at v is a set of edges at v and the
/// labels at v cover the star.
void check_labels_consistent(const Graph& g, const VertexFigureLabels& labels);

/// Bitmask of an edge set over the star of v (bit i = edge to the i-th
/// neighbour). Throws InvalidInput for edges not at v.
std::uint64_t star_mask(const Graph& g, int v, const EdgeSet& edges);

}  // namespace polyrecon
