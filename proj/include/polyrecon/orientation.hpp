#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polyrecon/figure_labels.hpp"
#include "polyrecon/graph.hpp"
#include "polyrecon/lattice.hpp"

namespace polyrecon {

/// Direction of every edge of a parent graph: forward[i] means edge i points
/// from its smaller to its larger endpoint.
struct Orientation {
  std::vector<bool> forward;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

/// Edge i of g as a directed pair (tail, head).
Edge directed_edge(const Graph& g, const Orientation& o, std::size_t i);
std::vector<Edge> directed_edges(const Graph& g, const Orientation& o);
/// Builds the orientation from directed pairs; throws InvalidInput when the
/// pairs do not cover every edge of g exactly once.
Orientation orientation_from_directed(const Graph& g, const std::vector<Edge>& arcs);

bool is_acyclic(const Graph& g, const Orientation& o);

/// Guard for exhaustive enumeration. Exceeding either bound is an error.
struct EnumerationLimits {
  std::size_t max_edges = 36;
  std::uint64_t max_count = 10'000'000;
  /// Worker threads for find_good_orientations; 1 runs sequentially.
  unsigned threads = 1;
};

/// Calls visit once per acyclic orientation of g, in a fixed order.
///
/// Orientations are generated layer by layer: the first layer is the set of
/// sources, each later layer the set of sources left after removing the
/// earlier ones. Every acyclic orientation has exactly one such layering.
void for_each_acyclic_orientation(const Graph& g,
                                  const std::function<void(const Orientation&)>& visit,
                                  const EnumerationLimits& limits = {});

std::vector<Orientation> enumerate_acyclic_orientations(const Graph& g,
                                                        const EnumerationLimits& limits = {});

/// No edge points into the subset from its complement.
bool is_initial(const Graph& g, const Orientation& o, const VertexSet& subset);

/// Number of elements of the vertex-figure lattice at v built from edges
/// that point into v, i.e. faces through v in which v is a sink.
int sink_count(int v, const Graph& g, const Orientation& o, const VertexFigureLattice& vf);

struct OrientationScore {
  std::vector<std::int64_t> per_vertex;
  std::int64_t total = 0;
};

/// Vertex-figure lattices for every vertex, built from the labels.
std::vector<VertexFigureLattice> vertex_figure_lattices(const Graph& g,
                                                        const VertexFigureLabels& labels);

OrientationScore score(const Graph& g, const Orientation& o, const VertexFigureLabels& labels);
OrientationScore score(const Graph& g, const Orientation& o,
                       const std::vector<VertexFigureLattice>& figures);

struct GoodOrientations {
  std::int64_t f = 0;             // minimum total score
  std::uint64_t n_acyclic = 0;    // orientations scored
  std::vector<Orientation> good;  // orientations attaining f, enumeration order
};

/// Minimises the sink-count score over all acyclic orientations. The result
/// is identical for any thread count.
GoodOrientations find_good_orientations(const Graph& g, const VertexFigureLabels& labels,
                                        const EnumerationLimits& limits = {});

/// Direct check on a known lattice: exactly one sink on every non-empty face.
bool is_good_oracle(const Graph& g, const Orientation& o, const FaceLattice& lat);

/// Good, and additionally exactly one source on every non-empty face.
bool is_abstract_objective_function(const Graph& g, const Orientation& o, const FaceLattice& lat);

}  // namespace polyrecon
