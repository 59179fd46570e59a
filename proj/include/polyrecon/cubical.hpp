#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyrecon/figure_labels.hpp"
#include "polyrecon/graph.hpp"
#include "polyrecon/lattice.hpp"

namespace polyrecon {

/// Abstract cubical complex. Each maximal cube comes with a certificate:
/// cubes[i][b] is the vertex at bit vector b, so cubes[i] has 2^k entries for
/// a k-cube.
struct CubicalComplexSpec {
  std::string name;
  int n_vertices = 0;
  std::vector<std::vector<int>> cubes;
};

/// All faces of all certified cubes, plus the empty face and a top element.
/// No polytopality is promised; validate_polytopality will say what fails.
FaceLattice complex_lattice(const CubicalComplexSpec& spec);

struct BipartitenessAudit {
  /// The boundary complex must have dimension >= 2 (lattice dimension >= 3).
  bool applicable = false;
  bool bipartite = false;
  std::vector<int> odd_cycle;
  std::optional<std::array<int, 3>> triangle;

  bool passed() const { return !applicable || bipartite; }
};

BipartitenessAudit check_no_odd_cycles(const FaceLattice& lat);

/// The faces below the facet form a combinatorial (d-1)-cube.
bool is_cube_facet(const FaceLattice& lat, const VertexSet& facet);

/// Pairs of disjoint ridges inside a cube facet. Throws InvalidInput when the
/// facet is not a combinatorial cube.
std::vector<std::pair<VertexSet, VertexSet>> opposite_ridges(const FaceLattice& lat,
                                                             const VertexSet& facet);

struct ThreeFacetViolation {
  VertexSet a, b, c;  // a∩b and b∩c are opposite ridges of b
  VertexSet a_meet_c; // and yet a ridge
};

struct ThreeFacetAudit {
  bool applicable = false;  // lattice dimension >= 3
  std::vector<VertexSet> non_cube_facets;
  std::vector<ThreeFacetViolation> violations;  // ordered triples
  /// Violations grouped by the unordered facet triple.
  std::vector<std::array<VertexSet, 3>> classes;

  bool passed() const { return !applicable || (violations.empty() && non_cube_facets.empty()); }
};

/// For all facets A, B, C with A∩B and B∩C opposite ridges of B, A∩C must
/// not be a ridge.
ThreeFacetAudit check_three_facet_lemma(const FaceLattice& lat);

/// Edge labels of the dual vertex of a facet F, computed from the primal
/// side: every (d-1)-subset of F's dual-graph neighbours whose members meet
/// pairwise. Each label is a set of dual-graph edges {F, N}; node ids are
/// positions in the sorted facet list.
std::vector<EdgeSet> opposite_pairs_labeling(const FaceLattice& lat, const VertexSet& facet);

struct CapCandidate {
  int node = -1;
  std::vector<Edge> matching;  // opposite pairs among the neighbours
};

/// Nodes whose neighbours induce a complete graph minus a perfect matching.
/// Throws InvalidInput unless the graph is 2(d-1)-regular for some d >= 2.
std::vector<CapCandidate> detect_caps(const Graph& dual);

struct ContractionRecord {
  VertexSet contracted;          // the cap and its neighbours, old ids
  int cap = -1;
  int new_node = -1;             // id of the merged node in the new graph
  std::vector<Edge> matching;
  std::vector<int> old_to_new;   // -1 for contracted nodes
};

/// Merges the cap and its neighbours into one node adjacent to every outside
/// neighbour of the group. Survivors keep their relative order; the merged
/// node gets the last id.
std::pair<Graph, ContractionRecord> contract_cap(const Graph& dual, int cap,
                                                 const std::vector<Edge>& matching);

/// Glues a cube onto a cube facet. Vertex v of the facet gets a mirror,
/// numbered after the existing vertices in the order of the originals. The
/// facet is replaced by the cap (all mirrors) and one side facet r ∪ r' per
/// ridge r of the facet.
PolytopeSpec cap_facet(const FaceLattice& lat, const VertexSet& facet);

struct CappedReconstruction {
  FaceLattice lattice;
  /// Facet assigned to every node of the input dual graph.
  std::vector<VertexSet> node_facets;
  /// Caps that were detected but could not be removed consistently.
  std::vector<std::string> notes;
};

/// Rebuilds a capped cubical polytope from its dual graph by peeling caps
/// down to a cube and capping back up. The result is checked against the
/// input; a mismatch raises InternalError, an unrecognised input
/// NotRecognized.
///
/// Recognition is purely combinatorial: whether a capping is geometrically
/// realisable plays no role here.
CappedReconstruction reconstruct_capped(const Graph& dual);

}  // namespace polyrecon
