#pragma once

#include <vector>

#include "polyrecon/figure_labels.hpp"
#include "polyrecon/graph.hpp"
#include "polyrecon/lattice.hpp"
#include "polyrecon/orientation.hpp"

namespace polyrecon {

/// Induced subgraph on a vertex subset together with the edge star it keeps
/// at each of its vertices (phi[i] belongs to vertices[i]).
struct CandidateSubgraph {
  VertexSet vertices;
  std::vector<EdgeSet> phi;
};

CandidateSubgraph make_candidate(const Graph& g, const VertexSet& vertices);

/// Every vertex keeps an edge star equal to one of its labels. Several
/// matching labels are fine.
bool satisfies_label_condition(const CandidateSubgraph& c, const VertexFigureLabels& labels);

/// All non-empty vertex subsets passing the label condition, sorted.
std::vector<VertexSet> label_consistent_subsets(const Graph& g, const VertexFigureLabels& labels);

/// Label-consistent subsets that are initial for at least one of the given
/// orientations. Not yet reduced to minimal ones.
std::vector<VertexSet> initial_label_subsets(const Graph& g, const VertexFigureLabels& labels,
                                             const std::vector<Orientation>& good);

/// Inclusion-minimal members of a family, sorted.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> family);

/// Minimal non-empty induced subgraphs that are initial for some good
/// orientation and match a label at every vertex. For a genuine polytope
/// these are exactly the facet vertex sets.
std::vector<VertexSet> find_F_subgraphs(const Graph& g, const VertexFigureLabels& labels,
                                        const EnumerationLimits& limits = {});

/// Face lattice rebuilt from the graph and the labelled vertex figures.
/// Throws NotRecognized when the recovered facets do not form a polytopal
/// lattice.
FaceLattice reconstruct_lattice(const Graph& g, const VertexFigureLabels& labels,
                                const EnumerationLimits& limits = {});

/// Simple polytopes: labels are implied by a d-regular graph.
FaceLattice reconstruct_simple(const Graph& g, const EnumerationLimits& limits = {});

/// Facet list of a lattice as a polytope spec.
PolytopeSpec spec_of(const FaceLattice& lat, std::string name = {});

}  // namespace polyrecon
