#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyrecon/lattice.hpp"
#include "polyrecon/types.hpp"

namespace polyrecon {

/// Undirected simple graph on nodes 0..n_nodes-1.
///
/// Edges are canonical pairs kept in sorted order, so edge i has a stable
/// meaning for orientations and labels. Dual graphs carry facet names.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidInput on loops, parallel edges or ids out of range.
  Graph(int n_nodes, std::vector<Edge> edges, std::vector<std::string> node_names = {});

  int n_nodes() const { return n_nodes_; }
  std::size_t n_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  /// Sorted neighbour list.
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int a, int b) const;
  std::optional<std::size_t> edge_index(int a, int b) const;
  const std::vector<std::string>& node_names() const { return node_names_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_nodes_ == b.n_nodes_ && a.edges_ == b.edges_;
  }

 private:
  int n_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> node_names_;
};

/// Subgraph induced by a node subset, expressed in parent node ids.
struct InducedSubgraph {
  VertexSet nodes;
  std::vector<Edge> edges;

  /// Same subgraph relabelled onto 0..|nodes|-1 in node order.
  Graph as_graph() const;
};

/// Vertex–edge graph: rank-0 faces as nodes, rank-1 faces as edges.
Graph graph_of(const FaceLattice& lat);

/// Facets as nodes (lexicographic order), adjacent when they share a ridge.
/// Node names are the facet vertex sets.
Graph dual_graph(const FaceLattice& lat);

bool is_bipartite(const Graph& g);
/// Closed walk of odd length given as a node cycle, if the graph has one.
std::optional<std::vector<int>> find_odd_cycle(const Graph& g);
/// A triangle (a<b<c), if any.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);
bool is_connected(const Graph& g);

bool is_k_regular(const Graph& g, int k);
/// Common degree when the graph is regular.
std::optional<int> regular_degree(const Graph& g);

InducedSubgraph induced(const Graph& g, const VertexSet& subset);
/// Subgraph induced by the neighbours of v.
InducedSubgraph neighborhood(const Graph& g, int v);

/// If the subgraph is K_{2m} minus a perfect matching (m >= 1), returns the m
/// missing pairs in parent ids. Two isolated nodes count as the m = 1 case.
std::optional<std::vector<Edge>> complete_minus_perfect_matching(const InducedSubgraph& s);
std::optional<std::vector<Edge>> complete_minus_perfect_matching(const Graph& g);

/// Node bijection a -> b preserving adjacency, if one exists.
std::optional<std::vector<int>> find_graph_isomorphism(const Graph& a, const Graph& b);
inline bool graph_isomorphic(const Graph& a, const Graph& b) {
  return find_graph_isomorphism(a, b).has_value();
}

}  // namespace polyrecon
