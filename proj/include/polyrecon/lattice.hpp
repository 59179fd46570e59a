#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyrecon/types.hpp"

namespace polyrecon {

/// Combinatorial polytope given by its facet–vertex incidences.
///
/// Vertex ids run over 0..n_vertices-1. Every facet is a sorted vertex set.
struct PolytopeSpec {
  std::string name;
  int n_vertices = 0;
  std::vector<VertexSet> facets;
};

/// Throws InvalidInput naming the first offending facet when the spec is not
/// a plausible facet list: ids out of range, empty or duplicate facets, a
/// facet equal to the whole vertex set, containment between facets, or an
/// uncovered vertex.
void validate_spec(const PolytopeSpec& spec);

/// Sorts each facet and the facet list. Does not validate.
PolytopeSpec canonical(PolytopeSpec spec);

struct Face {
  VertexSet vertices;
  int rank = -1;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Graded poset of faces, each face identified with its vertex set and
/// ordered by containment. Faces are stored sorted by (rank, vertex set).
class FaceLattice {
 public:
  FaceLattice() = default;

  /// Ranks every face by the longest chain from the empty face (rank -1).
  /// The empty face and the full vertex set are added when absent; no other
  /// closure is applied, so defective families are representable.
  static FaceLattice from_faces(int n_vertices, std::vector<VertexSet> faces);

  int n_vertices() const { return n_vertices_; }
  int dimension() const { return faces_.empty() ? -1 : faces_.back().rank; }
  std::span<const Face> faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }

  std::optional<std::size_t> find(const VertexSet& vertices) const;
  bool contains(const VertexSet& vertices) const { return find(vertices).has_value(); }
  /// Rank of the face with this vertex set, or nullopt.
  std::optional<int> rank_of(const VertexSet& vertices) const;

  /// Faces of rank r, lexicographically sorted.
  std::vector<VertexSet> faces_of_rank(int r) const;
  std::vector<VertexSet> facets() const { return faces_of_rank(dimension() - 1); }
  std::vector<VertexSet> ridges() const { return faces_of_rank(dimension() - 2); }

  /// Number of faces per rank; entry i holds rank i-1.
  std::vector<std::size_t> rank_sizes() const;

 private:
  int n_vertices_ = 0;
  std::vector<Face> faces_;
  std::map<VertexSet, std::size_t> index_;
};

/// Intersection closure of the facets, plus the empty face and the top.
FaceLattice build_face_lattice(const PolytopeSpec& spec);

inline int dimension(const FaceLattice& lat) { return lat.dimension(); }

/// Number of faces other than the empty face (the top counts).
std::size_t count_nonempty_faces(const FaceLattice& lat);

/// Order-reversed lattice. Dual vertex i is the i-th facet in sorted order;
/// the dual face of G is the set of facets containing G.
FaceLattice dual_lattice(const FaceLattice& lat);

/// Vertex bijection a -> b that carries the face family of a onto the face
/// family of b, if one exists. witness[v] is the image of atom v.
std::optional<std::vector<int>> find_lattice_isomorphism(const FaceLattice& a,
                                                         const FaceLattice& b);

inline bool lattice_isomorphic(const FaceLattice& a, const FaceLattice& b) {
  return find_lattice_isomorphism(a, b).has_value();
}

enum class ViolationKind {
  kMissingBottom,
  kMissingTop,
  kNotIntersectionClosed,
  kNotGraded,
  kDiamond,
  kAtoms,
  kNotCoatomic,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Checks intersection closure, gradedness, the diamond property, and that
/// atoms are the singletons and every face is an intersection of facets.
ValidationReport validate_polytopality(const FaceLattice& lat);

/// Faces of lat contained in the given face, relabelled onto 0..|face|-1 in
/// vertex order.
FaceLattice interval_below(const FaceLattice& lat, const VertexSet& face);

}  // namespace polyrecon
