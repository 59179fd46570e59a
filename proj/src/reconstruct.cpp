#include "polyrecon/reconstruct.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace polyrecon {

namespace {

using Mask = std::uint64_t;

std::vector<std::vector<Mask>> label_masks(const Graph& g, const VertexFigureLabels& labels) {
  check_labels_consistent(g, labels);
  std::vector<std::vector<Mask>> masks(g.n_nodes());
  for (int v = 0; v < g.n_nodes(); ++v)
    for (const auto& l : labels.at[v]) masks[v].push_back(star_mask(g, v, l));
  return masks;
}

// Depth-first over include/exclude decisions in node order. A chosen vertex
// keeps only edges to chosen neighbours, so its final star lies between the
// edges to chosen neighbours and those plus edges to undecided ones; some
// label must fit in that window.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, std::vector<std::vector<Mask>> labels)
      : g_(g), labels_(std::move(labels)), n_(g.n_nodes()), state_(n_, kUndecided) {
    if (n_ > 64) throw ResourceLimitExceeded("instance too large: more than 64 vertices");
  }

  std::vector<VertexSet> run() {
    visit(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  enum State { kUndecided, kIn, kOut };

  bool window_ok(int v) const {
    Mask lo = 0, hi = 0;
    auto nb = g_.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (state_[nb[i]] == kIn) lo |= Mask{1} << i;
      if (state_[nb[i]] != kOut) hi |= Mask{1} << i;
    }
    for (Mask l : labels_[v])
      if ((lo & ~l) == 0 && (l & ~hi) == 0) return true;
    return false;
  }

  bool feasible(int decided) const {
    // Only the new vertex and its chosen neighbours changed windows.
    if (state_[decided] == kIn && !window_ok(decided)) return false;
    for (int w : g_.neighbors(decided))
      if (state_[w] == kIn && !window_ok(w)) return false;
    return true;
  }

  void visit(int v) {
    if (v == n_) {
      VertexSet s;
      for (int u = 0; u < n_; ++u)
        if (state_[u] == kIn) s.push_back(u);
      if (!s.empty()) found_.push_back(std::move(s));
      return;
    }
    for (State choice : {kIn, kOut}) {
      state_[v] = choice;
      if (feasible(v)) visit(v + 1);
    }
    state_[v] = kUndecided;
  }

  const Graph& g_;
  std::vector<std::vector<Mask>> labels_;
  int n_;
  std::vector<State> state_;
  std::vector<VertexSet> found_;
};

}  // namespace

CandidateSubgraph make_candidate(const Graph& g, const VertexSet& vertices) {
  CandidateSubgraph c;
  c.vertices = normalized(vertices);
  for (int v : c.vertices) {
    EdgeSet star;
    for (int w : g.neighbors(v))
      if (std::binary_search(c.vertices.begin(), c.vertices.end(), w)) star.push_back(make_edge(v, w));
    std::sort(star.begin(), star.end());
    c.phi.push_back(std::move(star));
  }
  return c;
}

bool satisfies_label_condition(const CandidateSubgraph& c, const VertexFigureLabels& labels) {
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const auto& at_v = labels.at[c.vertices[i]];
    if (std::find(at_v.begin(), at_v.end(), c.phi[i]) == at_v.end()) return false;
  }
  return true;
}

std::vector<VertexSet> label_consistent_subsets(const Graph& g, const VertexFigureLabels& labels) {
  return SubsetSearch(g, label_masks(g, labels)).run();
}

std::vector<VertexSet> initial_label_subsets(const Graph& g, const VertexFigureLabels& labels,
                                             const std::vector<Orientation>& good) {
  // In-neighbour masks per good orientation.
  std::vector<std::vector<Mask>> preds(good.size(), std::vector<Mask>(g.n_nodes(), 0));
  for (std::size_t k = 0; k < good.size(); ++k)
    for (std::size_t i = 0; i < g.n_edges(); ++i) {
      auto [t, h] = directed_edge(g, good[k], i);
      preds[k][h] |= Mask{1} << t;
    }
  std::vector<VertexSet> out;
  for (auto& s : label_consistent_subsets(g, labels)) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << v;
    bool initial = std::any_of(preds.begin(), preds.end(), [&](const std::vector<Mask>& p) {
      return std::all_of(s.begin(), s.end(), [&](int v) { return (p[v] & ~m) == 0; });
    });
    if (initial) out.push_back(std::move(s));
  }
  return out;
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> out;
  for (const auto& s : family) {
    bool minimal = std::none_of(family.begin(), family.end(),
                                [&](const VertexSet& t) { return is_proper_subset(t, s); });
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> find_F_subgraphs(const Graph& g, const VertexFigureLabels& labels,
                                        const EnumerationLimits& limits) {
  const auto good = find_good_orientations(g, labels, limits);
  return minimal_sets(initial_label_subsets(g, labels, good.good));
}

PolytopeSpec spec_of(const FaceLattice& lat, std::string name) {
  return PolytopeSpec{std::move(name), lat.n_vertices(), lat.facets()};
}

FaceLattice reconstruct_lattice(const Graph& g, const VertexFigureLabels& labels,
                                const EnumerationLimits& limits) {
  PolytopeSpec spec{"reconstructed", g.n_nodes(), find_F_subgraphs(g, labels, limits)};
  for (const auto& f : spec.facets)
    if (!is_connected(induced(g, f).as_graph()))
      throw NotRecognized("input not recognized as polytopal: F-subgraph " + to_string(f) +
                          " is disconnected");
  FaceLattice lat;
  try {
    lat = build_face_lattice(spec);
  } catch (const InvalidInput& e) {
    throw NotRecognized(std::string("input not recognized as polytopal: ") + e.what());
  }
  auto report = validate_polytopality(lat);
  if (!report.ok())
    throw NotRecognized("input not recognized as polytopal: " + report.violations.front().detail);
  if (graph_of(lat) != g)
    throw NotRecognized("input not recognized as polytopal: rebuilt graph differs from input");
  return lat;
}

FaceLattice reconstruct_simple(const Graph& g, const EnumerationLimits& limits) {
  return reconstruct_lattice(g, simple_labels_from_graph(g), limits);
}

}  // namespace polyrecon
