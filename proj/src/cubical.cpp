#include "polyrecon/cubical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "polyrecon/generators.hpp"

namespace polyrecon {

FaceLattice complex_lattice(const CubicalComplexSpec& spec) {
  if (spec.n_vertices <= 0) throw InvalidInput("complex '" + spec.name + "' has no vertices");
  std::vector<VertexSet> faces;
  std::vector<bool> covered(spec.n_vertices, false);
  for (std::size_t i = 0; i < spec.cubes.size(); ++i) {
    const auto& cert = spec.cubes[i];
    const std::string where = "cube #" + std::to_string(i);
    if (cert.empty() || !std::has_single_bit(cert.size()))
      throw InvalidInput(where + " certificate size is not a power of two");
    if (normalized(cert).size() != cert.size()) throw InvalidInput(where + " repeats a vertex");
    for (int v : cert) {
      if (v < 0 || v >= spec.n_vertices) throw InvalidInput(where + " has a vertex out of range");
      covered[v] = true;
    }
    const int k = std::countr_zero(cert.size());
    // A face fixes some coordinates (mask) to given values.
    for (unsigned fixed = 0; fixed < (1U << k); ++fixed)
      for (unsigned value = 0; value < (1U << k); ++value) {
        if (value & ~fixed) continue;
        VertexSet f;
        for (unsigned b = 0; b < cert.size(); ++b)
          if ((b & fixed) == value) f.push_back(cert[b]);
        faces.push_back(normalized(std::move(f)));
      }
  }
  for (int v = 0; v < spec.n_vertices; ++v)
    if (!covered[v]) throw InvalidInput("vertex " + std::to_string(v) + " lies in no cube");
  return FaceLattice::from_faces(spec.n_vertices, std::move(faces));
}

BipartitenessAudit check_no_odd_cycles(const FaceLattice& lat) {
  BipartitenessAudit audit;
  audit.applicable = lat.dimension() >= 3;
  const Graph g = graph_of(lat);
  auto cycle = find_odd_cycle(g);
  audit.bipartite = !cycle.has_value();
  if (cycle) audit.odd_cycle = std::move(*cycle);
  audit.triangle = find_triangle(g);
  return audit;
}

bool is_cube_facet(const FaceLattice& lat, const VertexSet& facet) {
  auto r = lat.rank_of(facet);
  if (!r) return false;
  const int k = *r;
  if (k < 0) return false;
  if (k == 0) return facet.size() == 1;
  if (k > 20 || facet.size() != (std::size_t{1} << k)) return false;
  return lattice_isomorphic(interval_below(lat, facet), build_face_lattice(cube(k)));
}

std::vector<std::pair<VertexSet, VertexSet>> opposite_ridges(const FaceLattice& lat,
                                                             const VertexSet& facet) {
  if (!is_cube_facet(lat, facet))
    throw InvalidInput("facet " + to_string(facet) + " is not a combinatorial cube");
  std::vector<VertexSet> inside;
  const int r = *lat.rank_of(facet) - 1;
  for (const auto& f : lat.faces_of_rank(r))
    if (is_subset(f, facet)) inside.push_back(f);
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = i + 1; j < inside.size(); ++j)
      if (disjoint(inside[i], inside[j])) pairs.emplace_back(inside[i], inside[j]);
  return pairs;
}

ThreeFacetAudit check_three_facet_lemma(const FaceLattice& lat) {
  ThreeFacetAudit audit;
  const int d = lat.dimension();
  audit.applicable = d >= 3;
  if (!audit.applicable) return audit;

  const auto facets = lat.facets();
  std::map<VertexSet, std::vector<VertexSet>> holders;
  for (const auto& r : lat.ridges())
    for (const auto& f : facets)
      if (is_subset(r, f)) holders[r].push_back(f);

  std::set<std::array<VertexSet, 3>> classes;
  for (const auto& b : facets) {
    if (!is_cube_facet(lat, b)) {
      audit.non_cube_facets.push_back(b);
      continue;
    }
    for (const auto& [r1, r2] : opposite_ridges(lat, b))
      for (const auto& [x, y] : {std::pair{r1, r2}, std::pair{r2, r1}})
        for (const auto& a : holders[x])
          for (const auto& c : holders[y]) {
            if (a == b || c == b || a == c) continue;
            VertexSet meet = intersect(a, c);
            if (lat.rank_of(meet) != d - 2) continue;
            audit.violations.push_back({a, b, c, meet});
            std::array<VertexSet, 3> key{a, b, c};
            std::sort(key.begin(), key.end());
            classes.insert(key);
          }
  }
  audit.classes.assign(classes.begin(), classes.end());
  return audit;
}

std::vector<EdgeSet> opposite_pairs_labeling(const FaceLattice& lat, const VertexSet& facet) {
  const auto facets = lat.facets();
  auto it = std::lower_bound(facets.begin(), facets.end(), facet);
  if (it == facets.end() || *it != facet) throw InvalidInput(to_string(facet) + " is not a facet");
  const int self = static_cast<int>(it - facets.begin());
  const int d = lat.dimension();
  const Graph dual = dual_graph(lat);
  auto omega_span = dual.neighbors(self);
  const std::vector<int> omega(omega_span.begin(), omega_span.end());
  const int pick = d - 1;
  const int m = static_cast<int>(omega.size());

  std::vector<EdgeSet> labels;
  if (pick < 0 || pick > m) return labels;
  std::vector<int> idx(pick);
  // Lexicographic walk over pick-subsets of omega.
  for (int i = 0; i < pick; ++i) idx[i] = i;
  for (;;) {
    bool meets = true;
    for (int i = 0; i < pick && meets; ++i)
      for (int j = i + 1; j < pick && meets; ++j)
        if (disjoint(facets[omega[idx[i]]], facets[omega[idx[j]]])) meets = false;
    if (meets) {
      EdgeSet label;
      for (int i : idx) label.push_back(make_edge(self, omega[i]));
      std::sort(label.begin(), label.end());
      labels.push_back(std::move(label));
    }
    int i = pick - 1;
    while (i >= 0 && idx[i] == m - pick + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<CapCandidate> detect_caps(const Graph& dual) {
  auto k = regular_degree(dual);
  if (!k || *k < 2 || *k % 2 != 0)
    throw InvalidInput("dual graph is not 2(d-1)-regular for any d >= 2");
  std::vector<CapCandidate> caps;
  for (int v = 0; v < dual.n_nodes(); ++v)
    if (auto m = complete_minus_perfect_matching(neighborhood(dual, v)))
      caps.push_back({v, std::move(*m)});
  return caps;
}

std::pair<Graph, ContractionRecord> contract_cap(const Graph& dual, int cap,
                                                 const std::vector<Edge>& matching) {
  ContractionRecord rec;
  rec.cap = cap;
  rec.matching = matching;
  auto nb = dual.neighbors(cap);
  rec.contracted.assign(nb.begin(), nb.end());
  rec.contracted.push_back(cap);
  rec.contracted = normalized(std::move(rec.contracted));

  rec.old_to_new.assign(dual.n_nodes(), -1);
  int next = 0;
  for (int v = 0; v < dual.n_nodes(); ++v)
    if (!std::binary_search(rec.contracted.begin(), rec.contracted.end(), v)) rec.old_to_new[v] = next++;
  rec.new_node = next;

  std::set<Edge> edges;
  for (const auto& [a, b] : dual.edges()) {
    int na = rec.old_to_new[a] < 0 ? rec.new_node : rec.old_to_new[a];
    int nb2 = rec.old_to_new[b] < 0 ? rec.new_node : rec.old_to_new[b];
    if (na != nb2) edges.insert(make_edge(na, nb2));
  }
  return {Graph(next + 1, {edges.begin(), edges.end()}), std::move(rec)};
}

PolytopeSpec cap_facet(const FaceLattice& lat, const VertexSet& facet) {
  const int d = lat.dimension();
  if (d < 2) throw InvalidInput("capping needs dimension >= 2");
  if (lat.rank_of(facet) != d - 1) throw InvalidInput(to_string(facet) + " is not a facet");
  if (!is_cube_facet(lat, facet))
    throw InvalidInput("facet " + to_string(facet) + " is not a combinatorial cube");
  const int n = lat.n_vertices();
  auto mirror = [&](int v) {
    return n + static_cast<int>(std::lower_bound(facet.begin(), facet.end(), v) - facet.begin());
  };
  PolytopeSpec spec{"capped", n + static_cast<int>(facet.size()), {}};
  for (const auto& f : lat.facets())
    if (f != facet) spec.facets.push_back(f);
  VertexSet cap;
  for (int v : facet) cap.push_back(mirror(v));
  spec.facets.push_back(cap);
  for (const auto& r : lat.ridges()) {
    if (!is_subset(r, facet)) continue;
    VertexSet side = r;
    for (int v : r) side.push_back(mirror(v));
    spec.facets.push_back(normalized(std::move(side)));
  }
  return canonical(std::move(spec));
}

namespace {

struct Rebuilt {
  FaceLattice lattice;
  std::vector<VertexSet> node_facets;
};

// Bound on rebuild calls when caps have to be retried.
constexpr int kRebuildBudget = 20000;

// True when node -> facet is a bijection that carries the graph exactly onto
// the dual graph of the lattice.
bool assignment_matches(const Graph& g, const FaceLattice& lat,
                        const std::vector<VertexSet>& node_facets) {
  const auto facets = lat.facets();
  if (facets.size() != static_cast<std::size_t>(g.n_nodes())) return false;
  std::vector<int> to_dual(g.n_nodes(), -1);
  std::vector<bool> hit(facets.size(), false);
  for (int v = 0; v < g.n_nodes(); ++v) {
    auto it = std::lower_bound(facets.begin(), facets.end(), node_facets[v]);
    if (it == facets.end() || *it != node_facets[v]) return false;
    to_dual[v] = static_cast<int>(it - facets.begin());
    if (hit[to_dual[v]]) return false;
    hit[to_dual[v]] = true;
  }
  Graph dual;
  try {
    dual = dual_graph(lat);
  } catch (const InvalidInput&) {
    return false;
  }
  if (dual.n_edges() != g.n_edges()) return false;
  for (const auto& [a, b] : g.edges())
    if (!dual.adjacent(to_dual[a], to_dual[b])) return false;
  return true;
}

class CappedRebuilder {
 public:
  CappedRebuilder(int d, std::vector<std::string>& notes) : d_(d), notes_(notes) {}

  Rebuilt rebuild(const Graph& g) {
    if (++calls_ > kRebuildBudget) throw NotRecognized("not recognized as capped: search budget exhausted");
    if (g.n_nodes() == 2 * d_)
      if (auto matching = complete_minus_perfect_matching(g)) return base_case(g, *matching);

    std::vector<CapCandidate> caps;
    try {
      caps = detect_caps(g);
    } catch (const InvalidInput& e) {
      throw NotRecognized(std::string("not recognized as capped: ") + e.what());
    }
    if (caps.empty()) throw NotRecognized("not recognized as capped: no cap detected");
    std::string last_error;
    for (const auto& cap : caps) {
      try {
        return peel(g, cap);
      } catch (const NotRecognized& e) {
        last_error = e.what();
        notes_.push_back("node " + std::to_string(cap.node) + " of a " + std::to_string(g.n_nodes()) +
                         "-node dual graph looked like a cap but could not be removed: " + last_error);
      }
    }
    throw NotRecognized(last_error);
  }

 private:
  Rebuilt base_case(const Graph& g, const std::vector<Edge>& matching) {
    Rebuilt out;
    out.lattice = build_face_lattice(cube(d_));
    out.node_facets.resize(g.n_nodes());
    for (int j = 0; j < d_; ++j)
      for (int side = 0; side < 2; ++side) {
        VertexSet f;
        for (int v = 0; v < (1 << d_); ++v)
          if (((v >> j) & 1) == side) f.push_back(v);
        out.node_facets[side == 0 ? matching[j].first : matching[j].second] = std::move(f);
      }
    if (!assignment_matches(g, out.lattice, out.node_facets))
      throw InternalError("cube base case does not match its dual graph");
    return out;
  }

  Rebuilt peel(const Graph& g, const CapCandidate& cap) {
    auto [smaller, rec] = contract_cap(g, cap.node, cap.matching);
    if (!regular_degree(smaller) || *regular_degree(smaller) != 2 * (d_ - 1))
      throw NotRecognized("not recognized as capped: contraction broke regularity");
    Rebuilt inner = rebuild(smaller);
    const VertexSet& base = inner.node_facets[rec.new_node];

    PolytopeSpec spec;
    try {
      spec = cap_facet(inner.lattice, base);
    } catch (const InvalidInput& e) {
      throw NotRecognized(std::string("not recognized as capped: ") + e.what());
    }
    Rebuilt out;
    out.lattice = build_face_lattice(spec);
    const auto facets = out.lattice.facets();
    const Graph dual = dual_graph(out.lattice);

    out.node_facets.assign(g.n_nodes(), {});
    for (int v = 0; v < g.n_nodes(); ++v)
      if (rec.old_to_new[v] >= 0) out.node_facets[v] = inner.node_facets[rec.old_to_new[v]];
    const int n_old = inner.lattice.n_vertices();
    VertexSet cap_set;
    for (std::size_t i = 0; i < base.size(); ++i) cap_set.push_back(n_old + static_cast<int>(i));
    out.node_facets[cap.node] = cap_set;

    // Side facets are the new facets other than the cap; each is pinned by
    // the old facets it is adjacent to.
    auto is_new = [&](const VertexSet& f) { return f.back() >= n_old; };
    std::map<std::set<VertexSet>, std::vector<VertexSet>> sides_by_outside;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (!is_new(facets[i]) || facets[i] == cap_set) continue;
      std::set<VertexSet> outside;
      for (int w : dual.neighbors(static_cast<int>(i)))
        if (!is_new(facets[w])) outside.insert(facets[w]);
      sides_by_outside[outside].push_back(facets[i]);
    }
    for (int member : rec.contracted) {
      if (member == cap.node) continue;
      std::set<VertexSet> outside;
      for (int w : g.neighbors(member))
        if (rec.old_to_new[w] >= 0) outside.insert(out.node_facets[w]);
      auto it = sides_by_outside.find(outside);
      if (it == sides_by_outside.end() || it->second.size() != 1)
        throw NotRecognized("not recognized as capped: side facet for node " +
                            std::to_string(member) + " is not unique");
      out.node_facets[member] = it->second.front();
    }
    if (!assignment_matches(g, out.lattice, out.node_facets))
      throw NotRecognized("not recognized as capped: rebuilt dual graph differs after capping");
    return out;
  }

  int d_;
  std::vector<std::string>& notes_;
  int calls_ = 0;
};

}  // namespace

CappedReconstruction reconstruct_capped(const Graph& dual) {
  auto k = regular_degree(dual);
  if (!k || *k < 2 || *k % 2 != 0)
    throw InvalidInput("dual graph is not 2(d-1)-regular for any d >= 2");
  CappedReconstruction result;
  CappedRebuilder rebuilder(*k / 2 + 1, result.notes);
  Rebuilt r = rebuilder.rebuild(dual);
  // Final check: node -> facet is an isomorphism onto the rebuilt dual graph.
  if (!assignment_matches(dual, r.lattice, r.node_facets) ||
      !validate_polytopality(r.lattice).ok())
    throw InternalError("rebuilt capped polytope does not reproduce the input dual graph");
  result.lattice = std::move(r.lattice);
  result.node_facets = std::move(r.node_facets);
  return result;
}

}  // namespace polyrecon
