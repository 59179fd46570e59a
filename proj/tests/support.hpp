// Independent oracles and fixture helpers shared by the tests.
//
// The oracles deliberately avoid the library's own algorithms: faces come
// from exhaustive subset closure, orientations from filtering all 2^E edge
// directions, goodness from counting sinks face by face.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyrecon/cubical.hpp"
#include "polyrecon/figure_labels.hpp"
#include "polyrecon/generators.hpp"
#include "polyrecon/graph.hpp"
#include "polyrecon/lattice.hpp"
#include "polyrecon/orientation.hpp"

namespace oracle {

using polyrecon::Edge;
using polyrecon::Graph;
using polyrecon::Orientation;
using polyrecon::PolytopeSpec;
using polyrecon::VertexSet;

// S is a face iff S equals the intersection of all facets containing it
// (the full vertex set when no facet contains S). Returns non-empty faces.
inline std::vector<VertexSet> brute_faces(const PolytopeSpec& spec) {
  const int n = spec.n_vertices;
  std::vector<std::uint32_t> masks;
  for (const auto& f : spec.facets) {
    std::uint32_t m = 0;
    for (int v : f) m |= 1U << v;
    masks.push_back(m);
  }
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<VertexSet> out;
  for (std::uint32_t s = 1; s <= all && s != 0; ++s) {
    std::uint32_t meet = all;
    for (auto m : masks)
      if ((s & m) == s) meet &= m;
    if (meet != s) continue;
    VertexSet face;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1U) face.push_back(v);
    out.push_back(std::move(face));
    if (s == all) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t brute_nonempty_face_count(const PolytopeSpec& spec) {
  return brute_faces(spec).size();
}

// Two-vertex faces of the brute face family.
inline std::vector<Edge> brute_edges(const PolytopeSpec& spec) {
  std::vector<Edge> out;
  for (const auto& f : brute_faces(spec))
    if (f.size() == 2) out.emplace_back(f[0], f[1]);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_directed_cycle(int n, const std::vector<Edge>& arcs) {
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : arcs) out[a].push_back(b);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

// Every acyclic orientation, as forward-bit vectors, by filtering 2^E.
inline std::vector<Orientation> brute_acyclic(const Graph& g) {
  const std::size_t e = g.n_edges();
  std::vector<Orientation> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << e); ++m) {
    Orientation o;
    std::vector<Edge> arcs;
    for (std::size_t i = 0; i < e; ++i) {
      const bool fwd = (m >> i) & 1U;
      o.forward.push_back(fwd);
      auto [a, b] = g.edges()[i];
      arcs.push_back(fwd ? Edge{a, b} : Edge{b, a});
    }
    if (!has_directed_cycle(g.n_nodes(), arcs)) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of vertices of the face with no arc leaving towards the face.
inline int sinks_on(const Graph& g, const Orientation& o, const VertexSet& face) {
  std::set<int> inside(face.begin(), face.end());
  std::set<int> has_out;
  for (std::size_t i = 0; i < g.n_edges(); ++i) {
    auto [a, b] = g.edges()[i];
    if (!inside.count(a) || !inside.count(b)) continue;
    has_out.insert(o.forward[i] ? a : b);
  }
  return static_cast<int>(face.size() - has_out.size());
}

inline bool brute_good(const Graph& g, const Orientation& o, const PolytopeSpec& spec) {
  for (const auto& face : brute_faces(spec))
    if (sinks_on(g, o, face) != 1) return false;
  return true;
}

}  // namespace oracle

namespace fixtures {

using polyrecon::PolytopeSpec;

struct Named {
  PolytopeSpec spec;
  std::size_t expected_f;  // non-empty faces, frozen from the closure oracle
};

// The seven small polytopes used throughout the general pipeline.
inline std::vector<Named> small_polytopes() {
  return {
      {polyrecon::polygon(3), 7},
      {polyrecon::polygon(4), 9},
      {polyrecon::simplex(3), 15},
      {polyrecon::pyramid(polyrecon::polygon(4)), 19},
      {polyrecon::prism(3), 21},
      {polyrecon::cross_polytope(3), 27},
      {polyrecon::cube(3), 27},
  };
}

// Twenty seeded capped fixtures: d=3 with up to five caps, d=4 with up to three.
inline std::vector<polyrecon::CappedFixture> capped_suite() {
  std::vector<polyrecon::CappedFixture> out;
  for (int i = 0; i < 12; ++i) out.push_back(polyrecon::random_capped(3, 1 + i % 5, 1000 + i));
  for (int i = 0; i < 8; ++i) out.push_back(polyrecon::random_capped(4, 1 + i % 3, 2000 + i));
  return out;
}

// Vertex ids moved by a random permutation; facets re-sorted.
inline PolytopeSpec relabeled(const PolytopeSpec& spec, std::mt19937_64& rng) {
  std::vector<int> perm(spec.n_vertices);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  PolytopeSpec out{spec.name + "-relabeled", spec.n_vertices, {}};
  for (const auto& f : spec.facets) {
    polyrecon::VertexSet g;
    for (int v : f) g.push_back(perm[v]);
    out.facets.push_back(polyrecon::normalized(std::move(g)));
  }
  return polyrecon::canonical(std::move(out));
}

// Graph nodes moved by a random permutation.
inline polyrecon::Graph relabeled(const polyrecon::Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.n_nodes());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<polyrecon::Edge> edges;
  for (auto [a, b] : g.edges()) edges.push_back(polyrecon::make_edge(perm[a], perm[b]));
  return polyrecon::Graph(g.n_nodes(), std::move(edges));
}

// Erdős–Rényi style graph with a fixed edge probability, capped at max_edges.
inline polyrecon::Graph random_graph(int n, double p, std::size_t max_edges, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<polyrecon::Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (edges.size() < max_edges && coin(rng)) edges.emplace_back(a, b);
  return polyrecon::Graph(n, std::move(edges));
}

}  // namespace fixtures
