#include "polyrecon/figure_labels.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace polyrecon {

namespace {

constexpr int kMaxStar = 64;

void require_small_star(const Graph& g, int v) {
  if (g.degree(v) > kMaxStar)
    throw InvalidInput("vertex " + std::to_string(v) + " has degree above " +
                       std::to_string(kMaxStar));
}

EdgeSet edges_of_mask(const Graph& g, int v, std::uint64_t mask) {
  EdgeSet out;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    if ((mask >> i) & 1U) out.push_back(make_edge(v, nb[i]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t star_mask(const Graph& g, int v, const EdgeSet& edges) {
  require_small_star(g, v);
  auto nb = g.neighbors(v);
  std::uint64_t mask = 0;
  for (const auto& e : edges) {
    int other = e.first == v ? e.second : (e.second == v ? e.first : -1);
    auto it = std::lower_bound(nb.begin(), nb.end(), other);
    if (other < 0 || it == nb.end() || *it != other)
      throw InvalidInput("edge [" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         "] is not at vertex " + std::to_string(v));
    mask |= std::uint64_t{1} << (it - nb.begin());
  }
  return mask;
}

VertexFigureLabels extract_labels(const FaceLattice& lat) {
  const Graph g = graph_of(lat);
  VertexFigureLabels labels;
  labels.at.resize(lat.n_vertices());
  for (const auto& facet : lat.facets()) {
    for (int v : facet) {
      EdgeSet label;
      for (int w : g.neighbors(v))
        if (std::binary_search(facet.begin(), facet.end(), w)) label.push_back(make_edge(v, w));
      std::sort(label.begin(), label.end());
      labels.at[v].push_back(std::move(label));
    }
  }
  for (auto& at_v : labels.at) {
    std::sort(at_v.begin(), at_v.end());
    at_v.erase(std::unique(at_v.begin(), at_v.end()), at_v.end());
  }
  return labels;
}

VertexFigureLattice vf_lattice_from_labels(const Graph& g, int v, std::span<const EdgeSet> labels) {
  require_small_star(g, v);
  const int deg = g.degree(v);
  const std::uint64_t top = deg == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << deg) - 1;
  std::set<std::uint64_t> closure{0, top};
  std::vector<std::uint64_t> generators;
  for (const auto& l : labels) generators.push_back(star_mask(g, v, l));
  std::vector<std::uint64_t> frontier;
  for (auto m : generators)
    if (closure.insert(m).second) frontier.push_back(m);
  // Meets with generators suffice: every element is a meet of labels.
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto m : frontier)
      for (auto gen : generators)
        if (closure.insert(m & gen).second) next.push_back(m & gen);
    frontier = std::move(next);
  }

  VertexFigureLattice vf;
  vf.vertex = v;
  for (int w : g.neighbors(v)) vf.star.push_back(make_edge(v, w));
  std::sort(vf.star.begin(), vf.star.end());
  std::vector<std::pair<EdgeSet, std::uint64_t>> items;
  for (auto m : closure) items.emplace_back(edges_of_mask(g, v, m), m);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& [es, m] : items) {
    vf.elements.push_back(std::move(es));
    vf.masks.push_back(m);
  }
  return vf;
}

VertexFigureLabels simple_labels_from_graph(const Graph& g) {
  auto d = regular_degree(g);
  if (!d || *d < 1) throw InvalidInput("not the graph of a simple polytope (non-regular)");
  VertexFigureLabels labels;
  labels.at.resize(g.n_nodes());
  for (int v = 0; v < g.n_nodes(); ++v) {
    auto nb = g.neighbors(v);
    for (int skip = 0; skip < *d; ++skip) {
      EdgeSet label;
      for (int i = 0; i < *d; ++i)
        if (i != skip) label.push_back(make_edge(v, nb[i]));
      std::sort(label.begin(), label.end());
      labels.at[v].push_back(std::move(label));
    }
    std::sort(labels.at[v].begin(), labels.at[v].end());
    labels.at[v].erase(std::unique(labels.at[v].begin(), labels.at[v].end()), labels.at[v].end());
  }
  return labels;
}

void check_labels_consistent(const Graph& g, const VertexFigureLabels& labels) {
  if (static_cast<int>(labels.at.size()) != g.n_nodes())
    throw InvalidInput("labels given for " + std::to_string(labels.at.size()) +
                       " vertices, graph has " + std::to_string(g.n_nodes()));
  for (int v = 0; v < g.n_nodes(); ++v) {
    std::uint64_t cover = 0;
    for (const auto& l : labels.at[v]) cover |= star_mask(g, v, l);
    if (std::popcount(cover) != g.degree(v))
      throw InvalidInput("labels at vertex " + std::to_string(v) + " do not cover its edges");
  }
}

}  // namespace polyrecon
