#include "polyrecon/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace polyrecon {

Graph::Graph(int n_nodes, std::vector<Edge> edges, std::vector<std::string> node_names)
    : n_nodes_(n_nodes), adjacency_(n_nodes), node_names_(std::move(node_names)) {
  if (n_nodes < 0) throw InvalidInput("negative node count");
  if (!node_names_.empty() && static_cast<int>(node_names_.size()) != n_nodes)
    throw InvalidInput("node_names has " + std::to_string(node_names_.size()) + " entries for " +
                       std::to_string(n_nodes) + " nodes");
  for (auto& e : edges) {
    if (e.first == e.second) throw InvalidInput("loop at node " + std::to_string(e.first));
    e = make_edge(e.first, e.second);
    if (e.first < 0 || e.second >= n_nodes)
      throw InvalidInput("edge [" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         "] out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InvalidInput("parallel edge [" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + "]");
  edges_ = std::move(edges);
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int a, int b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(int a, int b) const {
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph InducedSubgraph::as_graph() const {
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.emplace_back(local(a), local(b));
  return Graph(static_cast<int>(nodes.size()), std::move(es));
}

Graph graph_of(const FaceLattice& lat) {
  std::vector<Edge> edges;
  for (const auto& f : lat.faces()) {
    if (f.rank != 1) continue;
    if (f.vertices.size() != 2)
      throw InvalidInput("rank-1 face " + to_string(f.vertices) + " is not an edge");
    edges.emplace_back(f.vertices[0], f.vertices[1]);
  }
  return Graph(lat.n_vertices(), std::move(edges));
}

Graph dual_graph(const FaceLattice& lat) {
  if (lat.dimension() < 1) throw InvalidInput("dual graph needs dimension >= 1");
  const auto facets = lat.facets();
  std::vector<Edge> edges;
  for (const auto& r : lat.ridges()) {
    std::vector<int> holders;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (is_subset(r, facets[i])) holders.push_back(static_cast<int>(i));
    if (holders.size() != 2)
      throw InvalidInput("ridge " + to_string(r) + " lies in " + std::to_string(holders.size()) +
                         " facets");
    edges.emplace_back(holders[0], holders[1]);
  }
  std::vector<std::string> names;
  for (const auto& f : facets) names.push_back(to_string(f));
  return Graph(static_cast<int>(facets.size()), std::move(edges), std::move(names));
}

std::optional<std::vector<int>> find_odd_cycle(const Graph& g) {
  const int n = g.n_nodes();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          // Walk both ends up to their common ancestor.
          std::vector<int> left{u}, right{w};
          int a = u, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          // left now runs u .. lca .. w; closing edge w-u.
          return left;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_bipartite(const Graph& g) { return !find_odd_cycle(g).has_value(); }

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (const auto& [a, b] : g.edges())
    for (int c : g.neighbors(b))
      if (c > b && g.adjacent(a, c)) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

bool is_connected(const Graph& g) {
  if (g.n_nodes() == 0) return true;
  std::vector<bool> seen(g.n_nodes(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n_nodes();
}

bool is_k_regular(const Graph& g, int k) {
  for (int v = 0; v < g.n_nodes(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.n_nodes() == 0) return std::nullopt;
  int k = g.degree(0);
  if (!is_k_regular(g, k)) return std::nullopt;
  return k;
}

InducedSubgraph induced(const Graph& g, const VertexSet& subset) {
  InducedSubgraph s;
  s.nodes = normalized(subset);
  for (int v : s.nodes)
    if (v < 0 || v >= g.n_nodes()) throw InvalidInput("induced: node " + std::to_string(v) + " out of range");
  for (int v : s.nodes)
    for (int w : g.neighbors(v))
      if (w > v && std::binary_search(s.nodes.begin(), s.nodes.end(), w)) s.edges.emplace_back(v, w);
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

InducedSubgraph neighborhood(const Graph& g, int v) {
  auto nb = g.neighbors(v);
  return induced(g, VertexSet(nb.begin(), nb.end()));
}

std::optional<std::vector<Edge>> complete_minus_perfect_matching(const InducedSubgraph& s) {
  const std::size_t n = s.nodes.size();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  if (s.edges.size() != n * (n - 1) / 2 - n / 2) return std::nullopt;
  const Graph local = s.as_graph();
  std::vector<Edge> matching;
  for (int v = 0; v < static_cast<int>(n); ++v) {
    if (local.degree(v) != static_cast<int>(n) - 2) return std::nullopt;
    for (int w = v + 1; w < static_cast<int>(n); ++w)
      if (!local.adjacent(v, w)) matching.emplace_back(s.nodes[v], s.nodes[w]);
  }
  // Degree n-2 everywhere means each node misses exactly one other node.
  return matching;
}

std::optional<std::vector<Edge>> complete_minus_perfect_matching(const Graph& g) {
  VertexSet all(g.n_nodes());
  for (int v = 0; v < g.n_nodes(); ++v) all[v] = v;
  return complete_minus_perfect_matching(induced(g, all));
}

namespace {

// Colour refinement run on both graphs at once so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& a, const Graph& b) {
  const Graph* gs[2] = {&a, &b};
  std::vector<int> col[2];
  for (int k = 0; k < 2; ++k) {
    col[k].resize(gs[k]->n_nodes());
    for (int v = 0; v < gs[k]->n_nodes(); ++v) col[k][v] = gs[k]->degree(v);
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next[2];
    for (int k = 0; k < 2; ++k) {
      next[k].resize(col[k].size());
      for (int v = 0; v < gs[k]->n_nodes(); ++v) {
        std::vector<int> around;
        for (int w : gs[k]->neighbors(v)) around.push_back(col[k][w]);
        std::sort(around.begin(), around.end());
        auto key = std::make_pair(col[k][v], std::move(around));
        auto it = ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first;
        next[k][v] = it->second;
      }
    }
    col[0] = std::move(next[0]);
    col[1] = std::move(next[1]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {col[0], col[1]};
}

class GraphMatcher {
 public:
  GraphMatcher(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    const int n = a.n_nodes();
    map_.assign(n, -1);
    used_.assign(n, false);
    // BFS order seeded in the rarest colour class of each component.
    std::map<int, int> freq;
    for (int c : ca_) ++freq[c];
    std::vector<bool> placed(n, false);
    while (static_cast<int>(order_.size()) < n) {
      int seed = -1;
      for (int v = 0; v < n; ++v)
        if (!placed[v] && (seed < 0 || freq[ca_[v]] < freq[ca_[seed]])) seed = v;
      std::queue<int> q;
      q.push(seed);
      placed[seed] = true;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        order_.push_back(u);
        for (int w : a.neighbors(u))
          if (!placed[w]) {
            placed[w] = true;
            q.push(w);
          }
      }
    }
  }

  std::optional<std::vector<int>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(int u, int x, int depth) const {
    for (int k = 0; k < depth; ++k) {
      int w = order_[k];
      if (a_.adjacent(u, w) != b_.adjacent(x, map_[w])) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == a_.n_nodes()) return true;
    const int u = order_[depth];
    // Restrict to neighbours of an already mapped neighbour when possible.
    std::vector<int> pool;
    int anchor = -1;
    for (int w : a_.neighbors(u))
      if (map_[w] >= 0) {
        anchor = map_[w];
        break;
      }
    if (anchor >= 0) {
      auto nb = b_.neighbors(anchor);
      pool.assign(nb.begin(), nb.end());
    } else {
      for (int x = 0; x < b_.n_nodes(); ++x) pool.push_back(x);
    }
    for (int x : pool) {
      if (used_[x] || ca_[u] != cb_[x] || !consistent(u, x, depth)) continue;
      map_[u] = x;
      used_[x] = true;
      if (extend(depth + 1)) return true;
      used_[x] = false;
      map_[u] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_, cb_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> find_graph_isomorphism(const Graph& a, const Graph& b) {
  if (a.n_nodes() != b.n_nodes() || a.n_edges() != b.n_edges()) return std::nullopt;
  auto [ca, cb] = refine_colors(a, b);
  auto ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return std::nullopt;
  return GraphMatcher(a, b, std::move(ca), std::move(cb)).run();
}

}  // namespace polyrecon
