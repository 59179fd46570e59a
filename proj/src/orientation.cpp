#include "polyrecon/orientation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace polyrecon {

Edge directed_edge(const Graph& g, const Orientation& o, std::size_t i) {
  const auto& e = g.edges()[i];
  return o.forward[i] ? e : Edge{e.second, e.first};
}

std::vector<Edge> directed_edges(const Graph& g, const Orientation& o) {
  std::vector<Edge> arcs;
  arcs.reserve(g.n_edges());
  for (std::size_t i = 0; i < g.n_edges(); ++i) arcs.push_back(directed_edge(g, o, i));
  return arcs;
}

Orientation orientation_from_directed(const Graph& g, const std::vector<Edge>& arcs) {
  Orientation o;
  o.forward.assign(g.n_edges(), false);
  std::vector<bool> seen(g.n_edges(), false);
  for (const auto& [tail, head] : arcs) {
    auto i = g.edge_index(tail, head);
    if (!i) throw InvalidInput("arc " + std::to_string(tail) + "->" + std::to_string(head) +
                               " is not an edge of the graph");
    if (seen[*i]) throw InvalidInput("edge oriented twice");
    seen[*i] = true;
    o.forward[*i] = tail < head;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvalidInput("orientation leaves an edge undirected");
  return o;
}

bool is_acyclic(const Graph& g, const Orientation& o) {
  // Kahn's algorithm.
  const int n = g.n_nodes();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (std::size_t i = 0; i < g.n_edges(); ++i) {
    auto [t, h] = directed_edge(g, o, i);
    out[t].push_back(h);
    ++indeg[h];
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return removed == n;
}

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

// Source-layer enumeration over node bitmasks. The leaf callback receives
// the layer index of every node; edges point from lower to higher layers.
class LayerEnumerator {
 public:
  using Leaf = std::function<void(const std::vector<int>&)>;

  LayerEnumerator(const Graph& g, const EnumerationLimits& limits, std::atomic<std::uint64_t>& count)
      : g_(g), limits_(limits), count_(count), n_(g.n_nodes()), nbr_(n_, 0) {
    for (const auto& [a, b] : g.edges()) {
      nbr_[a] |= bit(b);
      nbr_[b] |= bit(a);
    }
  }

  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  std::vector<Mask> first_layers() const {
    std::vector<Mask> out;
    layer_choices(all(), 0, [&](Mask l) { out.push_back(l); });
    return out;
  }

  void run_from(Mask first, const Leaf& leaf) {
    layer_.assign(n_, -1);
    assign(first, 0);
    descend(all() & ~first, first, 1, leaf);
  }

 private:
  void assign(Mask l, int idx) {
    for (Mask m = l; m; m &= m - 1) layer_[std::countr_zero(m)] = idx;
  }

  // Valid next layers given the remaining nodes and the previous layer
  // (prev == 0 for the first layer).
  template <class F>
  void layer_choices(Mask remaining, Mask prev, F&& yield) const {
    Mask cand = 0, forced = 0;
    for (Mask m = remaining; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (prev == 0 || (nbr_[v] & prev)) cand |= bit(v);
      if ((nbr_[v] & remaining) == 0) forced |= bit(v);
    }
    if (forced & ~cand) return;
    std::vector<int> free_nodes;
    for (Mask m = cand & ~forced; m; m &= m - 1) free_nodes.push_back(std::countr_zero(m));
    pick(free_nodes, 0, forced, remaining, yield);
  }

  template <class F>
  void pick(const std::vector<int>& free_nodes, std::size_t i, Mask chosen, Mask remaining,
            F& yield) const {
    if (i == free_nodes.size()) {
      if (chosen == 0) return;
      const Mask rest = remaining & ~chosen;
      bool reachable = rest == 0;
      for (Mask m = rest; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if ((nbr_[v] & (rest | chosen)) == 0) return;  // no neighbour left to follow
        if (nbr_[v] & chosen) reachable = true;
      }
      if (reachable) yield(chosen);
      return;
    }
    pick(free_nodes, i + 1, chosen, remaining, yield);
    const int v = free_nodes[i];
    if ((nbr_[v] & chosen) == 0) pick(free_nodes, i + 1, chosen | bit(v), remaining, yield);
  }

  void descend(Mask remaining, Mask prev, int idx, const Leaf& leaf) {
    if (remaining == 0) {
      if (count_.fetch_add(1, std::memory_order_relaxed) + 1 > limits_.max_count)
        throw ResourceLimitExceeded("instance too large: more than " +
                                    std::to_string(limits_.max_count) + " acyclic orientations");
      leaf(layer_);
      return;
    }
    layer_choices(remaining, prev, [&](Mask l) {
      assign(l, idx);
      descend(remaining & ~l, l, idx + 1, leaf);
    });
  }

  const Graph& g_;
  const EnumerationLimits& limits_;
  std::atomic<std::uint64_t>& count_;
  int n_;
  std::vector<Mask> nbr_;
  std::vector<int> layer_;
};

void check_limits(const Graph& g, const EnumerationLimits& limits) {
  if (g.n_edges() > limits.max_edges)
    throw ResourceLimitExceeded("instance too large: " + std::to_string(g.n_edges()) +
                                " edges exceeds the bound of " + std::to_string(limits.max_edges));
  if (g.n_nodes() > 64) throw ResourceLimitExceeded("instance too large: more than 64 nodes");
}

Orientation orientation_of_layers(const Graph& g, const std::vector<int>& layer) {
  Orientation o;
  o.forward.resize(g.n_edges());
  for (std::size_t i = 0; i < g.n_edges(); ++i) {
    const auto& [a, b] = g.edges()[i];
    o.forward[i] = layer[a] < layer[b];
  }
  return o;
}

std::uint64_t incoming_mask(const Graph& g, const Orientation& o, int v) {
  std::uint64_t in = 0;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    auto e = *g.edge_index(v, nb[i]);
    if (directed_edge(g, o, e).second == v) in |= std::uint64_t{1} << i;
  }
  return in;
}

int count_below(const VertexFigureLattice& vf, std::uint64_t in) {
  int c = 0;
  for (auto m : vf.masks)
    if ((m & ~in) == 0) ++c;
  return c;
}

}  // namespace

void for_each_acyclic_orientation(const Graph& g,
                                  const std::function<void(const Orientation&)>& visit,
                                  const EnumerationLimits& limits) {
  check_limits(g, limits);
  if (g.n_nodes() == 0) {
    visit(Orientation{});
    return;
  }
  std::atomic<std::uint64_t> count{0};
  LayerEnumerator en(g, limits, count);
  for (Mask first : en.first_layers())
    en.run_from(first, [&](const std::vector<int>& layer) { visit(orientation_of_layers(g, layer)); });
}

std::vector<Orientation> enumerate_acyclic_orientations(const Graph& g,
                                                        const EnumerationLimits& limits) {
  std::vector<Orientation> out;
  for_each_acyclic_orientation(g, [&](const Orientation& o) { out.push_back(o); }, limits);
  return out;
}

bool is_initial(const Graph& g, const Orientation& o, const VertexSet& subset) {
  std::vector<bool> inside(g.n_nodes(), false);
  for (int v : subset) inside[v] = true;
  for (std::size_t i = 0; i < g.n_edges(); ++i) {
    auto [t, h] = directed_edge(g, o, i);
    if (inside[h] && !inside[t]) return false;
  }
  return true;
}

int sink_count(int v, const Graph& g, const Orientation& o, const VertexFigureLattice& vf) {
  return count_below(vf, incoming_mask(g, o, v));
}

std::vector<VertexFigureLattice> vertex_figure_lattices(const Graph& g,
                                                        const VertexFigureLabels& labels) {
  check_labels_consistent(g, labels);
  std::vector<VertexFigureLattice> figures;
  figures.reserve(g.n_nodes());
  for (int v = 0; v < g.n_nodes(); ++v) figures.push_back(vf_lattice_from_labels(g, v, labels.at[v]));
  return figures;
}

OrientationScore score(const Graph& g, const Orientation& o,
                       const std::vector<VertexFigureLattice>& figures) {
  OrientationScore s;
  s.per_vertex.resize(g.n_nodes());
  for (int v = 0; v < g.n_nodes(); ++v) {
    s.per_vertex[v] = sink_count(v, g, o, figures[v]);
    s.total += s.per_vertex[v];
  }
  return s;
}

OrientationScore score(const Graph& g, const Orientation& o, const VertexFigureLabels& labels) {
  return score(g, o, vertex_figure_lattices(g, labels));
}

namespace {

struct PartialMin {
  std::int64_t f = std::numeric_limits<std::int64_t>::max();
  std::uint64_t scored = 0;
  std::vector<Orientation> good;

  void offer(std::int64_t total, const Graph& g, const std::vector<int>& layer) {
    ++scored;
    if (total > f) return;
    if (total < f) {
      f = total;
      good.clear();
    }
    good.push_back(orientation_of_layers(g, layer));
  }
};

// Scores one subtree of the enumeration.
void score_subtree(const Graph& g, const std::vector<VertexFigureLattice>& figures,
                   LayerEnumerator& en, Mask first, PartialMin& acc) {
  const int n = g.n_nodes();
  en.run_from(first, [&](const std::vector<int>& layer) {
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v) {
      std::uint64_t in = 0;
      auto nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (layer[nb[i]] < layer[v]) in |= std::uint64_t{1} << i;
      total += count_below(figures[v], in);
    }
    acc.offer(total, g, layer);
  });
}

}  // namespace

GoodOrientations find_good_orientations(const Graph& g, const VertexFigureLabels& labels,
                                        const EnumerationLimits& limits) {
  check_limits(g, limits);
  const auto figures = vertex_figure_lattices(g, labels);
  GoodOrientations result;
  if (g.n_nodes() == 0) return result;

  std::atomic<std::uint64_t> count{0};
  const auto firsts = LayerEnumerator(g, limits, count).first_layers();
  std::vector<PartialMin> parts(firsts.size());

  const unsigned threads = std::max(1U, std::min<unsigned>(limits.threads, firsts.size()));
  if (threads == 1) {
    LayerEnumerator en(g, limits, count);
    for (std::size_t k = 0; k < firsts.size(); ++k) score_subtree(g, figures, en, firsts[k], parts[k]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back([&] {
          LayerEnumerator en(g, limits, count);
          try {
            for (std::size_t k = next++; k < firsts.size(); k = next++)
              score_subtree(g, figures, en, firsts[k], parts[k]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = firsts.size();
          }
        });
    }
    if (failure) std::rethrow_exception(failure);
  }

  // Ordered reduction over subtrees keeps the output schedule-independent.
  result.f = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : parts) {
    result.n_acyclic += p.scored;
    if (p.good.empty()) continue;
    if (p.f < result.f) {
      result.f = p.f;
      result.good.clear();
    }
    if (p.f == result.f) result.good.insert(result.good.end(), p.good.begin(), p.good.end());
  }
  return result;
}

namespace {

// For each non-empty face, counts vertices of the face with no edge of the
// face leaving (sinks) or entering (sources).
template <class Pred>
bool one_per_face(const Graph& g, const Orientation& o, const FaceLattice& lat, Pred extreme) {
  std::vector<Edge> arcs = directed_edges(g, o);
  std::vector<VertexSet> lattice_edges = lat.faces_of_rank(1);
  for (const auto& face : lat.faces()) {
    if (face.vertices.empty()) continue;
    std::vector<int> out_deg(lat.n_vertices(), 0), in_deg(lat.n_vertices(), 0);
    for (const auto& arc : arcs) {
      VertexSet e = normalized({arc.first, arc.second});
      if (!is_subset(e, face.vertices)) continue;
      if (!std::binary_search(lattice_edges.begin(), lattice_edges.end(), e)) continue;
      ++out_deg[arc.first];
      ++in_deg[arc.second];
    }
    int hits = 0;
    for (int v : face.vertices)
      if (extreme(out_deg[v], in_deg[v])) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace

bool is_good_oracle(const Graph& g, const Orientation& o, const FaceLattice& lat) {
  return one_per_face(g, o, lat, [](int out, int) { return out == 0; });
}

bool is_abstract_objective_function(const Graph& g, const Orientation& o, const FaceLattice& lat) {
  return is_good_oracle(g, o, lat) &&
         one_per_face(g, o, lat, [](int, int in) { return in == 0; });
}

}  // namespace polyrecon
