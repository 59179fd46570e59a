#include "polyrecon/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "bits.hpp"

namespace polyrecon {

using detail::Bits;

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

void validate_spec(const PolytopeSpec& spec) {
  if (spec.n_vertices <= 0) throw InvalidInput("polytope '" + spec.name + "' has no vertices");
  if (spec.facets.empty()) throw InvalidInput("polytope '" + spec.name + "' has no facets");
  std::vector<bool> covered(spec.n_vertices, false);
  std::set<VertexSet> seen;
  for (std::size_t i = 0; i < spec.facets.size(); ++i) {
    const auto& f = spec.facets[i];
    const std::string where = "facet #" + std::to_string(i) + " " + to_string(f);
    if (f.empty()) throw InvalidInput(where + " is empty");
    if (!std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidInput(where + " is not a sorted duplicate-free vertex list");
    if (f.front() < 0 || f.back() >= spec.n_vertices)
      throw InvalidInput(where + " has a vertex id outside 0.." +
                         std::to_string(spec.n_vertices - 1));
    if (static_cast<int>(f.size()) == spec.n_vertices)
      throw InvalidInput(where + " contains every vertex");
    if (!seen.insert(f).second) throw InvalidInput(where + " is a duplicate");
    for (int v : f) covered[v] = true;
  }
  for (std::size_t i = 0; i < spec.facets.size(); ++i)
    for (std::size_t j = 0; j < spec.facets.size(); ++j)
      if (i != j && is_proper_subset(spec.facets[i], spec.facets[j]))
        throw InvalidInput("facet #" + std::to_string(i) + " " + to_string(spec.facets[i]) +
                           " is contained in facet #" + std::to_string(j) + " " +
                           to_string(spec.facets[j]));
  for (int v = 0; v < spec.n_vertices; ++v)
    if (!covered[v]) throw InvalidInput("vertex " + std::to_string(v) + " lies in no facet");
}

PolytopeSpec canonical(PolytopeSpec spec) {
  for (auto& f : spec.facets) f = normalized(std::move(f));
  std::sort(spec.facets.begin(), spec.facets.end());
  return spec;
}

FaceLattice FaceLattice::from_faces(int n_vertices, std::vector<VertexSet> faces) {
  std::set<VertexSet> unique;
  for (auto& f : faces) {
    f = normalized(std::move(f));
    if (!f.empty() && (f.front() < 0 || f.back() >= n_vertices))
      throw InvalidInput("face " + to_string(f) + " has a vertex id out of range");
    unique.insert(std::move(f));
  }
  unique.insert(VertexSet{});
  VertexSet all(n_vertices);
  std::iota(all.begin(), all.end(), 0);
  unique.insert(all);

  std::vector<VertexSet> by_size(unique.begin(), unique.end());
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Bits> bits;
  bits.reserve(by_size.size());
  for (const auto& f : by_size) bits.emplace_back(n_vertices, f);

  // Longest chain from the bottom; sizes strictly grow along chains.
  std::vector<int> rank(by_size.size(), -1);
  for (std::size_t i = 1; i < by_size.size(); ++i) {
    int best = -1;
    for (std::size_t j = 0; j < i; ++j)
      if (by_size[j].size() < by_size[i].size() && rank[j] + 1 > best &&
          bits[j].subset_of(bits[i]))
        best = rank[j] + 1;
    rank[i] = best;
  }

  FaceLattice lat;
  lat.n_vertices_ = n_vertices;
  lat.faces_.reserve(by_size.size());
  for (std::size_t i = 0; i < by_size.size(); ++i)
    lat.faces_.push_back(Face{std::move(by_size[i]), rank[i]});
  std::sort(lat.faces_.begin(), lat.faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.rank, a.vertices) < std::tie(b.rank, b.vertices);
  });
  for (std::size_t i = 0; i < lat.faces_.size(); ++i) lat.index_.emplace(lat.faces_[i].vertices, i);
  return lat;
}

std::optional<std::size_t> FaceLattice::find(const VertexSet& vertices) const {
  auto it = index_.find(vertices);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FaceLattice::rank_of(const VertexSet& vertices) const {
  auto i = find(vertices);
  if (!i) return std::nullopt;
  return faces_[*i].rank;
}

std::vector<VertexSet> FaceLattice::faces_of_rank(int r) const {
  std::vector<VertexSet> out;
  for (const auto& f : faces_)
    if (f.rank == r) out.push_back(f.vertices);
  return out;
}

std::vector<std::size_t> FaceLattice::rank_sizes() const {
  std::vector<std::size_t> sizes(dimension() + 2, 0);
  for (const auto& f : faces_) ++sizes[f.rank + 1];
  return sizes;
}

FaceLattice build_face_lattice(const PolytopeSpec& spec) {
  validate_spec(spec);
  std::set<VertexSet> faces(spec.facets.begin(), spec.facets.end());
  std::queue<VertexSet> pending;
  for (const auto& f : spec.facets) pending.push(f);
  while (!pending.empty()) {
    VertexSet g = std::move(pending.front());
    pending.pop();
    for (const auto& f : spec.facets) {
      VertexSet h = intersect(g, f);
      if (faces.insert(h).second) pending.push(std::move(h));
    }
  }
  return FaceLattice::from_faces(spec.n_vertices, {faces.begin(), faces.end()});
}

std::size_t count_nonempty_faces(const FaceLattice& lat) { return lat.size() - 1; }

FaceLattice dual_lattice(const FaceLattice& lat) {
  const auto facets = lat.facets();
  const int n = lat.n_vertices();
  std::vector<Bits> facet_bits;
  for (const auto& f : facets) facet_bits.emplace_back(n, f);
  std::vector<VertexSet> dual_faces;
  dual_faces.reserve(lat.size());
  for (const auto& face : lat.faces()) {
    Bits b(n, face.vertices);
    VertexSet up;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (b.subset_of(facet_bits[i])) up.push_back(static_cast<int>(i));
    dual_faces.push_back(std::move(up));
  }
  return FaceLattice::from_faces(static_cast<int>(facets.size()), std::move(dual_faces));
}

namespace {

// Per vertex: number of faces containing it, split by rank.
std::vector<std::vector<int>> vertex_signatures(const FaceLattice& lat) {
  std::vector<std::vector<int>> sig(lat.n_vertices(), std::vector<int>(lat.dimension() + 2, 0));
  for (const auto& f : lat.faces())
    for (int v : f.vertices) ++sig[v][f.rank + 1];
  return sig;
}

class LatticeMatcher {
 public:
  LatticeMatcher(const FaceLattice& a, const FaceLattice& b) : a_(a), b_(b), n_(a.n_vertices()) {
    sig_a_ = vertex_signatures(a);
    sig_b_ = vertex_signatures(b);
    for (const auto& c : a.facets()) coatoms_a_.push_back(c);
    for (const auto& c : b.facets()) coatoms_b_.push_back(c);
    for (const auto& c : coatoms_b_) coatom_bits_b_.emplace_back(n_, c);
    order_ = search_order();
    map_.assign(n_, -1);
    used_.assign(n_, false);
  }

  std::optional<std::vector<int>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  // Vertices sharing coatoms with already-ordered ones come first.
  std::vector<int> search_order() const {
    std::vector<int> order;
    std::vector<bool> placed(n_, false);
    std::vector<int> weight(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v)
        if (!placed[v] && (best < 0 || weight[v] > weight[best])) best = v;
      placed[best] = true;
      order.push_back(best);
      for (const auto& c : coatoms_a_)
        if (std::binary_search(c.begin(), c.end(), best))
          for (int u : c) ++weight[u];
    }
    return order;
  }

  // Coatoms of a, restricted to the assigned vertices and mapped, must match
  // the coatoms of b restricted to the image, as multisets with sizes.
  bool traces_agree(int depth) const {
    Bits image(n_);
    std::vector<bool> assigned(n_, false);
    for (int k = 0; k <= depth; ++k) {
      assigned[order_[k]] = true;
      image.set(map_[order_[k]]);
    }
    std::vector<std::pair<std::size_t, Bits>> ta, tb;
    ta.reserve(coatoms_a_.size());
    for (const auto& c : coatoms_a_) {
      Bits t(n_);
      for (int v : c)
        if (assigned[v]) t.set(map_[v]);
      ta.emplace_back(c.size(), std::move(t));
    }
    for (std::size_t i = 0; i < coatoms_b_.size(); ++i)
      tb.emplace_back(coatoms_b_[i].size(), coatom_bits_b_[i] & image);
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    return ta == tb;
  }

  bool full_check() const {
    for (const auto& f : a_.faces()) {
      VertexSet img;
      img.reserve(f.vertices.size());
      for (int v : f.vertices) img.push_back(map_[v]);
      std::sort(img.begin(), img.end());
      auto r = b_.rank_of(img);
      if (!r || *r != f.rank) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == n_) return full_check();
    const int u = order_[depth];
    for (int x = 0; x < n_; ++x) {
      if (used_[x] || sig_a_[u] != sig_b_[x]) continue;
      map_[u] = x;
      used_[x] = true;
      if (traces_agree(depth) && extend(depth + 1)) return true;
      used_[x] = false;
      map_[u] = -1;
    }
    return false;
  }

  const FaceLattice& a_;
  const FaceLattice& b_;
  int n_;
  std::vector<std::vector<int>> sig_a_, sig_b_;
  std::vector<VertexSet> coatoms_a_, coatoms_b_;
  std::vector<Bits> coatom_bits_b_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> find_lattice_isomorphism(const FaceLattice& a,
                                                         const FaceLattice& b) {
  if (a.n_vertices() != b.n_vertices() || a.size() != b.size() ||
      a.rank_sizes() != b.rank_sizes())
    return std::nullopt;
  auto sa = vertex_signatures(a);
  auto sb = vertex_signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  return LatticeMatcher(a, b).run();
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMissingBottom: return "missing-bottom";
    case ViolationKind::kMissingTop: return "missing-top";
    case ViolationKind::kNotIntersectionClosed: return "not-intersection-closed";
    case ViolationKind::kNotGraded: return "not-graded";
    case ViolationKind::kDiamond: return "diamond";
    case ViolationKind::kAtoms: return "atoms";
    case ViolationKind::kNotCoatomic: return "not-coatomic";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_polytopality(const FaceLattice& lat) {
  ValidationReport report;
  const auto faces = lat.faces();
  const int n = lat.n_vertices();
  const std::size_t m = faces.size();
  auto add = [&](ViolationKind k, std::string detail) {
    report.violations.push_back({k, std::move(detail)});
  };

  if (!lat.contains({})) add(ViolationKind::kMissingBottom, "empty face absent");
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  if (!lat.contains(all)) add(ViolationKind::kMissingTop, "full vertex set absent");

  std::vector<Bits> bits;
  bits.reserve(m);
  for (const auto& f : faces) bits.emplace_back(n, f.vertices);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      VertexSet meet = intersect(faces[i].vertices, faces[j].vertices);
      if (!lat.contains(meet))
        add(ViolationKind::kNotIntersectionClosed, to_string(faces[i].vertices) + " & " +
                                                       to_string(faces[j].vertices) + " = " +
                                                       to_string(meet) + " is not a face");
    }

  // Upper covers.
  std::vector<std::vector<std::size_t>> up(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < m; ++j)
      if (faces[j].vertices.size() > faces[i].vertices.size() && bits[i].subset_of(bits[j]))
        above.push_back(j);
    for (std::size_t j : above) {
      bool minimal = std::none_of(above.begin(), above.end(), [&](std::size_t k) {
        return k != j && faces[k].vertices.size() < faces[j].vertices.size() &&
               bits[k].subset_of(bits[j]);
      });
      if (minimal) up[i].push_back(j);
    }
  }

  bool graded = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j : up[i])
      if (faces[j].rank != faces[i].rank + 1) {
        graded = false;
        add(ViolationKind::kNotGraded, to_string(faces[i].vertices) + " is covered by " +
                                           to_string(faces[j].vertices) + " across ranks " +
                                           std::to_string(faces[i].rank) + " -> " +
                                           std::to_string(faces[j].rank));
      }

  if (graded) {
    std::vector<int> between(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::fill(between.begin(), between.end(), 0);
      for (std::size_t k : up[i])
        for (std::size_t j : up[k]) ++between[j];
      for (std::size_t j = 0; j < m; ++j)
        if (between[j] != 0 && between[j] != 2)
          add(ViolationKind::kDiamond, "interval [" + to_string(faces[i].vertices) + ", " +
                                           to_string(faces[j].vertices) + "] has " +
                                           std::to_string(between[j] + 2) + " elements");
    }
  }

  for (const auto& f : faces)
    if (f.rank == 0 && f.vertices.size() != 1)
      add(ViolationKind::kAtoms, "rank-0 face " + to_string(f.vertices) + " is not a singleton");
  for (int v = 0; v < n; ++v)
    if (lat.rank_of({v}) != 0)
      add(ViolationKind::kAtoms, "vertex " + std::to_string(v) + " is not an atom");

  const auto facets = lat.facets();
  for (const auto& f : faces) {
    if (f.vertices.size() == static_cast<std::size_t>(n)) continue;
    VertexSet meet = all;
    for (const auto& c : facets)
      if (is_subset(f.vertices, c)) meet = intersect(meet, c);
    if (meet != f.vertices)
      add(ViolationKind::kNotCoatomic,
          to_string(f.vertices) + " is not the intersection of the facets containing it");
  }
  return report;
}

FaceLattice interval_below(const FaceLattice& lat, const VertexSet& face) {
  std::vector<VertexSet> sub;
  for (const auto& f : lat.faces()) {
    if (!is_subset(f.vertices, face)) continue;
    VertexSet local;
    for (int v : f.vertices)
      local.push_back(static_cast<int>(std::lower_bound(face.begin(), face.end(), v) - face.begin()));
    sub.push_back(std::move(local));
  }
  return FaceLattice::from_faces(static_cast<int>(face.size()), std::move(sub));
}

}  // namespace polyrecon
