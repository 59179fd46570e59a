#include "polyrecon/generators.hpp"

#include <bit>
#include <limits>
#include <numeric>

namespace polyrecon {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

PolytopeSpec simplex(int d) {
  require(d >= 1, "simplex needs d >= 1");
  PolytopeSpec s{"simplex-" + std::to_string(d), d + 1, {}};
  for (int skip = 0; skip <= d; ++skip) {
    VertexSet f;
    for (int v = 0; v <= d; ++v)
      if (v != skip) f.push_back(v);
    s.facets.push_back(std::move(f));
  }
  return canonical(std::move(s));
}

PolytopeSpec cube(int d) {
  require(d >= 1 && d <= 20, "cube needs 1 <= d <= 20");
  PolytopeSpec s{"cube-" + std::to_string(d), 1 << d, {}};
  for (int j = 0; j < d; ++j)
    for (int b = 0; b < 2; ++b) {
      VertexSet f;
      for (int v = 0; v < (1 << d); ++v)
        if (((v >> j) & 1) == b) f.push_back(v);
      s.facets.push_back(std::move(f));
    }
  return canonical(std::move(s));
}

PolytopeSpec cross_polytope(int d) {
  require(d >= 1 && d <= 20, "cross polytope needs 1 <= d <= 20");
  PolytopeSpec s{"cross-" + std::to_string(d), 2 * d, {}};
  for (int pick = 0; pick < (1 << d); ++pick) {
    VertexSet f;
    for (int j = 0; j < d; ++j) f.push_back(2 * j + ((pick >> j) & 1));
    s.facets.push_back(std::move(f));
  }
  return canonical(std::move(s));
}

PolytopeSpec polygon(int k) {
  require(k >= 3, "polygon needs at least 3 vertices");
  PolytopeSpec s{"polygon-" + std::to_string(k), k, {}};
  for (int i = 0; i < k; ++i) s.facets.push_back(normalized({i, (i + 1) % k}));
  return canonical(std::move(s));
}

PolytopeSpec pyramid(const PolytopeSpec& base) {
  validate_spec(base);
  const int n = base.n_vertices;
  PolytopeSpec s{"pyramid(" + base.name + ")", n + 1, {}};
  VertexSet bottom(n);
  std::iota(bottom.begin(), bottom.end(), 0);
  s.facets.push_back(bottom);
  for (auto f : base.facets) {
    f.push_back(n);
    s.facets.push_back(std::move(f));
  }
  return canonical(std::move(s));
}

PolytopeSpec prism(const PolytopeSpec& base) {
  validate_spec(base);
  const int n = base.n_vertices;
  PolytopeSpec s{"prism(" + base.name + ")", 2 * n, {}};
  VertexSet bottom(n), top(n);
  std::iota(bottom.begin(), bottom.end(), 0);
  std::iota(top.begin(), top.end(), n);
  s.facets.push_back(bottom);
  s.facets.push_back(top);
  for (const auto& f : base.facets) {
    VertexSet side = f;
    for (int v : f) side.push_back(v + n);
    s.facets.push_back(normalized(std::move(side)));
  }
  return canonical(std::move(s));
}

PolytopeSpec cyclic(int d, int n) {
  require(d >= 2 && n > d && n <= 30, "cyclic polytope needs 2 <= d < n <= 30");
  PolytopeSpec s{"cyclic-" + std::to_string(d) + "-" + std::to_string(n), n, {}};
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) != d) continue;
    // Evenness: between any two non-members lies an even number of members.
    bool even = true;
    int last_out = -1, members_since = 0;
    for (int v = 0; v < n && even; ++v) {
      if ((m >> v) & 1U) {
        ++members_since;
      } else {
        if (last_out >= 0 && members_since % 2 != 0) even = false;
        last_out = v;
        members_since = 0;
      }
    }
    if (!even) continue;
    VertexSet f;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1U) f.push_back(v);
    s.facets.push_back(std::move(f));
  }
  return canonical(std::move(s));
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  require(bound > 0, "draw_below needs a positive bound");
  // Reject the lowest 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

CappedFixture random_capped(int d, int n_caps, std::uint64_t seed) {
  require(d >= 2, "capped polytopes need d >= 2");
  require(n_caps >= 0, "negative cap count");
  CappedFixture fx;
  fx.seed = seed;
  fx.spec = cube(d);
  std::mt19937_64 rng(seed);
  for (int step = 0; step < n_caps; ++step) {
    const FaceLattice lat = build_face_lattice(fx.spec);
    const auto facets = lat.facets();
    const auto& chosen = facets[draw_below(rng, facets.size())];
    fx.capped_facets.push_back(chosen);
    fx.spec = cap_facet(lat, chosen);
  }
  fx.spec.name = "capped-d" + std::to_string(d) + "-c" + std::to_string(n_caps) + "-s" +
                 std::to_string(seed);
  return fx;
}

PolytopeSpec stacked_cubes() {
  const FaceLattice c = build_face_lattice(cube(3));
  PolytopeSpec s = cap_facet(c, c.facets().front());
  s.name = "stacked-cubes";
  return s;
}

CubicalComplexSpec moebius_strip() {
  // Quadrangles 0-1-4-3, 1-2-5-4 and 2-3-0-5 in cyclic order; certificates
  // list the vertices at bit vectors 00, 01, 10, 11.
  return CubicalComplexSpec{"moebius-strip", 6, {{0, 1, 3, 4}, {1, 2, 4, 5}, {2, 3, 5, 0}}};
}

}  // namespace polyrecon
