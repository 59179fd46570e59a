#include <gtest/gtest.h>

#include "polyrecon/generators.hpp"
#include "support.hpp"

namespace polyrecon {
namespace {

TEST(Simplex, Shapes) {
  EXPECT_EQ(simplex(2).facets, (std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(simplex(3).facets.size(), 4u);
  const auto s4 = simplex(4);
  EXPECT_EQ(s4.facets.size(), 5u);
  for (const auto& f : s4.facets) EXPECT_EQ(f.size(), 4u);
  EXPECT_THROW(simplex(0), InvalidInput);
}

TEST(Cube, Shapes) {
  EXPECT_TRUE(lattice_isomorphic(build_face_lattice(cube(2)), build_face_lattice(polygon(4))));
  const auto c3 = cube(3);
  EXPECT_EQ(c3.n_vertices, 8);
  EXPECT_EQ(c3.facets.size(), 6u);
  for (const auto& f : c3.facets) EXPECT_EQ(f.size(), 4u);
  const auto c4 = cube(4);
  EXPECT_EQ(c4.facets.size(), 8u);
  for (const auto& f : c4.facets) EXPECT_EQ(f.size(), 8u);
}

TEST(CrossPolytope, Shapes) {
  EXPECT_TRUE(lattice_isomorphic(build_face_lattice(cross_polytope(2)),
                                 build_face_lattice(polygon(4))));
  const auto o = cross_polytope(3);
  EXPECT_EQ(o.n_vertices, 6);
  EXPECT_EQ(o.facets.size(), 8u);
  for (const auto& f : o.facets) EXPECT_EQ(f.size(), 3u);
  const auto g = graph_of(build_face_lattice(o));
  EXPECT_EQ(complete_minus_perfect_matching(g), (std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(PyramidPrism, Shapes) {
  const auto p = pyramid(polygon(4));
  EXPECT_EQ(p.n_vertices, 5);
  EXPECT_EQ(p.facets.size(), 5u);
  const auto t = prism(3);
  EXPECT_EQ(t.n_vertices, 6);
  EXPECT_EQ(t.facets.size(), 5u);
  EXPECT_TRUE(is_k_regular(graph_of(build_face_lattice(t)), 3));
  const auto q = prism(5);
  EXPECT_EQ(q.n_vertices, 10);
  EXPECT_EQ(q.facets.size(), 7u);
}

TEST(Cyclic, FacetCountsAndGraphs) {
  EXPECT_EQ(cyclic(4, 6).facets.size(), 9u);
  EXPECT_EQ(cyclic(4, 7).facets.size(), 14u);
  EXPECT_TRUE(lattice_isomorphic(build_face_lattice(cyclic(2, 5)), build_face_lattice(polygon(5))));
  for (int n = 5; n <= 8; ++n) {
    const auto g = graph_of(build_face_lattice(cyclic(4, n)));
    EXPECT_EQ(g.n_edges(), static_cast<std::size_t>(n * (n - 1) / 2)) << n;
    EXPECT_EQ(cyclic(4, n).facets.size(), static_cast<std::size_t>(n * (n - 3) / 2)) << n;
  }
  EXPECT_THROW(cyclic(4, 4), InvalidInput);
}

TEST(Cyclic, EvennessAgreesWithDefinitionOnSmallCases) {
  // Every pair of non-members is separated by an even number of members.
  for (int n = 5; n <= 9; ++n) {
    for (const auto& f : cyclic(4, n).facets) {
      std::vector<bool> in(n, false);
      for (int v : f) in[v] = true;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (in[a] || in[b]) continue;
          int between = 0;
          for (int c = a + 1; c < b; ++c) between += in[c];
          EXPECT_EQ(between % 2, 0);
        }
    }
  }
}

TEST(DrawBelow, StaysInRangeAndIsReproducible) {
  std::mt19937_64 a(1), b(1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = draw_below(a, 7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, draw_below(b, 7));
  }
  std::mt19937_64 r(2);
  EXPECT_EQ(draw_below(r, 1), 0u);
  EXPECT_THROW(draw_below(r, 0), InvalidInput);
}

TEST(DrawBelow, RoughlyUniform) {
  std::mt19937_64 rng(3);
  std::vector<int> hist(6, 0);
  for (int i = 0; i < 60000; ++i) ++hist[draw_below(rng, 6)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
}

TEST(RandomCapped, ZeroCapsIsCube) {
  const auto fx = random_capped(3, 0, 9);
  EXPECT_EQ(fx.spec.facets, cube(3).facets);
  EXPECT_TRUE(fx.capped_facets.empty());
}

TEST(RandomCapped, OneCapCountsRegardlessOfSeed) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto fx = random_capped(3, 1, seed);
    EXPECT_EQ(fx.spec.n_vertices, 12);
    EXPECT_EQ(fx.spec.facets.size(), 10u);
    EXPECT_EQ(fx.capped_facets.size(), 1u);
  }
}

TEST(RandomCapped, SameSeedSameSpec) {
  const auto a = random_capped(4, 3, 123);
  const auto b = random_capped(4, 3, 123);
  EXPECT_EQ(a.spec.facets, b.spec.facets);
  EXPECT_EQ(a.capped_facets, b.capped_facets);
  EXPECT_EQ(a.spec.name, "capped-d4-c3-s123");
}

TEST(RandomCapped, CountsFollowCapping) {
  for (const auto& fx : fixtures::capped_suite()) {
    const int d = fx.spec.name[8] - '0';
    const int caps = static_cast<int>(fx.capped_facets.size());
    EXPECT_EQ(fx.spec.n_vertices, (1 << d) + caps * (1 << (d - 1))) << fx.spec.name;
    EXPECT_EQ(fx.spec.facets.size(), static_cast<std::size_t>(2 * d + caps * 2 * (d - 1)))
        << fx.spec.name;
  }
}

TEST(StackedCubes, Counts) {
  const auto s = stacked_cubes();
  EXPECT_EQ(s.n_vertices, 12);
  EXPECT_EQ(s.facets.size(), 10u);
}

TEST(Generators, AllOutputsArePolytopal) {
  std::vector<PolytopeSpec> specs = {simplex(2), simplex(5), cube(2), cube(5), cross_polytope(4),
                                     polygon(7), pyramid(cube(3)), prism(simplex(3)), prism(6),
                                     cyclic(3, 7), cyclic(5, 8), stacked_cubes()};
  for (const auto& fx : fixtures::capped_suite()) specs.push_back(fx.spec);
  for (const auto& spec : specs) {
    validate_spec(spec);
    EXPECT_TRUE(validate_polytopality(build_face_lattice(spec)).ok()) << spec.name;
  }
}

TEST(Generators, CubeAndCrossPolytopeAreDual) {
  for (int d = 2; d <= 5; ++d)
    EXPECT_TRUE(lattice_isomorphic(dual_lattice(build_face_lattice(cube(d))),
                                   build_face_lattice(cross_polytope(d))))
        << d;
}

}  // namespace
}  // namespace polyrecon
