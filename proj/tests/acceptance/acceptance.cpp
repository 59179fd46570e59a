// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Expected values are either frozen literals checked against the
// independent oracles in support.hpp or computed by those oracles.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyrecon/cubical.hpp"
#include "polyrecon/generators.hpp"
#include "polyrecon/reconstruct.hpp"
#include "support.hpp"

namespace {

using namespace polyrecon;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few failure reasons of one criterion.
struct Check {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

struct Fixture {
  PolytopeSpec spec;
  FaceLattice lat;
  Graph g;
  VertexFigureLabels labels;
  std::size_t expected_f;
};

std::vector<Fixture> general_fixtures() {
  std::vector<Fixture> out;
  for (const auto& n : fixtures::small_polytopes()) {
    auto lat = build_face_lattice(n.spec);
    auto g = graph_of(lat);
    auto labels = extract_labels(lat);
    out.push_back({n.spec, std::move(lat), std::move(g), std::move(labels), n.expected_f});
  }
  return out;
}

std::vector<PolytopeSpec> cubical_fixtures() {
  std::vector<PolytopeSpec> out = {cube(3), cube(4)};
  for (const auto& fx : fixtures::capped_suite()) out.push_back(fx.spec);
  return out;
}

Check ac1_minimum_equals_face_count() {
  Check c;
  const auto t0 = Clock::now();
  for (const auto& fx : general_fixtures()) {
    const auto oracle_f = oracle::brute_nonempty_face_count(fx.spec);
    c.require(oracle_f == fx.expected_f, fx.spec.name + ": frozen f disagrees with closure oracle");
    const auto r = find_good_orientations(fx.g, fx.labels);
    c.require(r.f == static_cast<std::int64_t>(oracle_f),
              fx.spec.name + ": min f^O = " + std::to_string(r.f) + ", expected " +
                  std::to_string(oracle_f));
  }
  const double s = seconds_since(t0);
  c.require(s < 60.0, "took " + std::to_string(s) + " s");
  return c;
}

Check ac2_score_bound() {
  Check c;
  for (const auto& fx : general_fixtures()) {
    const auto figures = vertex_figure_lattices(fx.g, fx.labels);
    const auto f = static_cast<std::int64_t>(oracle::brute_nonempty_face_count(fx.spec));
    std::size_t bad = 0, seen = 0;
    for_each_acyclic_orientation(fx.g, [&](const Orientation& o) {
      ++seen;
      const auto total = score(fx.g, o, figures).total;
      const bool good = oracle::brute_good(fx.g, o, fx.spec);
      if (total < f || good != (total == f)) ++bad;
    });
    c.require(bad == 0, fx.spec.name + ": " + std::to_string(bad) + " of " + std::to_string(seen) +
                            " orientations break the bound or the equality rule");
  }
  return c;
}

Check ac3_f_subgraphs_are_facets() {
  Check c;
  for (const auto& fx : general_fixtures()) {
    auto truth = canonical(fx.spec).facets;
    c.require(find_F_subgraphs(fx.g, fx.labels) == truth, fx.spec.name + ": facet sets differ");
  }
  return c;
}

Check ac4_round_trip() {
  Check c;
  const auto t0 = Clock::now();
  for (const auto& fx : general_fixtures()) {
    try {
      const auto rebuilt = reconstruct_lattice(fx.g, fx.labels);
      c.require(lattice_isomorphic(rebuilt, fx.lat), fx.spec.name + ": not isomorphic");
    } catch (const std::exception& e) {
      c.require(false, fx.spec.name + ": " + e.what());
    }
  }
  const double s = seconds_since(t0);
  c.require(s < 300.0, "took " + std::to_string(s) + " s");
  return c;
}

Check ac5_simple_from_graph() {
  Check c;
  for (const auto& spec : {simplex(3), cube(3), prism(3)}) {
    const auto lat = build_face_lattice(spec);
    try {
      c.require(lattice_isomorphic(reconstruct_simple(graph_of(lat)), lat),
                spec.name + ": not isomorphic");
    } catch (const std::exception& e) {
      c.require(false, spec.name + ": " + e.what());
    }
  }
  return c;
}

Check ac6_cyclic_demo() {
  Check c;
  const auto cyc = build_face_lattice(cyclic(4, 6));
  const auto sim = build_face_lattice(simplex(5));
  c.require(graph_isomorphic(graph_of(cyc), graph_of(sim)), "graphs differ");
  c.require(graph_of(cyc).n_edges() == 15, "cyclic graph is not K6");
  c.require(cyc.facets().size() == 9 && sim.facets().size() == 6, "facet counts not 9 and 6");
  c.require(!lattice_isomorphic(cyc, sim), "lattices isomorphic");
  return c;
}

Check ac7_cubical_audits() {
  Check c;
  for (const auto& spec : cubical_fixtures()) {
    const auto lat = build_face_lattice(spec);
    const int d = lat.dimension();
    const auto g = graph_of(lat);
    c.require(is_bipartite(g), spec.name + ": graph not bipartite");
    c.require(!find_triangle(g), spec.name + ": graph has a triangle");
    c.require(check_no_odd_cycles(lat).passed(), spec.name + ": odd-cycle audit failed");
    c.require(is_k_regular(dual_graph(lat), 2 * (d - 1)), spec.name + ": dual graph not regular");
    const auto three = check_three_facet_lemma(lat);
    c.require(three.applicable && three.violations.empty() && three.non_cube_facets.empty(),
              spec.name + ": three-facet violations");
  }
  const auto moebius = complex_lattice(moebius_strip());
  c.require(check_no_odd_cycles(moebius).passed(), "Möbius strip not bipartite");
  const auto three = check_three_facet_lemma(moebius);
  c.require(three.classes.size() == 1,
            "Möbius strip has " + std::to_string(three.classes.size()) + " violation classes");
  return c;
}

Check ac8_opposite_pairs() {
  Check c;
  for (const auto& spec : cubical_fixtures()) {
    const auto lat = build_face_lattice(spec);
    const auto dual_labels = extract_labels(dual_lattice(lat));
    const auto facets = lat.facets();
    for (std::size_t i = 0; i < facets.size(); ++i)
      c.require(opposite_pairs_labeling(lat, facets[i]) == dual_labels.at[i],
                spec.name + ": facet " + to_string(facets[i]));
  }
  return c;
}

Check ac9_capped_round_trip() {
  Check c;
  std::vector<PolytopeSpec> specs = {cube(3), stacked_cubes()};
  for (const auto& fx : fixtures::capped_suite()) specs.push_back(fx.spec);
  for (const auto& spec : specs) {
    const auto lat = build_face_lattice(spec);
    const auto t0 = Clock::now();
    try {
      const auto r = reconstruct_capped(dual_graph(lat));
      c.require(lattice_isomorphic(r.lattice, lat), spec.name + ": not isomorphic");
    } catch (const std::exception& e) {
      c.require(false, spec.name + ": " + e.what());
    }
    const double s = seconds_since(t0);
    c.require(s < 60.0, spec.name + ": took " + std::to_string(s) + " s");
  }
  return c;
}

Check ac10_enumeration_counts() {
  Check c;
  auto complete = [](int n) {
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return Graph(n, e);
  };
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  c.require(enumerate_acyclic_orientations(complete(3)).size() == 6, "K3 count");
  c.require(enumerate_acyclic_orientations(c4).size() == 14, "C4 count");
  c.require(enumerate_acyclic_orientations(complete(4)).size() == 24, "K4 count");

  std::vector<std::pair<std::string, Graph>> graphs = {
      {"K3", complete(3)}, {"C4", c4}, {"K4", complete(4)}};
  for (const auto& fx : general_fixtures()) graphs.emplace_back(fx.spec.name, fx.g);
  for (const auto& spec : {prism(4), pyramid(polygon(5)), cube(4)}) {
    const auto lat = build_face_lattice(spec);
    graphs.emplace_back(spec.name, graph_of(lat));
    graphs.emplace_back("dual " + spec.name, dual_graph(lat));
  }
  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i)
    graphs.emplace_back("random " + std::to_string(i), fixtures::random_graph(8, 0.45, 14, rng));
  for (const auto& [name, g] : graphs) {
    if (g.n_edges() > 14) continue;
    auto ours = enumerate_acyclic_orientations(g);
    std::sort(ours.begin(), ours.end());
    c.require(ours == oracle::brute_acyclic(g), name + ": differs from brute filter");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"AC1 minimum sink-count score equals the number of non-empty faces",
       ac1_minimum_equals_face_count},
      {"AC2 every acyclic orientation scores >= f, equality exactly when good", ac2_score_bound},
      {"AC3 F-subgraphs equal the facet vertex sets", ac3_f_subgraphs_are_facets},
      {"AC4 lattice round trip from graph and labels", ac4_round_trip},
      {"AC5 simple polytopes from their graphs alone", ac5_simple_from_graph},
      {"AC6 cyclic(4,6) and the 5-simplex share K6 but not their lattices", ac6_cyclic_demo},
      {"AC7 cubical audits and the Moebius separation", ac7_cubical_audits},
      {"AC8 opposite-pairs labeling equals dual vertex-figure labels", ac8_opposite_pairs},
      {"AC9 capped polytopes from their dual graphs", ac9_capped_round_trip},
      {"AC10 acyclic orientation counts match the brute filter", ac10_enumeration_counts},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (c.ok() ? "[PASS] " : "[FAIL] ") << name << " (" << seconds_since(t0) << " s)";
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) line << "\n    " << c.failures[i];
    std::puts(line.str().c_str());
    if (!c.ok()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
