// Command-line front end: every subcommand reads and writes the JSON file
// formats in polyrecon/io.hpp. Exit codes: 0 success, 1 audit violation or
// failed reconstruction, 2 invalid input.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polyrecon/cubical.hpp"
#include "polyrecon/figure_labels.hpp"
#include "polyrecon/generators.hpp"
#include "polyrecon/graph.hpp"
#include "polyrecon/io.hpp"
#include "polyrecon/lattice.hpp"
#include "polyrecon/orientation.hpp"
#include "polyrecon/reconstruct.hpp"

namespace {

using namespace polyrecon;
using io::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string output = "-";
  std::string input = "-";
  std::string graph_file;
  std::string labels_file;
  std::optional<std::string> truth;
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 0;
  EnumerationLimits limits;
};

void need(const Options& opt, std::size_t count, const std::string& usage) {
  if (opt.params.size() != count) throw InvalidInput("usage: generate " + usage);
}

json generate(const Options& opt) {
  const auto& f = opt.family;
  const auto& p = opt.params;
  if (f == "capped") {
    need(opt, 2, "capped <d> <caps> [--seed S]");
    auto fx = random_capped(p[0], p[1], opt.seed);
    json j = io::to_json(fx.spec);
    j["capping_log"] = {{"seed", fx.seed}, {"capped_facets", fx.capped_facets}};
    return j;
  }
  if (f == "moebius") {
    need(opt, 0, "moebius");
    return io::to_json(moebius_strip());
  }
  PolytopeSpec spec;
  if (f == "simplex") {
    need(opt, 1, "simplex <d>");
    spec = simplex(p[0]);
  } else if (f == "cube") {
    need(opt, 1, "cube <d>");
    spec = cube(p[0]);
  } else if (f == "cross") {
    need(opt, 1, "cross <d>");
    spec = cross_polytope(p[0]);
  } else if (f == "polygon") {
    need(opt, 1, "polygon <k>");
    spec = polygon(p[0]);
  } else if (f == "pyramid") {
    need(opt, 1, "pyramid <k>");
    spec = pyramid(polygon(p[0]));
  } else if (f == "prism") {
    need(opt, 1, "prism <k>");
    spec = prism(p[0]);
  } else if (f == "cyclic") {
    need(opt, 2, "cyclic <d> <n>");
    spec = cyclic(p[0], p[1]);
  } else if (f == "stacked-cubes") {
    need(opt, 0, "stacked-cubes");
    spec = stacked_cubes();
  } else {
    throw InvalidInput("unknown family '" + f +
                       "' (simplex, cube, cross, polygon, pyramid, prism, cyclic, capped, "
                       "stacked-cubes, moebius)");
  }
  return io::to_json(spec);
}

FaceLattice load_lattice(const std::string& path) {
  auto shape = io::shape_from_json(io::read_json(path));
  if (auto* spec = std::get_if<PolytopeSpec>(&shape)) return build_face_lattice(*spec);
  return complex_lattice(std::get<CubicalComplexSpec>(shape));
}

json lattice_report(const FaceLattice& lat) {
  json j = io::to_json(lat);
  j["n_nonempty_faces"] = count_nonempty_faces(lat);
  j["validation"] = io::to_json(validate_polytopality(lat));
  return j;
}

// Attaches facets, lattice and, with a truth file, the isomorphism verdict.
int reconstruction_report(const FaceLattice& lat, const Options& opt, json& report) {
  json facets = lat.facets();
  report["facets"] = std::move(facets);
  report["n_nonempty_faces"] = count_nonempty_faces(lat);
  report["lattice"] = io::to_json(lat);
  report["validation"] = io::to_json(validate_polytopality(lat));
  if (!opt.truth) return kOk;
  const FaceLattice truth = build_face_lattice(io::polytope_from_json(io::read_json(*opt.truth)));
  auto witness = find_lattice_isomorphism(lat, truth);
  report["isomorphic"] = witness.has_value();
  if (witness) report["witness"] = *witness;
  std::cerr << "isomorphic: " << (witness ? "true" : "false") << '\n';
  return witness ? kOk : kFailed;
}

int audit(const Options& opt, json& report) {
  auto shape = io::shape_from_json(io::read_json(opt.input));
  const bool is_polytope = std::holds_alternative<PolytopeSpec>(shape);
  const FaceLattice lat = is_polytope ? build_face_lattice(std::get<PolytopeSpec>(shape))
                                      : complex_lattice(std::get<CubicalComplexSpec>(shape));
  const int d = lat.dimension();
  bool passed = true;

  auto bip = check_no_odd_cycles(lat);
  report["dimension"] = d;
  report["bipartite"] = {{"applicable", bip.applicable},
                         {"passed", bip.passed()},
                         {"odd_cycle", bip.odd_cycle}};
  const bool triangle_free_ok = !bip.applicable || !bip.triangle;
  json tri = {{"applicable", bip.applicable}, {"passed", triangle_free_ok}};
  if (bip.triangle) tri["triangle"] = *bip.triangle;
  report["triangle_free"] = std::move(tri);
  passed = passed && bip.passed() && triangle_free_ok;

  json regular = {{"applicable", is_polytope && d >= 2}, {"expected_degree", 2 * (d - 1)}};
  if (is_polytope && d >= 2) {
    try {
      const Graph dual = dual_graph(lat);
      const bool ok = is_k_regular(dual, 2 * (d - 1));
      regular["passed"] = ok;
      passed = passed && ok;
    } catch (const InvalidInput& e) {
      regular["passed"] = false;
      regular["error"] = e.what();
      passed = false;
    }
  } else {
    regular["passed"] = true;
  }
  report["dual_regular"] = std::move(regular);

  auto three = check_three_facet_lemma(lat);
  json violations = json::array();
  for (const auto& v : three.violations)
    violations.push_back({{"a", v.a}, {"b", v.b}, {"c", v.c}, {"a_meet_c", v.a_meet_c}});
  json classes = json::array();
  for (const auto& c : three.classes) classes.push_back({c[0], c[1], c[2]});
  report["three_facet"] = {{"applicable", three.applicable},
                           {"passed", three.passed()},
                           {"non_cube_facets", three.non_cube_facets},
                           {"violations", std::move(violations)},
                           {"classes", std::move(classes)}};
  passed = passed && three.passed();
  report["passed"] = passed;
  if (!three.violations.empty())
    std::cerr << "three-facet violations: " << three.violations.size() << " in "
              << three.classes.size() << " class(es)\n";
  return passed ? kOk : kFailed;
}

int demo_cyclic(json& report) {
  const FaceLattice cyc = build_face_lattice(cyclic(4, 6));
  const FaceLattice simp = build_face_lattice(simplex(5));
  const Graph gc = graph_of(cyc);
  const Graph gs = graph_of(simp);
  const bool graphs_iso = graph_isomorphic(gc, gs);
  const bool lattices_iso = lattice_isomorphic(cyc, simp);
  auto describe = [](const std::string& name, const FaceLattice& lat, const Graph& g) {
    return json{{"name", name},
                {"dimension", lat.dimension()},
                {"f_vector", lat.rank_sizes()},
                {"n_facets", lat.facets().size()},
                {"graph_nodes", g.n_nodes()},
                {"graph_edges", g.n_edges()}};
  };
  report["cyclic"] = describe("cyclic(4,6)", cyc, gc);
  report["simplex"] = describe("simplex(5)", simp, gs);
  report["graphs_isomorphic"] = graphs_iso;
  report["lattices_isomorphic"] = lattices_iso;
  std::cerr << "both graphs are K6: " << (graphs_iso ? "yes" : "no")
            << "; lattices isomorphic: " << (lattices_iso ? "yes" : "no") << '\n';
  return graphs_iso && !lattices_iso ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face-lattice reconstruction from graphs and dual graphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", opt.output, "output file"); };
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-count", opt.limits.max_count, "refuse more acyclic orientations");
    cmd->add_option("--max-edges", opt.limits.max_edges, "refuse graphs with more edges");
    cmd->add_option("--threads", opt.limits.threads, "worker threads for scoring");
  };

  auto* gen = app.add_subcommand("generate", "write a polytope (or complex) file");
  gen->add_option("family", opt.family)->required();
  gen->add_option("params", opt.params);
  gen->add_option("--seed", opt.seed, "seed for random capping");
  add_output(gen);

  auto* lat_cmd = app.add_subcommand("lattice", "face lattice with validation report");
  lat_cmd->add_option("file", opt.input, "polytope file (default stdin)");
  add_output(lat_cmd);

  auto* graph_cmd = app.add_subcommand("graph", "vertex-edge graph");
  graph_cmd->add_option("file", opt.input);
  add_output(graph_cmd);

  auto* dual_cmd = app.add_subcommand("dualgraph", "dual graph");
  dual_cmd->add_option("file", opt.input);
  add_output(dual_cmd);

  auto* labels_cmd = app.add_subcommand("labels", "edge-labelled vertex figures");
  labels_cmd->add_option("file", opt.input);
  add_output(labels_cmd);

  auto* orient_cmd = app.add_subcommand("orientations", "good acyclic orientations");
  orient_cmd->add_option("graph", opt.graph_file)->required();
  orient_cmd->add_option("labels", opt.labels_file)->required();
  add_limits(orient_cmd);
  add_output(orient_cmd);

  auto* rec_cmd = app.add_subcommand("reconstruct", "lattice from graph and labels");
  rec_cmd->add_option("graph", opt.graph_file)->required();
  rec_cmd->add_option("labels", opt.labels_file)->required();
  rec_cmd->add_option("--truth", opt.truth, "polytope file to compare with");
  add_limits(rec_cmd);
  add_output(rec_cmd);

  auto* simple_cmd = app.add_subcommand("reconstruct-simple", "simple polytope from its graph");
  simple_cmd->add_option("graph", opt.graph_file)->required();
  simple_cmd->add_option("--truth", opt.truth);
  add_limits(simple_cmd);
  add_output(simple_cmd);

  auto* capped_cmd = app.add_subcommand("reconstruct-capped", "capped cubical polytope from its dual graph");
  capped_cmd->add_option("graph", opt.graph_file)->required();
  capped_cmd->add_option("--truth", opt.truth);
  add_output(capped_cmd);

  auto* audit_cmd = app.add_subcommand("audit", "cubical audits");
  audit_cmd->add_option("file", opt.input);
  add_output(audit_cmd);

  auto* demo_cmd = app.add_subcommand("demo-cyclic", "same graph, different lattices");
  add_output(demo_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    json out;
    int code = kOk;
    if (*gen) {
      out = generate(opt);
    } else if (*lat_cmd) {
      const FaceLattice lat = load_lattice(opt.input);
      out = lattice_report(lat);
      std::cerr << "non-empty faces: " << count_nonempty_faces(lat) << '\n';
      if (!validate_polytopality(lat).ok()) code = kFailed;
    } else if (*graph_cmd) {
      out = io::to_json(graph_of(load_lattice(opt.input)));
    } else if (*dual_cmd) {
      out = io::to_json(dual_graph(load_lattice(opt.input)));
    } else if (*labels_cmd) {
      out = io::to_json(extract_labels(load_lattice(opt.input)));
    } else if (*orient_cmd) {
      const Graph g = io::graph_from_json(io::read_json(opt.graph_file));
      const auto labels = io::labels_from_json(io::read_json(opt.labels_file), g.n_nodes());
      out = io::orientation_report(g, find_good_orientations(g, labels, opt.limits));
    } else if (*rec_cmd) {
      const Graph g = io::graph_from_json(io::read_json(opt.graph_file));
      const auto labels = io::labels_from_json(io::read_json(opt.labels_file), g.n_nodes());
      out["pipeline"] = "graph+labels";
      code = reconstruction_report(reconstruct_lattice(g, labels, opt.limits), opt, out);
    } else if (*simple_cmd) {
      const Graph g = io::graph_from_json(io::read_json(opt.graph_file));
      out["pipeline"] = "simple";
      code = reconstruction_report(reconstruct_simple(g, opt.limits), opt, out);
    } else if (*capped_cmd) {
      const Graph g = io::graph_from_json(io::read_json(opt.graph_file));
      auto rec = reconstruct_capped(g);
      out["pipeline"] = "capped";
      out["node_facets"] = rec.node_facets;
      out["notes"] = rec.notes;
      for (const auto& note : rec.notes) std::cerr << "note: " << note << '\n';
      code = reconstruction_report(rec.lattice, opt, out);
    } else if (*audit_cmd) {
      code = audit(opt, out);
    } else if (*demo_cmd) {
      code = demo_cyclic(out);
    }
    io::write_json(out, opt.output);
    return code;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << e.what() << '\n';
    return kInvalid;
  } catch (const NotRecognized& e) {
    std::cerr << e.what() << '\n';
    return kFailed;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
}
