#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "polyrecon/cubical.hpp"
#include "polyrecon/figure_labels.hpp"
#include "polyrecon/graph.hpp"
#include "polyrecon/lattice.hpp"
#include "polyrecon/orientation.hpp"

namespace polyrecon::io {

using nlohmann::json;

// Polytope file: {"name", "n_vertices", "facets": [[int,...],...]}.
json to_json(const PolytopeSpec& spec);
PolytopeSpec polytope_from_json(const json& j);

// Complex file: {"name", "n_vertices", "cubes": [[certificate],...]}.
json to_json(const CubicalComplexSpec& spec);
CubicalComplexSpec complex_from_json(const json& j);

/// A polytope or complex file, told apart by "facets" vs "cubes".
std::variant<PolytopeSpec, CubicalComplexSpec> shape_from_json(const json& j);

// Lattice file: {"dimension", "faces": [{"rank", "vertices"}, ...]}.
json to_json(const FaceLattice& lat);
FaceLattice lattice_from_json(const json& j);

// Graph file: {"n_nodes", "edges": [[a,b],...], "node_names"?}.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Labels file: {"labels": {"v": [[[a,b],...],...]}}.
json to_json(const VertexFigureLabels& labels);
VertexFigureLabels labels_from_json(const json& j, int n_vertices);

// Orientation report: {"f", "n_acyclic", "n_good", "good": [[[a,b],...],...]}.
json orientation_report(const Graph& g, const GoodOrientations& result);

json to_json(const ValidationReport& report);

/// Parses a whole file ("-" reads standard input). Throws InvalidInput.
json read_json(const std::string& path);
/// Writes pretty-printed JSON plus a newline ("" or "-" is standard output).
void write_json(const json& j, const std::string& path);

}  // namespace polyrecon::io
