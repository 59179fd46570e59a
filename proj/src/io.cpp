#include "polyrecon/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace polyrecon::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("field '") + key + "': " + e.what());
  }
}

json edge_list(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    auto pair = e.get<std::vector<int>>();
    if (pair.size() != 2) throw InvalidInput("edge must have two endpoints");
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

}  // namespace

json to_json(const PolytopeSpec& spec) {
  return {{"name", spec.name}, {"n_vertices", spec.n_vertices}, {"facets", spec.facets}};
}

PolytopeSpec polytope_from_json(const json& j) {
  PolytopeSpec s;
  s.name = j.value("name", std::string{});
  s.n_vertices = field<int>(j, "n_vertices");
  s.facets = field<std::vector<VertexSet>>(j, "facets");
  validate_spec(s);
  return s;
}

json to_json(const CubicalComplexSpec& spec) {
  return {{"name", spec.name}, {"n_vertices", spec.n_vertices}, {"cubes", spec.cubes}};
}

CubicalComplexSpec complex_from_json(const json& j) {
  CubicalComplexSpec s;
  s.name = j.value("name", std::string{});
  s.n_vertices = field<int>(j, "n_vertices");
  s.cubes = field<std::vector<std::vector<int>>>(j, "cubes");
  return s;
}

std::variant<PolytopeSpec, CubicalComplexSpec> shape_from_json(const json& j) {
  if (j.is_object() && j.contains("cubes")) return complex_from_json(j);
  return polytope_from_json(j);
}

json to_json(const FaceLattice& lat) {
  json faces = json::array();
  for (const auto& f : lat.faces()) faces.push_back({{"rank", f.rank}, {"vertices", f.vertices}});
  return {{"dimension", lat.dimension()}, {"faces", std::move(faces)}};
}

FaceLattice lattice_from_json(const json& j) {
  std::vector<VertexSet> faces;
  int n = 0;
  for (const auto& f : field<json>(j, "faces")) {
    auto vs = field<VertexSet>(f, "vertices");
    for (int v : vs) n = std::max(n, v + 1);
    faces.push_back(std::move(vs));
  }
  return FaceLattice::from_faces(n, std::move(faces));
}

json to_json(const Graph& g) {
  json out{{"n_nodes", g.n_nodes()},
           {"edges", edge_list({g.edges().begin(), g.edges().end()})}};
  if (!g.node_names().empty()) out["node_names"] = g.node_names();
  return out;
}

Graph graph_from_json(const json& j) {
  const int n = field<int>(j, "n_nodes");
  std::vector<Edge> edges;
  try {
    edges = edges_from(field<json>(j, "edges"));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("edges: ") + e.what());
  }
  std::vector<std::string> names;
  if (j.contains("node_names") && !j["node_names"].is_null()) {
    const auto& nn = j["node_names"];
    if (nn.is_array()) {
      names = nn.get<std::vector<std::string>>();
    } else if (nn.is_object()) {
      names.assign(n, "");
      for (const auto& [key, value] : nn.items()) {
        int v = -1;
        try {
          v = std::stoi(key);
        } catch (const std::exception&) {
          throw InvalidInput("node_names key '" + key + "' is not a node id");
        }
        if (v < 0 || v >= n) throw InvalidInput("node_names key out of range");
        names[v] = value.get<std::string>();
      }
    } else {
      throw InvalidInput("node_names must be an array or an object");
    }
  }
  return Graph(n, std::move(edges), std::move(names));
}

json to_json(const VertexFigureLabels& labels) {
  json per_vertex = json::object();
  for (std::size_t v = 0; v < labels.at.size(); ++v) {
    json list = json::array();
    for (const auto& l : labels.at[v]) list.push_back(edge_list(l));
    per_vertex[std::to_string(v)] = std::move(list);
  }
  return {{"labels", std::move(per_vertex)}};
}

VertexFigureLabels labels_from_json(const json& j, int n_vertices) {
  VertexFigureLabels labels;
  labels.at.resize(n_vertices);
  const auto per_vertex = field<json>(j, "labels");
  if (!per_vertex.is_object()) throw InvalidInput("'labels' must be an object keyed by vertex");
  for (const auto& [key, list] : per_vertex.items()) {
    int v = -1;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw InvalidInput("label key '" + key + "' is not a vertex id");
    }
    if (v < 0 || v >= n_vertices) throw InvalidInput("label key " + key + " out of range");
    try {
      for (const auto& l : list) {
        EdgeSet es;
        for (const auto& [a, b] : edges_from(l)) es.push_back(make_edge(a, b));
        std::sort(es.begin(), es.end());
        labels.at[v].push_back(std::move(es));
      }
    } catch (const json::exception& e) {
      throw InvalidInput("labels of vertex " + key + ": " + e.what());
    }
    std::sort(labels.at[v].begin(), labels.at[v].end());
    labels.at[v].erase(std::unique(labels.at[v].begin(), labels.at[v].end()), labels.at[v].end());
  }
  return labels;
}

json orientation_report(const Graph& g, const GoodOrientations& result) {
  json good = json::array();
  for (const auto& o : result.good) good.push_back(edge_list(directed_edges(g, o)));
  return {{"f", result.f},
          {"n_acyclic", result.n_acyclic},
          {"n_good", result.good.size()},
          {"good", std::move(good)}};
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
  return {{"valid", report.ok()}, {"violations", std::move(violations)}};
}

json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    buffer << in.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InvalidInput((path.empty() ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace polyrecon::io
