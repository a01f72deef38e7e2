#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "bpeel/baselines.hpp"
#include "bpeel/errors.hpp"
#include "bpeel/hierarchy.hpp"
#include "bpeel/run.hpp"

namespace py = pybind11;
using namespace bpeel;

namespace {

Side side_of(const std::string& name) {
  const auto side = parse_side(name);
  if (!side) throw ArgumentError("primary_side must be 'left' or 'right'");
  return *side;
}

py::object parent_or_none(std::size_t parent) {
  return parent == kNoNode ? py::none() : py::cast(parent);
}

std::string profile_csv(const NucleusTree& tree, double min_density, std::size_t min_u,
                        std::size_t min_v) {
  std::ostringstream out;
  write_profile_csv(out, subgraph_profiles(tree), ProfileFilter{min_density, min_u, min_v});
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_bpeel, m) {
  m.doc() = "Butterfly counting and bipartite peeling";

  // base class first so the subclasses are matched before it
  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<EmptyGraphError>(m, "EmptyGraphError", error.ptr());
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<OverflowError>(m, "CountOverflowError", PyExc_OverflowError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def_static("from_edges",
                  [](std::size_t u_count, std::size_t v_count,
                     std::vector<std::pair<VertexId, VertexId>> edges) {
                    return BipartiteGraph::from_edges(u_count, v_count, std::move(edges));
                  },
                  py::arg("u_count"), py::arg("v_count"), py::arg("edges"))
      .def_property_readonly("u_count", &BipartiteGraph::u_count)
      .def_property_readonly("v_count", &BipartiteGraph::v_count)
      .def_property_readonly("edge_count", &BipartiteGraph::edge_count)
      .def("neighbors_u",
           [](const BipartiteGraph& g, VertexId u) {
             const auto n = g.neighbors_u(u);
             return std::vector<VertexId>(n.begin(), n.end());
           })
      .def("neighbors_v",
           [](const BipartiteGraph& g, VertexId v) {
             const auto n = g.neighbors_v(v);
             return std::vector<VertexId>(n.begin(), n.end());
           })
      .def("edge", [](const BipartiteGraph& g, EdgeId e) {
        if (e >= g.edge_count()) throw py::index_error("edge id out of range");
        return std::pair{g.edge_u(e), g.edge_v(e)};
      })
      .def("find_edge",
           [](const BipartiteGraph& g, VertexId u, VertexId v) -> py::object {
             const EdgeId e = g.find_edge(u, v);
             return e == kNoEdge ? py::none() : py::cast(e);
           })
      .def("label_u", &BipartiteGraph::label_u)
      .def("label_v", &BipartiteGraph::label_v)
      .def("__repr__", [](const BipartiteGraph& g) {
        return "<BipartiteGraph u=" + std::to_string(g.u_count()) + " v=" +
               std::to_string(g.v_count()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("load_edge_list",
        [](const std::string& path, const std::string& primary_side) {
          return load_bipartite_file(path, side_of(primary_side));
        },
        py::arg("path"), py::arg("primary_side") = "left");
  m.def("parse_edge_list",
        [](const std::string& text, const std::string& primary_side) {
          std::istringstream in(text);
          return load_bipartite(in, side_of(primary_side));
        },
        py::arg("text"), py::arg("primary_side") = "left");

  py::class_<ButterflyCounts>(m, "ButterflyCounts")
      .def_readonly("values", &ButterflyCounts::values)
      .def_readonly("total", &ButterflyCounts::total)
      .def_property_readonly("per_edge",
                             [](const ButterflyCounts& c) { return c.kind == CountKind::PerEdge; });
  m.def("count_per_vertex", [](const BipartiteGraph& g) { return count_per_vertex(g); });
  m.def("count_per_edge", [](const BipartiteGraph& g) { return count_per_edge(g); });

  py::class_<TipResult>(m, "TipResult")
      .def_readonly("theta", &TipResult::theta)
      .def_readonly("peel_order", &TipResult::peel_order)
      .def_readonly("initial_beta", &TipResult::initial_beta);
  py::class_<WingResult>(m, "WingResult")
      .def_readonly("psi", &WingResult::psi)
      .def_readonly("peel_order", &WingResult::peel_order)
      .def_readonly("initial_beta", &WingResult::initial_beta);
  m.def("tip_decompose", [](const BipartiteGraph& g) { return tip_decompose(g, count_per_vertex(g)); });
  m.def("wing_decompose", [](const BipartiteGraph& g) { return wing_decompose(g, count_per_edge(g)); });
  m.def("extract_k_tips", &extract_k_tips, py::arg("graph"), py::arg("result"), py::arg("k"));
  m.def("extract_k_wings", &extract_k_wings, py::arg("graph"), py::arg("result"), py::arg("k"));

  py::class_<SubgraphProfile>(m, "SubgraphProfile")
      .def_readonly("u_size", &SubgraphProfile::u_size)
      .def_readonly("v_size", &SubgraphProfile::v_size)
      .def_readonly("edges", &SubgraphProfile::edges)
      .def_readonly("density", &SubgraphProfile::density)
      .def("__repr__", [](const SubgraphProfile& p) {
        std::ostringstream s;
        s << "<SubgraphProfile u=" << p.u_size << " v=" << p.v_size << " edges=" << p.edges
          << " density=" << p.density << ">";
        return s.str();
      });
  py::class_<NucleusNode>(m, "NucleusNode")
      .def_readonly("k", &NucleusNode::k)
      .def_property_readonly("parent", [](const NucleusNode& n) { return parent_or_none(n.parent); })
      .def_readonly("children", &NucleusNode::children)
      .def_readonly("own", &NucleusNode::own)
      .def_readonly("profile", &NucleusNode::profile);
  py::class_<NucleusTree>(m, "NucleusTree")
      .def_property_readonly("kind", [](const NucleusTree& t) { return std::string(to_string(t.kind)); })
      .def_readonly("nodes", &NucleusTree::nodes)
      .def_readonly("roots", &NucleusTree::roots)
      .def("members", &NucleusTree::members)
      .def("level_nodes", &NucleusTree::level_nodes)
      .def("profile_csv", &profile_csv, py::arg("min_density") = 0.0, py::arg("min_u") = 0,
           py::arg("min_v") = 0);
  m.def("tip_hierarchy", [](const BipartiteGraph& g, const TipResult& r) { return build_hierarchy(g, r); });
  m.def("wing_hierarchy", [](const BipartiteGraph& g, const WingResult& r) { return build_hierarchy(g, r); });

  py::class_<ProjectedGraph>(m, "ProjectedGraph")
      .def_property_readonly("vertex_count", &ProjectedGraph::vertex_count)
      .def_property_readonly("edge_count", &ProjectedGraph::edge_count)
      .def_property_readonly("weighted", &ProjectedGraph::weighted)
      .def("edge", [](const ProjectedGraph& gp, EdgeId e) {
        if (e >= gp.edge_count()) throw py::index_error("edge id out of range");
        return std::pair{gp.edge_a(e), gp.edge_b(e)};
      })
      .def("edge_weight", &ProjectedGraph::edge_weight);
  m.def("project", [](const BipartiteGraph& g, bool weighted) {
    return weighted ? project_weighted(g) : project_unweighted(g);
  }, py::arg("graph"), py::arg("weighted") = false);
  m.def("count_triangles", &count_triangles);

  py::class_<CoreResult>(m, "CoreResult")
      .def_readonly("core", &CoreResult::core)
      .def_readonly("peel_order", &CoreResult::peel_order);
  py::class_<NucleusEdgeResult>(m, "NucleusEdgeResult")
      .def_readonly("kappa", &NucleusEdgeResult::kappa)
      .def_readonly("triangles", &NucleusEdgeResult::triangle_count_initial)
      .def_readonly("peel_order", &NucleusEdgeResult::peel_order);
  m.def("core_decompose", &core_decompose);
  m.def("fractional_core_decompose", &fractional_core_decompose);
  m.def("nucleus23_decompose", &nucleus23_decompose);
  m.def("core_hierarchy", [](const BipartiteGraph& g, const ProjectedGraph& gp, const CoreResult& r) {
    return build_core_hierarchy(g, gp, r, gp.weighted() ? NucleusKind::FracCore : NucleusKind::Core);
  });
  m.def("nucleus23_hierarchy", &build_nucleus23_hierarchy);

  m.def("run",
        [](const std::string& algorithm, const std::filesystem::path& input,
           const std::filesystem::path& output_dir, const std::string& primary_side,
           double min_density, std::size_t min_u, std::size_t min_v, bool members, bool timings) {
          const auto algo = parse_algorithm(algorithm);
          if (!algo) throw ArgumentError("unknown algorithm '" + algorithm + "'");
          RunConfig c;
          c.algorithm = *algo;
          c.input = input;
          c.output_dir = output_dir;
          c.primary_side = side_of(primary_side);
          c.min_density = min_density;
          c.min_u = min_u;
          c.min_v = min_v;
          c.emit_members = members;
          c.emit_timings = timings;
          std::ostringstream out, err;
          int code = 0;
          {
            py::gil_scoped_release release;
            code = run(c, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("algorithm"), py::arg("input"), py::arg("output_dir"),
        py::arg("primary_side") = "left", py::arg("min_density") = 0.0, py::arg("min_u") = 0,
        py::arg("min_v") = 0, py::arg("members") = false, py::arg("timings") = false,
        "Run one CLI algorithm; returns (exit_code, stdout, stderr).");
}
