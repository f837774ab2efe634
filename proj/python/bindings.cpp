#include <memory>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commgraph/analysis.hpp"
#include "commgraph/catalog.hpp"
#include "commgraph/report.hpp"

namespace py = pybind11;
using namespace commgraph;

namespace
{

Engine engine_from(std::string const &name)
{
  if (name == "full")
    return Engine::full;
  if (name == "reduced")
    return Engine::reduced;
  throw py::value_error("engine must be 'full' or 'reduced'");
}

// A resolved group with its element table and commuting graph.
class Session
{
public:
  explicit Session(std::string const &spec)
    : entry_(resolve_group(spec)),
      group_(std::make_unique<EnumeratedGroup>(entry_.group)),
      graph_(std::make_unique<CommutingGraph>(*group_))
  {}

  std::string name() const { return entry_.name; }
  std::size_t degree() const { return entry_.group.degree(); }
  std::uint64_t order() const { return group_->order(); }
  std::size_t centre_size() const { return group_->centre().size(); }
  std::size_t vertex_count() const { return graph_->vertex_count(); }
  std::size_t component_count() const { return graph_->component_count(); }

  std::vector<std::string> generators() const
  {
    std::vector<std::string> out;
    for (auto const &p : entry_.group.generators())
      out.push_back(format_cycles(p));
    return out;
  }

  std::vector<std::uint32_t> diameters(std::optional<std::string> const &engine) const
  {
    return component_diameters(*graph_, engine ? engine_from(*engine) : default_engine(*graph_));
  }

  std::vector<std::vector<std::uint64_t>> component_primes() const
  {
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t c = 0; c < graph_->component_count(); ++c)
      out.push_back(graph_->component_primes(c));
    return out;
  }

  std::optional<std::uint32_t> distance(std::string const &x, std::string const &y) const
  {
    return commgraph::distance(*graph_, element(x), element(y), default_engine(*graph_));
  }

  py::dict prime_graph() const
  {
    auto pg = build_prime_graph(group_->group(), group_->table(), group_->classes());
    py::dict d;
    d["primes"] = pg.primes;
    d["edges"] = pg.edges;
    d["components"] = pg.components();
    return d;
  }

  bool bijection() const
  {
    auto pg = build_prime_graph(group_->group(), group_->table(), group_->classes());
    return verify_bijection(group_->group(), *graph_, pg).pass;
  }

  std::string report_json(std::optional<std::string> const &engine) const
  {
    std::optional<Engine> e;
    if (engine)
      e = engine_from(*engine);
    return to_json(analyze(entry_, e), false);
  }

private:
  ElementId element(std::string const &text) const
  {
    auto p = parse_cycles(text, entry_.group.degree());
    auto id = group_->table().find(p);
    if (!id)
      throw py::value_error(format_cycles(p) + " is not an element of " + entry_.name);
    return *id;
  }

  CatalogEntry entry_;
  std::unique_ptr<EnumeratedGroup> group_;
  std::unique_ptr<CommutingGraph> graph_;
};

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Commuting graphs and prime graphs of finite permutation groups";

  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GroupTooLarge>(m, "GroupTooLarge", PyExc_RuntimeError);

  m.def(
    "parse_cycles",
    [](std::string const &text, std::size_t degree) {
      auto p = parse_cycles(text, degree);
      return std::vector<Point>(p.images().begin(), p.images().end());
    },
    py::arg("text"), py::arg("degree"), "0-based image list of a 1-based cycle string");
  m.def(
    "format_cycles", [](std::vector<Point> images) { return format_cycles(Permutation(std::move(images))); },
    py::arg("images"));
  m.def("group_order", [](std::string const &spec) { return resolve_group(spec).group.order(); }, py::arg("spec"),
        "Order from the stabilizer chain, without enumerating elements");
  m.def("fixed_group_names", &fixed_group_names);
  m.def("default_corpus", &default_corpus);

  m.def(
    "table",
    [] {
      std::vector<std::tuple<std::string, std::uint32_t, std::uint32_t>> rows;
      for (auto const &row : diameter_table_rows()) {
        auto r = verify_main_theorem(resolve_group(row.spec).group);
        rows.emplace_back(row.label, row.expected_max_diameter, r.max_component_diameter);
      }
      return rows;
    },
    "(label, expected, actual) maximum component diameters");

  py::class_<Session>(m, "CommutingGraph")
    .def(py::init<std::string const &>(), py::arg("spec"))
    .def_property_readonly("name", &Session::name)
    .def_property_readonly("degree", &Session::degree)
    .def_property_readonly("order", &Session::order)
    .def_property_readonly("centre_size", &Session::centre_size)
    .def_property_readonly("vertex_count", &Session::vertex_count)
    .def_property_readonly("component_count", &Session::component_count)
    .def_property_readonly("generators", &Session::generators)
    .def("component_diameters", &Session::diameters, py::arg("engine") = py::none())
    .def("component_primes", &Session::component_primes)
    .def("distance", &Session::distance, py::arg("x"), py::arg("y"),
         "Distance between two non-central elements; None if disconnected")
    .def("prime_graph", &Session::prime_graph)
    .def("bijection", &Session::bijection)
    .def("report_json", &Session::report_json, py::arg("engine") = py::none());
}
