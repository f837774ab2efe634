#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "commgraph/catalog.hpp"
#include "commgraph/report.hpp"

using namespace commgraph;

namespace
{
std::set<std::uint64_t> orders(EnumeratedGroup const &g)
{
  std::set<std::uint64_t> s;
  for (ElementId x = 0; x < g.order(); ++x)
    s.insert(g.table().order_of(x));
  return s;
}

std::size_t involution_classes(EnumeratedGroup const &g)
{
  std::size_t n = 0;
  for (auto const &c : g.classes().classes())
    n += g.table().order_of(c.representative) == 2;
  return n;
}

std::filesystem::path temp_file(std::string const &name, std::string const &text)
{
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}
} // namespace

TEST_CASE("builtin orders and degrees")
{
  struct Case
  {
    char const *spec;
    std::uint64_t order;
    std::size_t degree;
  };
  for (auto [spec, order, degree] : std::vector<Case>{{"sym(5)", 120, 5},
                                                      {"alt(9)", 181440, 9},
                                                      {"dihedral(7)", 14, 7},
                                                      {"psl2(7)", 168, 8},
                                                      {"pgl2(31)", 29760, 32},
                                                      {"psl2(8)", 504, 9},
                                                      {"psl2(9)", 360, 10},
                                                      {"pgl2(9)", 720, 10},
                                                      {"m10", 720, 10},
                                                      {"aut(alt(6))", 1440, 10},
                                                      {"m11", 7920, 11},
                                                      {"m12", 95040, 12},
                                                      {"psl3(4)", 20160, 21},
                                                      {"pgl3(4)", 60480, 21},
                                                      {"sz(8)", 29120, 65},
                                                      {"sz(8):3", 87360, 65},
                                                      {"frobenius_20", 20, 5}}) {
    CAPTURE(spec);
    auto e = resolve_group(spec);
    CHECK(e.group.order() == order);
    CHECK(e.group.degree() == degree);
    CHECK(e.expected_order == order);
  }
}

TEST_CASE("spec normalisation")
{
  CHECK(resolve_group(" Sym( 4 ) ").group.order() == 24);
  CHECK(resolve_group("PSL2(13)").name == resolve_group("psl2(13)").name);
}

TEST_CASE("unsupported parameters list the supported range")
{
  auto message = [](char const *spec) {
    try {
      resolve_group(spec);
    } catch (CatalogError const &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("sym(10)").find("9") != std::string::npos);
  CHECK(message("psl2(37)").find("31") != std::string::npos);
  CHECK(message("psl2(25)").find("prime") != std::string::npos);
  CHECK_FALSE(message("no_such_group").empty());
  CHECK_THROWS_AS(make_alt(10), CatalogError);
}

TEST_CASE("the four degree-10 extensions of Alt(6) are distinct")
{
  EnumeratedGroup s6(make_sym(6).group);
  EnumeratedGroup pgl(resolve_group("pgl2(9)").group);
  EnumeratedGroup m10(resolve_group("m10").group);
  EnumeratedGroup aut(resolve_group("aut(alt(6))").group);
  CHECK(orders(s6) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(orders(pgl) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 8, 10});
  CHECK(orders(m10) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 8});
  CHECK(involution_classes(s6) == 3);
  CHECK(involution_classes(pgl) == 2);
  CHECK(involution_classes(m10) == 1);
  CHECK(involution_classes(aut) == 3);
  CHECK(aut.trivial_centre());
}

TEST_CASE("catalog metadata")
{
  for (auto const &spec : default_corpus()) {
    CAPTURE(spec);
    auto e = resolve_group(spec);
    REQUIRE(e.trivial_centre.has_value());
    CHECK(*e.trivial_centre);
    CHECK(e.soluble.has_value());
    for (auto const &k : e.normal_subgroups)
      for (auto const &p : k.generators)
        CHECK(e.group.contains(p));
  }
  CHECK(*resolve_group("sym(4)").soluble);
  CHECK_FALSE(*resolve_group("alt(5)").soluble);
  CHECK_FALSE(*resolve_group("dihedral(4)").trivial_centre);
  CHECK(default_corpus().size() >= 20);
  CHECK(diameter_table_rows().size() == 9);
}

TEST_CASE("generator files")
{
  auto g = parse_group_text("# D8\ndegree 4\n(1,2,3,4)\n\n(1,3)\n");
  CHECK(g.order() == 8);
  CHECK(g.degree() == 4);
  CHECK_THROWS(parse_group_text("(1,2)\n"));
  CHECK_THROWS(parse_group_text("degree 3\n(1,4)\n"));

  auto path = temp_file("commgraph_test_q8.txt", "degree 8\n(1,2,3,4)(5,6,7,8)\n(1,5,3,7)(2,8,4,6)\n");
  auto e = resolve_group(path.string());
  CHECK(e.group.order() == 8);
  CHECK(e.construction == "file:" + path.string());
  CHECK_FALSE(e.soluble.has_value());

  auto corpus = temp_file("commgraph_test_corpus.txt", "# small\nsym(3)\n\nalt(4)  \n");
  CHECK(load_corpus_file(corpus) == std::vector<std::string>{"sym(3)", "alt(4)"});
}

TEST_CASE("analysis report")
{
  auto r = analyze(resolve_group("alt(5)"));
  CHECK(r.order == 60);
  CHECK(r.components.size() == 21);
  CHECK(r.orbit_count == 3);
  CHECK(r.max_diameter() == 1);
  CHECK(r.bijection == true);
  CHECK(r.ok());

  auto j = nlohmann::json::parse(to_json(r));
  for (auto key : {"group", "order", "centre_size", "components", "prime_graph", "bijection", "lemmas", "timing_ms"})
    CHECK(j.contains(key));
  for (auto key : {"id", "elements", "vertices", "diameter", "primes", "is_isolated_subgroup", "orbit_id"})
    CHECK(j["components"][0].contains(key));
  for (auto key : {"primes", "edges", "components"})
    CHECK(j["prime_graph"].contains(key));
  CHECK(j["bijection"] == "PASS");
  CHECK_FALSE(nlohmann::json::parse(to_json(r, false)).contains("timing_ms"));
}

TEST_CASE("report invariants across the corpus")
{
  for (auto spec : {"sym(4)", "sym(6)", "alt(7)", "psl2(11)", "m10", "frobenius_20", "dihedral(4)", "pgl2(7)"}) {
    CAPTURE(spec);
    auto r = analyze(resolve_group(spec));
    std::size_t total = 0;
    for (auto const &c : r.components)
      total += c.elements;
    CHECK(total == r.order - r.centre_size);
    for (auto const &v : r.lemmas) {
      CAPTURE(v.lemma);
      CHECK(v.status != Status::fail);
      CHECK(v.witness.has_value() == (v.status == Status::fail));
    }
    CHECK(to_json(r, false) == to_json(analyze(resolve_group(spec)), false));
  }
}

TEST_CASE("both engines give the same report")
{
  auto entry = resolve_group("alt(6)");
  CHECK(to_json(analyze(entry, Engine::full), false) == to_json(analyze(entry, Engine::reduced), false));
  auto d8 = resolve_group("dihedral(4)");
  CHECK_THROWS_AS(analyze(d8, Engine::reduced), std::domain_error);
}

TEST_CASE("non-trivial centre")
{
  auto r = analyze(resolve_group("dihedral(4)"));
  CHECK(r.centre_size == 2);
  CHECK_FALSE(r.bijection.has_value());
  for (auto const &c : r.components)
    CHECK_FALSE(c.orbit_id.has_value());
  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["bijection"] == "NOT_APPLICABLE");
  CHECK(j["components"][0]["orbit_id"].is_null());
  for (auto const &v : r.lemmas)
    if (v.lemma == "component_bijection" || v.lemma == "diameter_bound")
      CHECK(v.status == Status::not_applicable);
}

TEST_CASE("distance command")
{
  std::ostringstream out, err;
  CHECK(run_distance("sym(4)", "(1,2)", "(3,4)", out, err) == 0);
  CHECK(out.str() == "1\n");
  out.str("");
  CHECK(run_distance("sym(3)", "(1,2)", "(1,2,3)", out, err) == 0);
  CHECK(out.str() == "disconnected\n");

  CHECK(run_distance("alt(5)", "(1,2)", "(1,2,3)", out, err) == 2);
  CHECK(err.str().find("not an element") != std::string::npos);
  err.str("");
  CHECK(run_distance("dihedral(4)", "(1,3)(2,4)", "(1,3)", out, err) == 2);
  CHECK(err.str().find("central") != std::string::npos);
  CHECK(run_distance("sym(3)", "(1,2", "(1,2,3)", out, err) == 2);
}

TEST_CASE("distance command finds a pair at distance 6 in Alt(6)")
{
  EnumeratedGroup g(make_alt(6).group);
  CommutingGraph cg(g);
  auto const &t = g.table();
  std::optional<std::pair<ElementId, ElementId>> pair;
  for (VertexId v = 0; v < cg.vertex_count() && !pair; ++v) {
    auto d = bfs_eccentricity(cg, v);
    for (VertexId w = 0; w < cg.vertex_count(); ++w)
      if (d[w] == 6 && d[w] != kUnreachable)
        pair.emplace(cg.vertices().representative[v], cg.vertices().representative[w]);
  }
  REQUIRE(pair);
  std::ostringstream out, err;
  CHECK(run_distance("alt(6)", format_cycles(t[pair->first]), format_cycles(t[pair->second]), out, err) == 0);
  CHECK(out.str() == "6\n");
}

TEST_CASE("analyze command")
{
  auto json_path = std::filesystem::temp_directory_path() / "commgraph_test_report.json";
  std::ostringstream out, err;
  CHECK(run_analyze("sym(6)", json_path, std::nullopt, out, err) == 0);
  CHECK(out.str().find("max diameter 4") != std::string::npos);
  auto j = nlohmann::json::parse(std::ifstream(json_path));
  CHECK(j["order"] == 720);
  CHECK(run_analyze("nonsense(3)", std::nullopt, std::nullopt, out, err) == 2);
}

TEST_CASE("verify-all on a corpus with a non-trivial centre")
{
  auto corpus = temp_file("commgraph_test_corpus2.txt", "sym(3)\nsym(5)\ndihedral(4)\n");
  std::ostringstream out, err;
  CHECK(run_verify_all(corpus, out, err) == 0);
  CHECK(out.str().find("NOT_APPLICABLE") != std::string::npos);
  CHECK(out.str().find(" 0 FAIL") != std::string::npos);
  auto bad = temp_file("commgraph_test_corpus3.txt", "sym(3)\nbogus\n");
  CHECK(run_verify_all(bad, out, err) == 1);
}

TEST_CASE("table command")
{
  std::ostringstream out, err;
  CHECK(run_table(out, err) == 0);
  CHECK(out.str().find("9/9 match") != std::string::npos);
}
