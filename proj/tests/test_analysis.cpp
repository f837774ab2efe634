#include <doctest.h>

#include <algorithm>

#include "commgraph/analysis.hpp"
#include "commgraph/catalog.hpp"

using namespace commgraph;

namespace
{
std::vector<ElementId> ids(EnumeratedGroup const &g, std::vector<char const *> cycles)
{
  std::vector<ElementId> out;
  for (auto c : cycles)
    out.push_back(g.table().id_of(parse_cycles(c, g.group().degree())));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> subgroup(EnumeratedGroup const &g, std::vector<char const *> gens)
{
  return *generate_subgroup(g.table(), ids(g, gens));
}

// Straight from the definition, over every g and every h.
bool isolated_by_definition(EnumeratedGroup const &g, std::vector<ElementId> h)
{
  auto const &t = g.table();
  if (!std::binary_search(h.begin(), h.end(), ElementId{0})) {
    h.push_back(0);
    std::sort(h.begin(), h.end());
  }
  for (ElementId x : h) {
    if (x == 0)
      continue;
    for (ElementId y = 0; y < t.size(); ++y)
      if (commutes(t[x], t[y]) && !std::binary_search(h.begin(), h.end(), y))
        return false;
  }
  for (ElementId c = 0; c < t.size(); ++c) {
    std::vector<ElementId> conj;
    for (ElementId x : h)
      conj.push_back(t.id_of(conjugate(t[x], t[c])));
    std::sort(conj.begin(), conj.end());
    if (conj == h)
      continue;
    std::vector<ElementId> meet;
    std::set_intersection(h.begin(), h.end(), conj.begin(), conj.end(), std::back_inserter(meet));
    if (meet.size() > 1)
      return false;
  }
  return true;
}

std::size_t component_of(CommutingGraph const &cg, char const *cycle)
{
  auto const &g = cg.group();
  return cg.component_of_element(g.table().id_of(parse_cycles(cycle, g.group().degree())));
}
} // namespace

TEST_CASE("isolation on small examples")
{
  EnumeratedGroup a5(make_alt(5).group);
  CommutingGraph ca5(a5);
  auto v4 = check_isolated(a5, ca5.component_elements(component_of(ca5, "(1,2)(3,4)")));
  CHECK(v4.is_subgroup);
  CHECK(v4.isolated);

  EnumeratedGroup s3(make_sym(3).group);
  CommutingGraph cs3(s3);
  auto tr = check_isolated(s3, cs3.component_elements(component_of(cs3, "(1,2)")));
  CHECK(tr.is_subgroup);
  CHECK(tr.isolated);

  EnumeratedGroup s5(make_sym(5).group);
  CommutingGraph cs5(s5);
  CHECK_FALSE(check_isolated(s5, cs5.component_elements(component_of(cs5, "(1,2)"))).is_subgroup);

  // a subgroup that is not isolated: C_S4((1,2)(3,4)) is bigger than V4
  EnumeratedGroup s4(make_sym(4).group);
  auto v = check_isolated(s4, subgroup(s4, {"(1,2)(3,4)", "(1,3)(2,4)"}));
  CHECK(v.is_subgroup);
  CHECK_FALSE(v.isolated);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("isolation agrees with the definition")
{
  for (auto spec : {"sym(3)", "sym(4)", "alt(5)", "sym(5)", "psl2(7)", "alt(6)", "frobenius_20", "psl2(8)"}) {
    CAPTURE(spec);
    EnumeratedGroup g(resolve_group(spec).group);
    CommutingGraph cg(g);
    for (std::size_t c = 0; c < cg.component_count(); ++c) {
      auto elems = cg.component_elements(c);
      auto r = check_isolated(g, elems);
      if (r.is_subgroup)
        CHECK(r.isolated == isolated_by_definition(g, elems));
    }
    // and on a few subgroups that are not components
    for (auto x : g.table().generator_ids()) {
      auto h = *generate_subgroup(g.table(), std::vector<ElementId>{x});
      CHECK(check_isolated(g, h).isolated == isolated_by_definition(g, h));
    }
  }
}

TEST_CASE("component stabilizers and strong embedding")
{
  EnumeratedGroup a5(make_alt(5).group);
  CommutingGraph cg(a5);
  auto part = conjugation_orbits_of_components(a5.group(), cg);
  auto c = component_of(cg, "(1,2)(3,4)");
  auto m = component_stabilizer(cg, part, c);
  CHECK(m.size() == 12);
  CHECK(is_subgroup(a5.table(), m));
  // every element of M normalises the component
  auto elems = cg.component_elements(c);
  for (auto x : m)
    for (auto y : elems)
      CHECK(cg.component_of_element(a5.table().conjugate(y, x)) == c);
  CHECK(check_strongly_embedded(cg, part, c).status == Status::pass);

  EnumeratedGroup s5(make_sym(5).group);
  CommutingGraph cs5(s5);
  auto p5 = conjugation_orbits_of_components(s5.group(), cs5);
  CHECK(check_strongly_embedded(cs5, p5, component_of(cs5, "(1,2)")).status == Status::not_applicable);

  EnumeratedGroup s3(make_sym(3).group);
  CommutingGraph cs3(s3);
  auto p3 = conjugation_orbits_of_components(s3.group(), cs3);
  CHECK(check_strongly_embedded(cs3, p3, component_of(cs3, "(1,2,3)")).status == Status::not_applicable);
  CHECK(check_strongly_embedded(cs3, p3, component_of(cs3, "(1,2)")).status == Status::pass);
}

TEST_CASE("involution checks")
{
  auto run = [](char const *spec) {
    EnumeratedGroup g(resolve_group(spec).group);
    CommutingGraph cg(g);
    return check_involution_lemma(cg).status;
  };
  CHECK(run("sym(5)") == Status::pass);
  CHECK(run("sym(6)") == Status::pass);
  CHECK(run("pgl2(7)") == Status::pass);
  CHECK(run("alt(5)") == Status::not_applicable);
  CHECK(run("psl2(7)") == Status::not_applicable);
}

TEST_CASE("elements outside a normal subgroup")
{
  EnumeratedGroup s5(make_sym(5).group);
  CommutingGraph cg(s5);
  auto a5 = subgroup(s5, {"(1,2,3)", "(3,4,5)"});
  auto a = s5.table().id_of(parse_cycles("(1,2,3)", 5));
  CHECK(check_outside_lemma(cg, a5, a).status == Status::pass);
  // a 5-cycle class splits in A5
  auto b = s5.table().id_of(parse_cycles("(1,2,3,4,5)", 5));
  CHECK(check_outside_lemma(cg, a5, b).status == Status::not_applicable);
  CHECK(check_outside_lemma_all(cg, a5).status == Status::pass);

  std::vector<ElementId> all(s5.order());
  for (ElementId x = 0; x < all.size(); ++x)
    all[x] = x;
  CHECK(check_outside_lemma(cg, all, a).status == Status::pass);

  auto not_normal = subgroup(s5, {"(1,2)"});
  CHECK_THROWS_AS(check_outside_lemma(cg, not_normal, a), std::invalid_argument);

  EnumeratedGroup s6(make_sym(6).group);
  CommutingGraph c6(s6);
  CHECK(check_outside_lemma_all(c6, subgroup(s6, {"(1,2,3)", "(2,3,4,5,6)"})).status == Status::pass);
}

TEST_CASE("cyclic-centralizer bound on the Frobenius group of order 20")
{
  auto entry = resolve_group("frobenius_20");
  EnumeratedGroup g(entry.group);
  CommutingGraph cg(g);
  auto d10 = subgroup(g, {"(1,2,3,4,5)", "(2,5)(3,4)"});
  // x of order 4 outside D10, x^2 inside with cyclic centralizer there
  auto x = g.table().id_of(parse_cycles("(2,3,5,4)", 5));
  auto a = g.table().id_of(parse_cycles("(2,5)(3,4)", 5));
  CHECK(check_outside2_lemma(cg, d10, a, x, 2).status == Status::pass);
  CHECK(check_outside2_lemma(cg, d10, a, x, 3).status == Status::not_applicable);
  CHECK(check_outside2_lemma(cg, d10, a, a, 2).status == Status::not_applicable);
  CHECK(scan_outside2_lemma(cg, d10).status == Status::pass);
}

TEST_CASE("cyclic-centralizer scan on corpus groups")
{
  for (auto spec : {"sym(4)", "sym(5)", "sym(6)", "pgl2(7)", "pgl2(9)", "m10", "aut(alt(6))", "dihedral(7)"}) {
    CAPTURE(spec);
    auto entry = resolve_group(spec);
    EnumeratedGroup g(entry.group);
    CommutingGraph cg(g);
    for (auto const &k : entry.normal_subgroups) {
      auto v = scan_outside2_lemma(cg, subgroup_from_generators(g.table(), k.generators));
      CHECK_MESSAGE(v.status != Status::fail, v.witness.value_or(""));
    }
  }
}

TEST_CASE("Frobenius criteria")
{
  EnumeratedGroup s3(make_sym(3).group);
  auto r = check_frobenius(s3, subgroup(s3, {"(1,2,3)"}), subgroup(s3, {"(1,2)"}));
  CHECK(r.frobenius);
  CHECK(r.complement_form == true);
  CHECK(r.consistent());

  EnumeratedGroup a4(make_alt(4).group);
  auto v4 = subgroup(a4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto r4 = check_frobenius(a4, v4, subgroup(a4, {"(1,2,3)"}));
  CHECK(r4.frobenius);
  CHECK(r4.consistent());

  EnumeratedGroup s4(make_sym(4).group);
  auto rs4 = check_frobenius(s4, subgroup(s4, {"(1,2)(3,4)", "(1,3)(2,4)"}), subgroup(s4, {"(1,2,3)", "(1,2)"}));
  CHECK_FALSE(rs4.frobenius);
  CHECK(rs4.consistent());

  EnumeratedGroup f20(resolve_group("frobenius_20").group);
  auto c5 = subgroup(f20, {"(1,2,3,4,5)"});
  CHECK(check_frobenius(f20, c5, subgroup(f20, {"(2,3,5,4)"})).frobenius);

  CHECK_THROWS_AS(check_frobenius(s4, subgroup(s4, {"(1,2)"})), std::invalid_argument);
  CHECK_THROWS_AS(check_frobenius(s3, subgroup(s3, {"(1,2,3)"}), subgroup(s3, {"(1,2,3)"})), std::invalid_argument);
}

TEST_CASE("diameter bound")
{
  auto r = verify_main_theorem(make_psl2(13).group);
  CHECK(r.pass);
  CHECK(r.max_component_diameter == 6);
  CHECK(verify_main_theorem(make_sym(5).group).max_component_diameter == 5);
  CHECK_THROWS_AS(verify_main_theorem(make_dihedral(4).group), std::domain_error);
  CHECK_THROWS_AS(verify_main_theorem(make_sym(6).group, 100), GroupTooLarge);
}

TEST_CASE("odd components of non-soluble groups")
{
  for (auto spec : {"alt(5)", "psl2(7)", "alt(7)", "psl2(8)"}) {
    CAPTURE(spec);
    auto entry = resolve_group(spec);
    EnumeratedGroup g(entry.group);
    CommutingGraph cg(g);
    auto d = component_diameters(cg, Engine::full);
    CHECK(check_williams(cg, d, entry.soluble).status == Status::pass);
  }
  EnumeratedGroup s4(make_sym(4).group);
  CommutingGraph cg(s4);
  auto d = component_diameters(cg, Engine::full);
  CHECK(check_williams(cg, d, true).status == Status::not_applicable);
  CHECK(check_williams(cg, d, std::nullopt).status == Status::not_applicable);
}

TEST_CASE("normal components and prime-order paths")
{
  for (auto spec : {"sym(3)", "sym(5)", "sym(6)", "alt(6)", "pgl2(7)", "m10", "frobenius_20"}) {
    CAPTURE(spec);
    EnumeratedGroup g(resolve_group(spec).group);
    CommutingGraph cg(g);
    CHECK(check_normal_components(cg).status != Status::fail);
    CHECK(check_prime_reduction(cg).status == Status::pass);
  }
  EnumeratedGroup s5(make_sym(5).group);
  CommutingGraph cg(s5);
  CHECK(check_normal_components(cg).status == Status::pass);
}

TEST_CASE("verdict strings")
{
  CHECK(to_string(Status::pass) == "PASS");
  CHECK(to_string(Status::fail) == "FAIL");
  CHECK(to_string(Status::not_applicable) == "NOT_APPLICABLE");
}
