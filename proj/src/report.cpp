#include "commgraph/report.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace commgraph
{

namespace
{

using Clock = std::chrono::steady_clock;

class Stopwatch
{
public:
  double lap()
  {
    auto now = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

private:
  Clock::time_point last_ = Clock::now();
};

// Several instances of one check (e.g. one per normal subgroup) reported as one verdict.
LemmaVerdict merge(std::string const &lemma, std::vector<std::pair<std::string, LemmaVerdict>> const &parts)
{
  LemmaVerdict out{lemma, {}, Status::not_applicable, std::nullopt, {}};
  std::string notes;
  for (auto const &[label, v] : parts) {
    if (!notes.empty())
      notes += "; ";
    notes += label + ": " + (v.status == Status::fail ? *v.witness : v.note);
    if (v.status == Status::fail && out.status != Status::fail) {
      out.status = Status::fail;
      out.witness = label + ": " + *v.witness;
    } else if (v.status == Status::pass && out.status == Status::not_applicable) {
      out.status = Status::pass;
    }
  }
  out.note = parts.empty() ? "no normal subgroup in the catalog entry" : notes;
  return out;
}

std::string join(std::vector<std::uint64_t> const &xs, char const *sep = ",")
{
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

} // namespace

std::uint32_t AnalysisReport::max_diameter() const
{
  std::uint32_t d = 0;
  for (auto const &c : components)
    d = std::max(d, c.diameter);
  return d;
}

bool AnalysisReport::has_failure() const
{
  return std::any_of(lemmas.begin(), lemmas.end(), [](auto const &v) { return v.status == Status::fail; });
}

AnalysisReport analyze(CatalogEntry const &entry, std::optional<Engine> engine, std::uint64_t cap)
{
  AnalysisReport r;
  Stopwatch total;
  Stopwatch watch;
  r.group = entry.name;

  EnumeratedGroup g(entry.group, cap);
  r.order = g.order();
  r.centre_size = g.centre().size();
  if (entry.trivial_centre && *entry.trivial_centre != g.trivial_centre())
    throw CatalogError(entry.name + ": centre triviality disagrees with the catalog flag");
  r.timing_ms.emplace_back("enumerate", watch.lap());

  CommutingGraph cg(g);
  Engine chosen = engine.value_or(default_engine(cg));
  if (chosen == Engine::reduced && !g.trivial_centre())
    throw std::domain_error("the reduced engine needs a trivial centre; use --engine full");
  r.timing_ms.emplace_back("graph", watch.lap());

  auto diameters = component_diameters(cg, chosen);
  r.timing_ms.emplace_back("diameters", watch.lap());

  r.prime_graph = build_prime_graph(g.group(), g.table(), g.classes());
  std::optional<ComponentClassPartition> part;
  if (g.trivial_centre()) {
    part = conjugation_orbits_of_components(g.group(), cg);
    r.orbit_count = part->orbits.size();
  }

  std::vector<std::optional<bool>> isolated_by_orbit(part ? part->orbits.size() : 0);
  for (std::size_t c = 0; c < cg.component_count(); ++c) {
    ComponentReport cr;
    cr.id = c;
    cr.elements = cg.component_element_count(c);
    cr.vertices = cg.component(c).size();
    cr.diameter = diameters[c];
    cr.primes = cg.component_primes(c);
    // Isolation is conjugation invariant, so one component per orbit suffices.
    std::optional<bool> *cached = nullptr;
    if (part) {
      cr.orbit_id = part->orbit_of[c];
      cached = &isolated_by_orbit[*cr.orbit_id];
    }
    if (cached && cached->has_value()) {
      cr.is_isolated_subgroup = **cached;
    } else {
      auto iso = check_isolated(g, cg.component_elements(c));
      cr.is_isolated_subgroup = iso.is_subgroup && iso.isolated;
      if (cached)
        *cached = cr.is_isolated_subgroup;
    }
    r.components.push_back(std::move(cr));
  }
  r.timing_ms.emplace_back("components", watch.lap());

  auto not_applicable = [](std::string id, std::string note) {
    return LemmaVerdict{std::move(id), {}, Status::not_applicable, std::nullopt, std::move(note)};
  };
  auto &lemmas = r.lemmas;
  if (part) {
    lemmas.push_back(check_bijection(cg, r.prime_graph));
    r.bijection = lemmas.back().status == Status::pass;
    lemmas.push_back(check_prime_reduction(cg));
    lemmas.push_back(check_isolated_components(cg, *part));
    lemmas.push_back(check_strongly_embedded_all(cg, *part));
  } else {
    for (char const *id : {"component_bijection", "prime_order_paths", "isolated_subgroups", "strongly_embedded"})
      lemmas.push_back(not_applicable(id, "centre is non-trivial"));
  }
  lemmas.push_back(check_normal_components(cg));
  lemmas.push_back(check_involution_lemma(cg));

  std::vector<std::pair<std::string, LemmaVerdict>> outside;
  std::vector<std::pair<std::string, LemmaVerdict>> outside2;
  for (auto const &k : entry.normal_subgroups) {
    auto ids = subgroup_from_generators(g.table(), k.generators);
    outside.emplace_back("K = " + k.name, check_outside_lemma_all(cg, ids));
    outside2.emplace_back("K = " + k.name, scan_outside2_lemma(cg, ids));
  }
  lemmas.push_back(merge("outside_normal_subgroup", outside));
  lemmas.push_back(merge("outside_cyclic_centralizer", outside2));

  lemmas.push_back(check_williams(cg, diameters, entry.soluble));

  if (g.trivial_centre()) {
    bool within = r.max_diameter() <= kDiameterBound;
    LemmaVerdict v{"diameter_bound", {}, within ? Status::pass : Status::fail, std::nullopt,
                   "max component diameter " + std::to_string(r.max_diameter())};
    if (!within)
      v.witness = v.note;
    lemmas.push_back(std::move(v));
  } else {
    lemmas.push_back(not_applicable("diameter_bound", "centre is non-trivial"));
  }
  for (auto &v : lemmas)
    v.group = r.group;
  r.timing_ms.emplace_back("lemmas", watch.lap());
  r.timing_ms.emplace_back("total", total.lap());
  return r;
}

std::string to_json(AnalysisReport const &r, bool with_timing)
{
  using nlohmann::ordered_json;
  ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["centre_size"] = r.centre_size;
  auto &components = j["components"] = ordered_json::array();
  for (auto const &c : r.components) {
    ordered_json o;
    o["id"] = c.id;
    o["elements"] = c.elements;
    o["vertices"] = c.vertices;
    o["diameter"] = c.diameter;
    o["primes"] = c.primes;
    o["is_isolated_subgroup"] = c.is_isolated_subgroup;
    o["orbit_id"] = c.orbit_id ? ordered_json(*c.orbit_id) : ordered_json(nullptr);
    components.push_back(std::move(o));
  }
  auto &pg = j["prime_graph"];
  pg["primes"] = r.prime_graph.primes;
  pg["edges"] = ordered_json::array();
  for (auto const &[a, b] : r.prime_graph.edges)
    pg["edges"].push_back({a, b});
  pg["components"] = r.prime_graph.components();
  j["bijection"] = r.bijection ? (*r.bijection ? "PASS" : "FAIL") : "NOT_APPLICABLE";
  auto &lemmas = j["lemmas"] = ordered_json::array();
  for (auto const &v : r.lemmas) {
    ordered_json o;
    o["id"] = v.lemma;
    o["status"] = std::string(to_string(v.status));
    if (v.witness)
      o["witness"] = *v.witness;
    o["note"] = v.note;
    lemmas.push_back(std::move(o));
  }
  if (with_timing) {
    auto &timing = j["timing_ms"] = ordered_json::object();
    for (auto const &[k, ms] : r.timing_ms)
      timing[k] = ms;
  }
  return j.dump(2) + "\n";
}

void print_summary(AnalysisReport const &r, std::ostream &out)
{
  out << "group " << r.group << "  order " << r.order << "  centre " << r.centre_size << "\n";
  out << "components " << r.components.size();
  if (r.bijection)
    out << "  orbits " << r.orbit_count;
  out << "  max diameter " << r.max_diameter() << "\n";

  // One line per orbit, or per component when orbits are unavailable.
  std::vector<char> shown(r.orbit_count, 0);
  for (auto const &c : r.components) {
    if (c.orbit_id) {
      if (shown[*c.orbit_id])
        continue;
      shown[*c.orbit_id] = 1;
      std::size_t size = 0;
      for (auto const &d : r.components)
        size += d.orbit_id == c.orbit_id;
      out << "  orbit " << *c.orbit_id << ": " << size << " x {";
    } else {
      out << "  component " << c.id << ": {";
    }
    out << join(c.primes) << "}  elements " << c.elements << "  vertices " << c.vertices << "  diameter "
        << c.diameter << (c.is_isolated_subgroup ? "  isolated subgroup" : "") << "\n";
  }
  out << "prime graph: primes {" << join(r.prime_graph.primes) << "}, " << r.prime_graph.edges.size()
      << " edges, " << r.prime_graph.components().size() << " components\n";
  for (auto const &v : r.lemmas) {
    out << "  " << std::left << std::setw(28) << v.lemma << std::setw(15) << to_string(v.status);
    out << (v.witness ? *v.witness : v.note) << "\n";
  }
}

int run_analyze(std::string const &spec, std::optional<std::filesystem::path> const &json_path,
                std::optional<Engine> engine, std::ostream &out, std::ostream &err)
{
  try {
    auto entry = resolve_group(spec);
    auto report = analyze(entry, engine);
    print_summary(report, out);
    if (json_path) {
      std::ofstream f(*json_path);
      if (!f)
        throw std::runtime_error("cannot write " + json_path->string());
      f << to_json(report);
    }
    return report.ok() ? 0 : 1;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_table(std::ostream &out, std::ostream &err)
{
  std::size_t matches = 0;
  auto rows = diameter_table_rows();
  out << std::left << std::setw(14) << "group" << std::setw(10) << "expected" << std::setw(10) << "actual"
      << "\n";
  for (auto const &row : rows) {
    std::string actual;
    bool match = false;
    try {
      auto entry = resolve_group(row.spec);
      auto result = verify_main_theorem(entry.group);
      actual = std::to_string(result.max_component_diameter);
      match = result.max_component_diameter == row.expected_max_diameter;
    } catch (std::exception const &e) {
      actual = "error";
      err << row.label << ": " << e.what() << "\n";
    }
    matches += match;
    out << std::setw(14) << row.label << std::setw(10) << row.expected_max_diameter << std::setw(10) << actual
        << (match ? "ok" : "MISMATCH") << "\n";
  }
  out << matches << "/" << rows.size() << " match\n";
  return matches == rows.size() ? 0 : 1;
}

int run_distance(std::string const &spec, std::string const &first, std::string const &second, std::ostream &out,
                 std::ostream &err)
{
  try {
    auto entry = resolve_group(spec);
    auto const degree = entry.group.degree();
    Permutation x = parse_cycles(first, degree);
    Permutation y = parse_cycles(second, degree);
    for (auto const *p : {&x, &y}) {
      if (!entry.group.contains(*p))
        throw std::invalid_argument(format_cycles(*p) + " is not an element of " + entry.name);
    }
    EnumeratedGroup g(entry.group);
    ElementId a = g.table().id_of(x);
    ElementId b = g.table().id_of(y);
    for (auto [id, p] : {std::pair{a, &x}, std::pair{b, &y}}) {
      if (g.is_central(id))
        throw std::invalid_argument(format_cycles(*p) +
                                    " is central; the commuting graph has the non-central elements as vertices");
    }
    CommutingGraph cg(g);
    auto d = distance(cg, a, b, default_engine(cg));
    if (d)
      out << *d << "\n";
    else
      out << "disconnected\n";
    return 0;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_verify_all(std::optional<std::filesystem::path> const &corpus, std::ostream &out, std::ostream &err)
{
  std::vector<std::string> specs;
  try {
    specs = corpus ? load_corpus_file(*corpus) : default_corpus();
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::size_t bad_groups = 0;
  std::size_t totals[3] = {0, 0, 0};
  out << std::left << std::setw(16) << "group" << std::setw(9) << "order" << std::setw(7) << "comps"
      << std::setw(6) << "diam" << std::setw(16) << "bijection" << std::setw(6) << "pass" << std::setw(6) << "fail"
      << "n/a\n";
  for (auto const &spec : specs) {
    try {
      auto report = analyze(resolve_group(spec));
      std::size_t counts[3] = {0, 0, 0};
      for (auto const &v : report.lemmas)
        ++counts[static_cast<int>(v.status)];
      for (int i = 0; i < 3; ++i)
        totals[i] += counts[i];
      char const *bij = report.bijection ? (*report.bijection ? "PASS" : "FAIL") : "NOT_APPLICABLE";
      out << std::setw(16) << report.group << std::setw(9) << report.order << std::setw(7)
          << report.components.size() << std::setw(6) << report.max_diameter() << std::setw(16) << bij
          << std::setw(6) << counts[0] << std::setw(6) << counts[1] << counts[2] << "\n";
      for (auto const &v : report.lemmas) {
        if (v.status == Status::fail)
          out << "    FAIL " << v.lemma << ": " << *v.witness << "\n";
      }
      bad_groups += !report.ok();
    } catch (std::exception const &e) {
      out << std::setw(16) << spec << "ERROR " << e.what() << "\n";
      ++bad_groups;
    }
  }
  out << specs.size() << " groups, " << totals[0] << " PASS, " << totals[1] << " FAIL, " << totals[2]
      << " NOT_APPLICABLE, " << bad_groups << " group(s) with failures\n";
  return bad_groups == 0 ? 0 : 1;
}

} // namespace commgraph
