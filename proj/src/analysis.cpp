#include "commgraph/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "commgraph/primes.hpp"

namespace commgraph
{

std::string_view to_string(Status s)
{
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::not_applicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

namespace
{

LemmaVerdict verdict(std::string lemma, Status status, std::string note = {})
{
  return LemmaVerdict{std::move(lemma), {}, status, std::nullopt, std::move(note)};
}

LemmaVerdict failure(std::string lemma, std::string witness)
{
  return LemmaVerdict{std::move(lemma), {}, Status::fail, std::move(witness), {}};
}

std::string show(ElementTable const &t, ElementId x)
{
  return format_cycles(t[x]);
}

std::vector<char> membership(std::size_t n, std::span<ElementId const> ids)
{
  std::vector<char> m(n, 0);
  for (ElementId x : ids)
    m[x] = 1;
  return m;
}

bool is_p_power(std::uint64_t n, std::uint64_t p)
{
  while (n % p == 0)
    n /= p;
  return n == 1;
}

void require_normal_subgroup(EnumeratedGroup const &g, std::span<ElementId const> k)
{
  if (k.empty() || !is_subgroup(g.table(), k))
    throw std::invalid_argument("K is not a subgroup");
  if (!is_normal_subset(g.group(), g.table(), k))
    throw std::invalid_argument("K is not normal in G");
}

// Merges per-instance verdicts: FAIL dominates, then PASS.
struct Tally
{
  explicit Tally(std::string name) : lemma(std::move(name)) {}

  std::string lemma;
  std::size_t passed = 0;
  std::optional<LemmaVerdict> failed;

  void add(LemmaVerdict const &v)
  {
    if (v.status == Status::pass)
      ++passed;
    else if (v.status == Status::fail && !failed)
      failed = v;
  }

  LemmaVerdict result(std::string const &what) const
  {
    if (failed) {
      auto v = *failed;
      v.lemma = lemma;
      return v;
    }
    if (passed == 0)
      return verdict(lemma, Status::not_applicable, "no " + what + " satisfies the hypotheses");
    return verdict(lemma, Status::pass, std::to_string(passed) + " " + what + " checked");
  }
};

} // namespace

std::vector<ElementId> subgroup_from_generators(ElementTable const &t, std::span<Permutation const> generators)
{
  std::vector<ElementId> ids;
  for (auto const &p : generators)
    ids.push_back(t.id_of(p));
  return *generate_subgroup(t, ids);
}

// ---------------------------------------------------------------------------
// Isolation

IsolationResult check_isolated(EnumeratedGroup const &g, std::span<ElementId const> component)
{
  auto const &t = g.table();
  IsolationResult result;
  result.is_subgroup = is_subgroup(t, component);
  if (!result.is_subgroup)
    return result;

  std::vector<ElementId> h(component.begin(), component.end());
  h.push_back(0);
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  auto member = membership(t.size(), h);

  for (ElementId x : h) {
    if (x == 0)
      continue;
    for (ElementId y : g.centralizers().centralizer(x)) {
      if (!member[y]) {
        result.witness = show(t, y) + " centralizes " + show(t, x) + " but lies outside H";
        return result;
      }
    }
  }

  // H^g depends only on the coset Hg.
  std::vector<char> covered(t.size(), 0);
  for (ElementId c = 0; c < t.size(); ++c) {
    if (covered[c])
      continue;
    for (ElementId x : h)
      covered[t.multiply(x, c)] = 1;
    std::size_t hits = 0;
    for (ElementId x : h)
      hits += member[t.conjugate(x, c)];
    if (hits != h.size() && hits > 1) {
      result.witness = "H meets its conjugate by " + show(t, c) + " in " + std::to_string(hits) + " elements";
      return result;
    }
  }
  result.isolated = true;
  return result;
}

LemmaVerdict check_isolated_components(CommutingGraph const &cg, ComponentClassPartition const &part,
                                       bool every_component)
{
  std::string const lemma = "isolated_subgroups";
  std::size_t subgroups = 0;
  for (std::size_t o = 0; o < part.orbits.size(); ++o) {
    auto const &orbit = part.orbits[o];
    std::size_t count = every_component ? orbit.size() : 1;
    for (std::size_t i = 0; i < count; ++i) {
      auto elements = cg.component_elements(orbit[i]);
      auto r = check_isolated(cg.group(), elements);
      if (r.is_subgroup && !r.isolated)
        return failure(lemma, "component " + std::to_string(orbit[i]) + ": " + r.witness);
      subgroups += r.is_subgroup;
    }
  }
  if (subgroups == 0)
    return verdict(lemma, Status::not_applicable, "no component together with 1 is a subgroup");
  return verdict(lemma, Status::pass, std::to_string(subgroups) + " subgroup components are isolated");
}

// ---------------------------------------------------------------------------
// Component stabilizers

std::vector<ElementId> component_stabilizer(CommutingGraph const &cg, ComponentClassPartition const &part,
                                            std::size_t component)
{
  auto const &t = cg.group().table();
  auto const &orbit = part.orbits[part.orbit_of[component]];
  auto rep = [&](std::size_t c) { return cg.vertices().representative[cg.component(c).front()]; };

  std::vector<ElementId> schreier;
  for (std::size_t d : orbit) {
    for (ElementId s : t.generator_ids()) {
      std::size_t image = cg.component_of_element(t.conjugate(rep(d), s));
      ElementId gen = t.multiply(t.multiply(part.transversal[d], s), t.invert(part.transversal[image]));
      if (gen != 0)
        schreier.push_back(gen);
    }
  }
  std::sort(schreier.begin(), schreier.end());
  schreier.erase(std::unique(schreier.begin(), schreier.end()), schreier.end());
  auto stab = *generate_subgroup(t, schreier);
  if (stab.size() * orbit.size() != t.size())
    throw std::logic_error("orbit-stabilizer mismatch for component stabilizer");

  ElementId to_component = part.transversal[component];
  if (to_component == 0)
    return stab;
  for (auto &m : stab)
    m = t.conjugate(m, to_component);
  std::sort(stab.begin(), stab.end());
  return stab;
}

LemmaVerdict check_strongly_embedded(CommutingGraph const &cg, ComponentClassPartition const &part,
                                     std::size_t component)
{
  std::string const lemma = "strongly_embedded";
  auto const &t = cg.group().table();
  if (!cg.group().trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");

  auto m = component_stabilizer(cg, part, component);
  if (m.size() == t.size())
    return verdict(lemma, Status::not_applicable, "component is a normal subset");
  auto member = membership(t.size(), m);

  auto primes = cg.component_primes(component);
  for (auto p : primes) {
    if (m.size() % p != 0)
      return failure(lemma, "p = " + std::to_string(p) + " does not divide |M| = " + std::to_string(m.size()));
  }
  ElementId back = t.invert(part.transversal[component]);
  for (std::size_t d : part.orbits[part.orbit_of[component]]) {
    if (d == component)
      continue;
    // g moves this component to d, so g lies outside M.
    ElementId g = t.multiply(back, part.transversal[d]);
    std::size_t meet = 0;
    for (ElementId x : m)
      meet += member[t.conjugate(x, g)];
    for (auto p : primes) {
      if (meet % p == 0) {
        return failure(lemma, "|M ∩ M^g| = " + std::to_string(meet) + " is divisible by " + std::to_string(p) +
                                " for g = " + show(t, g));
      }
    }
  }
  return verdict(lemma, Status::pass, "index " + std::to_string(t.size() / m.size()));
}

LemmaVerdict check_strongly_embedded_all(CommutingGraph const &cg, ComponentClassPartition const &part)
{
  Tally tally{"strongly_embedded"};
  for (auto const &orbit : part.orbits)
    tally.add(check_strongly_embedded(cg, part, orbit.front()));
  return tally.result("proper component stabilizers");
}

// ---------------------------------------------------------------------------
// Involutions

LemmaVerdict check_involution_lemma(CommutingGraph const &cg)
{
  std::string const lemma = "involutions";
  auto const &g = cg.group();
  auto const &t = g.table();
  if (!g.trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");

  std::vector<std::size_t> involution_classes;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    if (t.order_of(g.classes()[c].representative) == 2)
      involution_classes.push_back(c);
  }
  if (involution_classes.size() < 2) {
    return verdict(lemma, Status::not_applicable,
                   std::to_string(involution_classes.size()) + " class(es) of involutions");
  }

  std::vector<ElementId> involutions;
  for (auto c : involution_classes) {
    auto const &members = g.classes()[c].members;
    involutions.insert(involutions.end(), members.begin(), members.end());
  }
  std::size_t const home = cg.component_of_element(involutions.front());
  for (ElementId x : involutions) {
    if (cg.component_of_element(x) != home)
      return failure(lemma, "involutions " + show(t, involutions.front()) + " and " + show(t, x) +
                              " lie in different components");
  }

  // Involutions generate cyclic subgroups of order 2, so each is its own vertex.
  auto const &vs = cg.vertices();
  std::vector<char> is_involution(cg.vertex_count(), 0);
  for (ElementId x : involutions)
    is_involution[static_cast<std::size_t>(vs.vertex_of[x])] = 1;

  std::uint32_t worst = 0;
  for (auto c : involution_classes) {
    VertexId source = cg.vertex_of_element(g.classes()[c].representative);
    std::vector<std::uint32_t> dist(cg.vertex_count(), kUnreachable);
    std::vector<VertexId> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : cg.neighbors(queue[head])) {
        if (is_involution[w] && dist[w] == kUnreachable) {
          dist[w] = dist[queue[head]] + 1;
          queue.push_back(w);
        }
      }
    }
    for (ElementId x : involutions) {
      auto d = dist[static_cast<std::size_t>(vs.vertex_of[x])];
      if (d == kUnreachable || d > 3) {
        return failure(lemma, "involutions " + show(t, vs.representative[source]) + " and " + show(t, x) +
                                " are at involution-graph distance " +
                                (d == kUnreachable ? std::string("infinity") : std::to_string(d)));
      }
      worst = std::max(worst, d);
    }
  }

  for (ElementId x = 1; x < t.size(); ++x) {
    if (t.order_of(x) % 2 == 0 && cg.component_of_element(x) != home)
      return failure(lemma, "even-order element " + show(t, x) + " lies outside the involution component");
  }
  return verdict(lemma, Status::pass,
                 std::to_string(involution_classes.size()) + " involution classes, max distance " +
                   std::to_string(worst));
}

// ---------------------------------------------------------------------------
// Elements outside a normal subgroup

LemmaVerdict check_outside_lemma(CommutingGraph const &cg, std::span<ElementId const> k, ElementId a)
{
  std::string const lemma = "outside_normal_subgroup";
  auto const &g = cg.group();
  auto const &t = g.table();
  require_normal_subgroup(g, k);
  if (!g.trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");
  if (a == 0)
    return verdict(lemma, Status::not_applicable, "a is the identity");

  auto const &a_class = g.classes()[g.classes().class_of(a)].members;
  std::vector<char> seen(t.size(), 0);
  std::size_t a_k = 0;
  for (ElementId x : k) {
    ElementId y = t.conjugate(a, x);
    if (!seen[y]) {
      seen[y] = 1;
      ++a_k;
    }
  }
  if (a_k != a_class.size()) {
    return verdict(lemma, Status::not_applicable,
                   "|a^K| = " + std::to_string(a_k) + " but |a^G| = " + std::to_string(a_class.size()));
  }
  if (k.size() == t.size())
    return verdict(lemma, Status::pass, "K = G, nothing outside K");

  auto dist = distances_from_set(cg, a_class);
  auto in_k = membership(t.size(), k);
  for (ElementId x = 0; x < t.size(); ++x) {
    if (in_k[x])
      continue;
    if (dist[x] > 4) {
      return failure(lemma, "d(" + show(t, x) + ", " + show(t, a) + "^G) = " +
                              (dist[x] == kUnreachable ? std::string("infinity") : std::to_string(dist[x])));
    }
  }
  return verdict(lemma, Status::pass, std::to_string(t.size() - k.size()) + " elements outside K checked");
}

LemmaVerdict check_outside_lemma_all(CommutingGraph const &cg, std::span<ElementId const> k)
{
  Tally tally{"outside_normal_subgroup"};
  for (auto const &cls : cg.group().classes().classes()) {
    if (cls.representative != 0)
      tally.add(check_outside_lemma(cg, k, cls.representative));
  }
  return tally.result("classes a");
}

namespace
{

struct CyclicCentralizerHypothesis
{
  bool holds = false;
  std::string reason;
  std::vector<ElementId> g0;  // <x>K
};

// Everything in the cyclic-centralizer bound except the choice of a.
CyclicCentralizerHypothesis outside2_hypothesis(EnumeratedGroup const &g, std::vector<char> const &in_k,
                                                std::span<ElementId const> k, ElementId x, std::uint64_t p)
{
  auto const &t = g.table();
  CyclicCentralizerHypothesis h;
  if (in_k[x]) {
    h.reason = "x lies in K";
    return h;
  }
  auto n = t.order_of(x);
  if (!is_prime(p) || n % p != 0) {
    h.reason = "<x> has no element of order p";
    return h;
  }
  ElementId xp = t.id_of(power(t[x], static_cast<std::int64_t>(n / p)));
  if (!in_k[xp]) {
    h.reason = "the order-p element of <x> is outside K";
    return h;
  }
  std::vector<ElementId> ck;
  for (ElementId y : g.centralizers().centralizer(xp)) {
    if (in_k[y])
      ck.push_back(y);
  }
  bool cyclic = std::any_of(ck.begin(), ck.end(), [&](ElementId y) { return t.order_of(y) == ck.size(); });
  if (!cyclic) {
    h.reason = "C_K(x_p) is not cyclic";
    return h;
  }
  // K is normal, so <x>K is the union of the cosets K x^i.
  std::vector<char> in_g0(t.size(), 0);
  ElementId xi = 0;
  do {
    for (ElementId y : k)
      in_g0[t.multiply(y, xi)] = 1;
    xi = t.multiply(xi, x);
  } while (xi != 0);
  for (ElementId y = 0; y < t.size(); ++y) {
    if (in_g0[y])
      h.g0.push_back(y);
  }
  h.holds = true;
  return h;
}

} // namespace

LemmaVerdict check_outside2_lemma(CommutingGraph const &cg, std::span<ElementId const> k, ElementId a,
                                  ElementId x, std::uint64_t p)
{
  std::string const lemma = "outside_cyclic_centralizer";
  auto const &g = cg.group();
  auto const &t = g.table();
  require_normal_subgroup(g, k);
  if (!g.trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");
  if (a == 0)
    return verdict(lemma, Status::not_applicable, "a is the identity");

  auto in_k = membership(t.size(), k);
  auto h = outside2_hypothesis(g, in_k, k, x, p);
  if (!h.holds)
    return verdict(lemma, Status::not_applicable, h.reason);

  // Requires f != 1: the identity is trivially a p-element.
  bool has_f = std::any_of(h.g0.begin(), h.g0.end(), [&](ElementId f) {
    return f != 0 && is_p_power(t.order_of(f), p) && t.commute(f, a);
  });
  if (!has_f)
    return verdict(lemma, Status::not_applicable, "no non-trivial p-element of <x>K centralizes a");

  auto const &a_class = g.classes()[g.classes().class_of(a)].members;
  auto dist = distances_from_set(cg, a_class);
  if (dist[x] > 3) {
    return failure(lemma, "d(" + show(t, x) + ", " + show(t, a) + "^G) = " +
                            (dist[x] == kUnreachable ? std::string("infinity") : std::to_string(dist[x])));
  }
  return verdict(lemma, Status::pass, "d(x, a^G) = " + std::to_string(dist[x]));
}

LemmaVerdict scan_outside2_lemma(CommutingGraph const &cg, std::span<ElementId const> k)
{
  std::string const lemma = "outside_cyclic_centralizer";
  auto const &g = cg.group();
  auto const &t = g.table();
  require_normal_subgroup(g, k);
  if (!g.trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");
  if (t.size() > kHypothesisScanCap)
    return verdict(lemma, Status::not_applicable, "group order above the hypothesis-scan cap");

  auto in_k = membership(t.size(), k);
  std::size_t instances = 0;
  // Instances are closed under simultaneous conjugation, so x runs over
  // class representatives and a over whole classes.
  for (auto const &xcls : g.classes().classes()) {
    ElementId x = xcls.representative;
    if (in_k[x])
      continue;
    for (auto p : prime_divisors(t.order_of(x))) {
      auto h = outside2_hypothesis(g, in_k, k, x, p);
      if (!h.holds)
        continue;
      std::vector<char> class_hit(g.classes().size(), 0);
      for (ElementId f : h.g0) {
        if (f == 0 || !is_p_power(t.order_of(f), p))
          continue;
        for (ElementId a : g.centralizers().centralizer(f)) {
          if (a != 0)
            class_hit[g.classes().class_of(a)] = 1;
        }
      }
      std::vector<ElementId> source{x};
      auto dist = distances_from_set(cg, source);
      for (std::size_t c = 0; c < g.classes().size(); ++c) {
        if (!class_hit[c])
          continue;
        ++instances;
        std::uint32_t best = kUnreachable;
        for (ElementId a : g.classes()[c].members)
          best = std::min(best, dist[a]);
        if (best > 3) {
          return failure(lemma, "x = " + show(t, x) + ", p = " + std::to_string(p) + ", a = " +
                                  show(t, g.classes()[c].representative) + ": d(x, a^G) = " +
                                  (best == kUnreachable ? std::string("infinity") : std::to_string(best)));
        }
      }
    }
  }
  if (instances == 0)
    return verdict(lemma, Status::not_applicable, "no instance satisfies the hypotheses");
  return verdict(lemma, Status::pass, std::to_string(instances) + " instances checked");
}

// ---------------------------------------------------------------------------
// Frobenius criteria

FrobeniusResult check_frobenius(EnumeratedGroup const &g, std::span<ElementId const> j,
                                std::optional<std::span<ElementId const>> complement)
{
  auto const &t = g.table();
  require_normal_subgroup(g, j);
  auto in_j = membership(t.size(), j);
  std::size_t j_order = static_cast<std::size_t>(std::count(in_j.begin(), in_j.end(), 1) + (in_j[0] ? 0 : 1));
  if (j_order <= 1 || j_order >= t.size())
    throw std::invalid_argument("J must be a proper non-trivial normal subgroup");

  auto contained = [&](std::span<ElementId const> s, std::vector<char> const &in) {
    for (ElementId x : s) {
      if (x == 0)
        continue;
      for (ElementId y : g.centralizers().centralizer(x)) {
        if (!in[y])
          return false;
      }
    }
    return true;
  };

  FrobeniusResult result;
  result.frobenius = contained(j, in_j);
  if (complement) {
    auto k = *complement;
    if (k.empty() || !is_subgroup(t, k))
      throw std::invalid_argument("complement is not a subgroup");
    auto in_k = membership(t.size(), k);
    std::size_t k_order = static_cast<std::size_t>(std::count(in_k.begin(), in_k.end(), 1) + (in_k[0] ? 0 : 1));
    bool meet_trivial = true;
    for (ElementId x : k)
      meet_trivial = meet_trivial && (x == 0 || !in_j[x]);
    if (j_order * k_order != t.size() || !meet_trivial)
      throw std::invalid_argument("K is not a complement to J");
    result.complement_form = contained(k, in_k);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Diameter bound and odd components

MainTheoremResult verify_main_theorem(CommutingGraph const &cg, Engine engine)
{
  if (!cg.group().trivial_centre())
    throw std::domain_error("the diameter bound assumes a trivial centre");
  MainTheoremResult result;
  result.diameters = component_diameters(cg, engine);
  for (auto d : result.diameters)
    result.max_component_diameter = std::max(result.max_component_diameter, d);
  result.pass = result.max_component_diameter <= kDiameterBound;
  return result;
}

MainTheoremResult verify_main_theorem(Group const &g, std::uint64_t cap)
{
  EnumeratedGroup eg(g, cap);
  CommutingGraph cg(eg);
  return verify_main_theorem(cg, Engine::reduced);
}

LemmaVerdict check_williams(CommutingGraph const &cg, std::span<std::uint32_t const> diameters,
                            std::optional<bool> soluble)
{
  std::string const lemma = "odd_components";
  auto const &t = cg.group().table();
  if (!soluble.has_value())
    return verdict(lemma, Status::not_applicable, "solubility unknown");
  if (*soluble)
    return verdict(lemma, Status::not_applicable, "group is soluble");
  if (!cg.group().trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");

  std::size_t checked = 0;
  for (std::size_t c = 0; c < cg.component_count(); ++c) {
    auto primes = cg.component_primes(c);
    if (std::find(primes.begin(), primes.end(), 2) != primes.end())
      continue;
    ++checked;
    if (diameters[c] > 1)
      return failure(lemma, "component " + std::to_string(c) + " avoids 2 but has diameter " +
                              std::to_string(diameters[c]));
    auto elements = cg.component_elements(c);
    if (!is_subgroup(t, elements))
      return failure(lemma, "component " + std::to_string(c) + " avoids 2 but is not a subgroup with 1");
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t k = i + 1; k < elements.size(); ++k) {
        if (!t.commute(elements[i], elements[k]))
          return failure(lemma, "component " + std::to_string(c) + " is not abelian");
      }
    }
  }
  if (checked == 0)
    return verdict(lemma, Status::not_applicable, "every component contains an even-order element");
  return verdict(lemma, Status::pass, std::to_string(checked) + " odd components are abelian cliques");
}

LemmaVerdict check_normal_components(CommutingGraph const &cg)
{
  std::string const lemma = "normal_components";
  auto const &g = cg.group();
  if (!g.trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");

  std::vector<char> done(cg.component_count(), 0);
  std::size_t checked = 0;
  for (auto const &cls : g.classes().classes()) {
    if (cls.representative == 0)
      continue;
    std::size_t c = cg.component_of_element(cls.members.front());
    bool whole = std::all_of(cls.members.begin(), cls.members.end(),
                             [&](ElementId x) { return cg.component_of_element(x) == c; });
    if (!whole || done[c])
      continue;
    done[c] = 1;
    ++checked;
    auto elements = cg.component_elements(c);
    if (!is_normal_subset(g.group(), g.table(), elements))
      return failure(lemma, "component " + std::to_string(c) + " contains the class of " +
                              show(g.table(), cls.representative) + " but is not normal");
  }
  if (checked == 0)
    return verdict(lemma, Status::not_applicable, "no component contains a whole class");
  return verdict(lemma, Status::pass, std::to_string(checked) + " components checked");
}

LemmaVerdict check_prime_reduction(CommutingGraph const &cg)
{
  std::string const lemma = "prime_order_paths";
  if (!cg.group().trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");
  std::vector<char> orbit_done(cg.vertex_orbit_count(), 0);
  for (VertexId v = 0; v < cg.vertex_count(); ++v) {
    auto orbit = cg.vertex_orbit_of(v);
    if (orbit_done[orbit])
      continue;
    orbit_done[orbit] = 1;
    auto full = bfs_eccentricity(cg, v);
    auto reduced = prime_reduced_distances(cg, v);
    for (VertexId w = 0; w < cg.vertex_count(); ++w) {
      if (full[w] != reduced[w]) {
        auto const &t = cg.group().table();
        return failure(lemma, "from " + show(t, cg.vertices().representative[v]) + " to " +
                                show(t, cg.vertices().representative[w]) + ": full " + std::to_string(full[w]) +
                                ", reduced " + std::to_string(reduced[w]));
      }
    }
  }
  return verdict(lemma, Status::pass, std::to_string(cg.vertex_orbit_count()) + " orbit sources agree");
}

LemmaVerdict check_bijection(CommutingGraph const &cg, PrimeGraph const &pg)
{
  std::string const lemma = "component_bijection";
  if (!cg.group().trivial_centre())
    return verdict(lemma, Status::not_applicable, "centre is non-trivial");
  auto v = verify_bijection(cg.group().group(), cg, pg);
  if (!v.pass)
    return failure(lemma, v.detail);
  return verdict(lemma, Status::pass,
                 std::to_string(v.orbit_count) + " component orbits, " + std::to_string(v.prime_component_count) +
                   " prime-graph components");
}

} // namespace commgraph
