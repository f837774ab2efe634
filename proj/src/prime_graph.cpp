#include "commgraph/prime_graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "commgraph/disjoint_set.hpp"
#include "commgraph/primes.hpp"

namespace commgraph
{

bool PrimeGraph::adjacent(std::uint64_t r, std::uint64_t s) const
{
  auto key = std::minmax(r, s);
  return std::binary_search(edges.begin(), edges.end(), std::pair{key.first, key.second});
}

std::vector<std::vector<std::uint64_t>> PrimeGraph::components() const
{
  auto index = [this](std::uint64_t p) {
    return static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), p) - primes.begin());
  };
  DisjointSet ds(primes.size());
  for (auto const &[r, s] : edges)
    ds.unite(index(r), index(s));
  auto labels = ds.labels();
  std::size_t count = primes.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<std::uint64_t>> result(count);
  for (std::size_t i = 0; i < primes.size(); ++i)
    result[labels[i]].push_back(primes[i]);
  return result;
}

PrimeGraph build_prime_graph(Group const &, ElementTable const &t, ConjugacyClassSet const &classes)
{
  PrimeGraph pg;
  pg.primes = prime_divisors(t.size());
  for (auto const &cls : classes.classes()) {
    auto order = t.order_of(cls.representative);
    for (std::size_t i = 0; i < pg.primes.size(); ++i) {
      for (std::size_t j = i + 1; j < pg.primes.size(); ++j) {
        if (order % (pg.primes[i] * pg.primes[j]) == 0)
          pg.edges.emplace_back(pg.primes[i], pg.primes[j]);
      }
    }
  }
  std::sort(pg.edges.begin(), pg.edges.end());
  pg.edges.erase(std::unique(pg.edges.begin(), pg.edges.end()), pg.edges.end());
  return pg;
}

ComponentClassPartition conjugation_orbits_of_components(Group const &, CommutingGraph const &cg)
{
  if (!cg.group().trivial_centre())
    throw std::domain_error("component orbits are only defined here for Z(G) = 1");

  auto const &t = cg.group().table();
  auto const n = cg.component_count();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();

  ComponentClassPartition part;
  part.orbit_of.assign(n, unset);
  part.transversal.assign(n, 0);

  auto representative = [&](std::size_t c) { return cg.vertices().representative[cg.component(c).front()]; };

  for (std::size_t c = 0; c < n; ++c) {
    if (part.orbit_of[c] != unset)
      continue;
    std::size_t orbit_index = part.orbits.size();
    std::vector<std::size_t> orbit{c};
    part.orbit_of[c] = orbit_index;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      std::size_t d = orbit[k];
      for (ElementId s : t.generator_ids()) {
        std::size_t image = cg.component_of_element(t.conjugate(representative(d), s));
        if (part.orbit_of[image] != unset)
          continue;
        part.orbit_of[image] = orbit_index;
        part.transversal[image] = t.multiply(part.transversal[d], s);
        orbit.push_back(image);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.pi_sets.push_back(cg.component_primes(c));
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

namespace
{

std::string join(std::vector<std::uint64_t> const &v)
{
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

} // namespace

BijectionVerdict verify_bijection(Group const &g, CommutingGraph const &cg, PrimeGraph const &pg)
{
  auto part = conjugation_orbits_of_components(g, cg);
  auto prime_components = pg.components();

  BijectionVerdict verdict;
  verdict.orbit_count = part.orbits.size();
  verdict.prime_component_count = prime_components.size();

  for (std::size_t o = 0; o < part.orbits.size(); ++o) {
    for (std::size_t c : part.orbits[o]) {
      if (cg.component_primes(c) != part.pi_sets[o]) {
        verdict.detail = "components " + std::to_string(part.orbits[o].front()) + " and " +
                         std::to_string(c) + " are conjugate but have different prime sets";
        return verdict;
      }
    }
  }

  std::vector<std::size_t> hit(prime_components.size(), 0);
  for (std::size_t o = 0; o < part.orbits.size(); ++o) {
    auto it = std::find(prime_components.begin(), prime_components.end(), part.pi_sets[o]);
    if (it == prime_components.end()) {
      verdict.detail = "orbit of component " + std::to_string(part.orbits[o].front()) + " has prime set " +
                       join(part.pi_sets[o]) + ", which is not a prime-graph component";
      return verdict;
    }
    auto idx = static_cast<std::size_t>(it - prime_components.begin());
    if (hit[idx]++ > 0) {
      verdict.detail = "two component orbits map to prime-graph component " + join(*it);
      return verdict;
    }
  }
  for (std::size_t i = 0; i < prime_components.size(); ++i) {
    if (!hit[i]) {
      verdict.detail = "prime-graph component " + join(prime_components[i]) + " has no preimage";
      return verdict;
    }
  }
  bool gamma_connected = cg.component_count() == 1;
  bool pi_connected = prime_components.size() == 1;
  if (gamma_connected != pi_connected) {
    verdict.detail = "commuting graph and prime graph disagree on connectivity";
    return verdict;
  }
  verdict.pass = true;
  return verdict;
}

} // namespace commgraph
