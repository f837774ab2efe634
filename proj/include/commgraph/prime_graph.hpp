#ifndef COMMGRAPH_PRIME_GRAPH_HPP
#define COMMGRAPH_PRIME_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/commuting_graph.hpp"
#include "commgraph/group.hpp"

namespace commgraph
{

/// Gruenberg-Kegel graph: primes dividing |G|, with r ~ s iff G has an
/// element of order rs.
struct PrimeGraph
{
  std::vector<std::uint64_t> primes;                             ///< sorted
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;    ///< sorted, first < second

  bool adjacent(std::uint64_t r, std::uint64_t s) const;
  /// Connected components, each sorted, ordered by smallest prime.
  std::vector<std::vector<std::uint64_t>> components() const;
};

PrimeGraph build_prime_graph(Group const &g, ElementTable const &t, ConjugacyClassSet const &classes);

/// Commuting-graph components grouped into conjugation orbits.
struct ComponentClassPartition
{
  std::vector<std::vector<std::size_t>> orbits;        ///< component ids, sorted
  std::vector<std::vector<std::uint64_t>> pi_sets;     ///< primes of each orbit
  std::vector<std::size_t> orbit_of;                   ///< component -> orbit index
  /// Per component c: an element g with (first component of c's orbit)^g = c.
  std::vector<ElementId> transversal;
};

/// Orbit closure of the components under conjugation by the generators.
/// Throws std::domain_error unless Z(G) = 1.
ComponentClassPartition conjugation_orbits_of_components(Group const &g, CommutingGraph const &cg);

struct BijectionVerdict
{
  bool pass = false;
  std::size_t orbit_count = 0;
  std::size_t prime_component_count = 0;
  std::string detail;  ///< counterexample when !pass
};

/// Checks that orbit -> pi(orbit) is a bijection onto the prime-graph
/// components. Throws std::domain_error unless Z(G) = 1.
BijectionVerdict verify_bijection(Group const &g, CommutingGraph const &cg, PrimeGraph const &pg);

} // namespace commgraph

#endif // COMMGRAPH_PRIME_GRAPH_HPP
