#ifndef COMMGRAPH_COMMUTING_GRAPH_HPP
#define COMMGRAPH_COMMUTING_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph
{

using VertexId = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Non-central elements grouped by the cyclic subgroup they generate.
///
/// Generators of one cyclic subgroup have the same centralizer, so they are
/// twins in the commuting graph and can share a vertex.
struct CollapsedVertexSet
{
  std::vector<std::int32_t> vertex_of;          ///< element id -> vertex id, -1 if central
  std::vector<std::vector<ElementId>> members;  ///< per vertex, sorted
  std::vector<ElementId> representative;        ///< per vertex, smallest member

  std::size_t size() const { return members.size(); }
};

/// `central` must be exactly the centre.
CollapsedVertexSet collapse(ElementTable const &t, std::span<ElementId const> central);

enum class Engine
{
  full,     ///< plain BFS over the collapsed graph
  reduced,  ///< BFS over prime-order vertices only; needs a trivial centre
};

/// The commuting graph on collapsed vertices, with sorted adjacency lists.
class CommutingGraph
{
public:
  explicit CommutingGraph(EnumeratedGroup const &group);

  EnumeratedGroup const &group() const { return *group_; }
  CollapsedVertexSet const &vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  std::span<VertexId const> neighbors(VertexId v) const
  {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  bool adjacent(VertexId u, VertexId v) const;

  bool prime_order(VertexId v) const { return prime_order_[v] != 0; }
  std::uint64_t order_of(VertexId v) const;

  std::size_t component_count() const { return components_.size(); }
  std::span<VertexId const> component(std::size_t c) const { return components_[c]; }
  std::size_t component_of(VertexId v) const { return component_of_[v]; }
  std::size_t component_element_count(std::size_t c) const;
  /// Primes dividing the order of some member of the component.
  std::vector<std::uint64_t> component_primes(std::size_t c) const;
  /// Sorted element ids of the component.
  std::vector<ElementId> component_elements(std::size_t c) const;

  /// Conjugation orbits of vertices; labels are dense, numbered by first vertex.
  std::size_t vertex_orbit_of(VertexId v) const { return vertex_orbit_[v]; }
  std::size_t vertex_orbit_count() const { return vertex_orbit_count_; }

  /// Component containing element x; throws std::invalid_argument for central x.
  std::size_t component_of_element(ElementId x) const;
  VertexId vertex_of_element(ElementId x) const;

private:
  EnumeratedGroup const *group_;
  CollapsedVertexSet vertices_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<char> prime_order_;
  std::vector<std::vector<VertexId>> components_;
  std::vector<std::size_t> component_of_;
  std::vector<std::size_t> vertex_orbit_;
  std::size_t vertex_orbit_count_ = 0;
};

/// Collapsed-graph distances from v by BFS; kUnreachable outside v's component.
std::vector<std::uint32_t> bfs_eccentricity(CommutingGraph const &g, VertexId v);

/// Same distances as bfs_eccentricity, but every path found has only
/// prime-order interior vertices. Throws std::domain_error unless Z(G) = 1.
std::vector<std::uint32_t> prime_reduced_distances(CommutingGraph const &g, VertexId v);

std::vector<std::uint32_t> vertex_distances(CommutingGraph const &g, VertexId v, Engine engine);

/// Diameter of component c measured on elements, not collapsed vertices.
/// A one-element component has diameter 0.
std::uint32_t component_diameter(CommutingGraph const &g, std::size_t c, Engine engine);

/// Diameters of every component, sweeping one source per vertex orbit.
std::vector<std::uint32_t> component_diameters(CommutingGraph const &g, Engine engine);

/// Element distance; nullopt when x and y lie in different components.
/// Throws std::invalid_argument if x or y is central.
std::optional<std::uint32_t> distance(CommutingGraph const &g, ElementId x, ElementId y,
                                      Engine engine = Engine::full);

/// Throws std::domain_error unless Z(G) = 1.
std::optional<std::uint32_t> prime_reduced_distance(CommutingGraph const &g, ElementId x, ElementId y);

/// Element distances from the set `sources` to every element; kUnreachable
/// where no path exists and for central elements.
std::vector<std::uint32_t> distances_from_set(CommutingGraph const &g, std::span<ElementId const> sources);

/// Engine::reduced for a trivial centre, Engine::full otherwise.
Engine default_engine(CommutingGraph const &g);

} // namespace commgraph

#endif // COMMGRAPH_COMMUTING_GRAPH_HPP
