#include "commgraph/commuting_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "commgraph/disjoint_set.hpp"
#include "commgraph/primes.hpp"

namespace commgraph
{

CollapsedVertexSet collapse(ElementTable const &t, std::span<ElementId const> central)
{
  CollapsedVertexSet set;
  set.vertex_of.assign(t.size(), -1);
  std::vector<char> is_central(t.size(), 0);
  for (ElementId z : central)
    is_central[z] = 1;

  for (ElementId x = 0; x < t.size(); ++x) {
    if (is_central[x] || set.vertex_of[x] >= 0)
      continue;
    auto vertex = static_cast<std::int32_t>(set.members.size());
    std::vector<ElementId> members;
    std::uint64_t n = t.order_of(x);
    Permutation pk = t[x];
    for (std::uint64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) == 1) {
        ElementId y = t.id_of(pk);
        set.vertex_of[y] = vertex;
        members.push_back(y);
      }
      pk = compose(pk, t[x]);
    }
    std::sort(members.begin(), members.end());
    set.representative.push_back(members.front());
    set.members.push_back(std::move(members));
  }
  return set;
}

CommutingGraph::CommutingGraph(EnumeratedGroup const &group)
  : group_(&group), vertices_(collapse(group.table(), group.centre()))
{
  auto const n = vertices_.size();
  auto const &t = group.table();

  offsets_.assign(n + 1, 0);
  std::vector<VertexId> row;
  for (VertexId v = 0; v < n; ++v) {
    row.clear();
    for (ElementId y : group.centralizers().centralizer(vertices_.representative[v])) {
      auto w = vertices_.vertex_of[y];
      if (w >= 0 && static_cast<VertexId>(w) != v)
        row.push_back(static_cast<VertexId>(w));
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    adjacency_.insert(adjacency_.end(), row.begin(), row.end());
    offsets_[v + 1] = adjacency_.size();
  }

  prime_order_.resize(n);
  for (VertexId v = 0; v < n; ++v)
    prime_order_[v] = is_prime(t.order_of(vertices_.representative[v])) ? 1 : 0;

  DisjointSet components(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : neighbors(v))
      components.unite(v, w);
  }
  component_of_ = components.labels();
  std::size_t count = n == 0 ? 0 : *std::max_element(component_of_.begin(), component_of_.end()) + 1;
  components_.resize(count);
  for (VertexId v = 0; v < n; ++v)
    components_[component_of_[v]].push_back(v);

  // Vertices are conjugate iff some of their members are.
  DisjointSet orbits(n);
  for (auto const &cls : group.classes().classes()) {
    auto first = vertices_.vertex_of[cls.representative];
    if (first < 0)
      continue;
    for (ElementId x : cls.members)
      orbits.unite(static_cast<std::size_t>(first), static_cast<std::size_t>(vertices_.vertex_of[x]));
  }
  vertex_orbit_ = orbits.labels();
  vertex_orbit_count_ = n == 0 ? 0 : *std::max_element(vertex_orbit_.begin(), vertex_orbit_.end()) + 1;
}

bool CommutingGraph::adjacent(VertexId u, VertexId v) const
{
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::uint64_t CommutingGraph::order_of(VertexId v) const
{
  return group_->table().order_of(vertices_.representative[v]);
}

std::size_t CommutingGraph::component_element_count(std::size_t c) const
{
  std::size_t count = 0;
  for (VertexId v : components_[c])
    count += vertices_.members[v].size();
  return count;
}

std::vector<std::uint64_t> CommutingGraph::component_primes(std::size_t c) const
{
  std::vector<std::uint64_t> primes;
  for (VertexId v : components_[c]) {
    for (auto p : prime_divisors(order_of(v)))
      primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<ElementId> CommutingGraph::component_elements(std::size_t c) const
{
  std::vector<ElementId> elements;
  for (VertexId v : components_[c])
    elements.insert(elements.end(), vertices_.members[v].begin(), vertices_.members[v].end());
  std::sort(elements.begin(), elements.end());
  return elements;
}

VertexId CommutingGraph::vertex_of_element(ElementId x) const
{
  if (x >= vertices_.vertex_of.size())
    throw std::out_of_range("element id " + std::to_string(x) + " out of range");
  auto v = vertices_.vertex_of[x];
  if (v < 0) {
    throw std::invalid_argument("element " + format_cycles(group_->table()[x]) +
                                " is central; the commuting graph has only non-central vertices");
  }
  return static_cast<VertexId>(v);
}

std::size_t CommutingGraph::component_of_element(ElementId x) const
{
  return component_of_[vertex_of_element(x)];
}

// ---------------------------------------------------------------------------
// Distances

std::vector<std::uint32_t> bfs_eccentricity(CommutingGraph const &g, VertexId v)
{
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue{v};
  dist[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace
{

void require_trivial_centre(CommutingGraph const &g)
{
  if (!g.group().trivial_centre())
    throw std::domain_error("prime-order path reduction requires Z(G) = 1");
}

} // namespace

std::vector<std::uint32_t> prime_reduced_distances(CommutingGraph const &g, VertexId source)
{
  require_trivial_centre(g);
  auto const n = g.vertex_count();

  // through[q]: length of the shortest walk source ~ ... ~ q whose vertices
  // after the source are all of prime order.
  std::vector<std::uint32_t> through(n, kUnreachable);
  std::vector<VertexId> queue;
  if (g.prime_order(source)) {
    through[source] = 0;
    queue.push_back(source);
  }
  else {
    for (VertexId p : g.neighbors(source)) {
      if (g.prime_order(p)) {
        through[p] = 1;
        queue.push_back(p);
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (g.prime_order(w) && through[w] == kUnreachable) {
        through[w] = through[u] + 1;
        queue.push_back(w);
      }
    }
  }

  std::vector<std::uint32_t> dist(n, kUnreachable);
  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t best = g.prime_order(v) ? through[v] : kUnreachable;
    for (VertexId q : g.neighbors(v)) {
      if (g.prime_order(q) && through[q] != kUnreachable)
        best = std::min(best, through[q] + 1);
    }
    dist[v] = best;
  }
  for (VertexId w : g.neighbors(source))
    dist[w] = 1;
  dist[source] = 0;
  return dist;
}

std::vector<std::uint32_t> vertex_distances(CommutingGraph const &g, VertexId v, Engine engine)
{
  return engine == Engine::reduced ? prime_reduced_distances(g, v) : bfs_eccentricity(g, v);
}

namespace
{

std::uint32_t max_finite(std::vector<std::uint32_t> const &dist)
{
  std::uint32_t m = 0;
  for (auto d : dist) {
    if (d != kUnreachable)
      m = std::max(m, d);
  }
  return m;
}

std::uint32_t element_diameter(std::uint32_t collapsed, std::size_t element_count)
{
  return element_count >= 2 ? std::max<std::uint32_t>(collapsed, 1) : 0;
}

} // namespace

std::uint32_t component_diameter(CommutingGraph const &g, std::size_t c, Engine engine)
{
  std::vector<char> orbit_done(g.vertex_orbit_count(), 0);
  std::uint32_t diameter = 0;
  for (VertexId v : g.component(c)) {
    auto orbit = g.vertex_orbit_of(v);
    if (orbit_done[orbit])
      continue;
    orbit_done[orbit] = 1;
    diameter = std::max(diameter, max_finite(vertex_distances(g, v, engine)));
  }
  return element_diameter(diameter, g.component_element_count(c));
}

std::vector<std::uint32_t> component_diameters(CommutingGraph const &g, Engine engine)
{
  auto const components = g.component_count();

  // Components are conjugate iff a vertex orbit meets both.
  DisjointSet fused(components);
  std::vector<std::size_t> orbit_component(g.vertex_orbit_count(), components);
  std::vector<VertexId> orbit_source(g.vertex_orbit_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto orbit = g.vertex_orbit_of(v);
    if (orbit_component[orbit] == components) {
      orbit_component[orbit] = g.component_of(v);
      orbit_source[orbit] = v;
    }
    else {
      fused.unite(orbit_component[orbit], g.component_of(v));
    }
  }

  std::vector<std::uint32_t> class_max(components, 0);
  for (std::size_t orbit = 0; orbit < g.vertex_orbit_count(); ++orbit) {
    auto root = fused.find(orbit_component[orbit]);
    class_max[root] = std::max(class_max[root], max_finite(vertex_distances(g, orbit_source[orbit], engine)));
  }

  std::vector<std::uint32_t> diameters(components);
  for (std::size_t c = 0; c < components; ++c)
    diameters[c] = element_diameter(class_max[fused.find(c)], g.component_element_count(c));
  return diameters;
}

std::optional<std::uint32_t> distance(CommutingGraph const &g, ElementId x, ElementId y, Engine engine)
{
  VertexId u = g.vertex_of_element(x);
  VertexId v = g.vertex_of_element(y);
  if (x == y)
    return 0;
  if (u == v)
    return 1;
  auto d = vertex_distances(g, u, engine)[v];
  if (d == kUnreachable)
    return std::nullopt;
  return d;
}

std::optional<std::uint32_t> prime_reduced_distance(CommutingGraph const &g, ElementId x, ElementId y)
{
  require_trivial_centre(g);
  return distance(g, x, y, Engine::reduced);
}

std::vector<std::uint32_t> distances_from_set(CommutingGraph const &g, std::span<ElementId const> sources)
{
  auto const &vs = g.vertices();
  std::vector<std::uint32_t> vdist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  for (ElementId a : sources) {
    VertexId v = g.vertex_of_element(a);
    if (vdist[v] != 0) {
      vdist[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (vdist[w] == kUnreachable) {
        vdist[w] = vdist[u] + 1;
        queue.push_back(w);
      }
    }
  }

  std::vector<std::uint32_t> dist(vs.vertex_of.size(), kUnreachable);
  for (ElementId x = 0; x < dist.size(); ++x) {
    if (vs.vertex_of[x] >= 0)
      dist[x] = vdist[static_cast<std::size_t>(vs.vertex_of[x])];
  }
  // Inside a source vertex, non-source members are twins of a source.
  for (VertexId v : queue) {
    if (vdist[v] != 0)
      break;
    for (ElementId x : vs.members[v])
      dist[x] = 1;
  }
  for (ElementId a : sources)
    dist[a] = 0;
  return dist;
}

Engine default_engine(CommutingGraph const &g)
{
  return g.group().trivial_centre() ? Engine::reduced : Engine::full;
}

} // namespace commgraph
