// Independent reference computations used by the tests. They work on raw
// permutations and never touch the library's tables, centralizer index or
// collapsed graph.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "commgraph/perm.hpp"

namespace oracle
{

using commgraph::Permutation;

// Closure under right multiplication by the generators.
inline std::vector<Permutation> elements(std::vector<Permutation> const &gens)
{
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::deque<Permutation> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (auto const &s : gens) {
      auto q = commgraph::compose(p, s);
      if (seen.insert(q).second)
        queue.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

// The commuting graph on the non-central elements, built pair by pair.
struct RawGraph
{
  std::vector<Permutation> vertices;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<std::size_t> component;  // per vertex
  std::size_t component_count = 0;

  explicit RawGraph(std::vector<Permutation> const &group)
  {
    for (auto const &x : group) {
      bool central = std::all_of(group.begin(), group.end(), [&](auto const &g) { return commgraph::commutes(x, g); });
      if (!central)
        vertices.push_back(x);
    }
    adj.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (commgraph::commutes(vertices[i], vertices[j])) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
      }
    }
    // Transitive closure of the commuting relation, one BFS flood per class.
    component.assign(vertices.size(), SIZE_MAX);
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      if (component[s] != SIZE_MAX)
        continue;
      auto d = bfs(s);
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (d[v] != UINT32_MAX)
          component[v] = component_count;
      }
      ++component_count;
    }
  }

  std::vector<std::uint32_t> bfs(std::size_t s) const
  {
    std::vector<std::uint32_t> d(vertices.size(), UINT32_MAX);
    std::deque<std::size_t> q{s};
    d[s] = 0;
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (auto w : adj[v]) {
        if (d[w] == UINT32_MAX) {
          d[w] = d[v] + 1;
          q.push_back(w);
        }
      }
    }
    return d;
  }

  std::size_t index_of(Permutation const &p) const
  {
    return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), p) - vertices.begin());
  }

  // Multiset of (component size, diameter) pairs.
  std::multiset<std::pair<std::size_t, std::uint32_t>> component_profile() const
  {
    std::vector<std::size_t> size(component_count, 0);
    std::vector<std::uint32_t> diam(component_count, 0);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      ++size[component[v]];
      auto d = bfs(v);
      for (auto x : d) {
        if (x != UINT32_MAX)
          diam[component[v]] = std::max(diam[component[v]], x);
      }
    }
    std::multiset<std::pair<std::size_t, std::uint32_t>> out;
    for (std::size_t c = 0; c < component_count; ++c)
      out.emplace(size[c], diam[c]);
    return out;
  }
};

inline std::vector<std::uint64_t> primes_of(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace oracle
