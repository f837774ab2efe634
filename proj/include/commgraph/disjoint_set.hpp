#ifndef COMMGRAPH_DISJOINT_SET_HPP
#define COMMGRAPH_DISJOINT_SET_HPP

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace commgraph
{

/// Union-find with path halving and union by size.
class DisjointSet
{
public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1)
  {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (size_[a] < size_[b])
      std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  /// Dense labels 0..k-1, numbered in order of each set's smallest member.
  std::vector<std::size_t> labels()
  {
    std::vector<std::size_t> label(parent_.size());
    std::vector<std::size_t> root_label(parent_.size(), parent_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (root_label[r] == parent_.size())
        root_label[r] = next++;
      label[i] = root_label[r];
    }
    return label;
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

} // namespace commgraph

#endif // COMMGRAPH_DISJOINT_SET_HPP
