#ifndef COMMGRAPH_CATALOG_DATA_HPP
#define COMMGRAPH_CATALOG_DATA_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace commgraph::detail
{

struct FixedGroupData
{
  std::string name;
  unsigned degree;
  std::uint64_t order;
  std::vector<std::string> generators;  // 1-based cycle notation
};

std::vector<FixedGroupData> const &fixed_group_data();

} // namespace commgraph::detail

#endif // COMMGRAPH_CATALOG_DATA_HPP
