#ifndef COMMGRAPH_CATALOG_HPP
#define COMMGRAPH_CATALOG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph
{

class CatalogError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct NamedSubgroup
{
  std::string name;
  std::vector<Permutation> generators;
};

struct CatalogEntry
{
  std::string name;
  std::string construction;          ///< "builtin:<name>" or "file:<path>"
  Group group;
  std::uint64_t expected_order = 0;  ///< 0 when unknown (generator files)
  std::optional<bool> soluble;       ///< unknown for generator files
  std::optional<bool> trivial_centre;
  std::vector<NamedSubgroup> normal_subgroups;
};

/// Resolves a catalog name such as "sym(5)", "psl2(13)" or "sz(8):3", or
/// else a generator file path. Builtin groups are checked against their
/// expected order. Throws CatalogError.
CatalogEntry resolve_group(std::string_view spec);

/// Builtin constructors. Throw CatalogError outside the supported range.
CatalogEntry make_sym(unsigned n);
CatalogEntry make_alt(unsigned n);
CatalogEntry make_dihedral(unsigned n);
CatalogEntry make_psl2(unsigned q);
CatalogEntry make_pgl2(unsigned q);

/// Group generator text: a `degree n` line, then one generator per line in
/// cycle notation. Lines starting with '#' are comments.
Group parse_group_text(std::string_view text);
Group load_group_file(std::filesystem::path const &path);

/// Names accepted by resolve_group besides the parameterised families.
std::vector<std::string> fixed_group_names();

/// Default corpus for verify-all; every entry has a trivial centre.
std::vector<std::string> default_corpus();

/// Reads a corpus file: one group spec per line, '#' comments.
std::vector<std::string> load_corpus_file(std::filesystem::path const &path);

struct TableRow
{
  std::string label;
  std::string spec;
  std::uint32_t expected_max_diameter;
};

/// Maximum component diameters for the small almost simple groups.
std::vector<TableRow> diameter_table_rows();

} // namespace commgraph

#endif // COMMGRAPH_CATALOG_HPP
