#ifndef COMMGRAPH_REPORT_HPP
#define COMMGRAPH_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/analysis.hpp"
#include "commgraph/catalog.hpp"
#include "commgraph/commuting_graph.hpp"
#include "commgraph/prime_graph.hpp"

namespace commgraph
{

struct ComponentReport
{
  std::size_t id = 0;
  std::size_t elements = 0;
  std::size_t vertices = 0;
  std::uint32_t diameter = 0;
  std::vector<std::uint64_t> primes;
  bool is_isolated_subgroup = false;
  std::optional<std::size_t> orbit_id;  ///< unset when the centre is non-trivial
};

struct AnalysisReport
{
  std::string group;
  std::uint64_t order = 0;
  std::size_t centre_size = 0;
  std::vector<ComponentReport> components;
  PrimeGraph prime_graph;
  std::size_t orbit_count = 0;
  std::optional<bool> bijection;  ///< unset when the centre is non-trivial
  std::vector<LemmaVerdict> lemmas;
  std::vector<std::pair<std::string, double>> timing_ms;

  std::uint32_t max_diameter() const;
  bool has_failure() const;
  /// Exit-code contract of `analyze`: no FAIL and every diameter within bound.
  bool ok() const { return !has_failure() && max_diameter() <= kDiameterBound; }
};

/// Runs the whole pipeline and every checker that applies to the entry.
/// `engine` defaults to the reduced engine when the centre is trivial.
AnalysisReport analyze(CatalogEntry const &entry, std::optional<Engine> engine = std::nullopt,
                       std::uint64_t cap = default_element_cap());

/// JSON text with stable keys; the timing block is omitted when
/// `with_timing` is false, which makes the output deterministic.
std::string to_json(AnalysisReport const &report, bool with_timing = true);

void print_summary(AnalysisReport const &report, std::ostream &out);

/// Command entry points; each returns the process exit code.
int run_analyze(std::string const &spec, std::optional<std::filesystem::path> const &json_path,
                std::optional<Engine> engine, std::ostream &out, std::ostream &err);
int run_table(std::ostream &out, std::ostream &err);
int run_distance(std::string const &spec, std::string const &first, std::string const &second, std::ostream &out,
                 std::ostream &err);
int run_verify_all(std::optional<std::filesystem::path> const &corpus, std::ostream &out, std::ostream &err);

} // namespace commgraph

#endif // COMMGRAPH_REPORT_HPP
