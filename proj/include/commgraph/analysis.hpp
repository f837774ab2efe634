#ifndef COMMGRAPH_ANALYSIS_HPP
#define COMMGRAPH_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commgraph/commuting_graph.hpp"
#include "commgraph/group.hpp"
#include "commgraph/prime_graph.hpp"

namespace commgraph
{

enum class Status
{
  pass,
  fail,
  not_applicable,
};

std::string_view to_string(Status s);

/// Outcome of one structural check on one group. Only FAIL carries a witness.
struct LemmaVerdict
{
  std::string lemma;
  std::string group;
  Status status = Status::not_applicable;
  std::optional<std::string> witness;
  std::string note;
};

/// Groups at most this large get the exhaustive hypothesis scans.
inline constexpr std::size_t kHypothesisScanCap = 10'000;

/// Sorted ids of the subgroup generated by `generators`.
std::vector<ElementId> subgroup_from_generators(ElementTable const &t, std::span<Permutation const> generators);

struct IsolationResult
{
  bool is_subgroup = false;  ///< component plus identity is a subgroup
  bool isolated = false;     ///< that subgroup meets the isolation definition
  std::string witness;       ///< why isolation fails, when it does
};

/// Checks whether component + {1} is a subgroup H and, if so, tests directly
/// that C_G(h) <= H for h in H# and H meets each conjugate other than
/// itself trivially.
IsolationResult check_isolated(EnumeratedGroup const &g, std::span<ElementId const> component);

/// check_isolated on one component per conjugation orbit (or on all of them).
LemmaVerdict check_isolated_components(CommutingGraph const &cg, ComponentClassPartition const &part,
                                       bool every_component = false);

/// Sorted ids of Stab_G(component), from Schreier generators of the
/// conjugation action on components.
std::vector<ElementId> component_stabilizer(CommutingGraph const &cg, ComponentClassPartition const &part,
                                            std::size_t component);

/// NOT_APPLICABLE when the stabilizer is G; otherwise checks that it is
/// strongly p-embedded for every prime p of the component.
LemmaVerdict check_strongly_embedded(CommutingGraph const &cg, ComponentClassPartition const &part,
                                     std::size_t component);
LemmaVerdict check_strongly_embedded_all(CommutingGraph const &cg, ComponentClassPartition const &part);

/// With at least two classes of involutions: every involution lies in one
/// component, involutions are within distance 3 inside the subgraph they
/// induce, and every even-order element shares their component.
LemmaVerdict check_involution_lemma(CommutingGraph const &cg);

/// For a normal subgroup K and a with a^G = a^K: every x outside K is within
/// distance 4 of a^G. Throws std::invalid_argument if K is not a normal subgroup.
LemmaVerdict check_outside_lemma(CommutingGraph const &cg, std::span<ElementId const> k, ElementId a);

/// check_outside_lemma for one a per conjugacy class.
LemmaVerdict check_outside_lemma_all(CommutingGraph const &cg, std::span<ElementId const> k);

/// One instance of the cyclic-centralizer bound: if x lies outside K, some
/// x_p of order p lies in <x> and K with C_K(x_p) cyclic, and a non-trivial
/// p-element of <x>K centralizes a, then d(x, a^G) <= 3.
/// NOT_APPLICABLE when a hypothesis fails.
LemmaVerdict check_outside2_lemma(CommutingGraph const &cg, std::span<ElementId const> k, ElementId a,
                                  ElementId x, std::uint64_t p);

/// Searches every (a, x, p) up to conjugacy; groups larger than
/// kHypothesisScanCap are NOT_APPLICABLE.
LemmaVerdict scan_outside2_lemma(CommutingGraph const &cg, std::span<ElementId const> k);

struct FrobeniusResult
{
  bool frobenius = false;                ///< C_X(j) <= J for all j in J#
  std::optional<bool> complement_form;   ///< C_X(k) <= K for all k in K#, when K given
  bool consistent() const { return !complement_form || *complement_form == frobenius; }
};

/// Centralizer criterion for a proper non-trivial normal subgroup J.
/// Throws std::invalid_argument if J (or the complement) is unsuitable.
FrobeniusResult check_frobenius(EnumeratedGroup const &g, std::span<ElementId const> j,
                                std::optional<std::span<ElementId const>> complement = std::nullopt);

inline constexpr std::uint32_t kDiameterBound = 10;

struct MainTheoremResult
{
  std::uint32_t max_component_diameter = 0;
  bool pass = false;
  std::vector<std::uint32_t> diameters;  ///< per component
};

/// Throws std::domain_error unless Z(G) = 1.
MainTheoremResult verify_main_theorem(CommutingGraph const &cg, Engine engine = Engine::reduced);
/// Whole pipeline. Also throws GroupTooLarge past the element cap.
MainTheoremResult verify_main_theorem(Group const &g, std::uint64_t cap = default_element_cap());

/// For a non-soluble group: components avoiding the prime 2 have diameter
/// at most 1 and together with 1 form abelian subgroups.
/// `soluble` unknown or true gives NOT_APPLICABLE.
LemmaVerdict check_williams(CommutingGraph const &cg, std::span<std::uint32_t const> diameters,
                            std::optional<bool> soluble);

/// A component containing a whole conjugacy class is a normal subset.
LemmaVerdict check_normal_components(CommutingGraph const &cg);

/// Full BFS and the prime-order reduction agree from every orbit source.
LemmaVerdict check_prime_reduction(CommutingGraph const &cg);

LemmaVerdict check_bijection(CommutingGraph const &cg, PrimeGraph const &pg);

} // namespace commgraph

#endif // COMMGRAPH_ANALYSIS_HPP
