#ifndef COMMGRAPH_GROUP_HPP
#define COMMGRAPH_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "commgraph/perm.hpp"

namespace commgraph
{

using ElementId = std::uint32_t;

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// New base points are chosen as the first point moved by the generator that
/// forces the extension, so the chain depends only on the generator order.
class StabilizerChain
{
public:
  StabilizerChain(std::size_t degree, std::span<Permutation const> generators);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  std::vector<Point> base() const;
  std::span<Permutation const> strong_generators() const { return strong_; }

  /// Strong generators fixing the first `level` base points.
  std::vector<Permutation> level_generators(std::size_t level) const;
  std::span<Point const> orbit(std::size_t level) const { return levels_[level].orbit; }

  /// Coset representative mapping the base point of `level` to `point`.
  std::optional<Permutation> transversal(std::size_t level, Point point) const;

  struct SiftResult
  {
    Permutation residue;
    std::size_t level;  ///< depth() when sifting ran through every level
  };
  SiftResult sift(Permutation p, std::size_t from_level = 0) const;

  bool contains(Permutation const &p) const;

  /// Product of the orbit lengths. Throws std::overflow_error past 2^64.
  std::uint64_t order() const;

private:
  struct Level
  {
    Point base_point;
    std::vector<std::int32_t> rep_index;  // point -> index into reps, -1 outside the orbit
    std::vector<Permutation> reps;
    std::vector<Point> orbit;
  };

  bool fixes_base_prefix(Permutation const &p, std::size_t count) const;
  void rebuild_level(std::size_t level);
  void add_base_point(Point point);
  void schreier_sims();

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

class Group
{
public:
  /// Throws std::invalid_argument if the generator list is empty or a
  /// generator has the wrong degree.
  Group(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  std::span<Permutation const> generators() const { return generators_; }
  StabilizerChain const &chain() const { return chain_; }
  std::uint64_t order() const { return chain_.order(); }
  bool contains(Permutation const &p) const { return p.degree() == degree_ && chain_.contains(p); }

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  StabilizerChain chain_;
};

inline constexpr std::uint64_t kDefaultElementCap = 2'000'000;

/// kDefaultElementCap unless COMMGRAPH_ELEMENT_CAP holds a positive integer.
std::uint64_t default_element_cap();

class GroupTooLarge : public std::runtime_error
{
public:
  GroupTooLarge(std::uint64_t order, std::uint64_t cap);
  std::uint64_t order() const { return order_; }
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

/// Every element of a group, indexed. Id 0 is the identity.
class ElementTable
{
public:
  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  Permutation const &operator[](ElementId id) const { return elements_[id]; }
  std::span<Permutation const> elements() const { return elements_; }

  std::optional<ElementId> find(Permutation const &p) const;
  /// Throws std::out_of_range if p is not in the table.
  ElementId id_of(Permutation const &p) const;

  /// Ids of the group generators, in generator order.
  std::span<ElementId const> generator_ids() const { return generator_ids_; }

  std::uint64_t order_of(ElementId id) const { return orders_[id]; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId invert(ElementId a) const;
  /// x^g = g^-1 x g.
  ElementId conjugate(ElementId x, ElementId g) const;
  bool commute(ElementId a, ElementId b) const { return commutes(elements_[a], elements_[b]); }

private:
  friend ElementTable enumerate_elements(Group const &, std::uint64_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId> index_;
  std::vector<std::uint32_t> orders_;
  std::vector<ElementId> generator_ids_;
};

/// Breadth-first closure of the generators. Throws GroupTooLarge when the
/// chain order exceeds `cap`.
ElementTable enumerate_elements(Group const &g, std::uint64_t cap = kDefaultElementCap);

struct ConjugacyClass
{
  ElementId representative;
  std::vector<ElementId> members;  // sorted
};

class ConjugacyClassSet
{
public:
  std::span<ConjugacyClass const> classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  ConjugacyClass const &operator[](std::size_t i) const { return classes_[i]; }
  std::size_t class_of(ElementId x) const { return class_of_[x]; }
  /// An element g with representative^g == x.
  ElementId conjugator(ElementId x) const { return conjugator_[x]; }

private:
  friend ConjugacyClassSet conjugacy_classes(Group const &, ElementTable const &);

  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<ElementId> conjugator_;
};

/// Sorted ids of elements commuting with every generator.
std::vector<ElementId> center(Group const &g, ElementTable const &t);

/// Sorted ids of elements commuting with x, by a scan of the table.
std::vector<ElementId> centralizer(Group const &g, ElementTable const &t, ElementId x);

/// Orbits of conjugation, ordered by smallest member.
ConjugacyClassSet conjugacy_classes(Group const &g, ElementTable const &t);

/// Centralizers of class representatives, transported to any element by
/// conjugation: C(r^g) = C(r)^g.
class CentralizerIndex
{
public:
  CentralizerIndex(Group const &g, ElementTable const &t, ConjugacyClassSet const &classes);

  /// Sorted ids of C_G(x).
  std::vector<ElementId> centralizer(ElementId x) const;
  std::size_t centralizer_order(ElementId x) const;

private:
  ElementTable const *table_;
  ConjugacyClassSet const *classes_;
  std::vector<std::vector<ElementId>> rep_centralizers_;
};

/// True iff s together with the identity is closed under products and inverses.
bool is_subgroup(ElementTable const &t, std::span<ElementId const> s);

/// True iff s is closed under conjugation by every generator.
bool is_normal_subset(Group const &g, ElementTable const &t, std::span<ElementId const> s);

/// Sorted ids of the subgroup generated by `generators`. Returns nullopt as
/// soon as the subgroup grows past `limit` elements.
std::optional<std::vector<ElementId>> generate_subgroup(ElementTable const &t,
                                                        std::span<ElementId const> generators,
                                                        std::size_t limit = SIZE_MAX);

/// A group with its element table, classes, centre and centralizer index,
/// everything the commuting-graph analyses share. Pinned in memory because
/// the members refer to one another.
class EnumeratedGroup
{
public:
  explicit EnumeratedGroup(Group group, std::uint64_t cap = default_element_cap());
  EnumeratedGroup(EnumeratedGroup const &) = delete;
  EnumeratedGroup &operator=(EnumeratedGroup const &) = delete;

  Group const &group() const { return group_; }
  ElementTable const &table() const { return table_; }
  ConjugacyClassSet const &classes() const { return classes_; }
  CentralizerIndex const &centralizers() const { return centralizers_; }
  std::span<ElementId const> centre() const { return centre_; }
  bool trivial_centre() const { return centre_.size() == 1; }
  bool is_central(ElementId x) const { return central_[x] != 0; }
  std::size_t order() const { return table_.size(); }

private:
  Group group_;
  ElementTable table_;
  ConjugacyClassSet classes_;
  CentralizerIndex centralizers_;
  std::vector<ElementId> centre_;
  std::vector<char> central_;
};

} // namespace commgraph

#endif // COMMGRAPH_GROUP_HPP
