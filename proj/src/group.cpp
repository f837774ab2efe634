#include "commgraph/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>

namespace commgraph
{

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::span<Permutation const> generators)
  : degree_(degree)
{
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree differs from chain degree");
    if (g.is_identity())
      continue;
    strong_.push_back(g);
    if (fixes_base_prefix(g, levels_.size()))
      add_base_point(static_cast<Point>(g.first_moved_point()));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i)
    rebuild_level(i);
  schreier_sims();
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (auto const &level : levels_)
    b.push_back(level.base_point);
  return b;
}

bool StabilizerChain::fixes_base_prefix(Permutation const &p, std::size_t count) const
{
  for (std::size_t i = 0; i < count; ++i) {
    if (p[levels_[i].base_point] != levels_[i].base_point)
      return false;
  }
  return true;
}

std::vector<Permutation> StabilizerChain::level_generators(std::size_t level) const
{
  std::vector<Permutation> gens;
  for (auto const &s : strong_) {
    if (fixes_base_prefix(s, level))
      gens.push_back(s);
  }
  return gens;
}

void StabilizerChain::add_base_point(Point point)
{
  Level level;
  level.base_point = point;
  levels_.push_back(std::move(level));
}

void StabilizerChain::rebuild_level(std::size_t index)
{
  Level &level = levels_[index];
  auto gens = level_generators(index);

  level.rep_index.assign(degree_, -1);
  level.reps.clear();
  level.orbit.clear();

  level.rep_index[level.base_point] = 0;
  level.reps.push_back(Permutation::identity(degree_));
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point beta = level.orbit[k];
    for (auto const &s : gens) {
      Point image = s[beta];
      if (level.rep_index[image] >= 0)
        continue;
      level.rep_index[image] = static_cast<std::int32_t>(level.reps.size());
      level.reps.push_back(compose(level.reps[level.rep_index[beta]], s));
      level.orbit.push_back(image);
    }
  }
}

std::optional<Permutation> StabilizerChain::transversal(std::size_t level, Point point) const
{
  auto idx = levels_[level].rep_index[point];
  if (idx < 0)
    return std::nullopt;
  return levels_[level].reps[static_cast<std::size_t>(idx)];
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation p, std::size_t from_level) const
{
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    Level const &level = levels_[i];
    auto idx = level.rep_index[p[level.base_point]];
    if (idx < 0)
      return {std::move(p), i};
    p = compose(p, inverse(level.reps[static_cast<std::size_t>(idx)]));
  }
  return {std::move(p), levels_.size()};
}

bool StabilizerChain::contains(Permutation const &p) const
{
  if (p.degree() != degree_)
    return false;
  auto result = sift(p);
  return result.level == levels_.size() && result.residue.is_identity();
}

void StabilizerChain::schreier_sims()
{
  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    auto const level = static_cast<std::size_t>(i);
    bool extended = false;
    auto gens = level_generators(level);
    auto const &lv = levels_[level];

    for (std::size_t k = 0; !extended && k < lv.orbit.size(); ++k) {
      Point beta = lv.orbit[k];
      auto const &u_beta = lv.reps[static_cast<std::size_t>(lv.rep_index[beta])];
      for (auto const &s : gens) {
        Permutation us = compose(u_beta, s);
        auto const &u_image = lv.reps[static_cast<std::size_t>(lv.rep_index[s[beta]])];
        if (us == u_image)
          continue;
        auto [residue, j] = sift(compose(us, inverse(u_image)), level + 1);
        if (j == levels_.size() && residue.is_identity())
          continue;

        if (j == levels_.size())
          add_base_point(static_cast<Point>(residue.first_moved_point()));
        strong_.push_back(std::move(residue));
        for (std::size_t l = level + 1; l <= j; ++l)
          rebuild_level(l);
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended)
      --i;
  }
}

std::uint64_t StabilizerChain::order() const
{
  std::uint64_t order = 1;
  for (auto const &level : levels_) {
    std::uint64_t len = level.orbit.size();
    if (order > std::numeric_limits<std::uint64_t>::max() / len)
      throw std::overflow_error("group order exceeds 2^64");
    order *= len;
  }
  return order;
}

// ---------------------------------------------------------------------------
// Group

namespace
{

StabilizerChain checked_chain(std::size_t degree, std::vector<Permutation> const &generators)
{
  if (generators.empty())
    throw std::invalid_argument("a group needs at least one generator");
  for (auto const &g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator " + format_cycles(g) + " has degree " +
                                  std::to_string(g.degree()) + ", expected " +
                                  std::to_string(degree));
    }
  }
  return StabilizerChain(degree, generators);
}

} // namespace

Group::Group(std::size_t degree, std::vector<Permutation> generators)
  : degree_(degree), generators_(std::move(generators)), chain_(checked_chain(degree_, generators_))
{}

std::uint64_t default_element_cap()
{
  if (char const *env = std::getenv("COMMGRAPH_ELEMENT_CAP")) {
    char *end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return value;
  }
  return kDefaultElementCap;
}

GroupTooLarge::GroupTooLarge(std::uint64_t order, std::uint64_t cap)
  : std::runtime_error("group too large: order " + std::to_string(order) +
                       " exceeds element cap " + std::to_string(cap)),
    order_(order), cap_(cap)
{}

// ---------------------------------------------------------------------------
// ElementTable

std::optional<ElementId> ElementTable::find(Permutation const &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementId ElementTable::id_of(Permutation const &p) const
{
  auto id = find(p);
  if (!id)
    throw std::out_of_range("permutation " + format_cycles(p) + " is not in the group");
  return *id;
}

ElementId ElementTable::multiply(ElementId a, ElementId b) const
{
  return id_of(compose(elements_[a], elements_[b]));
}

ElementId ElementTable::invert(ElementId a) const
{
  return id_of(inverse(elements_[a]));
}

ElementId ElementTable::conjugate(ElementId x, ElementId g) const
{
  return id_of(commgraph::conjugate(elements_[x], elements_[g]));
}

ElementTable enumerate_elements(Group const &g, std::uint64_t cap)
{
  std::uint64_t order = g.order();
  if (order > cap)
    throw GroupTooLarge(order, cap);

  ElementTable t;
  t.degree_ = g.degree();
  t.elements_.reserve(order);
  t.index_.reserve(order);
  t.orders_.reserve(order);

  auto insert = [&t](Permutation p) {
    auto [it, fresh] = t.index_.try_emplace(p, static_cast<ElementId>(t.elements_.size()));
    if (fresh) {
      t.orders_.push_back(static_cast<std::uint32_t>(element_order(p)));
      t.elements_.push_back(std::move(p));
    }
    return fresh;
  };

  insert(Permutation::identity(g.degree()));
  for (std::size_t k = 0; k < t.elements_.size(); ++k) {
    for (auto const &s : g.generators()) {
      insert(compose(t.elements_[k], s));
    }
  }
  if (t.elements_.size() != order) {
    throw std::logic_error("enumeration found " + std::to_string(t.elements_.size()) +
                           " elements but the stabilizer chain gives " + std::to_string(order));
  }
  for (auto const &s : g.generators())
    t.generator_ids_.push_back(t.id_of(s));
  return t;
}

// ---------------------------------------------------------------------------
// Centres, centralizers, classes

std::vector<ElementId> center(Group const &g, ElementTable const &t)
{
  std::vector<ElementId> result;
  for (ElementId x = 0; x < t.size(); ++x) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](Permutation const &s) { return commutes(t[x], s); });
    if (central)
      result.push_back(x);
  }
  return result;
}

std::vector<ElementId> centralizer(Group const &, ElementTable const &t, ElementId x)
{
  std::vector<ElementId> result;
  Permutation const &px = t[x];
  for (ElementId y = 0; y < t.size(); ++y) {
    if (commutes(px, t[y]))
      result.push_back(y);
  }
  return result;
}

ConjugacyClassSet conjugacy_classes(Group const &, ElementTable const &t)
{
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  ConjugacyClassSet set;
  set.class_of_.assign(t.size(), unset);
  set.conjugator_.assign(t.size(), 0);

  auto gens = t.generator_ids();
  for (ElementId x = 0; x < t.size(); ++x) {
    if (set.class_of_[x] != unset)
      continue;
    std::size_t index = set.classes_.size();
    ConjugacyClass cls{x, {x}};
    set.class_of_[x] = index;
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      ElementId cur = cls.members[k];
      for (ElementId s : gens) {
        ElementId image = t.conjugate(cur, s);
        if (set.class_of_[image] != unset)
          continue;
        set.class_of_[image] = index;
        set.conjugator_[image] = t.multiply(set.conjugator_[cur], s);
        cls.members.push_back(image);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    set.classes_.push_back(std::move(cls));
  }
  return set;
}

CentralizerIndex::CentralizerIndex(Group const &g, ElementTable const &t,
                                   ConjugacyClassSet const &classes)
  : table_(&t), classes_(&classes)
{
  rep_centralizers_.reserve(classes.size());
  for (auto const &cls : classes.classes())
    rep_centralizers_.push_back(commgraph::centralizer(g, t, cls.representative));
}

std::vector<ElementId> CentralizerIndex::centralizer(ElementId x) const
{
  auto const &base = rep_centralizers_[classes_->class_of(x)];
  ElementId c = classes_->conjugator(x);
  if (c == 0)
    return base;
  Permutation const &pc = (*table_)[c];
  Permutation const pc_inv = inverse(pc);
  std::vector<ElementId> result;
  result.reserve(base.size());
  for (ElementId y : base)
    result.push_back(table_->id_of(compose(compose(pc_inv, (*table_)[y]), pc)));
  std::sort(result.begin(), result.end());
  return result;
}

std::size_t CentralizerIndex::centralizer_order(ElementId x) const
{
  return rep_centralizers_[classes_->class_of(x)].size();
}

// ---------------------------------------------------------------------------
// Subsets

namespace
{

// Closure of `gens` under right multiplication. Stops early and returns
// nullopt once more than `limit` elements appear or one falls outside
// `allowed` (when given).
std::optional<std::vector<ElementId>> closure(ElementTable const &t, std::span<ElementId const> gens,
                                              std::size_t limit, std::vector<char> const *allowed)
{
  std::vector<char> member(t.size(), 0);
  std::vector<ElementId> elements{0};
  member[0] = 1;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (ElementId s : gens) {
      ElementId y = t.multiply(elements[k], s);
      if (member[y])
        continue;
      if (allowed && !(*allowed)[y])
        return std::nullopt;
      member[y] = 1;
      elements.push_back(y);
      if (elements.size() > limit)
        return std::nullopt;
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

} // namespace

std::optional<std::vector<ElementId>> generate_subgroup(ElementTable const &t,
                                                        std::span<ElementId const> generators,
                                                        std::size_t limit)
{
  return closure(t, generators, limit, nullptr);
}

bool is_subgroup(ElementTable const &t, std::span<ElementId const> s)
{
  std::vector<char> allowed(t.size(), 0);
  allowed[0] = 1;
  std::size_t count = 1;
  for (ElementId x : s) {
    if (!allowed[x]) {
      allowed[x] = 1;
      ++count;
    }
  }
  if (t.size() % count != 0)
    return false;

  // Grow <s> one generator at a time; any element outside s refutes closure.
  std::vector<ElementId> gens;
  std::vector<char> reached(t.size(), 0);
  reached[0] = 1;
  std::size_t reached_count = 1;
  for (ElementId x : s) {
    if (reached[x])
      continue;
    gens.push_back(x);
    auto sub = closure(t, gens, count, &allowed);
    if (!sub)
      return false;
    for (ElementId y : *sub)
      reached[y] = 1;
    reached_count = sub->size();
  }
  return reached_count == count;
}

bool is_normal_subset(Group const &, ElementTable const &t, std::span<ElementId const> s)
{
  std::vector<char> member(t.size(), 0);
  for (ElementId x : s)
    member[x] = 1;
  for (ElementId x : s) {
    for (ElementId g : t.generator_ids()) {
      if (!member[t.conjugate(x, g)])
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// EnumeratedGroup

EnumeratedGroup::EnumeratedGroup(Group group, std::uint64_t cap)
  : group_(std::move(group)),
    table_(enumerate_elements(group_, cap)),
    classes_(conjugacy_classes(group_, table_)),
    centralizers_(group_, table_, classes_),
    centre_(center(group_, table_)),
    central_(table_.size(), 0)
{
  for (ElementId z : centre_)
    central_[z] = 1;
}

} // namespace commgraph
