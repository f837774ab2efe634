#ifndef COMMGRAPH_PERM_HPP
#define COMMGRAPH_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace commgraph
{

using Point = std::uint16_t;

/// A bijection of {0, ..., n-1}, stored as its image table.
///
/// Permutations act on the right: compose(p, q) first applies p, then q.
/// Conjugation x^g is therefore g^-1 * x * g (see conjugate()).
class Permutation
{
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;

  /// Smallest point moved, or degree() for the identity.
  std::size_t first_moved_point() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(Permutation const &, Permutation const &);
  friend Permutation inverse(Permutation const &);
};

/// i -> q(p(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);

/// x^g = g^-1 x g.
Permutation conjugate(Permutation const &x, Permutation const &g);
Permutation power(Permutation const &p, std::int64_t k);

/// lcm of the cycle lengths.
std::uint64_t element_order(Permutation const &p);

/// Cycle lengths (fixed points included as 1-cycles), sorted descending.
std::vector<std::size_t> cycle_type(Permutation const &p);

bool commutes(Permutation const &p, Permutation const &q);

class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position)
  {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses 1-based cycle notation such as "(1,2,3)(4,5)"; "()" is the identity.
/// Points may not repeat anywhere in the expression.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// 1-based cycle notation without fixed points; the identity prints as "()".
std::string format_cycles(Permutation const &p);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace commgraph

template<>
struct std::hash<commgraph::Permutation> : commgraph::PermutationHash {};

#endif // COMMGRAPH_PERM_HPP
