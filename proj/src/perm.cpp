#include "commgraph/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace commgraph
{

namespace
{

void require_same_degree(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
  }
}

} // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point image : images_) {
    if (image >= images_.size() || seen[image])
      throw std::invalid_argument("image table is not a bijection");
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  if (degree > std::size_t{1} << 16)
    throw std::invalid_argument("degree exceeds 65536");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const
{
  return first_moved_point() == degree();
}

std::size_t Permutation::first_moved_point() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return i;
  }
  return images_.size();
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  require_same_degree(p, q);
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q.images_[p.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(Permutation const &p)
{
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(Permutation const &x, Permutation const &g)
{
  return compose(compose(inverse(g), x), g);
}

Permutation power(Permutation const &p, std::int64_t k)
{
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::vector<std::size_t> cycle_type(Permutation const &p)
{
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::uint64_t element_order(Permutation const &p)
{
  std::uint64_t order = 1;
  for (std::size_t len : cycle_type(p))
    order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

bool commutes(Permutation const &p, Permutation const &q)
{
  require_same_degree(p, q);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (q[p[i]] != p[q[i]])
      return false;
  }
  return true;
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto read_point = [&]() -> Point {
    skip_space();
    std::size_t start = pos;
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (value > degree + 1)
        value = degree + 1;
      ++pos;
    }
    if (pos == start)
      throw ParseError("expected a point label", start);
    if (value < 1 || value > degree) {
      throw ParseError("point " + std::string(text.substr(start, pos - start)) +
                         " out of range 1.." + std::to_string(degree),
                       start);
    }
    if (used[value - 1])
      throw ParseError("point " + std::to_string(value) + " repeated", start);
    used[value - 1] = true;
    return static_cast<Point>(value - 1);
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '('", pos);
    ++pos;
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_space();
      continue;
    }
    std::vector<Point> cycle{read_point()};
    for (;;) {
      skip_space();
      if (pos >= text.size())
        throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != ',')
        throw ParseError("expected ',' or ')'", pos);
      ++pos;
      cycle.push_back(read_point());
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

std::string format_cycles(Permutation const &p)
{
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    out << '(' << i + 1;
    seen[i] = true;
    for (std::size_t j = p[i]; j != i; j = p[j]) {
      out << ',' << j + 1;
      seen[j] = true;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  // FNV-1a over the image table
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

} // namespace commgraph
