#include <doctest.h>

#include <unordered_set>

#include "commgraph/perm.hpp"

using namespace commgraph;

namespace
{
Permutation P(char const *text, std::size_t n = 5)
{
  return parse_cycles(text, n);
}
} // namespace

TEST_CASE("composition applies the left factor first")
{
  // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
  CHECK(compose(P("(1,2,3)"), P("(1,2)")) == P("(2,3)"));
  CHECK(compose(P("(1,2)"), P("(1,2,3)")) == P("(1,3)"));
  CHECK_THROWS_AS(compose(P("(1,2)"), P("(1,2)", 4)), std::invalid_argument);
}

TEST_CASE("inverse, powers and orders")
{
  auto p = P("(1,2,3)(4,5)");
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK(element_order(p) == 6);
  CHECK(power(p, 6).is_identity());
  CHECK(power(p, -1) == inverse(p));
  CHECK(power(p, 2) == P("(1,3,2)"));
  CHECK(power(p, 3) == P("(4,5)"));
  CHECK(power(p, 0).is_identity());
  CHECK(element_order(Permutation::identity(5)) == 1);
}

TEST_CASE("conjugation relabels cycles")
{
  // x^g = g^-1 x g sends g(i) to g(x(i))
  auto x = P("(1,2,3)");
  auto g = P("(1,4)(2,5)");
  CHECK(conjugate(x, g) == P("(4,5,3)"));
  CHECK(cycle_type(conjugate(x, g)) == cycle_type(x));
}

TEST_CASE("cycle type")
{
  CHECK(cycle_type(P("(1,2,3)(4,5)")) == std::vector<std::size_t>{3, 2});
  CHECK(cycle_type(P("(1,2)")) == std::vector<std::size_t>{2, 1, 1, 1});
  CHECK(cycle_type(Permutation::identity(3)) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("commuting")
{
  CHECK(commutes(P("(1,2)"), P("(3,4)")));
  CHECK(commutes(P("(1,2,3)"), P("(1,3,2)")));
  CHECK_FALSE(commutes(P("(1,2)"), P("(2,3)")));
}

TEST_CASE("parsing and formatting round trip")
{
  CHECK(format_cycles(P("(1,2,3)(4,5)")) == "(1,2,3)(4,5)");
  CHECK(format_cycles(P("(3,1,2)")) == "(1,2,3)");
  CHECK(format_cycles(P("()")) == "()");
  CHECK(format_cycles(P(" ( 1 , 2 ) ( 3 ) ")) == "(1,2)");
  CHECK(P("(1,2)")[0] == 1);
  CHECK(P("(1,2)")[1] == 0);
}

TEST_CASE("malformed cycle notation is rejected")
{
  CHECK_THROWS_AS(P("(1,2)(2,3)"), ParseError);
  CHECK_THROWS_AS(P("(1,6)"), ParseError);
  CHECK_THROWS_AS(P("(0,1)"), ParseError);
  CHECK_THROWS_AS(P("(1,2"), ParseError);
  CHECK_THROWS_AS(P("1,2)"), ParseError);
  CHECK_THROWS_AS(P("(1,,2)"), ParseError);
  CHECK_THROWS_AS(P("(a)"), ParseError);
}

TEST_CASE("image tables are validated")
{
  CHECK_NOTHROW(Permutation(std::vector<Point>{2, 0, 1}));
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), std::invalid_argument);
}

TEST_CASE("hashing distinguishes by image table")
{
  std::unordered_set<Permutation> s{P("(1,2)"), P("(1,2)"), P("(2,1)"), P("(1,3)")};
  CHECK(s.size() == 2);
  CHECK(std::hash<Permutation>{}(P("(1,2)")) == std::hash<Permutation>{}(P("(2,1)")));
}
