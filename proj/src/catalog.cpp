#include "commgraph/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "catalog_data.hpp"

namespace commgraph
{

namespace
{

Permutation cycles(std::string_view text, std::size_t degree)
{
  return parse_cycles(text, degree);
}

Permutation from_map(std::size_t degree, auto &&f)
{
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

Permutation cycle_of(std::vector<std::size_t> const &points, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = static_cast<Point>(points[(i + 1) % points.size()]);
  return Permutation(std::move(images));
}

CatalogEntry finish(std::string name, Group group, std::uint64_t expected_order, bool soluble,
                    bool trivial_centre, std::vector<NamedSubgroup> normal = {})
{
  if (group.order() != expected_order) {
    throw CatalogError(name + ": constructed order " + std::to_string(group.order()) +
                       " differs from expected " + std::to_string(expected_order));
  }
  return CatalogEntry{name,          "builtin:" + name, std::move(group), expected_order, soluble,
                      trivial_centre, std::move(normal)};
}

std::uint64_t factorial(unsigned n)
{
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

std::vector<Permutation> alt_generators(unsigned n)
{
  std::vector<Permutation> gens;
  for (unsigned i = 2; i < n; ++i)
    gens.push_back(cycle_of({0, 1, i}, n));
  if (gens.empty())
    gens.push_back(Permutation::identity(n));
  return gens;
}

unsigned primitive_root(unsigned q)
{
  for (unsigned g = 1; g < q; ++g) {
    unsigned x = 1, order = 0;
    do {
      x = x * g % q;
      ++order;
    } while (x != 1);
    if (order == q - 1)
      return g;
  }
  return 1;
}

bool prime_at_most_31(unsigned q)
{
  static constexpr unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  return std::find(std::begin(primes), std::end(primes), q) != std::end(primes);
}

// Projective line over GF(q): points 0..q-1 and infinity = q.
std::vector<Permutation> projective_line_generators(unsigned q, bool full_pgl)
{
  std::size_t const degree = q + 1;
  unsigned const g = primitive_root(q);
  unsigned const scale = full_pgl ? g : g * g % q;
  auto inv = [q](unsigned x) {
    unsigned r = 1;
    for (unsigned e = q - 2; e > 0; --e)
      r = r * x % q;
    return r;
  };
  auto translate = from_map(degree, [q](std::size_t x) { return x == q ? q : (x + 1) % q; });
  auto multiply = from_map(degree, [q, scale](std::size_t x) { return x == q ? q : x * scale % q; });
  auto invert = from_map(degree, [q, &inv](std::size_t x) -> std::size_t {
    // x -> -1/x
    if (x == q)
      return 0;
    if (x == 0)
      return q;
    return (q - inv(static_cast<unsigned>(x))) % q;
  });
  return {translate, multiply, invert};
}

std::vector<Permutation> parse_all(std::vector<std::string> const &texts, std::size_t degree)
{
  std::vector<Permutation> gens;
  for (auto const &t : texts)
    gens.push_back(cycles(t, degree));
  return gens;
}

detail::FixedGroupData const &fixed(std::string_view name)
{
  for (auto const &d : detail::fixed_group_data()) {
    if (d.name == name)
      return d;
  }
  throw CatalogError("no fixed generator data for " + std::string(name));
}

NamedSubgroup fixed_subgroup(std::string_view name)
{
  auto const &d = fixed(name);
  return {d.name, parse_all(d.generators, d.degree)};
}

CatalogEntry make_fixed(std::string const &name, bool soluble, std::vector<NamedSubgroup> normal = {})
{
  auto const &d = fixed(name);
  return finish(name, Group(d.degree, parse_all(d.generators, d.degree)), d.order, soluble, true,
                std::move(normal));
}

CatalogEntry make_frobenius_20()
{
  Group g(5, {cycles("(1,2,3,4,5)", 5), cycles("(2,3,5,4)", 5)});
  NamedSubgroup d10{"dihedral(5)", {cycles("(1,2,3,4,5)", 5), cycles("(2,5)(3,4)", 5)}};
  NamedSubgroup c5{"cyclic(5)", {cycles("(1,2,3,4,5)", 5)}};
  return finish("frobenius_20", std::move(g), 20, true, true, {d10, c5});
}

std::string normalise(std::string_view spec)
{
  std::string s;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return s;
}

} // namespace

CatalogEntry make_sym(unsigned n)
{
  if (n < 1 || n > 9)
    throw CatalogError("sym(n) is supported for 1 <= n <= 9, got " + std::to_string(n));
  std::vector<Permutation> gens;
  if (n == 1) {
    gens.push_back(Permutation::identity(1));
  }
  else {
    gens.push_back(cycle_of({0, 1}, n));
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    gens.push_back(cycle_of(all, n));
  }
  std::vector<NamedSubgroup> normal;
  if (n >= 3)
    normal.push_back({"alt(" + std::to_string(n) + ")", alt_generators(n)});
  return finish("sym(" + std::to_string(n) + ")", Group(n, std::move(gens)), factorial(n), n <= 4,
                n != 2, std::move(normal));
}

CatalogEntry make_alt(unsigned n)
{
  if (n < 1 || n > 9)
    throw CatalogError("alt(n) is supported for 1 <= n <= 9, got " + std::to_string(n));
  std::uint64_t order = n >= 2 ? factorial(n) / 2 : 1;
  return finish("alt(" + std::to_string(n) + ")", Group(n, alt_generators(n)), order, n <= 4, n != 3);
}

CatalogEntry make_dihedral(unsigned n)
{
  if (n < 3 || n > 200)
    throw CatalogError("dihedral(n) is supported for 3 <= n <= 200, got " + std::to_string(n));
  auto rotation = from_map(n, [n](std::size_t x) { return (x + 1) % n; });
  auto reflection = from_map(n, [n](std::size_t x) { return (n - x) % n; });
  NamedSubgroup rotations{"cyclic(" + std::to_string(n) + ")", {rotation}};
  return finish("dihedral(" + std::to_string(n) + ")", Group(n, {rotation, reflection}), 2ull * n, true,
                n % 2 == 1, {rotations});
}

CatalogEntry make_psl2(unsigned q)
{
  if (q == 8 || q == 9) {
    auto name = "psl2(" + std::to_string(q) + ")";
    return make_fixed(name, false);
  }
  if (!prime_at_most_31(q))
    throw CatalogError("psl2(q) is supported for primes q <= 31 and q in {8, 9}, got " + std::to_string(q));
  std::uint64_t qq = q;
  std::uint64_t order = qq * (qq * qq - 1) / (q == 2 ? 1 : 2);
  return finish("psl2(" + std::to_string(q) + ")", Group(q + 1, projective_line_generators(q, false)), order,
                q <= 3, true);
}

CatalogEntry make_pgl2(unsigned q)
{
  if (q == 9)
    return make_fixed("pgl2(9)", false, {fixed_subgroup("psl2(9)")});
  if (!prime_at_most_31(q))
    throw CatalogError("pgl2(q) is supported for primes q <= 31 and q = 9, got " + std::to_string(q));
  std::uint64_t qq = q;
  std::vector<NamedSubgroup> normal;
  if (q > 2)
    normal.push_back({"psl2(" + std::to_string(q) + ")", projective_line_generators(q, false)});
  return finish("pgl2(" + std::to_string(q) + ")", Group(q + 1, projective_line_generators(q, true)),
                qq * (qq * qq - 1), q <= 3, true, std::move(normal));
}

std::vector<std::string> fixed_group_names()
{
  return {"psl2(8)", "psl2(9)", "pgl2(9)", "m10", "psigmal2(9)", "aut(alt(6))", "m11",
          "m12",     "psl3(4)", "pgl3(4)", "sz(8)", "sz(8):3", "frobenius_20"};
}

CatalogEntry resolve_group(std::string_view spec)
{
  std::string s = normalise(spec);
  std::smatch m;
  static std::regex const family(R"(^(sym|alt|dihedral|psl2|pgl2)\((\d{1,4})\)$)");
  if (std::regex_match(s, m, family)) {
    auto n = static_cast<unsigned>(std::stoul(m[2].str()));
    auto const &kind = m[1].str();
    if (kind == "sym")
      return make_sym(n);
    if (kind == "alt")
      return make_alt(n);
    if (kind == "dihedral")
      return make_dihedral(n);
    if (kind == "psl2")
      return make_psl2(n);
    return make_pgl2(n);
  }

  if (s == "frobenius_20")
    return make_frobenius_20();
  if (s == "m10" || s == "psigmal2(9)" || s == "aut(alt(6))")
    return make_fixed(s, false, {fixed_subgroup("psl2(9)")});
  if (s == "m11" || s == "m12" || s == "psl3(4)" || s == "sz(8)")
    return make_fixed(s, false);
  if (s == "pgl3(4)")
    return make_fixed(s, false, {fixed_subgroup("psl3(4)")});
  if (s == "sz(8):3")
    return make_fixed(s, false, {fixed_subgroup("sz(8)")});

  std::filesystem::path path{std::string(spec)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) {
    Group g = load_group_file(path);
    return CatalogEntry{path.filename().string(), "file:" + path.string(), std::move(g), 0, std::nullopt,
                        std::nullopt, {}};
  }

  std::string known;
  for (auto const &n : fixed_group_names())
    known += " " + n;
  throw CatalogError("cannot resolve group '" + std::string(spec) +
                     "': not a catalog name or readable generator file. Families: sym(n), alt(n) for "
                     "n <= 9; dihedral(n); psl2(q), pgl2(q) for primes q <= 31. Fixed:" +
                     known);
}

Group parse_group_text(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::string_view body(line);
    body.remove_prefix(first);
    if (!degree) {
      std::istringstream header{std::string(body)};
      std::string keyword;
      long long n = 0;
      std::string rest;
      if (!(header >> keyword >> n) || keyword != "degree" || n < 1 || n > 65536 || (header >> rest))
        throw CatalogError("line " + std::to_string(line_no) + ": expected 'degree <n>'");
      degree = static_cast<std::size_t>(n);
      continue;
    }
    try {
      gens.push_back(parse_cycles(body, *degree));
    }
    catch (ParseError const &e) {
      throw CatalogError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree)
    throw CatalogError("missing 'degree <n>' line");
  if (gens.empty())
    gens.push_back(Permutation::identity(*degree));
  return Group(*degree, std::move(gens));
}

Group load_group_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw CatalogError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

std::vector<std::string> default_corpus()
{
  return {"sym(3)",   "sym(4)",      "sym(5)",   "sym(6)",   "sym(7)",    "alt(4)",   "alt(5)",
          "alt(6)",   "alt(7)",      "alt(8)",   "dihedral(5)", "dihedral(7)", "frobenius_20",
          "pgl2(5)",  "psl2(7)",     "pgl2(7)",  "psl2(8)",  "psl2(9)",   "pgl2(9)",  "m10",
          "aut(alt(6))", "psl2(11)", "pgl2(11)", "psl2(13)", "psl2(17)",  "m11",      "psl3(4)",
          "pgl3(4)",  "m12",         "sz(8)",    "sz(8):3"};
}

std::vector<std::string> load_corpus_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw CatalogError("cannot open corpus file " + path.string());
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    auto last = line.find_last_not_of(" \t\r");
    specs.push_back(line.substr(first, last - first + 1));
  }
  return specs;
}

std::vector<TableRow> diameter_table_rows()
{
  return {
    {"Alt(5)", "alt(5)", 1},   {"Sym(5)", "sym(5)", 5},          {"Alt(6)", "alt(6)", 6},
    {"Sym(6)", "sym(6)", 4},   {"M10", "m10", 6},                {"PGL2(9)", "pgl2(9)", 5},
    {"Aut(Alt(6))", "aut(alt(6))", 4}, {"Alt(7)", "alt(7)", 5}, {"Sym(7)", "sym(7)", 5},
  };
}

} // namespace commgraph
