#include <gtest/gtest.h>

#include "flatfiber/tables.hpp"

using namespace flatfiber;

namespace {

const TableFixture& fixture(int table, int it) {
  static std::map<std::pair<int, int>, TableFixture> cache;
  auto key = std::pair{table, it};
  if (!cache.count(key))
    for (auto& f : fixtures(table))
      if (f.it == it) cache[key] = f;
  return cache.at(key);
}

}  // namespace

TEST(Catalog, RoundTripAllBuiltins) {
  for (auto& s : builtin_specs()) {
    GroupSpec t = parse_group_file(serialize_group_file(s));
    EXPECT_EQ(t.name, s.name);
    EXPECT_EQ(t.dim, s.dim);
    ASSERT_EQ(t.gens.size(), s.gens.size());
    for (std::size_t i = 0; i < s.gens.size(); ++i) {
      EXPECT_EQ(t.gens[i].name, s.gens[i].name);
      EXPECT_EQ(t.gens[i].g, s.gens[i].g);
    }
    EXPECT_EQ(t.normal_words, s.normal_words);
  }
}

TEST(Catalog, ParseErrorsCarryPosition) {
  try {
    parse_group_file("dim = 2\ngen: a\n1 0\n0 1\nt: 1/x 0\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 5);
    EXPECT_EQ(e.column, 4);
  }
  EXPECT_THROW(parse_group_file("dim = 2\ngen: a\n1 0\n0 1\nt: 1/0 0\n"), ParseError);
  EXPECT_THROW(parse_group_file("gen: a\n1\n"), ParseError);
  EXPECT_THROW(parse_group_file("dim = 2\ngen: a\n1 0\n0 1\nt: 0 0\nnormal:\nword: b\n"), ParseError);
  EXPECT_THROW(parse_group_file("dim = 2\nfoo\n"), ParseError);
}

TEST(Catalog, ParseWithNormalElements) {
  GroupSpec s = parse_group_file(
      "name = pg-file\ndim = 2  # plane\ngen: t1\n1 0\n0 1\nt: 1 0\ngen: t2\n1 0\n0 1\nt: 0 1\n"
      "gen: g\n1 0\n0 -1\nt: 1/2 0\nnormal:\nword: g^2\nelem:\n1 0\n0 1\nt: 1 0\n");
  EXPECT_EQ(s.name, "pg-file");
  EXPECT_EQ(normal_generators(s).size(), 2u);
  EXPECT_EQ(build(2, s.generators()).order(), 2);
}

TEST(Catalog, Builtins) {
  EXPECT_EQ(builtin("it113").order(), 8);
  EXPECT_EQ(builtin("p2").order(), 2);
  EXPECT_EQ(builtin_names().size(), 27u);
  EXPECT_THROW(builtin("p7"), std::invalid_argument);
  EXPECT_THROW(load_group("/nonexistent/file"), std::ios_base::failure);
}

TEST(Catalog, FixtureCounts) {
  EXPECT_EQ(fixtures(1).size(), 9u);
  std::size_t total = 0;
  for (int t = 2; t <= 18; ++t) {
    auto f = fixtures(t);
    EXPECT_FALSE(f.empty()) << t;
    for (auto& r : f) {
      ASSERT_TRUE(wallpaper_by_name(r.fiber).has_value()) << r.key();
      EXPECT_EQ(wallpaper_by_name(r.fiber)->it, table_fiber_it(t)) << r.key();
    }
    total += f.size();
  }
  EXPECT_GT(total, 200u);
  EXPECT_THROW(fixtures(19), std::invalid_argument);
}

TEST(Catalog, FixtureRows) {
  auto& a = fixture(6, 163);
  EXPECT_EQ(a.group, "D2");
  EXPECT_EQ(a.quotient_fiber, "∗632");
  EXPECT_EQ(a.quotient_base, "I");
  auto& b = fixture(18, 76);
  EXPECT_EQ(b.group, "C4");
  EXPECT_EQ(b.quotient_fiber, "442");
  EXPECT_EQ(b.quotient_base, "O");
  EXPECT_EQ(b.pair, "4-rot., 4-rot.^-1");
}

TEST(Catalog, LabelInvariants) {
  EXPECT_EQ(label_invariant("idt.", 2, false), "idt");
  EXPECT_EQ(label_invariant("h-rot", 2, false), "free");
  EXPECT_EQ(label_invariant("d-ref.′", 2, false), "fix1");
  EXPECT_EQ(label_invariant("4-rot.^-1", 2, false), "fix0");
  EXPECT_EQ(label_invariant("2-rot.", 1, true), "rot2");
  EXPECT_EQ(label_invariant("ref.", 1, true), "fix0");
  EXPECT_THROW(label_invariant("zz", 2, false), std::invalid_argument);
}
