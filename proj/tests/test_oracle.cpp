#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "support.hpp"
#include "tspread/borel.hpp"
#include "tspread/errors.hpp"
#include "tspread/guards.hpp"
#include "tspread/oracle.hpp"

using namespace tspread;
using namespace tspread::oracle;
using tspread::testing::M;
using tspread::testing::Ms;

namespace {

std::vector<std::string> component_texts(const std::vector<IrreducibleComponent>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> meet(const std::vector<IrreducibleComponent>& cs) {
  auto acc = cs.front().generators();
  for (std::size_t k = 1; k < cs.size(); ++k) acc = intersect(acc, cs[k].generators());
  return acc;
}

}  // namespace

TEST(IdealArithmetic, Minimize) {
  EXPECT_EQ(minimize(Ms(3, "x1*x2,x1,x2*x3,x1^2")), Ms(3, "x1,x2*x3"));
  EXPECT_EQ(minimize(Ms(3, "x3,x2,x2")), Ms(3, "x2,x3"));
}

TEST(IdealArithmetic, ColonAndIntersect) {
  EXPECT_EQ(colon_ideal(Ms(3, "x1^2,x1*x2"), M(3, "x1")), Ms(3, "x1,x2"));
  EXPECT_EQ(intersect(Ms(2, "x1"), Ms(2, "x2")), Ms(2, "x1*x2"));
  EXPECT_TRUE(ideal_equal(Ms(2, "x1,x1*x2"), Ms(2, "x1")));
  EXPECT_FALSE(ideal_equal(Ms(2, "x1"), Ms(2, "x2")));
  EXPECT_TRUE(ideal_contains(Ms(2, "x1^2"), M(2, "x1^3*x2")));
}

TEST(Decomposition, Examples) {
  EXPECT_EQ(component_texts(irreducible_decomposition(Ms(2, "x1*x2"), 2)), (std::vector<std::string>{"(x1)", "(x2)"}));
  EXPECT_EQ(component_texts(irreducible_decomposition(Ms(2, "x1^2,x1*x2"), 2)),
            (std::vector<std::string>{"(x1)", "(x1^2, x2)"}));
  EXPECT_TRUE(irreducible_decomposition(Ms(2, "1"), 2).empty());
  EXPECT_THROW(irreducible_decomposition(std::vector<Monomial>{}, 2), InvalidInput);
}

TEST(Decomposition, ComponentContainment) {
  IrreducibleComponent big(M(3, "x1*x2"));      // (x1, x2)
  IrreducibleComponent small(M(3, "x1^2*x2"));  // (x1^2, x2)
  EXPECT_TRUE(big.contains(small));
  EXPECT_FALSE(small.contains(big));
  EXPECT_EQ(big.radical(), IndexSet({1, 2}));
}

TEST(DecompositionProperty, IntersectionAndIrredundancy) {
  std::mt19937_64 rng(17);
  for (int c = 0; c < 300; ++c) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<Monomial> gens;
    const std::size_t count = 1 + rng() % 5;
    for (std::size_t g = 0; g < count; ++g) {
      Monomial m(n);
      for (int i = 1; i <= static_cast<int>(n); ++i) m.set_exponent(i, static_cast<Monomial::Exponent>(rng() % 3));
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    auto cs = irreducible_decomposition(gens, n);
    ASSERT_FALSE(cs.empty());
    ASSERT_TRUE(ideal_equal(meet(cs), gens));
    for (std::size_t drop = 0; drop < cs.size() && cs.size() > 1; ++drop) {
      std::vector<IrreducibleComponent> rest;
      for (std::size_t k = 0; k < cs.size(); ++k)
        if (k != drop) rest.push_back(cs[k]);
      EXPECT_FALSE(ideal_equal(meet(rest), gens)) << "component " << cs[drop].to_string() << " is redundant";
    }
  }
}

TEST(Decomposition, Guards) {
  Guards g;
  g.max_decomposition_vars = 3;
  EXPECT_THROW(irreducible_decomposition(Ms(4, "x1*x2*x3*x4"), 4, g), GuardExceeded);
  g = Guards{};
  g.max_components = 2;
  EXPECT_THROW(irreducible_decomposition(Ms(4, "x1*x2,x3*x4"), 4, g), GuardExceeded);
}

TEST(MaximalNonfaces, Examples) {
  EXPECT_EQ(maximal_nonfaces(Ms(3, "x1*x2,x1*x3,x2*x3"), 3), (std::vector<IndexSet>{{1}, {2}, {3}}));
  EXPECT_EQ(maximal_nonfaces(Ms(3, "x1,x2,x3"), 3), (std::vector<IndexSet>{IndexSet{}}));
  EXPECT_THROW(maximal_nonfaces(Ms(3, "x1^2"), 3), InvalidInput);
}

TEST(Guards, EnvironmentOverride) {
  ASSERT_EQ(setenv("TSPREAD_MAX_GENERATORS", "77", 1), 0);
  EXPECT_EQ(Guards::from_env().max_power_generators, 77u);
  ASSERT_EQ(setenv("TSPREAD_MAX_GENERATORS", "zero", 1), 0);
  EXPECT_THROW(Guards::from_env(), InvalidInput);
  ASSERT_EQ(setenv("TSPREAD_MAX_GENERATORS", "0", 1), 0);
  EXPECT_THROW(Guards::from_env(), InvalidInput);
  unsetenv("TSPREAD_MAX_GENERATORS");
  EXPECT_EQ(Guards::from_env().max_power_generators, Guards{}.max_power_generators);
}

TEST(MarkedReducer, ReducesToNormalForm) {
  // Ring with n = 2 and two t-variables: t1*x1 -> t2*x2.
  auto rm = [](std::string x, std::string t) { return ReesMonomial{M(2, x), M(2, t)}; };
  std::vector<ToricBinomial> gb{{rm("x1", "x1"), rm("x2", "x2"), BinomialFamily::X}};
  MarkedReducer red(gb);
  EXPECT_EQ(red.find_reducer(rm("x1^2", "x1*x2")), 0u);
  EXPECT_FALSE(red.find_reducer(rm("x2", "x1")).has_value());
  PresPolynomial p{{rm("x1^2", "x1^2"), 1}};
  auto r = red.reduce(p);
  ASSERT_TRUE(r.conclusive);
  EXPECT_EQ(r.steps, 2u);
  ASSERT_EQ(r.remainder.size(), 1u);
  EXPECT_EQ(r.remainder.begin()->first, rm("x2^2", "x2^2"));

  PresPolynomial zero{{rm("x1", "x1"), 1}, {rm("x2", "x2"), -1}};
  EXPECT_TRUE(red.reduce(zero).remainder.empty());
  EXPECT_FALSE(red.reduce(p, 1).conclusive);
}
