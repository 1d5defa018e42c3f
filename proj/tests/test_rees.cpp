#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "tspread/borel.hpp"
#include "tspread/errors.hpp"
#include "tspread/rees.hpp"
#include "tspread/reproduce.hpp"
#include "tspread/sortnet.hpp"

using namespace tspread;
using tspread::testing::M;
using tspread::testing::Ms;

namespace {

const ToricBinomial* find_lhs(const std::vector<ToricBinomial>& gb, const ReesMonomial& lhs) {
  for (const auto& b : gb)
    if (b.lhs == lhs) return &b;
  return nullptr;
}

/// All non-decreasing N-tuples of t-indices in 1..m.
std::vector<std::vector<int>> multisets(int m, std::size_t N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (cur.size() == N) {
      out.push_back(cur);
      return;
    }
    for (int k = from; k <= m; ++k) {
      cur.push_back(k);
      self(self, k);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

ReesMonomial t_monomial(const ReesPresentation& pres, const std::vector<int>& idx) {
  std::vector<Monomial> vs;
  for (int k : idx) vs.push_back(pres.generator(k));
  return pres.t_product(vs);
}

}  // namespace

TEST(ReesPresentation, IndexingAndFormat) {
  ReesPresentation pres(example_instance());
  EXPECT_EQ(pres.m(), 13u);
  EXPECT_EQ(pres.t_index(M(9, "x1*x3*x5")), 1);
  EXPECT_EQ(pres.t_index(M(9, "x2*x4*x9")), 13);
  EXPECT_FALSE(pres.t_index(M(9, "x2*x3*x9")).has_value());
  auto m = product(pres.x_var(1), pres.t_var(M(9, "x2*x4*x9")));
  EXPECT_EQ(pres.format(m), "x1*t[x2*x4*x9]");
  EXPECT_EQ(pres.parse("x1*t[x2*x4*x9]"), m);
  EXPECT_EQ(pres.format(pres.one()), "1");
  EXPECT_EQ(pres.parse("1"), pres.one());
  EXPECT_THROW(pres.parse("t[x2*x3*x9]"), InvalidInput);
  auto img = pres.image(m);
  EXPECT_EQ(img.x, M(9, "x1*x2*x4*x9"));
  EXPECT_EQ(img.t_power, 1u);
}

TEST(SortingRelations, ExamplePair) {
  ReesPresentation pres(example_instance());
  auto rel = sorting_relations(pres);
  auto* b = find_lhs(rel, pres.t_product(Ms(9, "x2*x4*x6,x1*x3*x9")));
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->rhs, pres.t_product(Ms(9, "x1*x3*x6,x2*x4*x9")));
  EXPECT_EQ(b->family, BinomialFamily::Sorting);
  EXPECT_EQ(find_lhs(rel, pres.t_product(Ms(9, "x1*x3*x6,x2*x4*x9"))), nullptr);
}

TEST(SortingRelations, OnePerUnsortedPair) {
  ReesPresentation pres(example_instance());
  std::size_t unsorted = 0;
  const auto& g = pres.gens();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) unsorted += !is_sorted_pair(g[a], g[b]) && !is_sorted_pair(g[b], g[a]);
  EXPECT_EQ(sorting_relations(pres).size(), unsorted);
}

TEST(SortingRelations, NoneInDegreeOne) { EXPECT_TRUE(sorting_relations(ReesPresentation(BorelInstance(5, 2, {5}))).empty()); }

TEST(XRelations, Examples) {
  ReesPresentation pres(example_instance());
  auto rel = x_relations(pres);
  auto* b = find_lhs(rel, product(pres.x_var(1), pres.t_var(M(9, "x2*x4*x9"))));
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->rhs, product(pres.x_var(2), pres.t_var(M(9, "x1*x4*x9"))));
  EXPECT_EQ(b->family, BinomialFamily::X);
  // The lex-largest generator admits no exchange.
  EXPECT_EQ(find_lhs(rel, product(pres.x_var(1), pres.t_var(M(9, "x1*x3*x5")))), nullptr);
}

TEST(XRelations, JIsLargest) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& inst : all_instances(n)) {
      ReesPresentation pres(inst);
      const auto rel = x_relations(pres);
      std::set<Monomial> g(pres.gens().begin(), pres.gens().end());
      std::size_t expected = 0;
      for (const auto& v : pres.gens())
        for (int i = 1; i <= n; ++i) {
          int best = 0;
          for (int j = i + 1; j <= n; ++j) {
            if (v.exponent(j) == 0 || v.exponent(i) > 0) continue;
            Monomial w = v;
            w.set_exponent(i, 1);
            w.set_exponent(j, 0);
            if (g.count(w)) best = j;
          }
          if (best == 0) continue;
          ++expected;
          Monomial w = v;
          w.set_exponent(i, 1);
          w.set_exponent(best, 0);
          auto* b = find_lhs(rel, product(pres.x_var(i), pres.t_var(v)));
          ASSERT_NE(b, nullptr) << inst.to_string();
          ASSERT_EQ(b->rhs, product(pres.x_var(best), pres.t_var(w))) << inst.to_string();
        }
      ASSERT_EQ(rel.size(), expected) << inst.to_string();
    }
}

TEST(XRelations, DegreeOne) {
  ReesPresentation pres(BorelInstance(4, 2, {4}));
  auto gb = reduced_gb(pres);
  EXPECT_EQ(gb.size(), 6u);
  for (const auto& b : gb) EXPECT_EQ(b.family, BinomialFamily::X);
  auto* b = find_lhs(gb, product(pres.x_var(1), pres.t_var(M(4, "x3"))));
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->rhs, product(pres.x_var(3), pres.t_var(M(4, "x1"))));
}

TEST(VerifyKernel, Examples) {
  ReesPresentation pres(BorelInstance(10, 2, {6, 8, 10}));
  ToricBinomial f{pres.t_product(Ms(10, "x1*x3*x8,x1*x7*x9,x2*x4*x6")), pres.t_product(Ms(10, "x1*x3*x9,x1*x6*x8,x2*x4*x7")),
                  BinomialFamily::Other};
  EXPECT_TRUE(verify_kernel(f, pres));
  auto same = product(pres.x_var(1), pres.t_var(M(10, "x2*x4*x6")));
  EXPECT_FALSE(verify_kernel({same, same, BinomialFamily::Other}, pres));
  EXPECT_FALSE(verify_kernel({pres.t_var(M(10, "x2*x4*x6")), pres.t_var(M(10, "x1*x4*x6")), BinomialFamily::Other}, pres));
}

TEST(ReducedGb, WorkedExample) {
  ReesPresentation pres(example_instance());
  auto gb = reduced_gb(pres);
  EXPECT_EQ(gb.size(), 48u);
  for (const auto& b : gb) EXPECT_TRUE(verify_kernel(b, pres)) << pres.format(b.lhs);
  EXPECT_TRUE(x_condition_check(gb));
  EXPECT_TRUE(reducedness_check(gb).ok());
  auto bb = buchberger_verify(gb);
  EXPECT_EQ(bb.status, BuchbergerResult::Status::Verified);
  EXPECT_GT(bb.pairs_checked, 0u);
}

TEST(ReducedGb, SmallCase) {
  ReesPresentation pres(BorelInstance(3, 1, {2, 3}));
  EXPECT_EQ(pres.m(), 3u);
  auto gb = reduced_gb(pres);
  EXPECT_EQ(buchberger_verify(gb).status, BuchbergerResult::Status::Verified);
}

TEST(ReducedGb, MutationIsCaught) {
  ReesPresentation pres(example_instance());
  auto gb = reduced_gb(pres);
  auto it = std::find_if(gb.begin(), gb.end(), [](const ToricBinomial& b) { return b.family == BinomialFamily::Sorting; });
  ASSERT_NE(it, gb.end());
  gb.erase(it);
  auto bb = buchberger_verify(gb);
  EXPECT_EQ(bb.status, BuchbergerResult::Status::Failed);
  ASSERT_TRUE(bb.pair.has_value());
  EXPECT_FALSE(bb.remainder.empty());
}

TEST(ReducedGb, XConditionFamilies) {
  ReesPresentation pres(example_instance());
  for (const auto& b : reduced_gb(pres)) {
    EXPECT_EQ(b.lhs.x_degree(), b.family == BinomialFamily::X ? 1u : 0u);
    EXPECT_LE(b.lhs.t_degree(), 2u);
  }
  ToricBinomial heavy{product(pres.x_var(1), product(pres.x_var(2), pres.t_var(M(9, "x2*x4*x9")))),
                      product(pres.x_var(1), product(pres.x_var(2), pres.t_var(M(9, "x2*x4*x9")))), BinomialFamily::Other};
  EXPECT_FALSE(x_condition_check(std::vector<ToricBinomial>{heavy}));
}

TEST(ReducedGbProperty, AllSmallInstancesVerify) {
  std::size_t tested = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& inst : all_instances(n)) {
      ReesPresentation pres(inst);
      if (pres.m() > 30) continue;
      auto gb = reduced_gb(pres);
      if (gb.empty()) continue;
      ++tested;
      for (const auto& b : gb) ASSERT_TRUE(verify_kernel(b, pres));
      ASSERT_TRUE(x_condition_check(gb));
      ASSERT_TRUE(reducedness_check(gb).ok()) << inst.to_string();
      ASSERT_EQ(buchberger_verify(gb).status, BuchbergerResult::Status::Verified) << inst.to_string();
    }
  EXPECT_GT(tested, 500u);
}

TEST(StandardMonomials, AreSortedTuplesAndInjectUnderPhi) {
  for (const auto& inst : {example_instance(), BorelInstance(6, 1, {2, 4, 6}), BorelInstance(7, 3, {3, 7})}) {
    ReesPresentation pres(inst);
    auto sorting = sorting_relations(pres);
    for (std::size_t N : {2u, 3u}) {
      std::vector<std::vector<int>> brute;
      for (const auto& idx : multisets(static_cast<int>(pres.m()), N)) {
        auto mono = t_monomial(pres, idx);
        bool reducible = std::any_of(sorting.begin(), sorting.end(), [&](const ToricBinomial& b) { return divides(b.lhs, mono); });
        if (!reducible) brute.push_back(idx);
      }
      auto standard = standard_t_monomials(pres, N);
      std::sort(standard.begin(), standard.end());
      ASSERT_EQ(standard, brute) << inst.to_string() << " N=" << N;
      std::set<Monomial> images;
      for (const auto& idx : standard) {
        std::vector<Monomial> vs;
        for (int k : idx) vs.push_back(pres.generator(k));
        EXPECT_TRUE(is_sorted_tuple(vs));
        images.insert(pres.image(t_monomial(pres, idx)).x);
      }
      EXPECT_EQ(images.size(), standard.size());
    }
  }
}

TEST(EllExchange, Examples) {
  EXPECT_TRUE(ell_exchange_check(ReesPresentation(BorelInstance(4, 1, {2, 4})), 2).ok);
  auto res = ell_exchange_check(ReesPresentation(example_instance()), 2);
  EXPECT_TRUE(res.ok);
  EXPECT_GT(res.pairs_checked, 0u);
  EXPECT_TRUE(ell_exchange_check(ReesPresentation(BorelInstance(4, 2, {2, 4})), 1).ok);
}

TEST(LexWitness, DefaultCubic) {
  ReesPresentation pres(BorelInstance(10, 2, {6, 8, 10}));
  auto cubic = Ms(10, "x1*x3*x8,x1*x7*x9,x2*x4*x6");
  EXPECT_FALSE(is_sorted_tuple(cubic));
  auto report = lex_quadratic_witness(pres, pres.t_product(cubic));
  EXPECT_FALSE(report.divisor_found());
  EXPECT_GT(report.quadratic_initials, 0u);
  // Under the sorting markings the same cubic is reducible.
  auto sorting = sorting_relations(pres);
  auto t = pres.t_product(cubic);
  EXPECT_TRUE(std::any_of(sorting.begin(), sorting.end(), [&](const ToricBinomial& b) { return divides(b.lhs, t); }));
}

TEST(LexWitness, InitialsAreLexLarger) {
  ReesPresentation pres(BorelInstance(6, 2, {3, 6}));
  auto g = pres.gens();
  auto cubic = pres.t_product(std::vector<Monomial>{g[0], g[1], g[2]});
  auto report = lex_quadratic_witness(pres, cubic);
  for (const auto& d : report.dividing_initials) {
    EXPECT_EQ(d.t_degree(), 2u);
    EXPECT_TRUE(divides(d, cubic));
  }
  EXPECT_THROW(lex_quadratic_witness(pres, product(pres.x_var(1), cubic)), InvalidInput);
}

TEST(LexWitness, DegreeOneHasNoQuadratics) {
  ReesPresentation pres(BorelInstance(5, 1, {5}));
  auto report = lex_quadratic_witness(pres, pres.t_product(Ms(5, "x1,x2,x3")));
  EXPECT_EQ(report.quadratic_binomials, 0u);
  EXPECT_FALSE(report.divisor_found());
}

TEST(FiberDimension, Examples) {
  EXPECT_EQ(fiber_dimension(BorelInstance(8, 2, {3, 5, 8})), 8);
  EXPECT_EQ(fiber_dimension(BorelInstance(4, 2, {2, 4})), 3);
  EXPECT_EQ(fiber_dimension(BorelInstance(6, 1, {6})), 6);
  for (int n = 1; n <= 8; ++n)
    for (const auto& inst : all_instances(n)) EXPECT_LE(fiber_dimension(inst), n);
}

TEST(IntegerMatrixRank, Basics) {
  EXPECT_EQ(integer_matrix_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(integer_matrix_rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}}), 3);
  EXPECT_EQ(integer_matrix_rank({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}}), 2);
  EXPECT_EQ(integer_matrix_rank({}), 0);
}
