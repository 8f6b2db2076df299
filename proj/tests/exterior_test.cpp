#include <gtest/gtest.h>

#include "support.hpp"
#include "wedgekit/oracles.hpp"

using namespace wedgekit;
using namespace wedgekit::testing;

namespace {

WedgeElement scalar_wedge(const FinGenAbGroup& g, long c) {
  return WedgeElement(wedge_power(g, g.rank()), {Integer(c)});
}

}  // namespace

TEST(WedgePower, Structure) {
  const auto p = wedge_power(grp({2, 4}), 2);
  ASSERT_EQ(p.components().size(), 1u);
  EXPECT_EQ(p.components()[0].modulus, 2);
  EXPECT_TRUE(wedge_power(grp({2, 4}), 3).is_zero_group());
  const auto free = wedge_power(grp({0, 0}), 2);
  ASSERT_EQ(free.components().size(), 1u);
  EXPECT_EQ(free.components()[0].modulus, 0);
  const auto mixed = wedge_power(grp({2, 6, 0}), 2);
  ASSERT_EQ(mixed.components().size(), 3u);
  EXPECT_EQ(mixed.components()[0].modulus, 2);
  EXPECT_EQ(mixed.components()[1].modulus, 2);
  EXPECT_EQ(mixed.components()[2].modulus, 6);
  EXPECT_EQ(mixed.components()[2].subset, (std::vector<std::size_t>{1, 2}));
}

TEST(Wedge, Examples) {
  const auto g = grp({2, 4});
  EXPECT_EQ(wedge(g, ElementTuple{el(g, {1, 0}), el(g, {0, 1})}).coords(), (std::vector<Integer>{1}));
  EXPECT_TRUE(wedge(g, ElementTuple{el(g, {1, 1}), el(g, {1, 3})}).is_zero());
  const auto h = grp({3, 9, 0});
  const auto x = el(h, {1, 4, 7});
  EXPECT_TRUE(wedge(h, ElementTuple{x, el(h, {2, 2, 2}), x}).is_zero());
  EXPECT_EQ(wedge(g, ElementTuple{}).coords(), (std::vector<Integer>{1}));
}

TEST(Wedge, MultilinearAndAlternating) {
  std::mt19937_64 rng(201);
  const std::vector<std::pair<FinGenAbGroup, std::size_t>> cases{
      {grp({5, 5}), 2}, {grp({2, 4, 8}), 2}, {grp({3, 9, 0}), 2}, {grp({2, 4, 8}), 3}, {grp({0, 0, 0}), 2}, {grp({6}), 1}};
  for (int t = 0; t < 200; ++t) {
    const auto& [g, d] = cases[t % cases.size()];
    ElementTuple a = random_tuple(g, d, rng);
    const auto y = random_element(g, rng);
    const std::size_t pos = rng() % d;
    ElementTuple ax = a, ay = a;
    ax[pos] = a[pos] + y;
    ay[pos] = y;
    EXPECT_EQ(wedge(g, ax), wedge(g, a) + wedge(g, ay));
    if (d >= 2) {
      ElementTuple sw = a;
      std::swap(sw[0], sw[1]);
      EXPECT_EQ(wedge(g, sw), -wedge(g, a));
      ElementTuple rep = a;
      rep[1] = rep[0];
      EXPECT_TRUE(wedge(g, rep).is_zero());
    }
  }
}

TEST(Wedge, ElementaryOperationsPreserveWedge) {
  std::mt19937_64 rng(202);
  for (const auto& g : {grp({5, 5}), grp({2, 4, 8}), grp({3, 0})}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (int t = 0; t < 20; ++t) {
        const ElementTuple a = random_tuple(g, d, rng);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            const ElementaryOp op{i, j, Integer(static_cast<long>(rng() % 11) - 5)};
            EXPECT_EQ(wedge(g, apply_elem_op(a, op)), wedge(g, a));
          }
      }
    }
  }
}

TEST(ClassOf, Examples) {
  const auto g = grp({5});
  EXPECT_EQ(class_of(scalar_wedge(g, 2)).representative().coords(), (std::vector<Integer>{2}));
  EXPECT_EQ(class_of(scalar_wedge(g, 3)).representative().coords(), (std::vector<Integer>{2}));
  EXPECT_EQ(class_of(scalar_wedge(g, 0)).representative().coords(), (std::vector<Integer>{0}));
  const auto z = grp({0});
  EXPECT_EQ(class_of(scalar_wedge(z, 7)), class_of(scalar_wedge(z, -7)));
  EXPECT_EQ(class_of(scalar_wedge(z, 7)).representative().coords(), (std::vector<Integer>{-7}));
}

TEST(IsGenerator, Examples) {
  EXPECT_TRUE(is_generator(scalar_wedge(grp({5}), 2)));
  EXPECT_FALSE(is_generator(scalar_wedge(grp({4}), 2)));
  EXPECT_TRUE(is_generator(scalar_wedge(grp({0}), 1)));
  EXPECT_TRUE(is_generator(scalar_wedge(grp({0}), -1)));
  EXPECT_FALSE(is_generator(scalar_wedge(grp({0}), 2)));
  EXPECT_TRUE(is_generator(WedgeElement(wedge_power(grp({2}), 2), {})));
}

TEST(ElemOp, Examples) {
  const auto g = grp({5, 5});
  const ElementTuple basis{el(g, {1, 0}), el(g, {0, 1})};
  EXPECT_EQ(apply_elem_op(basis, {0, 1, 0}), basis);
  EXPECT_EQ(apply_elem_op(basis, {0, 1, 1}), (ElementTuple{el(g, {1, 1}), el(g, {0, 1})}));
  EXPECT_THROW(apply_elem_op(basis, {0, 0, 1}), InputError);
  EXPECT_THROW(apply_elem_op(basis, {0, 2, 1}), InputError);
}

TEST(Synthesize, Examples) {
  const auto g = grp({5, 5});
  const ElementTuple a{el(g, {1, 0}), el(g, {0, 1})};
  EXPECT_TRUE(synthesize_elem_ops(a, a).empty());
  const ElementTuple b{el(g, {1, 1}), el(g, {0, 1})};
  EXPECT_EQ(replay(a, synthesize_elem_ops(a, b)), b);
  const auto c = grp({5});
  EXPECT_THROW(synthesize_elem_ops(ElementTuple{el(c, {1})}, ElementTuple{el(c, {2})}), InputError);
  EXPECT_THROW(synthesize_elem_ops(a, ElementTuple{el(g, {1, 0}), el(g, {1, 0})}), InputError);
}

TEST(Synthesize, RandomPairsReplay) {
  std::mt19937_64 rng(203);
  const std::vector<std::pair<FinGenAbGroup, std::size_t>> cases{
      {grp({5, 5}), 2}, {grp({2, 4}), 3}, {grp({3, 9}), 2}, {grp({2, 2, 4}), 3}, {grp({4, 12}), 4},
      {grp({3, 0}), 2}, {grp({0, 0}), 3}, {grp({7}), 2}};
  for (int t = 0; t < 160; ++t) {
    const auto& [g, d] = cases[t % cases.size()];
    const ElementTuple a = random_generating_tuple(g, d, rng);
    // A target with the same wedge: a random unimodular image with det 1.
    IntMatrix n = random_unimodular(d, rng);
    if (det(n) == -1)
      for (std::size_t j = 0; j < d; ++j) n(0, j) = -n(0, j);
    const ElementTuple b = transform(n, a);
    ASSERT_EQ(wedge(g, a), wedge(g, b));
    const auto ops = synthesize_elem_ops(a, b);
    EXPECT_EQ(replay(a, ops), b) << g.to_string() << " d=" << d;
  }
}

TEST(GlzWitness, Examples) {
  const auto g = grp({5, 5});
  const ElementTuple a{el(g, {1, 0}), el(g, {0, 1})};
  EXPECT_EQ(glz_witness(a, a), IntMatrix::identity(2));
  const ElementTuple b{el(g, {0, 1}), el(g, {1, 0})};
  const IntMatrix n = glz_witness(a, b);
  EXPECT_EQ(n, imat({{0, 1}, {1, 0}}));
  EXPECT_EQ(transform(n, a), b);
  EXPECT_THROW(glz_witness(a, ElementTuple{el(g, {2, 0}), el(g, {0, 1})}), InputError);
}

TEST(GlzWitness, RandomUnimodularImages) {
  std::mt19937_64 rng(204);
  const std::vector<std::pair<FinGenAbGroup, std::size_t>> cases{
      {grp({5, 5}), 2}, {grp({7}), 1}, {grp({2, 4}), 3}, {grp({3, 0}), 2}, {grp({6, 6, 6}), 3}};
  for (int t = 0; t < 100; ++t) {
    const auto& [g, d] = cases[t % cases.size()];
    const ElementTuple a = random_generating_tuple(g, d, rng);
    const IntMatrix m = random_unimodular(d, rng);
    const ElementTuple b = transform(m, a);
    // The wedge changes by det(m) = +-1.
    EXPECT_EQ(wedge(g, b), wedge(g, a).scaled(det(m)));
    const IntMatrix n = glz_witness(a, b);
    EXPECT_TRUE(is_unimodular(n));
    EXPECT_EQ(transform(n, a), b);
  }
}

TEST(PushForward, MatchesScalarOnTopDegree) {
  const auto g = grp({5, 5});
  const WedgeElement w = wedge(g, ElementTuple{el(g, {1, 0}), el(g, {0, 1})});
  const IntMatrix m = imat({{2, 0}, {0, 1}});
  EXPECT_EQ(push_forward(w, m).coords(), (std::vector<Integer>{2}));
}

TEST(ElemOpOrbits, MatchWedgeFibers) {
  for (const auto& g : {grp({2, 2}), grp({3, 3}), grp({2, 4})})
    for (std::size_t d : {2u, 3u}) {
      const auto rep = oracle::check_elem_op_orbits(g, d, 50);
      EXPECT_EQ(rep.mismatches, 0u) << g.to_string() << " d=" << d;
      EXPECT_EQ(rep.orbits, rep.fibers);
      EXPECT_EQ(rep.replay_failures, 0u);
    }
}

TEST(ElemOpOrbits, FrozenCounts) {
  // Generating pairs of (3,3): |GL_2(F_3)| = 48, split by det into two fibers.
  const auto rep = oracle::check_elem_op_orbits(grp({3, 3}), 2, 0);
  EXPECT_EQ(rep.tuples, 48u);
  EXPECT_EQ(rep.orbits, 2u);
  // (2,4) with d = 2: every generating pair has wedge 1.
  const auto rep2 = oracle::check_elem_op_orbits(grp({2, 4}), 2, 0);
  EXPECT_EQ(rep2.tuples, 24u);
  EXPECT_EQ(rep2.orbits, 1u);
}
