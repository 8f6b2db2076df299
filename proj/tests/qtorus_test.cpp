#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "wedgekit/oracles.hpp"
#include "wedgekit/qtorus.hpp"

using namespace wedgekit;
using namespace wedgekit::testing;

namespace {

QuantumTorusSpec qt(std::initializer_list<long> n, std::initializer_list<long> m) {
  return QuantumTorusSpec(std::vector<Integer>(n.begin(), n.end()), std::vector<Integer>(m.begin(), m.end()));
}

FpMatrix fp(std::uint64_t n, std::initializer_list<std::uint64_t> entries) { return FpMatrix{n, entries}; }

// Rank of a list of vectors over F_p by plain elimination.
std::size_t fp_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t inv = 1;
    for (std::uint64_t e = p - 2, b = rows[rank][c]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(QuantumTorus, Validation) {
  EXPECT_NO_THROW(qt({5}, {2}));
  EXPECT_THROW(qt({5}, {5}), InputError);
  EXPECT_THROW(qt({1}, {1}), InputError);
  EXPECT_THROW(qt({4, 6}, {1, 1}), InputError);
  EXPECT_THROW(qt({5}, {1, 1}), InputError);
  EXPECT_THROW(qt({}, {}), InputError);
  EXPECT_EQ(qt({2, 4}, {1, 3}).base(), grp({2, 4}));
}

TEST(QuantumTorus, Examples) {
  EXPECT_FALSE(k_isomorphic(qt({5}, {2})));
  EXPECT_TRUE(k_isomorphic(qt({5}, {4})));
  EXPECT_FALSE(brauer_equivalent(qt({5}, {4})));
  EXPECT_TRUE(brauer_equivalent(qt({5}, {1})));
  EXPECT_TRUE(k_isomorphic(qt({5, 5}, {2, 3})));
  EXPECT_FALSE(k_isomorphic(qt({5, 5}, {2, 1})));
  EXPECT_TRUE(k_isomorphic(qt({5, 5}, {2, 2})));
  // Only the product modulo n_1 matters.
  EXPECT_TRUE(k_isomorphic(qt({3, 9}, {2, 5})));
}

TEST(QuantumTorus, RankOneIsomorphismSets) {
  auto iso_set = [](long n) {
    std::set<long> s;
    for (long m = 1; m < n; ++m)
      if (std::gcd(m, n) == 1 && k_isomorphic(qt({n}, {m}))) s.insert(m);
    return s;
  };
  EXPECT_EQ(iso_set(5), (std::set<long>{1, 4}));
  EXPECT_EQ(iso_set(7), (std::set<long>{1, 6}));
  EXPECT_EQ(iso_set(6), (std::set<long>{1, 5}));
  EXPECT_EQ(iso_set(8), (std::set<long>{1, 7}));
}

TEST(QuantumTorus, CharacterStructure) {
  const auto spec = qt({2, 4}, {1, 3});
  const FinGenAbGroup h = heisenberg_character_group(spec);
  ASSERT_EQ(h.rank(), 4u);
  EXPECT_EQ(h.factors(), (std::vector<Integer>{2, 2, 4, 4}));
  const auto [v, w] = rep_characters(spec);
  ASSERT_EQ(v.dimension(), 4u);
  ASSERT_EQ(w.dimension(), 4u);
  EXPECT_TRUE(v.is_faithful());
  EXPECT_TRUE(w.is_faithful());
  // V = (c(a_1), c(a_2), -c(chi_1), -c(chi_2)) on the interleaved generators.
  EXPECT_EQ(v.chars[0], h.generator(0));
  EXPECT_EQ(v.chars[1], h.generator(2));
  EXPECT_EQ(v.chars[2], -h.generator(1));
  EXPECT_EQ(v.chars[3], -h.generator(3));
  EXPECT_EQ(w.chars[0], v.chars[0]);
  EXPECT_EQ(w.chars[1], v.chars[1]);
  EXPECT_EQ(w.chars[2], -h.generator(1));
  EXPECT_EQ(w.chars[3], h.generator(3).scaled(-3));
}

TEST(QuantumTorus, WedgeCriterionExamples) {
  EXPECT_FALSE(wedge_criterion(qt({5}, {2})));
  EXPECT_TRUE(wedge_criterion(qt({5}, {4})));
  EXPECT_TRUE(wedge_criterion(qt({6}, {5})));
  EXPECT_TRUE(wedge_criterion(qt({5, 5}, {2, 3})));
}

TEST(QuantumTorus, WedgeCriterionMatchesExhaustively) {
  const auto report = oracle::check_qtorus(3, 12);
  EXPECT_EQ(report.specs, 2631u);
  EXPECT_EQ(report.disagreements, 0u);
}

TEST(QuantumTorus, InverseTwistAndBrauerImplication) {
  for (long n = 2; n <= 15; ++n)
    for (long m1 = 1; m1 < n; ++m1) {
      if (std::gcd(m1, n) != 1) continue;
      for (long m2 = 1; m2 < n; ++m2) {
        if (std::gcd(m2, n) != 1) continue;
        const auto spec = qt({n, n}, {m1, m2});
        long inv1 = 1, inv2 = 1;
        while (inv1 * m1 % n != 1 % n) ++inv1;
        while (inv2 * m2 % n != 1 % n) ++inv2;
        EXPECT_EQ(k_isomorphic(spec), k_isomorphic(qt({n, n}, {inv1, inv2})));
        if (brauer_equivalent(spec)) EXPECT_TRUE(k_isomorphic(spec));
      }
    }
}

TEST(Heisenberg, OrderTwoAtThree) {
  const HeisenbergRep h(grp({2}), 3);
  EXPECT_EQ(h.prime(), 3u);
  EXPECT_EQ(h.root(), 2u);
  EXPECT_EQ(h.translation(1), fp(2, {0, 1, 1, 0}));
  EXPECT_EQ(h.diagonal(1), fp(2, {1, 0, 0, 2}));
  EXPECT_EQ(h.translation(0), fp(2, {1, 0, 0, 1}));
  EXPECT_TRUE(h.commutation_holds());
  EXPECT_TRUE(span_check(h));
}

TEST(Heisenberg, OrderThreeAtSeven) {
  const HeisenbergRep h(grp({3}));
  EXPECT_EQ(h.prime(), 7u);
  EXPECT_EQ(h.root(), 2u);
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) rows.push_back(h.product(a, c).a);
  EXPECT_EQ(rows.size(), 9u);
  EXPECT_EQ(fp_rank(rows, 7), 9u);
  EXPECT_TRUE(span_check(h));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c)
      EXPECT_EQ(h.product(a, c), fp_multiply(h.translation(a), h.diagonal(c), 7));
}

TEST(Heisenberg, SpanAndCommutationOnSmallGroups) {
  const std::vector<std::pair<FinGenAbGroup, std::uint64_t>> cases{
      {grp({2}), 3}, {grp({3}), 7}, {grp({2, 2}), 5}, {grp({4}), 5}, {grp({2, 4}), 13}, {grp({6}), 0}};
  for (const auto& [g, p] : cases) {
    const HeisenbergRep h(g, p);
    EXPECT_TRUE(h.commutation_holds()) << g.to_string();
    EXPECT_TRUE(span_check(h)) << g.to_string();
    // Independent rank count over F_p.
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t a = 0; a < h.order(); ++a)
      for (std::size_t c = 0; c < h.order(); ++c) rows.push_back(h.product(a, c).a);
    EXPECT_EQ(fp_rank(rows, h.prime()), h.order() * h.order()) << g.to_string();
  }
}

TEST(Heisenberg, CommutationByHand) {
  const HeisenbergRep h(grp({5}));
  EXPECT_EQ(h.prime(), 11u);
  const std::uint64_t p = h.prime();
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t c = 0; c < 5; ++c) {
      const FpMatrix lhs = fp_multiply(h.diagonal(c), h.translation(a), p);
      FpMatrix rhs = fp_multiply(h.translation(a), h.diagonal(c), p);
      for (auto& x : rhs.a) x = x * h.character_value(c, a) % p;
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Heisenberg, CommutatorForm) {
  const BilinearForm f = commutator_form(HeisenbergRep(grp({2}), 3));
  const auto& t = f.group();
  EXPECT_EQ(eval_form(f, t.generator(0), t.generator(1)), QmodZ(1, 2));
  for (const auto& b : {grp({3}), grp({5}), grp({2, 2}), grp({2, 4})}) {
    const BilinearForm c = commutator_form(HeisenbergRep(b));
    EXPECT_TRUE(is_symplectic(c)) << b.to_string();
    const SymplecticSpace s(b);
    const auto& h = s.total();
    for (std::size_t i = 0; i < h.rank(); ++i)
      for (std::size_t j = 0; j < h.rank(); ++j)
        EXPECT_EQ(eval_form(c, h.generator(i), h.generator(j)), -eval_form(s.form(), h.generator(i), h.generator(j)));
  }
}

TEST(Heisenberg, DiscreteLog) {
  const HeisenbergRep h(grp({4}), 13);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < 4; ++k) {
    EXPECT_EQ(h.discrete_log(x), k);
    x = x * h.root() % 13;
  }
  EXPECT_THROW(h.discrete_log(2), ConsistencyError);
}

TEST(Heisenberg, Primes) {
  EXPECT_EQ(default_prime(1), 2u);
  EXPECT_EQ(default_prime(2), 3u);
  EXPECT_EQ(default_prime(5), 11u);
  EXPECT_EQ(default_prime(12), 13u);
  EXPECT_TRUE(is_prime(4294967291ull));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
}

TEST(Heisenberg, RejectsInadmissiblePrimes) {
  EXPECT_THROW(HeisenbergRep(grp({5}), 7), InputError);
  EXPECT_THROW(HeisenbergRep(grp({5}), 21), InputError);
  EXPECT_THROW(HeisenbergRep(grp({0})), InputError);
  EXPECT_THROW(HeisenbergRep(grp({4096, 4096})), InputError);
}
