#pragma once

// Shared fixtures and reference computations for the test suites. The
// reference routines here are deliberately naive (cofactor expansion,
// exhaustive search) and share no code with the library.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wedgekit/classify.hpp"
#include "wedgekit/exactla.hpp"
#include "wedgekit/exterior.hpp"

namespace wedgekit::testing {

inline FinGenAbGroup grp(std::initializer_list<long> fs) {
  std::vector<Integer> v;
  for (long f : fs) v.emplace_back(f);
  return FinGenAbGroup(std::move(v));
}

inline GroupElement el(const FinGenAbGroup& g, std::initializer_list<long> cs) {
  std::vector<Integer> v;
  for (long c : cs) v.emplace_back(c);
  return g.element(std::move(v));
}

inline IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

template <typename T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix<T> sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) sub(i - 1, k++) = m(i, j);
    const T term = m(0, c) * cofactor_det(sub);
    sum += (c % 2 ? -term : term);
  }
  return sum;
}

// Expansion along the first row: Pf(A) = sum_j (-1)^j a_{1j} Pf(A without 1, j)
// with 1-based j >= 2, normalized so that Pf([[0, a], [-a, 0]]) = a.
inline Rational expansion_pfaffian(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational sum = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RatMatrix sub(n - 2, n - 2);
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = 0; b < keep.size(); ++b) sub(a, b) = m(keep[a], keep[b]);
    const Rational term = m(0, j) * expansion_pfaffian(sub);
    sum += (j % 2 ? term : -term);
  }
  return sum;
}

// gcd of all k x k minors.
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::vector<std::vector<std::size_t>>&)>
      choose = [&](std::size_t start, std::size_t n, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
        if (cur.size() == k) {
          out.push_back(cur);
          return;
        }
        for (std::size_t i = start; i < n; ++i) {
          cur.push_back(i);
          choose(i + 1, n, cur, out);
          cur.pop_back();
        }
      };
  std::vector<std::size_t> cur;
  choose(0, m.rows(), cur, row_sets);
  choose(0, m.cols(), cur, col_sets);
  for (const auto& r : row_sets)
    for (const auto& c : col_sets) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
      g = gcd(g, cofactor_det(sub));
    }
  return g;
}

// Size of the subgroup generated by `gens`, by repeated addition.
inline std::size_t closure_size(const FinGenAbGroup& g, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{g.zero()};
  std::vector<GroupElement> frontier{g.zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        GroupElement y = x + s;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline GroupElement random_element(const FinGenAbGroup& g, std::mt19937_64& rng) {
  std::vector<Integer> c;
  for (const auto& n : g.factors()) {
    const long hi = n == 0 ? 20 : n.get_si() - 1;
    const long lo = n == 0 ? -20 : 0;
    c.emplace_back(std::uniform_int_distribution<long>(lo, hi)(rng));
  }
  return g.element(std::move(c));
}

inline ElementTuple random_tuple(const FinGenAbGroup& g, std::size_t d, std::mt19937_64& rng) {
  ElementTuple t;
  for (std::size_t i = 0; i < d; ++i) t.push_back(random_element(g, rng));
  return t;
}

inline ElementTuple random_generating_tuple(const FinGenAbGroup& g, std::size_t d, std::mt19937_64& rng) {
  for (;;) {
    ElementTuple t = random_tuple(g, d, rng);
    if (is_generating(t, g)) return t;
  }
}

// A random product of elementary matrices and a sign, so always unimodular.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 8) {
  IntMatrix m = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) m(0, 0) = -1;
    return m;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> mult(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    m.add_row_multiple(i, j, Integer(mult(rng)));
  }
  if (rng() % 2)
    for (std::size_t j = 0; j < n; ++j) m(0, j) = -m(0, j);
  return m;
}

// b_i = sum_j n(i, j) a_j
inline ElementTuple transform(const IntMatrix& n, const ElementTuple& a) {
  ElementTuple b;
  for (std::size_t i = 0; i < n.rows(); ++i) {
    GroupElement x = a.front().group().zero();
    for (std::size_t j = 0; j < n.cols(); ++j) x = x + a[j].scaled(n(i, j));
    b.push_back(x);
  }
  return b;
}

}  // namespace wedgekit::testing
