#include "wedgekit/exactla.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace wedgekit {

Integer mod_floor(const Integer& a, const Integer& n) {
  if (n == 0) return a;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  if (r < 0) r += abs(n);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool divides(const Integer& d, const Integer& n) {
  if (n == 0) return true;
  if (d == 0) return false;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(s.rows(), s.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(s(i, i));
  return d;
}

namespace {

// Transform state: a == u * input * v at all times.
struct SnfState {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t i) {
    for (auto& x : a.row(i)) x = -x;
    for (auto& x : u.row(i)) x = -x;
  }
};

// Smallest nonzero |entry| on row t (cols >= t) and column t (rows >= t).
std::optional<std::pair<std::size_t, std::size_t>> cross_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (a(i, j) == 0) return;
    Integer v = abs(a(i, j));
    if (!best || v < best_abs) {
      best = {i, j};
      best_abs = v;
    }
  };
  for (std::size_t i = t; i < a.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> block_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < k; ++t) {
    auto start = block_pivot(st.a, t);
    if (!start) break;
    st.swap_rows(t, start->first);
    st.swap_cols(t, start->second);
    for (;;) {
      auto p = cross_pivot(st.a, t);
      st.swap_rows(t, p->first);
      st.swap_cols(t, p->second);
      const Integer pivot = st.a(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (st.a(i, t) == 0) continue;
        Integer q = st.a(i, t) / pivot;  // truncating
        if (q != 0) st.add_row(i, t, -q);
        if (st.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (st.a(t, j) == 0) continue;
        Integer q = st.a(t, j) / pivot;
        if (q != 0) st.add_col(j, t, -q);
        if (st.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Every remaining entry must be a multiple of the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols() && !fixed; ++j)
          if (!divides(pivot, st.a(i, j))) {
            st.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (st.a(t, t) < 0) st.negate_row(t);
  }
  return SnfResult{std::move(st.a), std::move(st.u), std::move(st.v)};
}

Integer det(const IntMatrix& m) {
  WEDGEKIT_REQUIRE(m.is_square(), "det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det(const RatMatrix& m) {
  WEDGEKIT_REQUIRE(m.is_square(), "det: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a(r, k) == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      a.swap_rows(k, r);
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      a.add_row_multiple(i, k, -f);
    }
  }
  return result;
}

bool is_unimodular(const IntMatrix& m) {
  Integer d = det(m);
  return d == 1 || d == -1;
}

bool is_skew_symmetric(const RatMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

Rational pfaffian(const RatMatrix& m) {
  WEDGEKIT_REQUIRE(m.is_square(), "pfaffian: matrix is not square");
  WEDGEKIT_REQUIRE(m.rows() % 2 == 0, "pfaffian: odd dimension");
  WEDGEKIT_REQUIRE(is_skew_symmetric(m), "pfaffian: matrix is not skew-symmetric");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational result = 1;
  // Congruence transforms P a P^t with det(P) = 1 leave Pf unchanged; a
  // simultaneous row/column transposition negates it.
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && a(k, piv) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k + 1) {
      a.swap_rows(k + 1, piv);
      a.swap_cols(k + 1, piv);
      result = -result;
    }
    const Rational lead = a(k, k + 1);
    result *= lead;
    for (std::size_t i = k + 2; i < n; ++i) {
      if (a(k, i) != 0) {
        Rational c = -a(k, i) / lead;
        a.add_row_multiple(i, k + 1, c);
        a.add_col_multiple(i, k + 1, c);
      }
      if (a(k + 1, i) != 0) {
        Rational c = a(k + 1, i) / lead;
        a.add_row_multiple(i, k, c);
        a.add_col_multiple(i, k, c);
      }
    }
  }
  return result;
}

RatMatrix standard_symplectic_gram(std::span<const Integer> degrees) {
  const std::size_t r = degrees.size();
  RatMatrix j(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    WEDGEKIT_REQUIRE(degrees[i] > 0, "symplectic gram: degrees must be positive");
    Rational q(Integer(1), degrees[i]);
    q.canonicalize();
    j(2 * i, 2 * i + 1) = q;
    j(2 * i + 1, 2 * i) = -q;
  }
  return j;
}

Integer pfaffian_congruence_check(const IntMatrix& c, std::span<const Integer> degrees) {
  const std::size_t r = degrees.size();
  WEDGEKIT_REQUIRE(r >= 1, "pfaffian_congruence_check: need at least one degree");
  WEDGEKIT_REQUIRE(degrees[0] >= 2, "pfaffian_congruence_check: n_1 must be at least 2");
  for (std::size_t i = 0; i + 1 < r; ++i)
    WEDGEKIT_REQUIRE(divides(degrees[i], degrees[i + 1]),
                     "pfaffian_congruence_check: degrees must form a divisibility chain");
  WEDGEKIT_REQUIRE(c.rows() == 2 * r && c.cols() == 2 * r,
                   "pfaffian_congruence_check: matrix must be 2r x 2r");
  const RatMatrix j = standard_symplectic_gram(degrees);
  const RatMatrix cr = to_rational(c);
  const RatMatrix cjct = cr * j * cr.transpose();
  const RatMatrix diff = cjct - j;
  for (const auto& x : diff.entries())
    WEDGEKIT_REQUIRE(x.get_den() == 1, "pfaffian_congruence_check: C J C^t - J is not integral");
  // Pf(C J C^t) = det(C) Pf(J), so det(C) = Pf(J + N) / Pf(J).
  const Rational quotient = pfaffian(cjct) / pfaffian(j);
  WEDGEKIT_ENSURE(quotient.get_den() == 1, "pfaffian_congruence_check: non-integral Pfaffian quotient");
  return mod_floor(quotient.get_num(), degrees[0]);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace wedgekit
