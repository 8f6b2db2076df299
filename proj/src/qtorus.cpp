#include "wedgekit/qtorus.hpp"

#include <limits>

namespace wedgekit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 to_u64(const Integer& x, const char* what) {
  WEDGEKIT_REQUIRE(x >= 0 && x.fits_ulong_p(), std::string(what) + " does not fit in 64 bits");
  return x.get_ui();
}

// Multiplicative order of x in F_p^x.
u64 order_of(u64 x, u64 p) {
  u64 k = 1;
  u64 y = x % p;
  while (y != 1) {
    y = mulmod(y, x, p);
    ++k;
  }
  return k;
}

// Inverse of an invertible matrix over F_p via Gauss-Jordan.
FpMatrix invert(const FpMatrix& m, u64 p) {
  const std::size_t n = m.n;
  std::vector<u64> a = m.a;
  FpMatrix inv{n, std::vector<u64>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) inv.a[i * n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r * n + c] == 0) ++r;
    WEDGEKIT_ENSURE(r < n, "singular matrix in the Heisenberg representation");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[c * n + j], a[r * n + j]);
      std::swap(inv.a[c * n + j], inv.a[r * n + j]);
    }
    const u64 s = powmod(a[c * n + c], p - 2, p);
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] = mulmod(a[c * n + j], s, p);
      inv.a[c * n + j] = mulmod(inv.a[c * n + j], s, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * n + c] == 0) continue;
      const u64 f = a[i * n + c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] + p - mulmod(f, a[c * n + j], p)) % p;
        inv.a[i * n + j] = (inv.a[i * n + j] + p - mulmod(f, inv.a[c * n + j], p)) % p;
      }
    }
  }
  return inv;
}

std::size_t index_of(const std::vector<GroupElement>& elems, const GroupElement& x) {
  // elements() is in mixed-radix order, so the index is the radix value.
  const auto& g = x.group();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) idx = idx * g.factor(i).get_ui() + x.coord(i).get_ui();
  WEDGEKIT_ENSURE(idx < elems.size() && elems[idx] == x, "element indexing mismatch");
  return idx;
}

}  // namespace

QuantumTorusSpec::QuantumTorusSpec(std::vector<Integer> degrees, std::vector<Integer> exponents)
    : degrees_(std::move(degrees)), exponents_(std::move(exponents)) {
  WEDGEKIT_REQUIRE(!degrees_.empty(), "quantum torus needs at least one degree");
  WEDGEKIT_REQUIRE(degrees_.size() == exponents_.size(), "degrees and exponents differ in length");
  WEDGEKIT_REQUIRE(degrees_.front() >= 2, "n_1 must be at least 2");
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i + 1 < degrees_.size())
      WEDGEKIT_REQUIRE(divides(degrees_[i], degrees_[i + 1]), "degrees must form a divisibility chain");
    WEDGEKIT_REQUIRE(gcd(exponents_[i], degrees_[i]) == 1,
                     "exponent m_" + std::to_string(i + 1) + " = " + exponents_[i].get_str() + " is not coprime to n_" +
                         std::to_string(i + 1) + " = " + degrees_[i].get_str());
  }
}

bool k_isomorphic(const QuantumTorusSpec& spec) {
  const Integer& n1 = spec.degrees().front();
  Integer prod = 1;
  for (const auto& m : spec.exponents()) prod = mod_floor(prod * m, n1);
  return prod == 1 || prod == n1 - 1;
}

bool brauer_equivalent(const QuantumTorusSpec& spec) {
  for (std::size_t i = 0; i < spec.rank(); ++i)
    if (mod_floor(spec.exponents()[i], spec.degrees()[i]) != mod_floor(1, spec.degrees()[i])) return false;
  return true;
}

FinGenAbGroup heisenberg_character_group(const QuantumTorusSpec& spec) {
  return SymplecticSpace(spec.base()).total();
}

std::pair<RepSpec, RepSpec> rep_characters(const QuantumTorusSpec& spec) {
  const FinGenAbGroup h = heisenberg_character_group(spec);
  const std::size_t r = spec.rank();
  CharTuple v, w;
  for (std::size_t i = 0; i < r; ++i) {
    v.push_back(h.generator(2 * i));
    w.push_back(h.generator(2 * i));
  }
  for (std::size_t i = 0; i < r; ++i) {
    v.push_back(-h.generator(2 * i + 1));
    w.push_back(h.generator(2 * i + 1).scaled(-spec.exponents()[i]));
  }
  return {RepSpec(h, std::move(v)), RepSpec(h, std::move(w))};
}

bool wedge_criterion(const QuantumTorusSpec& spec) {
  const auto [v, w] = rep_characters(spec);
  return birationally_equivalent(v, w);
}

FpMatrix fp_multiply(const FpMatrix& x, const FpMatrix& y, std::uint64_t p) {
  WEDGEKIT_REQUIRE(x.n == y.n, "F_p matrix product: dimension mismatch");
  const std::size_t n = x.n;
  FpMatrix z{n, std::vector<u64>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const u64 a = x.a[i * n + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) z.a[i * n + j] = (z.a[i * n + j] + mulmod(a, y.a[k * n + j], p)) % p;
    }
  return z;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t default_prime(std::uint64_t m) {
  WEDGEKIT_REQUIRE(m >= 1, "modulus must be positive");
  for (u64 p = m + 1;; p += m) {
    WEDGEKIT_REQUIRE(p < (u64{1} << 32), "no admissible prime below 2^32");
    if (is_prime(p)) return p;
  }
}

HeisenbergRep::HeisenbergRep(FinGenAbGroup base, std::uint64_t p) : base_(std::move(base)) {
  WEDGEKIT_REQUIRE(base_.is_finite(), "Heisenberg representation needs a finite group");
  const Integer order = base_.order();
  WEDGEKIT_REQUIRE(order <= 4096, "group order " + order.get_str() + " is too large for a dense representation");
  exponent_ = to_u64(base_.exponent(), "group exponent");
  p_ = p == 0 ? default_prime(exponent_) : p;
  WEDGEKIT_REQUIRE(is_prime(p_), std::to_string(p_) + " is not prime");
  WEDGEKIT_REQUIRE(p_ < (u64{1} << 32), "prime must be below 2^32");
  WEDGEKIT_REQUIRE((p_ - 1) % exponent_ == 0,
                   "prime " + std::to_string(p_) + " is not 1 mod the exponent " + std::to_string(exponent_));
  root_ = 1;
  if (exponent_ > 1) {
    for (u64 x = 2; x < p_; ++x)
      if (powmod(x, exponent_, p_) == 1 && order_of(x, p_) == exponent_) {
        root_ = x;
        break;
      }
  }
  powers_.resize(exponent_);
  powers_[0] = 1;
  for (u64 k = 1; k < exponent_; ++k) powers_[k] = mulmod(powers_[k - 1], root_, p_);

  elements_ = base_.elements();
  const std::size_t n = elements_.size();
  for (std::size_t ai = 0; ai < n; ++ai) {
    FpMatrix t{n, std::vector<u64>(n * n, 0)};
    for (std::size_t bi = 0; bi < n; ++bi) t.a[index_of(elements_, elements_[ai] + elements_[bi]) * n + bi] = 1;
    translations_.push_back(std::move(t));
  }
  for (std::size_t ci = 0; ci < n; ++ci) {
    FpMatrix d{n, std::vector<u64>(n * n, 0)};
    for (std::size_t bi = 0; bi < n; ++bi) d.a[bi * n + bi] = character_value(ci, bi);
    diagonals_.push_back(std::move(d));
  }
}

std::uint64_t HeisenbergRep::character_value(std::size_t chi, std::size_t a) const {
  // chi(a) = root^(exp * sum c_i a_i / n_i).
  const QmodZ v = pair(elements_[chi], elements_[a]);
  const Integer k = v.num() * Integer(static_cast<unsigned long>(exponent_)) / v.den();
  return powers_[to_u64(k, "character exponent")];
}

FpMatrix HeisenbergRep::product(std::size_t a, std::size_t chi) const {
  return fp_multiply(translations_[a], diagonals_[chi], p_);
}

bool HeisenbergRep::commutation_holds() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      FpMatrix lhs = fp_multiply(diagonals_[c], translations_[a], p_);
      FpMatrix rhs = product(a, c);
      const u64 s = character_value(c, a);
      for (auto& x : rhs.a) x = mulmod(x, s, p_);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

std::uint64_t HeisenbergRep::discrete_log(std::uint64_t x) const {
  for (u64 k = 0; k < exponent_; ++k)
    if (powers_[k] == x) return k;
  throw ConsistencyError("value " + std::to_string(x) + " is not a power of the chosen root");
}

bool span_check(const HeisenbergRep& h) {
  const std::size_t n = h.order();
  const u64 p = h.prime();
  const std::size_t dim = n * n;
  // Row-reduce the n^2 flattened products and count pivots.
  std::vector<std::vector<u64>> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) rows.push_back(h.product(a, c).a);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][col] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    const u64 inv = powmod(rows[rank][col], p - 2, p);
    for (auto& x : rows[rank]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const u64 f = rows[i][col];
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] = (rows[i][j] + p - mulmod(f, rows[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank == dim;
}

BilinearForm commutator_form(const HeisenbergRep& h) {
  const FinGenAbGroup& a = h.base();
  const std::size_t r = a.rank();
  const u64 p = h.prime();
  const std::size_t n = h.order();
  // Lift of the i-th generator of H = A x A*: e_i -> P_{e_i}, f_i -> D_{f_i}.
  std::vector<FpMatrix> lifts;
  for (std::size_t i = 0; i < r; ++i) {
    const GroupElement g = a.generator(i);
    lifts.push_back(h.translation(index_of(h.elements(), g)));
    lifts.push_back(h.diagonal(index_of(h.elements(), g)));
  }
  std::vector<FpMatrix> inverses;
  for (const auto& m : lifts) inverses.push_back(invert(m, p));

  const FinGenAbGroup total = SymplecticSpace(a).total();
  std::vector<QmodZ> gram(4 * r * r);
  for (std::size_t i = 0; i < 2 * r; ++i)
    for (std::size_t j = 0; j < 2 * r; ++j) {
      FpMatrix c = fp_multiply(fp_multiply(lifts[i], lifts[j], p), fp_multiply(inverses[i], inverses[j], p), p);
      const u64 scalar = c.at(0, 0);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          WEDGEKIT_ENSURE(c.at(x, y) == (x == y ? scalar : 0), "commutator of Heisenberg lifts is not scalar");
      gram[i * 2 * r + j] = QmodZ(Integer(static_cast<unsigned long>(h.discrete_log(scalar))),
                                  Integer(static_cast<unsigned long>(h.exponent())));
    }
  return BilinearForm(total, std::move(gram));
}

}  // namespace wedgekit
