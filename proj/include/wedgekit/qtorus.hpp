#pragma once

// Quantum-torus isomorphism arithmetic and the Heisenberg subgroup
// A x A* of PGL_n realized over a prime field.

#include <cstdint>
#include <utility>
#include <vector>

#include "wedgekit/classify.hpp"
#include "wedgekit/symplectic.hpp"

namespace wedgekit {

/// Degrees n_1 | ... | n_r with n_1 >= 2 and twist exponents m_i coprime
/// to n_i: compares Q(w_1, ..., w_r) with Q(w_1^{m_1}, ..., w_r^{m_r}).
class QuantumTorusSpec {
 public:
  QuantumTorusSpec(std::vector<Integer> degrees, std::vector<Integer> exponents);

  const std::vector<Integer>& degrees() const { return degrees_; }
  const std::vector<Integer>& exponents() const { return exponents_; }
  std::size_t rank() const { return degrees_.size(); }

  /// A = Z/n_1 x ... x Z/n_r.
  FinGenAbGroup base() const { return FinGenAbGroup(degrees_); }

 private:
  std::vector<Integer> degrees_;
  std::vector<Integer> exponents_;
};

bool k_isomorphic(const QuantumTorusSpec& spec);
bool brauer_equivalent(const QuantumTorusSpec& spec);

/// The character group of H = A x A*, generators ordered
/// c(a_1), c(chi_1), ..., c(a_r), c(chi_r).
FinGenAbGroup heisenberg_character_group(const QuantumTorusSpec& spec);

/// (V, W) with V = (c(a_1), ..., c(a_r), -c(chi_1), ..., -c(chi_r)) and W the
/// same with -m_i c(chi_i).
std::pair<RepSpec, RepSpec> rep_characters(const QuantumTorusSpec& spec);

/// The wedge-class comparison of the two representations of rep_characters.
bool wedge_criterion(const QuantumTorusSpec& spec);

/// Square matrix over Z/p, row-major.
struct FpMatrix {
  std::size_t n = 0;
  std::vector<std::uint64_t> a;

  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix fp_multiply(const FpMatrix& x, const FpMatrix& y, std::uint64_t p);

/// P_a (b -> a + b) and D_chi (b -> chi(b) b) on the group ring F_p[A], with
/// the roots of unity realized by a fixed element of order exp(A) in F_p.
class HeisenbergRep {
 public:
  /// p == 0 picks the smallest prime p = 1 (mod exp A).
  explicit HeisenbergRep(FinGenAbGroup base, std::uint64_t p = 0);

  const FinGenAbGroup& base() const { return base_; }
  std::uint64_t prime() const { return p_; }
  /// Smallest element of F_p of multiplicative order exp(A).
  std::uint64_t root() const { return root_; }
  std::uint64_t exponent() const { return exponent_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }

  const FpMatrix& translation(std::size_t a) const { return translations_[a]; }
  const FpMatrix& diagonal(std::size_t chi) const { return diagonals_[chi]; }
  /// chi(a) as an element of F_p (indices into elements()).
  std::uint64_t character_value(std::size_t chi, std::size_t a) const;
  /// P_a D_chi.
  FpMatrix product(std::size_t a, std::size_t chi) const;

  /// D_chi P_a == chi(a) P_a D_chi for every pair.
  bool commutation_holds() const;

  /// k with root^k == x, for x a power of the root.
  std::uint64_t discrete_log(std::uint64_t x) const;

 private:
  FinGenAbGroup base_;
  std::uint64_t p_ = 0;
  std::uint64_t root_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<std::uint64_t> powers_;  // root^k, k < exponent
  std::vector<FpMatrix> translations_;
  std::vector<FpMatrix> diagonals_;
};

/// Smallest prime p with p = 1 (mod m).
std::uint64_t default_prime(std::uint64_t m);
bool is_prime(std::uint64_t n);

/// True iff the |A|^2 products P_a D_chi span all n x n matrices over F_p.
bool span_check(const HeisenbergRep& h);

/// The commutator pairing on H = A x A* (generators e_1, f_1, ..., e_r, f_r)
/// read through the discrete log: omega(x, y) = k / exp(A) where
/// X Y X^{-1} Y^{-1} = root^k. Equals the negative of the standard form.
BilinearForm commutator_form(const HeisenbergRep& h);

}  // namespace wedgekit
