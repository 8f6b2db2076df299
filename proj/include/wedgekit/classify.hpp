#pragma once

// Birational classification of faithful diagonal representations of
// diagonalizable groups through the wedge of their characters.

#include <optional>
#include <utility>
#include <vector>

#include "wedgekit/exterior.hpp"

namespace wedgekit {

/// V = chi_1 + ... + chi_d for the diagonalizable group whose character
/// lattice is `group`. The characters are elements of `group`.
struct RepSpec {
  FinGenAbGroup group;
  CharTuple chars;

  RepSpec(FinGenAbGroup g, CharTuple c);

  std::size_t dimension() const { return chars.size(); }
  bool is_faithful() const;
};

struct FixedPointReport {
  std::size_t index = 0;
  CharTuple local_chars;
  WedgeClass invariant;
};

/// The class of chi_1 ^ ... ^ chi_r; requires d == rank and faithfulness.
WedgeClass invariant_i(const RepSpec& rep);

/// The r + 1 coordinate points of the projective completion, each with the
/// characters of its affine chart: at x_j (j >= 1) position j carries
/// -chi_j and position i != j carries chi_i - chi_j.
std::vector<FixedPointReport> projective_fixed_points(const RepSpec& rep);

/// Twists a top-degree class by an automorphism of the character group (the
/// dual of a conjugation).
WedgeClass conjugation_twist(const WedgeClass& w, const GroupAutomorphism& phi);

bool birationally_equivalent(const RepSpec& v, const RepSpec& w);

/// Unimodular N with eta_i = sum_j N(j, i) chi_j: the exponent matrix of the
/// monomial map y_i = prod_j x_j^{N(j, i)}.
IntMatrix monomial_witness(const RepSpec& v, const RepSpec& w);

struct ClassCount {
  Integer count;
  std::vector<CharTuple> representatives;
};

/// Number of birational classes of faithful d-dimensional representations,
/// with one representative tuple per class. At most `representative_limit`
/// representatives are listed; the count is always exact.
ClassCount count_classes(const FinGenAbGroup& g, std::size_t d, std::size_t representative_limit = 100000);

/// Euler's totient.
Integer totient(const Integer& n);

/// Equal-dimensional faithful representations fail to be birational exactly
/// when n_1 = 5 or n_1 >= 7.
bool katsylo_fails(const FinGenAbGroup& g);

/// Exponent of the unit group (Z/n)^x.
Integer unit_group_exponent(const Integer& n);

/// Smallest m with gcd(m, n) = 1 and m^r != +-1 (mod n).
std::optional<Integer> semidirect_counterexample(const Integer& n, std::size_t r);

/// Sufficient condition for such an m to exist: the unit group exponent does
/// not divide 2r. Not necessary (n = 8, r = 1).
bool counterexample_exists_by_exponent(const Integer& n, std::size_t r);

/// |{+-m^r : m a unit mod n}| / 2, rounded up.
Integer class_lower_bound_semidirect(const Integer& n, std::size_t r);

struct ProductCounterexample {
  std::vector<Integer> exponents;
  std::size_t dimension = 0;
};

/// Units m_i mod n_i with prod m_i^{r_i} != +-1 (mod n_1), searched over
/// residues mod n_1 with the first index varying fastest.
std::optional<ProductCounterexample> product_counterexample(
    const std::vector<std::pair<Integer, std::size_t>>& params, std::size_t torus_rank);

struct E8Count {
  Integer count;
  std::vector<Integer> representatives;  // one residue per +- class in Z/5
};

E8Count e8_class_count();

}  // namespace wedgekit
