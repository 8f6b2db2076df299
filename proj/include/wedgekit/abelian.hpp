#pragma once

// Finitely generated abelian groups in invariant-factor form, their
// elements and characters, the Q/Z pairing, and generation tests.

#include <span>
#include <string>
#include <vector>

#include "wedgekit/exactla.hpp"

namespace wedgekit {

class GroupElement;

/// Z/n_1 x ... x Z/n_r with each n_i = 0 or >= 2 and n_i | n_{i+1}
/// (d | 0 for all d, so free factors come last). A factor 0 is a copy of Z.
class FinGenAbGroup {
 public:
  /// The trivial group.
  FinGenAbGroup() = default;
  /// Throws InputError unless `factors` is already canonical.
  explicit FinGenAbGroup(std::vector<Integer> factors);

  const std::vector<Integer>& factors() const { return factors_; }
  const Integer& factor(std::size_t i) const { return factors_[i]; }
  std::size_t rank() const { return factors_.size(); }
  bool is_finite() const;
  /// Order of a finite group.
  Integer order() const;
  /// Least common multiple of the factors (the last one); finite groups only.
  Integer exponent() const;

  /// Reduces a coordinate vector into canonical ranges.
  std::vector<Integer> reduce(std::vector<Integer> coords) const;

  GroupElement element(std::vector<Integer> coords) const;
  GroupElement zero() const;
  /// i-th canonical generator e_i.
  GroupElement generator(std::size_t i) const;
  /// All elements of a finite group in mixed-radix order (first coordinate
  /// slowest).
  std::vector<GroupElement> elements() const;

  std::string to_string() const;

  friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

/// A group element; coordinates reduced into [0, n_i) for finite factors.
class GroupElement {
 public:
  GroupElement() = default;

  const FinGenAbGroup& group() const { return group_; }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& coord(std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement scaled(const Integer& m) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords_ == b.coords_ && a.group_ == b.group_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.coords_ < b.coords_; }

  std::string to_string() const;

 private:
  friend class FinGenAbGroup;
  GroupElement(FinGenAbGroup group, std::vector<Integer> coords)
      : group_(std::move(group)), coords_(std::move(coords)) {}

  FinGenAbGroup group_;
  std::vector<Integer> coords_;
};

/// Characters are elements of the dual group, which carries the same
/// factors; chi = (c_i) evaluates as sum c_i a_i / n_i.
using Character = GroupElement;
using ElementTuple = std::vector<GroupElement>;
using CharTuple = std::vector<Character>;

/// An element of Q/Z, stored as p/q with 0 <= p < q and gcd(p, q) = 1.
class QmodZ {
 public:
  QmodZ() = default;
  QmodZ(const Integer& num, const Integer& den);
  static QmodZ from_rational(const Rational& q);
  /// Parses "p/q" or "p".
  static QmodZ parse(const std::string& text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  QmodZ operator+(const QmodZ& o) const;
  QmodZ operator-(const QmodZ& o) const;
  QmodZ operator-() const;
  QmodZ scaled(const Integer& m) const;

  friend bool operator==(const QmodZ&, const QmodZ&) = default;

  std::string to_string() const;

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

/// An endomorphism given by an r x r matrix acting on coordinate columns:
/// image(a) = M * a, so column j is the image of e_j. Construction checks
/// that the map is well defined and bijective.
class GroupAutomorphism {
 public:
  GroupAutomorphism(FinGenAbGroup group, IntMatrix matrix);

  static bool induces_automorphism(const FinGenAbGroup& group, const IntMatrix& matrix);

  const FinGenAbGroup& group() const { return group_; }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  FinGenAbGroup group_;
  IntMatrix matrix_;
};

/// Cokernel of `relations` (rows are relations, columns are generators).
FinGenAbGroup canonicalize(const IntMatrix& relations);

FinGenAbGroup dual(const FinGenAbGroup& g);

/// Pairing of a character with an element. A free coordinate contributes 0
/// when either side vanishes there and is rejected otherwise.
QmodZ pair(const Character& chi, const GroupElement& a);

bool is_generating(std::span<const GroupElement> tuple, const FinGenAbGroup& g);

GroupElement apply_automorphism(const GroupAutomorphism& phi, const GroupElement& a);

/// Coordinate matrix of a tuple (one row per element).
IntMatrix coordinate_matrix(std::span<const GroupElement> tuple, std::size_t rank);

}  // namespace wedgekit
