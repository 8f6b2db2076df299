#pragma once

// Exterior powers of finitely generated abelian groups, wedge products of
// element tuples, sign classes, and the elementary-operation and GL_d(Z)
// equivalences between generating tuples.

#include <span>
#include <string>
#include <vector>

#include "wedgekit/abelian.hpp"

namespace wedgekit {

/// One cyclic summand of a wedge power: the basis wedge e_{i_1} ^ ... ^ e_{i_d}
/// (0-based strictly increasing indices) of order n_{i_1}; modulus 0 means Z.
struct WedgeComponent {
  std::vector<std::size_t> subset;
  Integer modulus;

  friend bool operator==(const WedgeComponent&, const WedgeComponent&) = default;
};

class WedgePower {
 public:
  WedgePower() = default;
  WedgePower(FinGenAbGroup base, std::size_t degree);

  const FinGenAbGroup& base() const { return base_; }
  std::size_t degree() const { return degree_; }
  const std::vector<WedgeComponent>& components() const { return components_; }
  /// True when the power is the zero group.
  bool is_zero_group() const { return components_.empty(); }

  friend bool operator==(const WedgePower& a, const WedgePower& b) {
    return a.degree_ == b.degree_ && a.base_ == b.base_;
  }

 private:
  FinGenAbGroup base_;
  std::size_t degree_ = 0;
  std::vector<WedgeComponent> components_;
};

WedgePower wedge_power(const FinGenAbGroup& a, std::size_t d);

/// An element of a wedge power, one reduced coordinate per component.
class WedgeElement {
 public:
  WedgeElement() = default;
  /// Reduces `coords` modulo the component moduli.
  WedgeElement(WedgePower power, std::vector<Integer> coords);

  const WedgePower& power() const { return power_; }
  const std::vector<Integer>& coords() const { return coords_; }
  bool is_zero() const;

  WedgeElement operator+(const WedgeElement& o) const;
  WedgeElement operator-() const;
  WedgeElement scaled(const Integer& m) const;

  friend bool operator==(const WedgeElement& a, const WedgeElement& b) {
    return a.coords_ == b.coords_ && a.power_ == b.power_;
  }

  std::string to_string() const;

 private:
  WedgePower power_;
  std::vector<Integer> coords_;
};

/// A wedge element up to global sign. The stored representative is the one
/// of {w, -w} whose coordinate sequence is lexicographically smaller.
class WedgeClass {
 public:
  WedgeClass() = default;
  explicit WedgeClass(const WedgeElement& w);

  const WedgeElement& representative() const { return rep_; }

  friend bool operator==(const WedgeClass&, const WedgeClass&) = default;

 private:
  WedgeElement rep_;
};

/// Wedge of a tuple in the given group; the coordinate on subset S is the
/// minor of the coordinate matrix on the columns S.
WedgeElement wedge(const FinGenAbGroup& group, std::span<const GroupElement> tuple);
/// Same, taking the group from the first element (tuple must be nonempty).
WedgeElement wedge(std::span<const GroupElement> tuple);

WedgeClass class_of(const WedgeElement& w);

/// True iff w generates its whole wedge power as a group.
bool is_generator(const WedgeElement& w);

/// The push-forward of w under the endomorphism M (column convention, see
/// GroupAutomorphism) of the base group: coordinates transform through the
/// d x d minors of M.
WedgeElement push_forward(const WedgeElement& w, const IntMatrix& m);

/// a_i <- a_i + m * a_j, with 0-based i != j.
struct ElementaryOp {
  std::size_t i = 0;
  std::size_t j = 0;
  Integer m;

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

ElementTuple apply_elem_op(ElementTuple tuple, const ElementaryOp& op);
ElementTuple replay(ElementTuple tuple, std::span<const ElementaryOp> ops);

/// Elementary operations taking `a` to `b`; both must be generating tuples of
/// the same group with identical wedges.
std::vector<ElementaryOp> synthesize_elem_ops(const ElementTuple& a, const ElementTuple& b);

/// A unimodular N with b_i = sum_j N(i, j) a_j, for generating tuples whose
/// wedges agree up to sign.
IntMatrix glz_witness(const ElementTuple& a, const ElementTuple& b);

}  // namespace wedgekit
