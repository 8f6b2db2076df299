#pragma once

// Q/Z-valued bilinear forms on finite abelian groups, the standard
// symplectic model A0 + A0*, and form-preserving automorphisms.

#include <vector>

#include "wedgekit/abelian.hpp"

namespace wedgekit {

/// omega(x, y) = x^t G y with G the gram matrix on canonical generators.
class BilinearForm {
 public:
  /// Entry (i, j) must have denominator dividing gcd(n_i, n_j).
  BilinearForm(FinGenAbGroup group, std::vector<QmodZ> gram);

  const FinGenAbGroup& group() const { return group_; }
  const QmodZ& gram(std::size_t i, std::size_t j) const { return gram_[i * group_.rank() + j]; }
  const std::vector<QmodZ>& gram_entries() const { return gram_; }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  FinGenAbGroup group_;
  std::vector<QmodZ> gram_;
};

QmodZ eval_form(const BilinearForm& f, const GroupElement& x, const GroupElement& y);

/// omega(a, a) = 0 for every a. Checked on generators and on every pairwise
/// sum of generators, which pins down the quadratic map a -> omega(a, a).
bool is_alternating(const BilinearForm& f);
/// No nonzero a with omega(a, .) identically zero; exhaustive search.
bool is_nondegenerate(const BilinearForm& f);
bool is_symplectic(const BilinearForm& f);

/// A0 + A0* with generators ordered e_1, f_1, ..., e_r, f_r and the form
/// whose gram is the block matrix with blocks [[0, 1/n_i], [-1/n_i, 0]].
class SymplecticSpace {
 public:
  explicit SymplecticSpace(FinGenAbGroup base);

  const FinGenAbGroup& base() const { return base_; }
  const FinGenAbGroup& total() const { return total_; }
  const BilinearForm& form() const { return form_; }

 private:
  FinGenAbGroup base_;
  FinGenAbGroup total_;
  BilinearForm form_;
};

/// Row convention: row i of `c` lists the coordinates of the image of the
/// i-th generator. True iff C J C^t - J is integral and `c` induces an
/// automorphism of the total group.
bool preserves_form(const IntMatrix& c, const SymplecticSpace& s);

/// det(c) reduced modulo n_1 (det itself for an empty base).
Integer det_mod_n1(const IntMatrix& c, const SymplecticSpace& s);

/// Every form-preserving automorphism, as matrices with reduced rows, in
/// lexicographic order. Throws when |total| exceeds `bound`.
std::vector<IntMatrix> enumerate_form_automorphisms(const SymplecticSpace& s, const Integer& bound);

/// The column-convention transpose of a row-convention matrix, usable with
/// GroupAutomorphism.
GroupAutomorphism as_group_automorphism(const IntMatrix& c, const SymplecticSpace& s);

}  // namespace wedgekit
