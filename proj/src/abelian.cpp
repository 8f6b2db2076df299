#include "wedgekit/abelian.hpp"

#include <sstream>

namespace wedgekit {

FinGenAbGroup::FinGenAbGroup(std::vector<Integer> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    WEDGEKIT_REQUIRE(factors_[i] == 0 || factors_[i] >= 2,
                     "group factors must be 0 or at least 2, got " + factors_[i].get_str());
    if (i + 1 < factors_.size())
      WEDGEKIT_REQUIRE(divides(factors_[i], factors_[i + 1]),
                       "group factors must form a divisibility chain: " + to_string());
  }
}

bool FinGenAbGroup::is_finite() const { return factors_.empty() || factors_.back() != 0; }

Integer FinGenAbGroup::order() const {
  WEDGEKIT_REQUIRE(is_finite(), "order of an infinite group");
  Integer n = 1;
  for (const auto& f : factors_) n *= f;
  return n;
}

Integer FinGenAbGroup::exponent() const {
  WEDGEKIT_REQUIRE(is_finite(), "exponent of an infinite group");
  return factors_.empty() ? Integer(1) : factors_.back();
}

std::vector<Integer> FinGenAbGroup::reduce(std::vector<Integer> coords) const {
  WEDGEKIT_REQUIRE(coords.size() == factors_.size(),
                   "element has " + std::to_string(coords.size()) + " coordinates, group " + to_string() +
                       " has rank " + std::to_string(rank()));
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], factors_[i]);
  return coords;
}

GroupElement FinGenAbGroup::element(std::vector<Integer> coords) const {
  return GroupElement(*this, reduce(std::move(coords)));
}

GroupElement FinGenAbGroup::zero() const { return GroupElement(*this, std::vector<Integer>(rank(), 0)); }

GroupElement FinGenAbGroup::generator(std::size_t i) const {
  WEDGEKIT_REQUIRE(i < rank(), "generator index out of range");
  std::vector<Integer> c(rank(), 0);
  c[i] = 1;
  return GroupElement(*this, std::move(c));
}

std::vector<GroupElement> FinGenAbGroup::elements() const {
  WEDGEKIT_REQUIRE(is_finite(), "cannot list the elements of an infinite group");
  std::vector<GroupElement> out;
  std::vector<Integer> c(rank(), 0);
  for (;;) {
    out.push_back(GroupElement(*this, c));
    bool carry = true;
    for (std::size_t i = rank(); i > 0 && carry;) {
      --i;
      ++c[i];
      if (c[i] < factors_[i])
        carry = false;
      else
        c[i] = 0;
    }
    if (carry) return out;
  }
}

std::string FinGenAbGroup::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "," : "") << factors_[i];
  os << ')';
  return os.str();
}

bool GroupElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  WEDGEKIT_REQUIRE(group_ == other.group_, "adding elements of different groups");
  std::vector<Integer> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + other.coords_[i];
  return group_.element(std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& other) const { return *this + (-other); }

GroupElement GroupElement::operator-() const { return scaled(-1); }

GroupElement GroupElement::scaled(const Integer& m) const {
  std::vector<Integer> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = m * coords_[i];
  return group_.element(std::move(c));
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

QmodZ::QmodZ(const Integer& num, const Integer& den) {
  WEDGEKIT_REQUIRE(den != 0, "Q/Z value with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  *this = from_rational(q);
}

QmodZ QmodZ::from_rational(const Rational& q) {
  QmodZ out;
  out.den_ = q.get_den();
  out.num_ = mod_floor(q.get_num(), out.den_);
  Integer g = gcd(out.num_, out.den_);
  if (g > 1) {
    out.num_ /= g;
    out.den_ /= g;
  }
  if (out.num_ == 0) out.den_ = 1;
  return out;
}

QmodZ QmodZ::parse(const std::string& text) {
  Rational q;
  WEDGEKIT_REQUIRE(q.set_str(text, 10) == 0, "malformed Q/Z value '" + text + "'");
  WEDGEKIT_REQUIRE(q.get_den() != 0, "malformed Q/Z value '" + text + "'");
  q.canonicalize();
  return from_rational(q);
}

QmodZ QmodZ::operator+(const QmodZ& o) const { return from_rational(Rational(num_, den_) + Rational(o.num_, o.den_)); }
QmodZ QmodZ::operator-(const QmodZ& o) const { return *this + (-o); }
QmodZ QmodZ::operator-() const { return from_rational(Rational(-num_, den_)); }
QmodZ QmodZ::scaled(const Integer& m) const {
  Rational q(m * num_, den_);
  q.canonicalize();
  return from_rational(q);
}

std::string QmodZ::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

bool GroupAutomorphism::induces_automorphism(const FinGenAbGroup& group, const IntMatrix& matrix) {
  const std::size_t r = group.rank();
  if (matrix.rows() != r || matrix.cols() != r) return false;
  // Well defined: n_j * (column j) vanishes in the group.
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i)
      if (!divides(group.factor(i), group.factor(j) * matrix(i, j))) return false;
  // Surjective, hence bijective (finitely generated abelian groups are Hopfian).
  std::vector<GroupElement> images;
  images.reserve(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Integer> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = matrix(i, j);
    images.push_back(group.element(std::move(c)));
  }
  return is_generating(images, group);
}

GroupAutomorphism::GroupAutomorphism(FinGenAbGroup group, IntMatrix matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
  WEDGEKIT_REQUIRE(induces_automorphism(group_, matrix_),
                   "matrix " + wedgekit::to_string(matrix_) + " is not an automorphism of " + group_.to_string());
}

FinGenAbGroup canonicalize(const IntMatrix& relations) {
  const SnfResult res = snf(relations);
  const auto diag = res.diagonal();
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < relations.cols(); ++i) {
    Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d != 1) factors.push_back(d);
  }
  return FinGenAbGroup(std::move(factors));
}

FinGenAbGroup dual(const FinGenAbGroup& g) { return g; }

QmodZ pair(const Character& chi, const GroupElement& a) {
  WEDGEKIT_REQUIRE(chi.group() == a.group(), "pairing a character with an element of a different group");
  const auto& g = a.group();
  Rational sum = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (g.factor(i) == 0) {
      WEDGEKIT_REQUIRE(chi.coord(i) == 0 || a.coord(i) == 0,
                       "pairing of two free coordinates is undefined");
      continue;
    }
    Rational term(chi.coord(i) * a.coord(i), g.factor(i));
    term.canonicalize();
    sum += term;
  }
  return QmodZ::from_rational(sum);
}

IntMatrix coordinate_matrix(std::span<const GroupElement> tuple, std::size_t rank) {
  IntMatrix m(tuple.size(), rank);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    WEDGEKIT_REQUIRE(tuple[i].coords().size() == rank, "tuple element has the wrong rank");
    for (std::size_t j = 0; j < rank; ++j) m(i, j) = tuple[i].coord(j);
  }
  return m;
}

bool is_generating(std::span<const GroupElement> tuple, const FinGenAbGroup& g) {
  for (const auto& a : tuple) WEDGEKIT_REQUIRE(a.group() == g, "tuple element lies in a different group");
  const std::size_t r = g.rank();
  if (r == 0) return true;
  if (tuple.size() < r) return false;
  // Subgroup generated is everything iff the tuple rows stacked over the
  // relations diag(n_i) present the trivial group.
  IntMatrix m(tuple.size() + r, r);
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = tuple[i].coord(j);
  for (std::size_t j = 0; j < r; ++j) m(tuple.size() + j, j) = g.factor(j);
  return canonicalize(m).rank() == 0;
}

GroupElement apply_automorphism(const GroupAutomorphism& phi, const GroupElement& a) {
  WEDGEKIT_REQUIRE(phi.group() == a.group(), "automorphism applied to an element of a different group");
  const std::size_t r = a.group().rank();
  std::vector<Integer> c(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i] += phi.matrix()(i, j) * a.coord(j);
  return a.group().element(std::move(c));
}

}  // namespace wedgekit
