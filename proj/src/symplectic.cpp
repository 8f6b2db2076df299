#include "wedgekit/symplectic.hpp"

#include <functional>

namespace wedgekit {

BilinearForm::BilinearForm(FinGenAbGroup group, std::vector<QmodZ> gram)
    : group_(std::move(group)), gram_(std::move(gram)) {
  WEDGEKIT_REQUIRE(group_.is_finite(), "bilinear forms are only supported on finite groups");
  const std::size_t r = group_.rank();
  WEDGEKIT_REQUIRE(gram_.size() == r * r, "gram matrix must be r x r for a group of rank r");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      WEDGEKIT_REQUIRE(divides(this->gram(i, j).den(), gcd(group_.factor(i), group_.factor(j))),
                       "gram entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                           this->gram(i, j).to_string() + " is not compatible with the group orders");
}

QmodZ eval_form(const BilinearForm& f, const GroupElement& x, const GroupElement& y) {
  WEDGEKIT_REQUIRE(x.group() == f.group() && y.group() == f.group(), "form evaluated on elements of another group");
  const std::size_t r = f.group().rank();
  Rational sum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (x.coord(i) == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      const QmodZ& g = f.gram(i, j);
      if (y.coord(j) == 0 || g.is_zero()) continue;
      Rational term(x.coord(i) * y.coord(j) * g.num(), g.den());
      term.canonicalize();
      sum += term;
    }
  }
  return QmodZ::from_rational(sum);
}

bool is_alternating(const BilinearForm& f) {
  const std::size_t r = f.group().rank();
  for (std::size_t i = 0; i < r; ++i) {
    if (!f.gram(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < r; ++j)
      if (!(f.gram(i, j) + f.gram(j, i)).is_zero()) return false;
  }
  return true;
}

bool is_nondegenerate(const BilinearForm& f) {
  const auto& g = f.group();
  const std::size_t r = g.rank();
  for (const auto& a : g.elements()) {
    if (a.is_zero()) continue;
    bool kills_all = true;
    for (std::size_t j = 0; j < r && kills_all; ++j)
      if (!eval_form(f, a, g.generator(j)).is_zero()) kills_all = false;
    if (kills_all) return false;
  }
  return true;
}

bool is_symplectic(const BilinearForm& f) { return is_alternating(f) && is_nondegenerate(f); }

namespace {

FinGenAbGroup doubled(const FinGenAbGroup& base) {
  std::vector<Integer> f;
  for (const auto& n : base.factors()) {
    f.push_back(n);
    f.push_back(n);
  }
  return FinGenAbGroup(std::move(f));
}

std::vector<QmodZ> standard_gram(const FinGenAbGroup& base) {
  const std::size_t r = base.rank();
  std::vector<QmodZ> g(4 * r * r);
  for (std::size_t i = 0; i < r; ++i) {
    g[(2 * i) * 2 * r + 2 * i + 1] = QmodZ(1, base.factor(i));
    g[(2 * i + 1) * 2 * r + 2 * i] = QmodZ(-1, base.factor(i));
  }
  return g;
}

FinGenAbGroup checked_base(FinGenAbGroup base) {
  WEDGEKIT_REQUIRE(base.is_finite(), "symplectic spaces need a finite base group");
  return base;
}

}  // namespace

SymplecticSpace::SymplecticSpace(FinGenAbGroup base)
    : base_(checked_base(std::move(base))), total_(doubled(base_)), form_(total_, standard_gram(base_)) {}

bool preserves_form(const IntMatrix& c, const SymplecticSpace& s) {
  const std::size_t n = s.total().rank();
  WEDGEKIT_REQUIRE(c.rows() == n && c.cols() == n,
                   "matrix must be " + std::to_string(n) + " x " + std::to_string(n) + " for base " +
                       s.base().to_string());
  const RatMatrix j = standard_symplectic_gram(s.base().factors());
  const RatMatrix cr = to_rational(c);
  const RatMatrix diff = cr * j * cr.transpose() - j;
  for (const auto& x : diff.entries())
    if (x.get_den() != 1) return false;
  return GroupAutomorphism::induces_automorphism(s.total(), c.transpose());
}

Integer det_mod_n1(const IntMatrix& c, const SymplecticSpace& s) {
  WEDGEKIT_REQUIRE(preserves_form(c, s), "matrix " + to_string(c) + " does not preserve the symplectic form");
  const Integer d = det(c);
  if (s.base().rank() == 0) return d;
  return mod_floor(d, s.base().factor(0));
}

std::vector<IntMatrix> enumerate_form_automorphisms(const SymplecticSpace& s, const Integer& bound) {
  const FinGenAbGroup& total = s.total();
  WEDGEKIT_REQUIRE(total.order() <= bound, "enumeration cap exceeded: |total group| = " + total.order().get_str() +
                                               " > " + bound.get_str());
  const std::size_t n = total.rank();
  const auto elements = total.elements();
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(total.generator(i));

  // Generator i can only go to elements killed by its order.
  std::vector<std::vector<GroupElement>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& x : elements)
      if (x.scaled(total.factor(i)).is_zero()) candidates[i].push_back(x);

  std::vector<IntMatrix> out;
  std::vector<GroupElement> chosen;
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == n) {
      if (!is_generating(chosen, total)) return;
      IntMatrix c(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) c(r, k) = chosen[r].coord(k);
      out.push_back(std::move(c));
      return;
    }
    for (const auto& x : candidates[i]) {
      bool ok = eval_form(s.form(), x, x).is_zero();
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = eval_form(s.form(), chosen[j], x) == eval_form(s.form(), gens[j], gens[i]);
      if (!ok) continue;
      chosen.push_back(x);
      search(i + 1);
      chosen.pop_back();
    }
  };
  search(0);
  return out;
}

GroupAutomorphism as_group_automorphism(const IntMatrix& c, const SymplecticSpace& s) {
  return GroupAutomorphism(s.total(), c.transpose());
}

}  // namespace wedgekit
