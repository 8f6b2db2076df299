#include "wedgekit/classify.hpp"

#include <set>

namespace wedgekit {

namespace {

// Prime factorization by trial division: (p, e) pairs in increasing p.
std::vector<std::pair<Integer, unsigned long>> factorize(Integer n) {
  std::vector<std::pair<Integer, unsigned long>> out;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned long e = 0;
    while (divides(p, n)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer powm(const Integer& base, const Integer& e, const Integer& n) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_plus_minus_one(const Integer& x, const Integer& n) {
  Integer v = mod_floor(x, n);
  return v == mod_floor(1, n) || v == mod_floor(-1, n);
}

void require_rep(const RepSpec& rep) {
  WEDGEKIT_REQUIRE(rep.is_faithful(), "representation is not faithful: its characters do not generate " +
                                          rep.group.to_string());
}

}  // namespace

RepSpec::RepSpec(FinGenAbGroup g, CharTuple c) : group(std::move(g)), chars(std::move(c)) {
  for (const auto& chi : chars)
    WEDGEKIT_REQUIRE(chi.group() == group, "character " + chi.to_string() + " does not lie in " + group.to_string());
}

bool RepSpec::is_faithful() const { return is_generating(chars, group); }

WedgeClass invariant_i(const RepSpec& rep) {
  WEDGEKIT_REQUIRE(rep.dimension() == rep.group.rank(), "the invariant needs dimension equal to rank " +
                                                            std::to_string(rep.group.rank()));
  require_rep(rep);
  WedgeClass w = class_of(wedge(rep.group, rep.chars));
  WEDGEKIT_ENSURE(is_generator(w.representative()), "invariant of a faithful representation is not a generator");
  return w;
}

std::vector<FixedPointReport> projective_fixed_points(const RepSpec& rep) {
  const WedgeClass base = invariant_i(rep);
  const std::size_t r = rep.dimension();
  std::vector<FixedPointReport> out;
  out.push_back(FixedPointReport{0, rep.chars, base});
  for (std::size_t j = 1; j <= r; ++j) {
    const Character& pivot = rep.chars[j - 1];
    CharTuple local;
    local.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) local.push_back(i == j ? -pivot : rep.chars[i - 1] - pivot);
    WedgeClass w = class_of(wedge(rep.group, local));
    out.push_back(FixedPointReport{j, std::move(local), std::move(w)});
  }
  return out;
}

WedgeClass conjugation_twist(const WedgeClass& w, const GroupAutomorphism& phi) {
  WEDGEKIT_REQUIRE(phi.group() == w.representative().power().base(),
                   "automorphism of " + phi.group().to_string() + " does not act on a wedge power of " +
                       w.representative().power().base().to_string());
  return class_of(push_forward(w.representative(), phi.matrix()));
}

bool birationally_equivalent(const RepSpec& v, const RepSpec& w) {
  WEDGEKIT_REQUIRE(v.group == w.group, "representations of different groups " + v.group.to_string() + " and " +
                                           w.group.to_string());
  WEDGEKIT_REQUIRE(v.dimension() == w.dimension(), "representations of different dimensions");
  require_rep(v);
  require_rep(w);
  if (v.dimension() > v.group.rank()) return true;
  return class_of(wedge(v.group, v.chars)) == class_of(wedge(w.group, w.chars));
}

IntMatrix monomial_witness(const RepSpec& v, const RepSpec& w) {
  WEDGEKIT_REQUIRE(birationally_equivalent(v, w), "representations are not birationally equivalent");
  return glz_witness(v.chars, w.chars).transpose();
}

Integer totient(const Integer& n) {
  WEDGEKIT_REQUIRE(n >= 1, "totient needs a positive argument");
  Integer phi = 1;
  for (const auto& [p, e] : factorize(n)) phi *= (p - 1) * pow_ui(p, e - 1);
  return phi;
}

ClassCount count_classes(const FinGenAbGroup& g, std::size_t d, std::size_t representative_limit) {
  const std::size_t r = g.rank();
  WEDGEKIT_REQUIRE(d >= r, "no faithful representation of dimension " + std::to_string(d) + " exists for rank " +
                               std::to_string(r));
  auto base_tuple = [&] {
    CharTuple t;
    for (std::size_t i = 0; i < d; ++i) t.push_back(i < r ? g.generator(i) : g.zero());
    return t;
  };
  ClassCount out;
  const bool single = d > r || r == 0 || g.factor(0) == 0 || g.factor(0) == 2;
  if (single) {
    out.count = 1;
    if (representative_limit > 0) out.representatives.push_back(base_tuple());
    return out;
  }
  const Integer& n1 = g.factor(0);
  out.count = totient(n1) / 2;
  for (Integer u = 1; 2 * u < n1 && out.representatives.size() < representative_limit; ++u) {
    if (gcd(u, n1) != 1) continue;
    CharTuple t = base_tuple();
    t[0] = t[0].scaled(u);
    out.representatives.push_back(std::move(t));
  }
  WEDGEKIT_ENSURE(Integer(out.representatives.size()) == out.count ||
                      out.representatives.size() == representative_limit,
                  "class representatives do not match the class count");
  return out;
}

bool katsylo_fails(const FinGenAbGroup& g) {
  if (g.rank() == 0) return false;
  const Integer& n1 = g.factor(0);
  return n1 == 5 || n1 >= 7;
}

Integer unit_group_exponent(const Integer& n) {
  WEDGEKIT_REQUIRE(n >= 1, "unit group exponent needs a positive modulus");
  Integer lambda = 1;
  for (const auto& [p, e] : factorize(n)) {
    Integer part;
    if (p == 2)
      part = e <= 2 ? pow_ui(2, e - 1) : pow_ui(2, e - 2);
    else
      part = (p - 1) * pow_ui(p, e - 1);
    lambda = lcm(lambda, part);
  }
  return lambda;
}

std::optional<Integer> semidirect_counterexample(const Integer& n, std::size_t r) {
  WEDGEKIT_REQUIRE(n >= 2, "modulus must be at least 2");
  WEDGEKIT_REQUIRE(r >= 1, "exponent must be at least 1");
  const Integer e(static_cast<unsigned long>(r));
  for (Integer m = 1; m < n; ++m) {
    if (gcd(m, n) != 1) continue;
    if (!is_plus_minus_one(powm(m, e, n), n)) return m;
  }
  return std::nullopt;
}

bool counterexample_exists_by_exponent(const Integer& n, std::size_t r) {
  WEDGEKIT_REQUIRE(n >= 2, "modulus must be at least 2");
  WEDGEKIT_REQUIRE(r >= 1, "exponent must be at least 1");
  return !divides(unit_group_exponent(n), Integer(static_cast<unsigned long>(2 * r)));
}

Integer class_lower_bound_semidirect(const Integer& n, std::size_t r) {
  WEDGEKIT_REQUIRE(n >= 2, "modulus must be at least 2");
  WEDGEKIT_REQUIRE(r >= 1, "exponent must be at least 1");
  const Integer e(static_cast<unsigned long>(r));
  std::set<Integer> values;
  for (Integer m = 1; m < n; ++m) {
    if (gcd(m, n) != 1) continue;
    Integer v = powm(m, e, n);
    values.insert(v);
    values.insert(mod_floor(-v, n));
  }
  return (Integer(values.size()) + 1) / 2;
}

std::optional<ProductCounterexample> product_counterexample(
    const std::vector<std::pair<Integer, std::size_t>>& params, std::size_t torus_rank) {
  WEDGEKIT_REQUIRE(!params.empty(), "need at least one (n, r) pair");
  const Integer n1 = params.front().first;
  WEDGEKIT_REQUIRE(n1 >= 2, "n_1 must be at least 2");
  std::size_t dimension = torus_rank;
  for (std::size_t i = 0; i < params.size(); ++i) {
    WEDGEKIT_REQUIRE(params[i].second >= 1, "every r_i must be at least 1");
    dimension += params[i].second;
    if (i + 1 < params.size())
      WEDGEKIT_REQUIRE(divides(params[i].first, params[i + 1].first), "moduli must form a divisibility chain");
  }
  std::vector<Integer> units;
  for (Integer u = 1; u < n1; ++u)
    if (gcd(u, n1) == 1) units.push_back(u);
  if (units.empty()) units.push_back(1);  // n_1 = 2 leaves only the residue 1

  const std::size_t s = params.size();
  std::vector<std::size_t> idx(s, 0);
  for (;;) {
    Integer prod = 1;
    for (std::size_t i = 0; i < s; ++i)
      prod = mod_floor(prod * powm(units[idx[i]], Integer(static_cast<unsigned long>(params[i].second)), n1), n1);
    if (!is_plus_minus_one(prod, n1)) {
      ProductCounterexample out;
      out.dimension = dimension;
      for (std::size_t i = 0; i < s; ++i) {
        // Lift the residue to a unit modulo n_i.
        Integer m = units[idx[i]];
        while (gcd(m, params[i].first) != 1) m += n1;
        out.exponents.push_back(m);
      }
      return out;
    }
    std::size_t i = 0;
    while (i < s && ++idx[i] == units.size()) idx[i++] = 0;
    if (i == s) return std::nullopt;
  }
}

E8Count e8_class_count() {
  const FinGenAbGroup h({5, 5, 5});
  const ClassCount cc = count_classes(h, 3);
  E8Count out;
  out.count = cc.count;
  for (const auto& t : cc.representatives)
    out.representatives.push_back(class_of(wedge(h, t)).representative().coords().front());
  return out;
}

}  // namespace wedgekit
