#include "wedgekit/exterior.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace wedgekit {

namespace {

// All strictly increasing d-subsets of {0..r-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t r, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  if (d > r) return out;
  std::vector<std::size_t> s(d);
  for (std::size_t i = 0; i < d; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = d;
    while (i > 0 && s[i - 1] == r - d + i - 1) --i;
    if (i == 0) return out;
    ++s[i - 1];
    for (std::size_t k = i; k < d; ++k) s[k] = s[k - 1] + 1;
  }
}

Integer minor(const IntMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  IntMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  return det(sub);
}

const FinGenAbGroup& common_group(std::span<const GroupElement> a, std::span<const GroupElement> b) {
  WEDGEKIT_REQUIRE(!a.empty(), "empty tuple");
  const auto& g = a.front().group();
  for (const auto& x : a) WEDGEKIT_REQUIRE(x.group() == g, "tuple elements lie in different groups");
  for (const auto& x : b) WEDGEKIT_REQUIRE(x.group() == g, "tuple elements lie in different groups");
  return g;
}

std::string tuple_string(std::span<const GroupElement> t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].to_string();
  return s + "]";
}

// Integer coefficients x with sum_k x_k rows[k] == target in the group
// Z/n_0 x ... x Z/n_{c-1}; empty result when target is outside the span.
std::optional<std::vector<Integer>> express_in_span(const std::vector<std::vector<Integer>>& rows,
                                                     const std::vector<Integer>& target,
                                                     std::span<const Integer> moduli) {
  const std::size_t k = rows.size();
  const std::size_t c = moduli.size();
  IntMatrix m(k + c, c);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  for (std::size_t j = 0; j < c; ++j) m(k + j, j) = moduli[j];
  // x m = y  <=>  (x u^{-1}) s = y v.
  const SnfResult f = snf(m);
  std::vector<Integer> yv(c, 0);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t t = 0; t < c; ++t) yv[j] += target[t] * f.v(t, j);
  std::vector<Integer> z(k + c, 0);
  for (std::size_t j = 0; j < c; ++j) {
    const Integer& s = f.s(j, j);
    if (s == 0) {
      if (yv[j] != 0) return std::nullopt;
      continue;
    }
    if (!divides(s, yv[j])) return std::nullopt;
    z[j] = yv[j] / s;
  }
  std::vector<Integer> x(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < k + c; ++t) x[i] += z[t] * f.u(t, i);
  return x;
}

// Drives a generating tuple to the normal form reached by the inductive
// argument: column by column from the last, the designated pivot row becomes
// the unit vector e_c and the other active rows vanish in that column. Only
// the last step of a tuple with d == rank keeps a unit g instead of 1.
class CanonicalReducer {
 public:
  explicit CanonicalReducer(ElementTuple t) : tuple_(std::move(t)) {}

  void run() {
    if (tuple_.empty()) return;
    const FinGenAbGroup g = tuple_.front().group();
    std::vector<std::size_t> active(tuple_.size());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
    for (std::size_t col = g.rank(); col-- > 0;) {
      WEDGEKIT_REQUIRE(!active.empty(), "tuple does not generate the group");
      const std::size_t p = active.back();
      const Integer& n = g.factor(col);
      euclid(active, col);
      std::size_t holder = p;
      for (std::size_t i : active)
        if (entry(i, col) != 0) holder = i;
      WEDGEKIT_REQUIRE(entry(holder, col) != 0, "tuple does not generate the group");
      if (holder != p) {
        apply(p, holder, 1);
        apply(holder, p, -1);
      }
      const Integer unit = entry(p, col);
      WEDGEKIT_REQUIRE(gcd(unit, n) == 1, "tuple does not generate the group");
      if (unit != 1 && active.size() >= 2) {
        const std::size_t q = active.front();
        Integer inv;
        if (n == 0) {
          inv = unit;  // unit is +-1
        } else {
          mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), n.get_mpz_t());
        }
        apply(q, p, inv);
        apply(p, q, 1 - unit);
        apply(q, p, -1);
      }
      active.pop_back();
      clear_prefix(p, active, col);
    }
  }

  const ElementTuple& tuple() const { return tuple_; }
  const std::vector<ElementaryOp>& ops() const { return ops_; }

 private:
  const Integer& entry(std::size_t i, std::size_t col) const { return tuple_[i].coord(col); }

  void apply(std::size_t i, std::size_t j, const Integer& m) {
    if (m == 0) return;
    tuple_[i] = tuple_[i] + tuple_[j].scaled(m);
    ops_.push_back(ElementaryOp{i, j, m});
  }

  // Concentrate the column's gcd in one active row: repeatedly reduce the
  // larger entries against the smallest nonzero one (lowest index on ties).
  void euclid(const std::vector<std::size_t>& active, std::size_t col) {
    for (;;) {
      std::size_t pivot = active.size();
      std::size_t nonzero = 0;
      for (std::size_t k = 0; k < active.size(); ++k) {
        const Integer& v = entry(active[k], col);
        if (v == 0) continue;
        ++nonzero;
        if (pivot == active.size() || abs(v) < abs(entry(active[pivot], col))) pivot = k;
      }
      if (nonzero <= 1) return;
      const std::size_t s = active[pivot];
      for (std::size_t i : active) {
        if (i == s || entry(i, col) == 0) continue;
        Integer q = entry(i, col) / entry(s, col);
        apply(i, s, -q);
      }
    }
  }

  void clear_prefix(std::size_t p, const std::vector<std::size_t>& others, std::size_t col) {
    if (col == 0) return;
    const FinGenAbGroup g = tuple_[p].group();
    std::vector<Integer> target(tuple_[p].coords().begin(), tuple_[p].coords().begin() + col);
    if (std::all_of(target.begin(), target.end(), [](const Integer& x) { return x == 0; })) return;
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i : others) rows.emplace_back(tuple_[i].coords().begin(), tuple_[i].coords().begin() + col);
    std::span<const Integer> moduli(g.factors().data(), col);
    auto coeffs = express_in_span(rows, target, moduli);
    WEDGEKIT_REQUIRE(coeffs.has_value(), "tuple does not generate the group");
    for (std::size_t k = 0; k < others.size(); ++k) apply(p, others[k], -(*coeffs)[k]);
  }

  ElementTuple tuple_;
  std::vector<ElementaryOp> ops_;
};

}  // namespace

WedgePower::WedgePower(FinGenAbGroup base, std::size_t degree) : base_(std::move(base)), degree_(degree) {
  for (auto& s : subsets(base_.rank(), degree_)) {
    Integer modulus = s.empty() ? Integer(0) : base_.factor(s.front());
    components_.push_back(WedgeComponent{std::move(s), std::move(modulus)});
  }
}

WedgePower wedge_power(const FinGenAbGroup& a, std::size_t d) { return WedgePower(a, d); }

WedgeElement::WedgeElement(WedgePower power, std::vector<Integer> coords)
    : power_(std::move(power)), coords_(std::move(coords)) {
  WEDGEKIT_REQUIRE(coords_.size() == power_.components().size(), "wedge element has the wrong number of coordinates");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] = mod_floor(coords_[k], power_.components()[k].modulus);
}

bool WedgeElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

WedgeElement WedgeElement::operator+(const WedgeElement& o) const {
  WEDGEKIT_REQUIRE(power_ == o.power_, "adding wedge elements of different powers");
  std::vector<Integer> c(coords_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = coords_[k] + o.coords_[k];
  return WedgeElement(power_, std::move(c));
}

WedgeElement WedgeElement::operator-() const { return scaled(-1); }

WedgeElement WedgeElement::scaled(const Integer& m) const {
  std::vector<Integer> c(coords_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = m * coords_[k];
  return WedgeElement(power_, std::move(c));
}

std::string WedgeElement::to_string() const {
  std::ostringstream os;
  os << '{';
  const auto& comps = power_.components();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k) os << ", ";
    os << 'e';
    for (std::size_t i : comps[k].subset) os << (i + 1);
    os << ':' << coords_[k] << " mod " << comps[k].modulus;
  }
  os << '}';
  return os.str();
}

WedgeClass::WedgeClass(const WedgeElement& w) {
  WedgeElement neg = -w;
  rep_ = neg.coords() < w.coords() ? neg : w;
}

WedgeElement wedge(const FinGenAbGroup& group, std::span<const GroupElement> tuple) {
  for (const auto& a : tuple) WEDGEKIT_REQUIRE(a.group() == group, "tuple element lies in a different group");
  WedgePower power(group, tuple.size());
  const IntMatrix m = coordinate_matrix(tuple, group.rank());
  std::vector<std::size_t> rows(tuple.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<Integer> coords;
  coords.reserve(power.components().size());
  for (const auto& comp : power.components()) coords.push_back(minor(m, rows, comp.subset));
  return WedgeElement(std::move(power), std::move(coords));
}

WedgeElement wedge(std::span<const GroupElement> tuple) {
  WEDGEKIT_REQUIRE(!tuple.empty(), "wedge of an empty tuple needs an explicit group");
  return wedge(tuple.front().group(), tuple);
}

WedgeClass class_of(const WedgeElement& w) { return WedgeClass(w); }

bool is_generator(const WedgeElement& w) {
  const auto& comps = w.power().components();
  const std::size_t k = comps.size();
  if (k == 0) return true;
  IntMatrix m(k + 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    m(0, j) = w.coords()[j];
    m(j + 1, j) = comps[j].modulus;
  }
  return canonicalize(m).rank() == 0;
}

WedgeElement push_forward(const WedgeElement& w, const IntMatrix& m) {
  const auto& power = w.power();
  const std::size_t r = power.base().rank();
  WEDGEKIT_REQUIRE(m.rows() == r && m.cols() == r, "push_forward: matrix does not match the base rank");
  const auto& comps = power.components();
  std::vector<Integer> out(comps.size(), 0);
  for (std::size_t t = 0; t < comps.size(); ++t)
    for (std::size_t s = 0; s < comps.size(); ++s) {
      if (w.coords()[s] == 0) continue;
      out[t] += minor(m, comps[t].subset, comps[s].subset) * w.coords()[s];
    }
  return WedgeElement(power, std::move(out));
}

ElementTuple apply_elem_op(ElementTuple tuple, const ElementaryOp& op) {
  WEDGEKIT_REQUIRE(op.i < tuple.size() && op.j < tuple.size(), "elementary operation index out of range");
  WEDGEKIT_REQUIRE(op.i != op.j, "elementary operation needs i != j");
  tuple[op.i] = tuple[op.i] + tuple[op.j].scaled(op.m);
  return tuple;
}

ElementTuple replay(ElementTuple tuple, std::span<const ElementaryOp> ops) {
  for (const auto& op : ops) tuple = apply_elem_op(std::move(tuple), op);
  return tuple;
}

std::vector<ElementaryOp> synthesize_elem_ops(const ElementTuple& a, const ElementTuple& b) {
  WEDGEKIT_REQUIRE(a.size() == b.size(), "tuples have different lengths");
  if (a.empty()) return {};
  const FinGenAbGroup& g = common_group(a, b);
  WEDGEKIT_REQUIRE(is_generating(a, g), "first tuple " + tuple_string(a) + " does not generate " + g.to_string());
  WEDGEKIT_REQUIRE(is_generating(b, g), "second tuple " + tuple_string(b) + " does not generate " + g.to_string());
  const WedgeElement wa = wedge(g, a);
  const WedgeElement wb = wedge(g, b);
  WEDGEKIT_REQUIRE(wa == wb, "wedges differ: first tuple has " + wa.to_string() + ", second has " + wb.to_string());

  CanonicalReducer ra(a);
  ra.run();
  CanonicalReducer rb(b);
  rb.run();
  WEDGEKIT_ENSURE(ra.tuple() == rb.tuple(), "normal forms of tuples with equal wedges differ");

  std::vector<ElementaryOp> ops = ra.ops();
  for (auto it = rb.ops().rbegin(); it != rb.ops().rend(); ++it) ops.push_back(ElementaryOp{it->i, it->j, -it->m});
  WEDGEKIT_ENSURE(replay(a, ops) == b, "synthesized elementary operations do not replay");
  return ops;
}

IntMatrix glz_witness(const ElementTuple& a, const ElementTuple& b) {
  WEDGEKIT_REQUIRE(a.size() == b.size(), "tuples have different lengths");
  const std::size_t d = a.size();
  if (d == 0) return IntMatrix(0, 0);
  const FinGenAbGroup& g = common_group(a, b);
  WEDGEKIT_REQUIRE(is_generating(a, g), "first tuple " + tuple_string(a) + " does not generate " + g.to_string());
  WEDGEKIT_REQUIRE(is_generating(b, g), "second tuple " + tuple_string(b) + " does not generate " + g.to_string());
  const WedgeElement wa = wedge(g, a);
  const WedgeElement wb = wedge(g, b);

  ElementTuple start = a;
  bool flipped = false;
  if (wa != wb) {
    WEDGEKIT_REQUIRE(wa == -wb, "wedge classes differ: first tuple has " + wa.to_string() + ", second has " +
                                    wb.to_string());
    start[0] = -start[0];
    flipped = true;
  }
  IntMatrix n = IntMatrix::identity(d);
  for (const auto& op : synthesize_elem_ops(start, b)) n.add_row_multiple(op.i, op.j, op.m);
  if (flipped)
    for (std::size_t i = 0; i < d; ++i) n(i, 0) = -n(i, 0);

  WEDGEKIT_ENSURE(is_unimodular(n), "GL_d(Z) witness is not unimodular");
  for (std::size_t i = 0; i < d; ++i) {
    GroupElement acc = g.zero();
    for (std::size_t j = 0; j < d; ++j) acc = acc + a[j].scaled(n(i, j));
    WEDGEKIT_ENSURE(acc == b[i], "GL_d(Z) witness does not transport the tuple");
  }
  return n;
}

}  // namespace wedgekit
