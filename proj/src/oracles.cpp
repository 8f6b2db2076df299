#include "wedgekit/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "wedgekit/exterior.hpp"
#include "wedgekit/qtorus.hpp"
#include "wedgekit/symplectic.hpp"

namespace wedgekit::oracle {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Laplace expansion along the first row.
std::int64_t small_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      sub.push_back(std::move(row));
    }
    sum += (c % 2 ? -1 : 1) * m[0][c] * small_det(sub);
  }
  return sum;
}

// Wedge coordinates of a tuple: one reduced minor per increasing subset of
// size d of the coordinate indices.
std::vector<std::int64_t> small_wedge(const SmallGroup& g, const Tuple& t, std::size_t d) {
  const std::size_t r = g.rank();
  std::vector<std::int64_t> out;
  std::vector<std::size_t> s(d);
  std::iota(s.begin(), s.end(), 0);
  if (d > r) return out;
  for (;;) {
    std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m[i][j] = t[i * r + s[j]];
    out.push_back(floor_mod(small_det(m), g.n[s[0]]));
    std::size_t i = d;
    while (i > 0 && s[i - 1] == r - d + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < d; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

ElementTuple to_elements(const FinGenAbGroup& g, const Tuple& t) {
  const std::size_t r = g.rank();
  ElementTuple out;
  for (std::size_t i = 0; i < t.size() / r; ++i) {
    std::vector<Integer> c;
    for (std::size_t j = 0; j < r; ++j) c.emplace_back(static_cast<long>(t[i * r + j]));
    out.push_back(g.element(std::move(c)));
  }
  return out;
}

std::int64_t to_i64(const Integer& x) {
  WEDGEKIT_REQUIRE(x.fits_slong_p(), "value out of range for the brute-force oracles");
  return x.get_si();
}

}  // namespace

std::int64_t SmallGroup::order() const {
  std::int64_t o = 1;
  for (auto x : n) o *= x;
  return o;
}

Vec SmallGroup::add(const Vec& a, const Vec& b) const {
  Vec c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = (a[i] + b[i]) % n[i];
  return c;
}

std::vector<Vec> SmallGroup::elements() const {
  std::vector<Vec> out;
  Vec c(rank(), 0);
  for (;;) {
    out.push_back(c);
    std::size_t i = rank();
    while (i > 0) {
      --i;
      if (++c[i] < n[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (rank() == 0) return out;
  }
}

SmallGroup small_group(const FinGenAbGroup& g) {
  WEDGEKIT_REQUIRE(g.is_finite(), "oracles need a finite group");
  SmallGroup s;
  for (const auto& n : g.factors()) s.n.push_back(to_i64(n));
  return s;
}

std::vector<Vec> closure(const SmallGroup& g, const std::vector<Vec>& gens) {
  std::set<Vec> seen{Vec(g.rank(), 0)};
  std::deque<Vec> queue{Vec(g.rank(), 0)};
  while (!queue.empty()) {
    Vec x = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Vec y = g.add(x, s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

bool generates(const SmallGroup& g, const std::vector<Vec>& gens) {
  return static_cast<std::int64_t>(closure(g, gens).size()) == g.order();
}

std::vector<Tuple> generating_tuples(const SmallGroup& g, std::size_t d) {
  const auto elems = g.elements();
  std::vector<Tuple> out;
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    std::vector<Vec> gens;
    Tuple t;
    for (auto k : idx) {
      gens.push_back(elems[k]);
      t.insert(t.end(), elems[k].begin(), elems[k].end());
    }
    if (generates(g, gens)) out.push_back(std::move(t));
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (d == 0) return out;
  }
}

std::map<Tuple, std::size_t> elem_op_orbits(const SmallGroup& g, std::size_t d) {
  const std::size_t r = g.rank();
  std::map<Tuple, std::size_t> label;
  std::size_t next = 0;
  for (const auto& start : generating_tuples(g, d)) {
    if (label.count(start)) continue;
    const std::size_t id = next++;
    label[start] = id;
    std::deque<Tuple> queue{start};
    while (!queue.empty()) {
      Tuple t = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j) continue;
          for (int sign : {1, -1}) {
            Tuple u = t;
            for (std::size_t k = 0; k < r; ++k) u[i * r + k] = floor_mod(u[i * r + k] + sign * u[j * r + k], g.n[k]);
            if (label.emplace(u, id).second) queue.push_back(std::move(u));
          }
        }
    }
  }
  return label;
}

std::size_t count_wedge_classes(const FinGenAbGroup& group, std::size_t d) {
  const SmallGroup g = small_group(group);
  std::set<std::vector<std::int64_t>> classes;
  for (const auto& t : generating_tuples(g, d)) {
    // Negating the first element negates the wedge.
    Tuple u = t;
    for (std::size_t k = 0; k < g.rank(); ++k) u[k] = floor_mod(-u[k], g.n[k]);
    const auto w = small_wedge(g, t, d);
    const auto neg = small_wedge(g, u, d);
    classes.insert(std::min(w, neg));
  }
  return classes.size();
}

OrbitReport check_elem_op_orbits(const FinGenAbGroup& group, std::size_t d, std::size_t replay_cap) {
  const SmallGroup g = small_group(group);
  const auto orbits = elem_op_orbits(g, d);
  std::map<std::vector<std::int64_t>, std::vector<Tuple>> fibers;
  for (const auto& [t, id] : orbits) fibers[small_wedge(g, t, d)].push_back(t);

  OrbitReport rep;
  rep.tuples = orbits.size();
  rep.fibers = fibers.size();
  std::set<std::size_t> ids;
  for (const auto& [t, id] : orbits) ids.insert(id);
  rep.orbits = ids.size();
  // A mismatch is a fiber meeting several orbits or an orbit meeting several fibers.
  std::map<std::size_t, std::set<std::vector<std::int64_t>>> wedges_of_orbit;
  for (const auto& [w, members] : fibers) {
    std::set<std::size_t> here;
    for (const auto& t : members) {
      here.insert(orbits.at(t));
      wedges_of_orbit[orbits.at(t)].insert(w);
    }
    if (here.size() > 1) ++rep.mismatches;
  }
  for (const auto& [id, ws] : wedges_of_orbit)
    if (ws.size() > 1) ++rep.mismatches;

  const std::size_t per_fiber = fibers.empty() ? 0 : (replay_cap + fibers.size() - 1) / fibers.size();
  for (const auto& [w, members] : fibers) {
    const std::size_t sz = members.size();
    for (std::size_t k = 0; k < std::min(per_fiber, sz) && rep.replays < replay_cap; ++k) {
      const ElementTuple a = to_elements(group, members[k]);
      const ElementTuple b = to_elements(group, members[(k * 7 + sz / 2 + 1) % sz]);
      ++rep.replays;
      try {
        const auto ops = synthesize_elem_ops(a, b);
        if (!(replay(a, ops) == b)) ++rep.replay_failures;
      } catch (const std::exception&) {
        ++rep.replay_failures;
      }
    }
  }
  return rep;
}

std::size_t count_form_automorphisms(const FinGenAbGroup& base) {
  const SmallGroup a = small_group(base);
  const std::size_t r = a.rank();
  SmallGroup h;
  for (auto n : a.n) {
    h.n.push_back(n);
    h.n.push_back(n);
  }
  const std::int64_t top = r ? a.n.back() : 1;
  // omega scaled by n_r, as an integer mod n_r.
  auto omega = [&](const Vec& x, const Vec& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) s += (x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]) * (top / a.n[i]);
    return floor_mod(s, top);
  };
  const auto elems = h.elements();
  const std::size_t n = h.rank();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  std::size_t count = 0;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<Vec> img;
    for (auto k : idx) img.push_back(elems[k]);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Vec z(n, 0);
      for (std::int64_t t = 0; t < h.n[i]; ++t) z = h.add(z, img[i]);
      ok = std::all_of(z.begin(), z.end(), [](std::int64_t v) { return v == 0; });
    }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = omega(img[i], img[j]) == omega(gens[i], gens[j]);
    if (ok && generates(h, img)) ++count;
    std::size_t i = n;
    bool done = n == 0;
    while (i > 0) {
      --i;
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
      if (i == 0) done = true;
    }
    if (done) return count;
  }
}

SymplecticReport check_symplectic(const FinGenAbGroup& base, std::uint64_t brute_cap) {
  const SymplecticSpace s(base);
  SymplecticReport rep;
  const auto autos = enumerate_form_automorphisms(s, Integer(1) << 20);
  rep.automorphisms = autos.size();
  for (const auto& c : autos) {
    const Integer d = det_mod_n1(c, s);
    if (base.rank() > 0 && d != mod_floor(1, base.factor(0))) ++rep.det_violations;
    if (base.rank() > 0 && base.factor(0) >= 2) {
      if (pfaffian_congruence_check(c, base.factors()) != d) ++rep.pfaffian_disagreements;
    }
  }
  Integer leaves = 1;
  const Integer order = s.total().order();
  for (std::size_t i = 0; i < s.total().rank(); ++i) leaves *= order;
  if (leaves <= Integer(static_cast<unsigned long>(brute_cap))) rep.brute_force = count_form_automorphisms(base);
  return rep;
}

QtorusReport check_qtorus(std::size_t max_rank, std::int64_t max_n) {
  QtorusReport rep;
  std::vector<std::int64_t> chain;
  auto visit_exponents = [&](const std::vector<std::int64_t>& degrees) {
    std::vector<std::vector<std::int64_t>> units(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i)
      for (std::int64_t m = 1; m < degrees[i]; ++m)
        if (std::gcd(m, degrees[i]) == 1) units[i].push_back(m);
    std::vector<std::size_t> idx(degrees.size(), 0);
    for (;;) {
      std::vector<Integer> n, m;
      for (std::size_t i = 0; i < degrees.size(); ++i) {
        n.emplace_back(static_cast<long>(degrees[i]));
        m.emplace_back(static_cast<long>(units[i][idx[i]]));
      }
      const QuantumTorusSpec spec(n, m);
      ++rep.specs;
      if (wedge_criterion(spec) != k_isomorphic(spec)) {
        ++rep.disagreements;
        if (rep.examples.size() < 5) {
          std::ostringstream os;
          os << "n=(";
          for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
          os << ") m=(";
          for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
          os << ")";
          rep.examples.push_back(os.str());
        }
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == units[i].size()) idx[i++] = 0;
      if (i == idx.size()) return;
    }
  };
  std::function<void()> extend = [&] {
    if (!chain.empty()) visit_exponents(chain);
    if (chain.size() == max_rank) return;
    const std::int64_t last = chain.empty() ? 1 : chain.back();
    for (std::int64_t n = chain.empty() ? 2 : last; n <= max_n; n += last) {
      chain.push_back(n);
      extend();
      chain.pop_back();
    }
  };
  extend();
  return rep;
}

}  // namespace wedgekit::oracle
