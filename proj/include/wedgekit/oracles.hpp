#pragma once

// Brute-force reference computations on small finite groups, written on
// machine integers and independent of the SNF-based code paths. Used by
// selftest and the test suites.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wedgekit/abelian.hpp"

namespace wedgekit::oracle {

/// Coordinates of an element of a small finite group.
using Vec = std::vector<std::int64_t>;
/// A tuple of elements, flattened: d blocks of r coordinates.
using Tuple = std::vector<std::int64_t>;

struct SmallGroup {
  std::vector<std::int64_t> n;

  std::size_t rank() const { return n.size(); }
  std::int64_t order() const;
  Vec add(const Vec& a, const Vec& b) const;
  std::vector<Vec> elements() const;
};

SmallGroup small_group(const FinGenAbGroup& g);

/// Subgroup generated by the given elements, by breadth-first closure.
std::vector<Vec> closure(const SmallGroup& g, const std::vector<Vec>& gens);
bool generates(const SmallGroup& g, const std::vector<Vec>& gens);

/// All generating d-tuples of g, in lexicographic order.
std::vector<Tuple> generating_tuples(const SmallGroup& g, std::size_t d);

/// Orbit labels of generating d-tuples under a_i <- a_i +- a_j.
std::map<Tuple, std::size_t> elem_op_orbits(const SmallGroup& g, std::size_t d);

/// Number of distinct wedges up to sign among generating d-tuples.
std::size_t count_wedge_classes(const FinGenAbGroup& g, std::size_t d);

struct OrbitReport {
  std::size_t tuples = 0;
  std::size_t orbits = 0;
  std::size_t fibers = 0;
  std::size_t mismatches = 0;  // fibers meeting several orbits, and vice versa
  std::size_t replays = 0;     // synthesize_elem_ops round trips checked
  std::size_t replay_failures = 0;
};

/// Compares elementary-operation orbits with fibers of the wedge map and
/// replays synthesized operations on up to `replay_cap` within-fiber pairs.
OrbitReport check_elem_op_orbits(const FinGenAbGroup& g, std::size_t d, std::size_t replay_cap);

/// Number of automorphisms of base + base* preserving the standard form, by
/// trying every assignment of generator images.
std::size_t count_form_automorphisms(const FinGenAbGroup& base);

struct SymplecticReport {
  std::size_t automorphisms = 0;
  std::size_t brute_force = 0;  // 0 when the brute-force count was skipped
  std::size_t det_violations = 0;
  std::size_t pfaffian_disagreements = 0;
};

/// Enumerates form-preserving automorphisms and checks det = 1 (mod n_1) and
/// the Pfaffian route on each. Brute-force counting runs when |total|^(2r)
/// is at most `brute_cap`.
SymplecticReport check_symplectic(const FinGenAbGroup& base, std::uint64_t brute_cap);

struct QtorusReport {
  std::size_t specs = 0;
  std::size_t disagreements = 0;
  std::vector<std::string> examples;  // first few disagreeing specs
};

/// wedge_criterion against k_isomorphic for every chain n_1 | ... | n_r with
/// 2 <= n_1, n_r <= max_n, r <= max_rank, and every tuple of unit exponents.
QtorusReport check_qtorus(std::size_t max_rank, std::int64_t max_n);

}  // namespace wedgekit::oracle
