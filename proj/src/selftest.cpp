#include "wedgekit/selftest.hpp"

#include <functional>
#include <future>
#include <random>

#include "wedgekit/json_io.hpp"
#include "wedgekit/oracles.hpp"

namespace wedgekit {

namespace {

using nlohmann::json;

FinGenAbGroup grp(std::initializer_list<long> fs) {
  std::vector<Integer> v;
  for (long f : fs) v.emplace_back(f);
  return FinGenAbGroup(std::move(v));
}

SuiteResult elementary_operations(unsigned bound) {
  std::vector<std::pair<FinGenAbGroup, std::size_t>> cases;
  for (auto g : {grp({2, 2}), grp({3, 3}), grp({2, 4})})
    for (std::size_t d : {2, 3}) cases.emplace_back(g, d);
  if (bound >= 2) {
    cases.emplace_back(grp({2, 2, 2}), 3);
    cases.emplace_back(grp({4, 4}), 2);
  }
  SuiteResult res{"elementary-operations", true, json::array()};
  for (const auto& [g, d] : cases) {
    const auto rep = oracle::check_elem_op_orbits(g, d, 40 * bound);
    const bool ok = rep.mismatches == 0 && rep.replay_failures == 0 && rep.orbits == rep.fibers;
    res.passed = res.passed && ok;
    res.details.push_back(json{{"group", json_io::to_json(g)},
                               {"dimension", d},
                               {"tuples", rep.tuples},
                               {"orbits", rep.orbits},
                               {"fibers", rep.fibers},
                               {"replays", rep.replays},
                               {"passed", ok}});
  }
  return res;
}

SuiteResult symplectic(unsigned bound) {
  std::vector<FinGenAbGroup> bases{grp({2}), grp({3}), grp({4}), grp({5}), grp({2, 2}), grp({2, 4})};
  if (bound >= 2) bases.push_back(grp({3, 3}));
  SuiteResult res{"symplectic", true, json::array()};
  for (const auto& b : bases) {
    const auto rep = oracle::check_symplectic(b, 200000ULL * bound);
    const bool ok = rep.det_violations == 0 && rep.pfaffian_disagreements == 0 &&
                    (rep.brute_force == 0 || rep.brute_force == rep.automorphisms);
    res.passed = res.passed && ok;
    json d{{"base", json_io::to_json(b)}, {"automorphisms", rep.automorphisms}, {"passed", ok}};
    if (rep.brute_force) d["brute_force"] = rep.brute_force;
    res.details.push_back(std::move(d));
  }
  return res;
}

SuiteResult quantum_torus(unsigned bound) {
  const auto rep = oracle::check_qtorus(bound >= 2 ? 3 : 2, 12);
  return {"quantum-torus", rep.disagreements == 0,
          json{{"specs", rep.specs}, {"disagreements", rep.disagreements}, {"examples", rep.examples}}};
}

SuiteResult class_count(unsigned bound) {
  std::vector<std::pair<FinGenAbGroup, std::size_t>> cases{
      {grp({5}), 1}, {grp({7}), 1}, {grp({8}), 1}, {grp({9}), 1}, {grp({12}), 1},
      {grp({2, 4}), 2}, {grp({3, 3}), 2}, {grp({5, 5}), 2}, {grp({5}), 2}, {grp({3, 3}), 3}};
  if (bound >= 2) {
    cases.emplace_back(grp({7, 7}), 2);
    cases.emplace_back(grp({13}), 1);
  }
  SuiteResult res{"class-count", true, json::array()};
  for (const auto& [g, d] : cases) {
    const Integer count = count_classes(g, d).count;
    const std::size_t brute = oracle::count_wedge_classes(g, d);
    const bool ok = count == Integer(static_cast<unsigned long>(brute));
    res.passed = res.passed && ok;
    res.details.push_back(json{{"group", json_io::to_json(g)},
                               {"dimension", d},
                               {"count", json_io::to_json(count)},
                               {"brute_force", brute},
                               {"passed", ok}});
  }
  return res;
}

SuiteResult heisenberg(unsigned) {
  SuiteResult res{"heisenberg", true, json::array()};
  for (const auto& a : {grp({2}), grp({3}), grp({4}), grp({2, 2}), grp({6})}) {
    const HeisenbergRep h(a);
    const BilinearForm w = commutator_form(h);
    const SymplecticSpace s(a);
    std::vector<QmodZ> negated;
    for (const auto& q : s.form().gram_entries()) negated.push_back(-q);
    const bool matches = w.gram_entries() == negated;
    const bool ok = h.commutation_holds() && span_check(h) && is_symplectic(w) && matches;
    res.passed = res.passed && ok;
    res.details.push_back(json{{"group", json_io::to_json(a)}, {"prime", h.prime()}, {"passed", ok}});
  }
  return res;
}

SuiteResult pfaffian_identity(unsigned bound) {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> size(0, 4), num(-9, 9), den(1, 4);
  std::size_t violations = 0;
  const std::size_t trials = 100 * bound;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 2 * static_cast<std::size_t>(size(rng));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        m(i, j) = q;
        m(j, i) = -q;
      }
    const Rational pf = pfaffian(m);
    if (pf * pf != det(m)) ++violations;
  }
  return {"pfaffian", violations == 0, json{{"trials", trials}, {"violations", violations}}};
}

}  // namespace

std::vector<SuiteResult> run_selftest(unsigned bound) {
  if (bound == 0) bound = 1;
  const std::vector<std::pair<std::string, std::function<SuiteResult(unsigned)>>> suites{
      {"elementary-operations", elementary_operations},
      {"symplectic", symplectic},
      {"quantum-torus", quantum_torus},
      {"class-count", class_count},
      {"heisenberg", heisenberg},
      {"pfaffian", pfaffian_identity}};
  std::vector<std::future<SuiteResult>> running;
  for (const auto& [name, fn] : suites)
    running.push_back(std::async(std::launch::async, [name, fn, bound] {
      try {
        return fn(bound);
      } catch (const std::exception& e) {
        return SuiteResult{name, false, json{{"error", e.what()}}};
      }
    }));
  std::vector<SuiteResult> out;
  for (auto& f : running) out.push_back(f.get());
  return out;
}

}  // namespace wedgekit
