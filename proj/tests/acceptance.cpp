// Acceptance runner: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hexorb/builder.hpp"
#include "hexorb/indexcalc.hpp"
#include "hexorb/planemap.hpp"
#include "hexorb/spanning.hpp"
#include "hexorb/trifactor.hpp"

using namespace hexorb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first few failures of a sweep.
class Tally {
 public:
  void check(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failures: " << first_;
    return {failures_ == 0, os.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

template <class F>
void each_index_vector(Int max_km, F f) {
  for (Int k = 1; k <= max_km; ++k) {
    for (Int m = 1; k * m <= max_km; ++m) {
      for (Int s = 0; s < m; ++s) f(IndexVector{k, m, s});
    }
  }
}

Int mod(Int a, Int m) { return ((a % m) + m) % m; }

std::string show(const std::set<IndexVector>& s) {
  std::string out;
  for (const auto& x : s) out += x.str();
  return out;
}

Outcome c1_example_orbit() {
  const auto t0 = std::chrono::steady_clock::now();
  const Orbit o = orbit({1, 6, 3});
  const double us =
      std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
  const std::vector<IndexVector> want = {{1, 6, 3}, {2, 3, 1}, {3, 2, 0}};
  Tally t;
  t.check(o.as_set() == want, "orbit is " + o.str());
  t.check(us < 1000.0, "took " + std::to_string(us) + " us");
  return t.outcome(o.str() + " in " + std::to_string(static_cast<int>(us)) + " us");
}

Outcome c2_step_cubed() {
  Tally t;
  long n = 0;
  each_index_vector(2000, [&](const IndexVector& iv) {
    ++n;
    const IndexVector a = step(iv), b = step(a), c = step(b);
    t.check(c == iv && a.valid() && a.k * a.m == iv.k * iv.m, iv.str());
  });
  return t.outcome(std::to_string(n) + " index-vectors with k*m <= 2000");
}

Outcome c3_round_trip() {
  Tally t;
  long n = 0;
  each_index_vector(60, [&](const IndexVector& iv) {
    ++n;
    try {
      const LayeredDrawing d = build(iv);
      const RotationSystem& r = d.system;
      const ValidationReport rep = validate(r);
      const Factorization f = factorize(r);
      const Int km = iv.k * iv.m;
      const auto deg3 = rep.degree_histogram.count(3) ? rep.degree_histogram.at(3) : 0;
      t.check(index_vector(r, f, ClassLabel(0)) == iv && rep.vertices == 2 * km + 2 &&
                  rep.edges == 6 * km && deg3 == 4 && rep.in_P,
              iv.str());
    } catch (const Error& e) {
      t.check(false, iv.str() + " threw " + e.what());
    }
  });
  return t.outcome(std::to_string(n) + " builds with k*m <= 60");
}

Outcome c4_graph_matches_arithmetic() {
  Tally t;
  long n = 0;
  each_index_vector(30, [&](const IndexVector& iv) {
    ++n;
    try {
      const LayeredDrawing d = build(iv);
      const Factorization f = factorize(d.system);
      for (int q = 0; q < 3; ++q) {
        const IndexVector here = index_vector(d.system, f, ClassLabel(q));
        const IndexVector next = index_vector(d.system, f, ClassLabel(q + 1));
        t.check(step(here) == next, iv.str() + " q=" + std::to_string(q));
        const int sp = s_walk(d.system, f, ClassLabel(q), Sign::kPlus);
        const int sm = s_walk(d.system, f, ClassLabel(q), Sign::kMinus);
        t.check(mod(sm - sp - here.k, here.m) == 0 && sm == s_minus_of(here),
                iv.str() + " congruence at q=" + std::to_string(q));
      }
    } catch (const Error& e) {
      t.check(false, iv.str() + " threw " + e.what());
    }
  });
  return t.outcome(std::to_string(n) + " graphs with k*m <= 30, all three classes");
}

Outcome c5_billiards() {
  Tally t;
  long n = 0;
  for (Int m = 2; m <= 500; ++m) {
    for (Int s = 1; s < m; ++s) {
      ++n;
      const BilliardSequence g = billiard(s, m);
      const Int d = std::gcd(s, m), len = m / d;
      const std::string tag = "(" + std::to_string(s) + "/" + std::to_string(m) + ")";
      // (1) the terms are exactly the multiples of 2d below 2m
      std::vector<Int> terms(g.g);
      std::sort(terms.begin(), terms.end());
      bool set_ok = g.length() == len;
      for (Int j = 0; set_ok && j < len; ++j) set_ok = terms[j] == 2 * d * j;
      t.check(set_ok, tag + " term set");
      // (2) terminal value and no earlier hit of s, m, s+m
      const Int last = g.term(len);
      Int want = 0;
      if ((s / d) % 2 == 0) {
        want = s;
      } else if ((m / d) % 2 == 0) {
        want = m;
      } else {
        want = s + m;
      }
      bool early = false;
      for (Int j = 1; j < len; ++j) {
        const Int x = g.term(j);
        early |= x == s || x == m || x == s + m;
      }
      t.check(last == want && !early, tag + " terminal value");
      // (3) the value at the Farey index b
      const FareyPair fp = farey_pair(s, m);
      t.check(fp.a * m - fp.b * s == d && fp.b >= 1 && fp.b <= len, tag + " Farey pair");
      Int at_b = 0;
      if (fp.a == 1 && fp.b == 1) {
        at_b = 0;
      } else if (fp.a % 2 == 0) {
        at_b = s + d;
      } else if (fp.b % 2 == 0) {
        at_b = m - d;
      } else {
        at_b = s + m + d;
      }
      t.check(g.term(fp.b) == at_b, tag + " value at b");
    }
  }
  return t.outcome(std::to_string(n) + " fractions with m <= 500");
}

Outcome c6_one_point() {
  Tally t;
  // Witness families for s <= 3: (n, x) with n | x^2 + x + 1 and x <= 3.
  const std::set<std::pair<Int, Int>> families = {{1, 0}, {3, 1}, {7, 2}, {13, 3}};
  std::set<std::pair<Int, Int>> seen;
  std::set<IndexVector> k1_nontrivial;
  for (const IndexVector& iv : enumerate_one_point(2000)) {
    if (iv.s > 3) continue;
    const OrbitClassification c = classify(orbit(iv));
    t.check(c.one_point && families.count({c.n, c.x}) == 1, iv.str() + " outside the families");
    seen.insert({c.n, c.x});
    if (iv.k == 1 && c.x >= 1) k1_nontrivial.insert(iv);
  }
  t.check(seen == families, "not every family occurs");
  const std::set<IndexVector> want = {{1, 3, 1}, {1, 7, 2}, {1, 13, 3}};
  t.check(k1_nontrivial == want, "k = 1 members are " + show(k1_nontrivial));
  for (Int k = 1; k <= 50; ++k) {
    t.check(step({k, k, 0}) == IndexVector{k, k, 0}, "(k,k,0) not fixed");
  }

  long n = 0;
  each_index_vector(2000, [&](const IndexVector& iv) {
    ++n;
    const bool fixed = step(iv) == iv;
    bool predicate = false;
    if (iv.m % iv.k == 0 && iv.s % iv.k == 0) {
      const Int nn = iv.m / iv.k, x = iv.s / iv.k;
      predicate = (x * x + x + 1) % nn == 0;
    }
    t.check(fixed == predicate, iv.str());
  });
  return t.outcome("s <= 3 gives witnesses (1,0),(3,1),(7,2),(13,3); " + std::to_string(n) +
                   " predicate checks");
}

Outcome c7_non_simple() {
  Tally t;
  for (Int n = 2; n <= 10; ++n) {
    const IndexVector iv{n, 1, 0};
    const LayeredDrawing d = build(iv);
    const Factorization f = factorize(d.system);
    std::set<IndexVector> measured;
    for (int q = 0; q < 3; ++q) measured.insert(index_vector(d.system, f, ClassLabel(q)));
    const std::set<IndexVector> want = {{n, 1, 0}, {1, n, n - 1}, {1, n, 0}};
    t.check(!validate(d.system).simple, iv.str() + " is simple");
    t.check(measured == want, iv.str() + " orbit " + show(measured));
    t.check(!classify(orbit(iv)).simple_graph, iv.str() + " classified simple");
  }
  long n = 0;
  each_index_vector(30, [&](const IndexVector& iv) {
    const Orbit o = orbit(iv);
    bool shape = false;
    for (const auto& x : o.triple) shape |= x.m == 1 && x.k > 1;
    if (shape) return;
    ++n;
    t.check(validate(build(iv).system).simple, iv.str() + " is not simple");
  });
  return t.outcome("n = 2..10 non-simple with the expected orbit; " + std::to_string(n) +
                   " other graphs simple");
}

Outcome c8_bonds() {
  Tally t;
  long graphs = 0, bonds = 0;
  each_index_vector(10, [&](const IndexVector& iv) {
    const RotationSystem r = build(iv).system;
    ++graphs;
    long here = 0;
    enumerate_hamilton_bonds(r, [&](const Bipartition& p) {
      ++here;
      const EndTreeCensus c = end_tree_census(r, p);
      t.check(c.balanced_P() && c.a.total() == c.b.total(), iv.str() + " unbalanced bond");
      t.check(c.weighted_degrees_equal(), iv.str() + " weighted degree sums differ");
      return true;
    });
    bonds += here;
    t.check(here > 0, iv.str() + " has no Hamilton bond");
  });
  const RotationSystem ico = fixtures::icosahedron();
  long ico_bonds = 0;
  enumerate_hamilton_bonds(ico, [&](const Bipartition& p) {
    ++ico_bonds;
    const EndTreeCensus c = end_tree_census(ico, p);
    t.check(c.within_3(), "icosahedron bond with order gap above 3");
    t.check(c.weighted_degrees_equal(), "icosahedron weighted degree sums differ");
    return true;
  });
  t.check(ico_bonds > 0, "icosahedron has no Hamilton bond");
  return t.outcome(std::to_string(graphs) + " graphs of order <= 22 with " +
                   std::to_string(bonds) + " bonds; icosahedron " + std::to_string(ico_bonds) +
                   " bonds");
}

Outcome c9_caterpillars() {
  Tally t;
  long n = 0;
  each_index_vector(30, [&](const IndexVector& iv) {
    if ((2 * iv.k * iv.m + 2) % 4 != 2) return;
    ++n;
    try {
      const LayeredDrawing d = build(iv);
      const auto [a, b] = partition_even_caterpillars(d);
      const Verdict va = verify_certificate(d.system, a), vb = verify_certificate(d.system, b);
      std::vector<int> all(a.vertices);
      all.insert(all.end(), b.vertices.begin(), b.vertices.end());
      std::sort(all.begin(), all.end());
      std::vector<int> every(d.system.vertex_count());
      std::iota(every.begin(), every.end(), 0);
      t.check(va.ok && vb.ok, iv.str() + " rejected: " + va.reason + vb.reason);
      t.check(all == every, iv.str() + " does not partition V");
      t.check(a.vertices.size() == b.vertices.size(), iv.str() + " unequal orders");
      t.check(equitable_two_coloring(d.system, a.vertices).equitable &&
                  equitable_two_coloring(d.system, b.vertices).equitable,
              iv.str() + " not equitable");
    } catch (const Error& e) {
      t.check(false, iv.str() + " threw " + e.what());
    }
  });
  return t.outcome(std::to_string(n) + " graphs of order 2 (mod 4) up to 62");
}

Outcome c10_induced_paths() {
  Tally t;
  long graphs = 0, runs = 0;
  each_index_vector(30, [&](const IndexVector& iv) {
    const LayeredDrawing d = build(iv);
    const Factorization f = factorize(d.system);
    bool any = false;
    for (int q = 0; q < 3; ++q) {
      const IndexVector x = index_vector(d.system, f, ClassLabel(q));
      if (x.m % 2 == 0 || 3 * x.k < x.m) continue;
      any = true;
      ++runs;
      const std::string tag = iv.str() + " q=" + std::to_string(q);
      try {
        const auto [a, b] = partition_induced_paths(d, ClassLabel(q));
        const Verdict va = verify_certificate(d.system, a), vb = verify_certificate(d.system, b);
        std::vector<int> all(a.vertices);
        all.insert(all.end(), b.vertices.begin(), b.vertices.end());
        std::sort(all.begin(), all.end());
        std::vector<int> every(d.system.vertex_count());
        std::iota(every.begin(), every.end(), 0);
        t.check(va.ok && vb.ok, tag + " rejected: " + va.reason + vb.reason);
        t.check(all == every, tag + " does not partition V");
      } catch (const Error& e) {
        t.check(false, tag + " threw " + e.what());
      }
    }
    graphs += any;
  });
  return t.outcome(std::to_string(graphs) + " graphs up to order 62, " + std::to_string(runs) +
                   " admissible classes");
}

Outcome c11_op_equivalence() {
  Tally t;
  const RotationSystem a = build({1, 6, 3}).system, b = build({3, 2, 0}).system,
                       c = build({2, 3, 1}).system;
  t.check(op_equivalent(a, b) && op_equivalent(b, c) && op_equivalent(a, c),
          "Example orbit graphs differ");
  const RotationSystem x = build({1, 7, 2}).system;
  t.check(!op_equivalent(x, mirror(x)), "(1,7,2) equals its mirror");
  const RotationSystem y = build({4, 4, 0}).system;
  t.check(op_equivalent(y, mirror(y)), "(4,4,0) differs from its mirror");
  return t.outcome("(1,6,3)~(3,2,0)~(2,3,1); (1,7,2) chiral; (4,4,0) achiral");
}

Outcome c12_fibonacci() {
  Tally t;
  std::vector<Int> a = {0, 1, 1};  // a_1 = a_2 = 1
  while (a.size() < 12) a.push_back(a[a.size() - 1] + a[a.size() - 2]);
  std::string shown;
  for (int n = 1; n <= 3; ++n) {
    const Int a2n = a[2 * n], a2n1 = a[2 * n + 1], a2n2 = a[2 * n + 2];
    const IndexVector x{1, a2n1 * a2n2, a2n * a2n2}, y{a2n2, a2n1, 0}, z{a2n1, a2n2, a2n};
    t.check(step(x) == y && step(y) == z && step(z) == x, x.str() + y.str() + z.str());
    shown += (n > 1 ? " " : "") + x.str() + y.str() + z.str();
  }
  return t.outcome(shown);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 orbit of (1,6,3)", c1_example_orbit},
      {"2 step^3 = id for k*m <= 2000", c2_step_cubed},
      {"3 build/measure round trip for k*m <= 60", c3_round_trip},
      {"4 graph walks agree with arithmetic for k*m <= 30", c4_graph_matches_arithmetic},
      {"5 billiard identities for m <= 500", c5_billiards},
      {"6 one-point orbits", c6_one_point},
      {"7 non-simple members", c7_non_simple},
      {"8 Hamilton bond balance", c8_bonds},
      {"9 even caterpillar partitions", c9_caterpillars},
      {"10 induced path partitions", c10_induced_paths},
      {"11 op-equivalence and mirrors", c11_op_equivalence},
      {"12 Fibonacci orbits", c12_fibonacci},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s: %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str(), s);
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
