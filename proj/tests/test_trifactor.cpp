#include <doctest.h>

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "hexorb/builder.hpp"
#include "hexorb/trifactor.hpp"

using namespace hexorb;

namespace {

// All class assignments where CCW successors step the class by one, by backtracking over edges.
std::vector<std::vector<int>> all_factorizations(const RotationSystem& r) {
  const int e_count = r.edge_count();
  std::vector<int> cls(e_count, -1);
  std::vector<std::vector<int>> out;
  auto consistent = [&](int e) {
    for (Dart d : {2 * e, 2 * e + 1}) {
      const int here = cls[e];
      const int next = cls[RotationSystem::edge_of(r.next_ccw(d))];
      const int prev = cls[RotationSystem::edge_of(r.prev_ccw(d))];
      if (next >= 0 && next != (here + 1) % 3) return false;
      if (prev >= 0 && here != (prev + 1) % 3) return false;
    }
    return true;
  };
  std::function<void(int)> go = [&](int e) {
    if (e == e_count) {
      out.push_back(cls);
      return;
    }
    for (int c = 0; c < 3; ++c) {
      cls[e] = c;
      if (consistent(e)) go(e + 1);
    }
    cls[e] = -1;
  };
  go(0);
  return out;
}

}  // namespace

TEST_CASE("ClassLabel arithmetic") {
  CHECK(ClassLabel(3) == ClassLabel(0));
  CHECK(ClassLabel(-1) == ClassLabel(2));
  CHECK((ClassLabel(2) + 1).value() == 0);
  CHECK((ClassLabel(0) - 1).value() == 2);
}

TEST_CASE("K4 classes follow the rotation") {
  const RotationSystem r = fixtures::k4();
  const Factorization f = factorize(r);
  CHECK(f[0] == ClassLabel(0));
  for (int v = 0; v < 4; ++v) {
    const auto rot = r.rotation(v);
    for (size_t i = 0; i < rot.size(); ++i) {
      const ClassLabel a = f[RotationSystem::edge_of(rot[i])];
      const ClassLabel b = f[RotationSystem::edge_of(rot[(i + 1) % rot.size()])];
      CHECK(b == a + 1);
    }
  }
  CHECK(satisfies_star(r, f));
  CHECK_FALSE(satisfies_star(r, Factorization{{0, 0, 0, 0, 0, 0}}));
}

TEST_CASE("class sizes and components") {
  const RotationSystem s0 = build({1, 6, 3}).system;
  const Factorization f = factorize(s0);
  int sizes[3] = {0, 0, 0};
  for (int c : f.class_of) ++sizes[c];
  CHECK(sizes[0] == 12);
  CHECK(sizes[1] == 12);
  CHECK(sizes[2] == 12);

  const ClassComponents c0 = class_components(s0, f, ClassLabel(0));
  CHECK(c0.K == 1);
  CHECK(c0.M == 6);
  CHECK(c0.cycles.empty());
  CHECK(c0.paths[0].size() == 7);

  const RotationSystem s1 = build({3, 2, 0}).system;
  const ClassComponents c1 = class_components(s1, factorize(s1), ClassLabel(0));
  CHECK(c1.K == 3);
  CHECK(c1.M == 2);
  REQUIRE(c1.cycles.size() == 2);
  CHECK(c1.cycles[0].size() == 4);
  CHECK(c1.cycles[1].size() == 4);

  const RotationSystem k4 = fixtures::k4();
  for (int q = 0; q < 3; ++q) {
    const ClassComponents c = class_components(k4, factorize(k4), ClassLabel(q));
    CHECK(c.K == 1);
    CHECK(c.M == 1);
  }
}

TEST_CASE("non-members are rejected") {
  CHECK_THROWS_AS(factorize(fixtures::octahedron()), Error);
  try {
    factorize(fixtures::icosahedron());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
  }
}

TEST_CASE("measures of every class of every small drawing") {
  for (Int k = 1; k <= 10; ++k) {
    for (Int m = 1; k * m <= 10; ++m) {
      for (Int s = 0; s < m; ++s) {
        const RotationSystem r = build({k, m, s}).system;
        const Factorization f = factorize(r);
        CHECK(satisfies_star(r, f));
        std::set<int> deg3;
        for (int v = 0; v < r.vertex_count(); ++v) {
          if (r.degree(v) == 3) deg3.insert(v);
        }
        for (int q = 0; q < 3; ++q) {
          const ClassComponents c = class_components(r, f, ClassLabel(q));
          CHECK(2 * c.K * c.M + 2 == r.vertex_count());
          CHECK(c.K * c.M == k * m);
          CHECK(static_cast<int>(c.cycles.size()) == c.K - 1);
          std::set<int> ends;
          for (const auto& p : c.paths) {
            ends.insert(p.front());
            ends.insert(p.back());
          }
          CHECK(ends == deg3);
        }
      }
    }
  }
}

TEST_CASE("exactly three factorizations") {
  for (const RotationSystem& r : {fixtures::k4(), build({1, 3, 1}).system}) {
    const auto all = all_factorizations(r);
    CHECK(all.size() == 3);
    const Factorization f = factorize(r);
    std::set<std::vector<int>> shifts;
    for (int d = 0; d < 3; ++d) shifts.insert(shifted(f, d).class_of);
    CHECK(std::set<std::vector<int>>(all.begin(), all.end()) == shifts);
  }
}
