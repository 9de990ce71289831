#include "hexorb/trifactor.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace hexorb {

Factorization factorize(const RotationSystem& r) {
  Factorization f;
  f.class_of.assign(r.edge_count(), -1);
  if (r.edge_count() == 0) return f;
  f.class_of[0] = 0;
  std::deque<Dart> queue{0, 1};
  auto assign = [&](Dart d, int cls) {
    const int e = RotationSystem::edge_of(d);
    if (f.class_of[e] == -1) {
      f.class_of[e] = cls;
      queue.push_back(2 * e);
      queue.push_back(2 * e + 1);
    } else if (f.class_of[e] != cls) {
      throw Error(ErrorKind::kPrecondition,
                  "factorization conflict at edge " + std::to_string(e) +
                      ": the system is not in the (3,6)-family");
    }
  };
  while (!queue.empty()) {
    const Dart d = queue.front();
    queue.pop_front();
    const int c = f.class_of[RotationSystem::edge_of(d)];
    assign(r.next_ccw(d), (c + 1) % 3);
    assign(r.prev_ccw(d), (c + 2) % 3);
  }
  if (std::find(f.class_of.begin(), f.class_of.end(), -1) != f.class_of.end()) {
    throw Error(ErrorKind::kPrecondition, "factorization needs a connected system");
  }
  return f;
}

bool satisfies_star(const RotationSystem& r, const Factorization& f) {
  if (static_cast<int>(f.class_of.size()) != r.edge_count()) return false;
  for (Dart d = 0; d < r.dart_count(); ++d) {
    const int a = f.class_of[RotationSystem::edge_of(d)];
    const int b = f.class_of[RotationSystem::edge_of(r.next_ccw(d))];
    if (a < 0 || a > 2 || b != (a + 1) % 3) return false;
  }
  return true;
}

Factorization shifted(const Factorization& f, int delta) {
  Factorization g = f;
  for (int& c : g.class_of) c = ClassLabel(c + delta).value();
  return g;
}

namespace {

[[noreturn]] void structural(const std::string& what) {
  throw Error(ErrorKind::kStructural, "class factor violates the q-drawing shape: " + what);
}

}  // namespace

ClassComponents class_components(const RotationSystem& r, const Factorization& f,
                                 ClassLabel q) {
  const int n = r.vertex_count();
  std::vector<std::vector<Dart>> qdarts(n);
  for (int v = 0; v < n; ++v) {
    for (Dart d : r.rotation(v)) {
      if (f[RotationSystem::edge_of(d)] == q) qdarts[v].push_back(d);
    }
    if (qdarts[v].empty() || qdarts[v].size() > 2) {
      structural("vertex " + std::to_string(v) + " has " +
                 std::to_string(qdarts[v].size()) + " class edges");
    }
  }

  std::vector<char> seen(n, 0);
  // Follows the factor from `start` leaving along `first`; returns vertices
  // and edges until the walk ends or closes up.
  auto follow = [&](int start, Dart first, std::vector<int>& verts, std::vector<int>& edges) {
    verts = {start};
    edges.clear();
    seen[start] = 1;
    Dart d = first;
    for (;;) {
      const int e = RotationSystem::edge_of(d);
      edges.push_back(e);
      const int w = r.target(d);
      if (w == start) return;  // cycle closed
      verts.push_back(w);
      seen[w] = 1;
      const auto& ds = qdarts[w];
      if (ds.size() == 1) return;  // path end
      const Dart back = RotationSystem::twin(d);
      d = ds[0] == back ? ds[1] : ds[0];
    }
  };

  ClassComponents cc;
  cc.q = q;
  int npaths = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[v] || qdarts[v].size() != 1) continue;
    if (npaths == 2) structural("more than two maximal paths");
    follow(v, qdarts[v][0], cc.paths[npaths], cc.path_edges[npaths]);
    ++npaths;
  }
  if (npaths != 2) structural("expected two maximal paths, found " + std::to_string(npaths));
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> verts, edges;
    follow(v, qdarts[v][0], verts, edges);
    cc.cycles.push_back(std::move(verts));
    cc.cycle_edges.push_back(std::move(edges));
  }
  cc.M = static_cast<int>(cc.path_edges[0].size());
  if (static_cast<int>(cc.path_edges[1].size()) != cc.M) structural("paths of unequal length");
  for (const auto& c : cc.cycles) {
    if (static_cast<int>(c.size()) != 2 * cc.M) structural("cycle length differs from 2M");
  }
  for (const auto& p : cc.paths) {
    if (r.degree(p.front()) != 3 || r.degree(p.back()) != 3) {
      structural("path end is not a degree-3 vertex");
    }
  }
  cc.K = static_cast<int>(cc.cycles.size()) + 1;
  return cc;
}

}  // namespace hexorb
