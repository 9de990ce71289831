#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace fixtures {
namespace {

using hexorb::EdgeEnds;
using hexorb::RotationSystem;
using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Rotation from directions: dir(v, e) is the tangent of edge e at v in the
// plane of v's local frame.
template <class Dir>
RotationSystem by_angle(int n, const std::vector<EdgeEnds>& edges, Dir dir) {
  std::vector<std::vector<std::pair<double, int>>> around(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    for (int v : {edges[e].u, edges[e].v}) {
      const auto [x, y] = dir(v, e);
      around[v].push_back({std::atan2(y, x), e});
    }
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (const auto& [a, e] : around[v]) rot[v].push_back(e);
  }
  return RotationSystem::FromEdgeRotation(n, edges, rot);
}

RotationSystem convex_polytope(const std::vector<Vec3>& pts, double edge_len) {
  const int n = static_cast<int>(pts.size());
  std::vector<EdgeEnds> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Vec3 d = sub(pts[u], pts[v]);
      if (std::abs(std::sqrt(dot(d, d)) - edge_len) < 1e-6) edges.push_back({u, v});
    }
  }
  return by_angle(n, edges, [&](int v, int e) {
    const Vec3& normal = pts[v];
    Vec3 t1 = cross(normal, {0.3, 0.5, 0.7});
    const Vec3 t2 = cross(normal, t1);
    const int w = edges[e].u == v ? edges[e].v : edges[e].u;
    const Vec3 d = sub(pts[w], pts[v]);
    // (t1, t2, normal) is right-handed, so this is CCW seen from outside.
    return std::pair{dot(d, t1), dot(d, t2)};
  });
}

}  // namespace

RotationSystem k4() {
  const std::vector<std::pair<double, double>> at = {{0, 1}, {-0.87, -0.5}, {0.87, -0.5}, {0, 0}};
  const std::vector<EdgeEnds> edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  return by_angle(4, edges, [&](int v, int e) {
    const int w = edges[e].u == v ? edges[e].v : edges[e].u;
    return std::pair{at[w].first - at[v].first, at[w].second - at[v].second};
  });
}

RotationSystem octahedron() {
  return convex_polytope({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                         std::sqrt(2.0));
}

RotationSystem icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vec3> pts;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      pts.push_back({0, a, b});
      pts.push_back({a, b, 0});
      pts.push_back({b, 0, a});
    }
  }
  return convex_polytope(pts, 2.0);
}

RotationSystem labelled_152(std::map<std::string, int>* names) {
  const double h = 0.866;
  std::vector<std::pair<std::string, std::pair<double, double>>> pts;
  for (int i = 0; i <= 5; ++i) pts.push_back({"s" + std::to_string(i), {i, 0}});
  pts.push_back({"cg", {2.5, 0.333 * h}});
  pts.push_back({"cg1", {2.5, 1 * h}});
  pts.push_back({"cg2", {2.5, 2 * h}});
  pts.push_back({"cd", {2.5, -0.333 * h}});
  pts.push_back({"cd1", {2.5, -1 * h}});
  pts.push_back({"cd2", {2.5, -2 * h}});
  std::map<std::string, int> id;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) id[pts[i].first] = i;

  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"s0", "s1"},   {"s1", "s2"},  {"s2", "s3"},  {"s3", "s4"},  {"s4", "s5"},
      {"cg", "cg1"},  {"cg1", "cg2"}, {"cg", "s2"},  {"cg", "s3"},  {"cg1", "s2"},
      {"cg1", "s3"},  {"cg1", "s1"}, {"cg1", "s4"}, {"cg2", "s1"}, {"cg2", "s4"},
      {"cg2", "s0"},  {"cg2", "s5"}, {"cd", "cd1"}, {"cd1", "cd2"}, {"cd", "s2"},
      {"cd", "s3"},   {"cd1", "s2"}, {"cd1", "s3"}, {"cd1", "s1"}, {"cd1", "s4"},
      {"cd2", "s1"},  {"cd2", "s4"}, {"cd2", "s0"}, {"cd2", "s5"}, {"cg2", "cd2"}};
  std::vector<EdgeEnds> edges;
  for (const auto& [a, b] : pairs) edges.push_back({id[a], id[b]});
  const int curved = static_cast<int>(edges.size()) - 1;
  if (names) *names = id;

  return by_angle(static_cast<int>(pts.size()), edges, [&](int v, int e) {
    // The curved edge leaves both of its ends towards the left.
    if (e == curved) return std::pair{-1.0, 0.0};
    const int w = edges[e].u == v ? edges[e].v : edges[e].u;
    return std::pair{pts[w].second.first - pts[v].second.first,
                     pts[w].second.second - pts[v].second.second};
  });
}

}  // namespace fixtures
