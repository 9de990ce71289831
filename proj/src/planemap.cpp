#include "hexorb/planemap.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace hexorb {
namespace {

[[noreturn]] void bad_input(const std::string& what) {
  throw Error(ErrorKind::kBadInput, what);
}

}  // namespace

RotationSystem RotationSystem::FromDartRotation(
    int vertex_count, std::vector<EdgeEnds> edges,
    const std::vector<std::vector<Dart>>& rotation) {
  if (vertex_count < 0) bad_input("negative vertex count");
  if (static_cast<int>(rotation.size()) != vertex_count) {
    bad_input("rotation must list exactly one entry per vertex");
  }
  RotationSystem r;
  r.edges_ = std::move(edges);
  for (size_t e = 0; e < r.edges_.size(); ++e) {
    const auto [u, v] = r.edges_[e];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      bad_input("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (u == v) bad_input("loop edge " + std::to_string(e) + " is not allowed");
  }
  const int darts = r.dart_count();
  std::vector<int> seen(darts, 0);
  r.rotation_ = rotation;
  r.next_.assign(darts, -1);
  r.prev_.assign(darts, -1);
  for (int v = 0; v < vertex_count; ++v) {
    const auto& rot = r.rotation_[v];
    for (size_t i = 0; i < rot.size(); ++i) {
      const Dart d = rot[i];
      if (d < 0 || d >= darts) bad_input("dart id out of range");
      if (r.origin(d) != v) {
        bad_input("rotation of vertex " + std::to_string(v) +
                  " mentions edge " + std::to_string(edge_of(d)) +
                  " which is not incident to it");
      }
      if (seen[d]++) bad_input("dart listed twice in rotation");
      const Dart nxt = rot[(i + 1) % rot.size()];
      r.next_[d] = nxt;
      r.prev_[nxt] = d;
    }
  }
  for (int d = 0; d < darts; ++d) {
    if (!seen[d]) {
      bad_input("edge " + std::to_string(edge_of(d)) +
                " is missing from the rotation of vertex " +
                std::to_string(r.origin(d)));
    }
  }
  return r;
}

RotationSystem RotationSystem::FromEdgeRotation(
    int vertex_count, std::vector<EdgeEnds> edges,
    const std::vector<std::vector<int>>& rotation) {
  if (static_cast<int>(rotation.size()) != vertex_count) {
    bad_input("rotation must list exactly one entry per vertex");
  }
  std::vector<std::vector<Dart>> darts(rotation.size());
  for (size_t v = 0; v < rotation.size(); ++v) {
    for (int e : rotation[v]) {
      if (e < 0 || e >= static_cast<int>(edges.size())) {
        bad_input("rotation of vertex " + std::to_string(v) +
                  " mentions unknown edge " + std::to_string(e));
      }
      const auto [a, b] = edges[e];
      if (a == b) bad_input("loop edge " + std::to_string(e) + " is not allowed");
      if (a == static_cast<int>(v)) {
        darts[v].push_back(2 * e);
      } else if (b == static_cast<int>(v)) {
        darts[v].push_back(2 * e + 1);
      } else {
        bad_input("rotation of vertex " + std::to_string(v) +
                  " mentions edge " + std::to_string(e) +
                  " which is not incident to it");
      }
    }
  }
  return FromDartRotation(vertex_count, std::move(edges), darts);
}

std::vector<std::vector<int>> RotationSystem::edge_rotation() const {
  std::vector<std::vector<int>> out(rotation_.size());
  for (size_t v = 0; v < rotation_.size(); ++v) {
    for (Dart d : rotation_[v]) out[v].push_back(edge_of(d));
  }
  return out;
}

bool is_connected(const RotationSystem& r) {
  const int n = r.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (Dart d : r.rotation(v)) {
      const int w = r.target(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::vector<std::vector<Dart>> faces(const RotationSystem& r) {
  if (!is_connected(r)) bad_input("face extraction needs a connected system");
  std::vector<char> used(r.dart_count(), 0);
  std::vector<std::vector<Dart>> out;
  for (Dart start = 0; start < r.dart_count(); ++start) {
    if (used[start]) continue;
    std::vector<Dart> cycle;
    Dart d = start;
    do {
      used[d] = 1;
      cycle.push_back(d);
      d = r.next_ccw(RotationSystem::twin(d));
    } while (d != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

namespace {

// No cut vertex, via DFS lowpoints. Parallel edges are harmless here.
bool has_no_cut_vertex(const RotationSystem& r) {
  const int n = r.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool ok = true;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Dart d : r.rotation(v)) {
      const int e = RotationSystem::edge_of(d);
      if (e == parent_edge) continue;
      const int w = r.target(d);
      if (disc[w] == -1) {
        ++children;
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (parent_edge != -1 && low[w] >= disc[v]) ok = false;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent_edge == -1 && children > 1) ok = false;
  };
  dfs(0, -1);
  return ok;
}

}  // namespace

ValidationReport validate(const RotationSystem& r) {
  ValidationReport rep;
  rep.vertices = r.vertex_count();
  rep.edges = r.edge_count();
  for (int v = 0; v < r.vertex_count(); ++v) ++rep.degree_histogram[r.degree(v)];

  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : r.edges()) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  rep.simple = std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();

  rep.connected = r.vertex_count() > 0 && is_connected(r);
  if (!rep.connected) return rep;
  rep.two_connected = r.vertex_count() >= 3 && has_no_cut_vertex(r);
  const auto fs = faces(r);
  rep.faces = static_cast<int>(fs.size());
  rep.spherical = rep.vertices - rep.edges + rep.faces == 2;
  rep.all_faces_triangles = std::all_of(
      fs.begin(), fs.end(), [](const auto& f) { return f.size() == 3; });

  const bool triangulation =
      rep.two_connected && rep.spherical && rep.all_faces_triangles;
  bool only_3_6 = true, at_most_6 = true;
  for (const auto& [deg, cnt] : rep.degree_histogram) {
    if (deg != 3 && deg != 6) only_3_6 = false;
    if (deg > 6) at_most_6 = false;
  }
  rep.in_P = triangulation && only_3_6;
  rep.in_H = triangulation && at_most_6;
  return rep;
}

RotationSystem mirror(const RotationSystem& r) {
  std::vector<std::vector<Dart>> rot(r.vertex_count());
  for (int v = 0; v < r.vertex_count(); ++v) {
    auto span = r.rotation(v);
    rot[v].assign(span.begin(), span.end());
    // Keep the first dart in place so mirror(mirror(r)) == r exactly.
    if (rot[v].size() > 1) std::reverse(rot[v].begin() + 1, rot[v].end());
  }
  return RotationSystem::FromDartRotation(r.vertex_count(), r.edges(), rot);
}

namespace {

// Extends root_a -> root_b along next_ccw and twin. Returns the dart map
// when it is a consistent bijection.
std::optional<std::vector<Dart>> try_root(const RotationSystem& a,
                                          const RotationSystem& b,
                                          Dart root_a, Dart root_b) {
  const int n = a.dart_count();
  std::vector<Dart> fwd(n, -1), back(n, -1);
  std::deque<Dart> queue{root_a};
  fwd[root_a] = root_b;
  back[root_b] = root_a;
  while (!queue.empty()) {
    const Dart d = queue.front();
    queue.pop_front();
    const Dart img = fwd[d];
    const std::pair<Dart, Dart> steps[2] = {
        {a.next_ccw(d), b.next_ccw(img)},
        {RotationSystem::twin(d), RotationSystem::twin(img)}};
    for (const auto& [x, y] : steps) {
      if (fwd[x] == -1) {
        if (back[y] != -1) return std::nullopt;
        fwd[x] = y;
        back[y] = x;
        queue.push_back(x);
      } else if (fwd[x] != y) {
        return std::nullopt;
      }
    }
  }
  return fwd;
}

std::vector<int> rooted_word(const RotationSystem& r, Dart root) {
  const int n = r.dart_count();
  std::vector<int> label(n, -1);
  std::vector<Dart> order{root};
  label[root] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    const Dart d = order[i];
    for (Dart x : {r.next_ccw(d), RotationSystem::twin(d)}) {
      if (label[x] == -1) {
        label[x] = static_cast<int>(order.size());
        order.push_back(x);
      }
    }
  }
  std::vector<int> word;
  word.reserve(2 * order.size());
  for (Dart d : order) {
    word.push_back(label[r.next_ccw(d)]);
    word.push_back(label[RotationSystem::twin(d)]);
  }
  return word;
}

}  // namespace

std::optional<std::vector<Dart>> op_isomorphism(const RotationSystem& a,
                                                const RotationSystem& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  if (a.edge_count() == 0) {
    return a.vertex_count() <= 1 ? std::optional<std::vector<Dart>>(std::vector<Dart>{})
                                 : std::nullopt;
  }
  // Degree sequences must agree for the root pair to be worth trying.
  const Dart root = 0;
  const int root_deg = a.degree(a.origin(root));
  for (Dart cand = 0; cand < b.dart_count(); ++cand) {
    if (b.degree(b.origin(cand)) != root_deg) continue;
    if (auto m = try_root(a, b, root, cand)) return m;
  }
  return std::nullopt;
}

bool op_equivalent(const RotationSystem& a, const RotationSystem& b) {
  return op_isomorphism(a, b).has_value();
}

std::vector<int> canonical_code(const RotationSystem& r) {
  std::vector<int> best;
  for (Dart root = 0; root < r.dart_count(); ++root) {
    auto w = rooted_word(r, root);
    if (best.empty() || w < best) best = std::move(w);
  }
  best.insert(best.begin(), {r.vertex_count(), r.edge_count()});
  return best;
}

// -- documents -------------------------------------------------------------

GraphDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_input(std::string("malformed document: ") + e.what());
  }
  try {
    if (!j.is_object()) bad_input("malformed document: expected an object");
    for (const char* key : {"vertices", "edges", "rotation"}) {
      if (!j.contains(key)) bad_input(std::string("malformed document: missing \"") + key + "\"");
    }
    const int n = j.at("vertices").get<int>();
    std::vector<EdgeEnds> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) bad_input("malformed document: edge must be [u, v]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    for (size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].u == edges[i].v) {
        bad_input("loop edge " + std::to_string(i) + " is not allowed");
      }
    }
    auto rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    GraphDocument doc;
    doc.system = RotationSystem::FromEdgeRotation(n, std::move(edges), rotation);
    if (j.contains("layers")) {
      doc.layers = j.at("layers").get<std::vector<std::vector<int>>>();
      for (const auto& layer : doc.layers) {
        for (int v : layer) {
          if (v < 0 || v >= n) bad_input("malformed document: layer vertex out of range");
        }
      }
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    bad_input(std::string("malformed document: ") + e.what());
  }
}

RotationSystem parse_rotation_system(std::string_view text) {
  return parse_document(text).system;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::kJson;
  if (name == "dot") return ExportFormat::kDot;
  if (name == "svg") return ExportFormat::kSvg;
  bad_input("unknown format '" + std::string(name) + "' (expected json, dot or svg)");
}

namespace {

void write_int_list(std::ostream& os, const std::vector<int>& xs) {
  os << '[';
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ']';
}

constexpr const char* kClassColor[3] = {"red", "green", "blue"};

void check_classes(const RotationSystem& r, std::span<const int> edge_class) {
  if (edge_class.empty()) return;
  if (static_cast<int>(edge_class.size()) != r.edge_count()) {
    bad_input("factorization does not cover every edge");
  }
  for (int c : edge_class) {
    if (c < 0 || c > 2) bad_input("edge class outside {0, 1, 2}");
  }
}

std::string to_dot(const RotationSystem& r, std::span<const int> edge_class) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < r.vertex_count(); ++v) os << "  " << v << ";\n";
  for (int e = 0; e < r.edge_count(); ++e) {
    const auto [u, v] = r.edge(e);
    os << "  " << u << " -- " << v << " [id=e" << e;
    if (!edge_class.empty()) {
      os << ", class=" << edge_class[e] << ", color=" << kClassColor[edge_class[e]];
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_svg(const RotationSystem& r, std::span<const int> edge_class,
                   const std::vector<std::vector<int>>& layers) {
  const int n = r.vertex_count();
  std::vector<double> x(n, 0.0), y(n, 0.0);
  const double pi = std::numbers::pi;
  std::vector<char> placed(n, 0);
  double radius = 40.0;
  if (!layers.empty()) {
    // Concentric rings, innermost layer first.
    const double step = 40.0;
    for (size_t i = 0; i < layers.size(); ++i) {
      const auto& layer = layers[i];
      const double rad = step * static_cast<double>(i + 1);
      for (size_t p = 0; p < layer.size(); ++p) {
        const double a = 2 * pi * static_cast<double>(p) / static_cast<double>(layer.size()) +
                         0.5 * pi * static_cast<double>(i) / static_cast<double>(layers.size());
        x[layer[p]] = rad * std::cos(a);
        y[layer[p]] = -rad * std::sin(a);
        placed[layer[p]] = 1;
      }
      radius = rad;
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (!placed[v]) rest.push_back(v);
  }
  if (!rest.empty()) {
    radius += 40.0;
    for (size_t i = 0; i < rest.size(); ++i) {
      const double a = 2 * pi * static_cast<double>(i) / static_cast<double>(rest.size());
      x[rest[i]] = radius * std::cos(a);
      y[rest[i]] = -radius * std::sin(a);
    }
  }
  const double half = radius + 20.0;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -half << ' ' << -half
     << ' ' << 2 * half << ' ' << 2 * half << "\">\n";
  for (int e = 0; e < r.edge_count(); ++e) {
    const auto [u, v] = r.edge(e);
    const char* color = edge_class.empty() ? "black" : kClassColor[edge_class[e]];
    os << "  <line x1=\"" << x[u] << "\" y1=\"" << y[u] << "\" x2=\"" << x[v] << "\" y2=\""
       << y[v] << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
  }
  for (int v = 0; v < n; ++v) {
    const char* fill = r.degree(v) == 3 ? "black" : "white";
    os << "  <circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"3\" fill=\"" << fill
       << "\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string to_json(const RotationSystem& r, const std::vector<std::vector<int>>& layers) {
  std::ostringstream os;
  os << "{\"vertices\": " << r.vertex_count() << ", \"edges\": [";
  for (int e = 0; e < r.edge_count(); ++e) {
    os << (e ? ", " : "") << '[' << r.edge(e).u << ", " << r.edge(e).v << ']';
  }
  os << "], \"rotation\": [";
  const auto rot = r.edge_rotation();
  for (size_t v = 0; v < rot.size(); ++v) {
    if (v) os << ", ";
    write_int_list(os, rot[v]);
  }
  os << ']';
  if (!layers.empty()) {
    os << ", \"layers\": [";
    for (size_t i = 0; i < layers.size(); ++i) {
      if (i) os << ", ";
      write_int_list(os, layers[i]);
    }
    os << ']';
  }
  os << "}\n";
  return os.str();
}

std::string export_graph(const RotationSystem& r, std::span<const int> edge_class,
                         const std::vector<std::vector<int>>& layers, ExportFormat format) {
  check_classes(r, edge_class);
  switch (format) {
    case ExportFormat::kJson:
      return to_json(r, layers);
    case ExportFormat::kDot:
      return to_dot(r, edge_class);
    case ExportFormat::kSvg:
      return to_svg(r, edge_class, layers);
  }
  bad_input("unknown format");
}

}  // namespace hexorb
