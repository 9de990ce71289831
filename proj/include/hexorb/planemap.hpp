#pragma once

// Plane graphs stored as rotation systems (combinatorial maps).
//
// Edge i owns darts 2i and 2i+1; dart 2i leaves edges[i].u. The rotation at
// a vertex is the counter-clockwise cyclic order of the darts leaving it.
// Faces are the orbits of d -> next_ccw(twin(d)).

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hexorb/error.hpp"

namespace hexorb {

using Dart = int;

struct EdgeEnds {
  int u = 0;
  int v = 0;

  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

class RotationSystem {
 public:
  RotationSystem() = default;

  /// Builds from per-vertex CCW lists of edge ids (the document form).
  /// Throws Error(kBadInput) on loops, foreign edge ids, or incomplete lists.
  static RotationSystem FromEdgeRotation(
      int vertex_count, std::vector<EdgeEnds> edges,
      const std::vector<std::vector<int>>& rotation);

  /// Builds from per-vertex CCW lists of darts.
  static RotationSystem FromDartRotation(
      int vertex_count, std::vector<EdgeEnds> edges,
      const std::vector<std::vector<Dart>>& rotation);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  const std::vector<EdgeEnds>& edges() const { return edges_; }
  const EdgeEnds& edge(int e) const { return edges_[e]; }

  static constexpr Dart twin(Dart d) { return d ^ 1; }
  static constexpr int edge_of(Dart d) { return d >> 1; }

  int origin(Dart d) const {
    return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u;
  }
  int target(Dart d) const { return origin(twin(d)); }

  Dart next_ccw(Dart d) const { return next_[d]; }
  Dart prev_ccw(Dart d) const { return prev_[d]; }

  /// The dart of edge e that leaves vertex v. Requires v to be an end of e.
  Dart dart_from(int e, int v) const { return edges_[e].u == v ? 2 * e : 2 * e + 1; }

  std::span<const Dart> rotation(int v) const { return rotation_[v]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  /// Rotation rewritten as edge ids, the way the JSON document stores it.
  std::vector<std::vector<int>> edge_rotation() const;

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
    return a.edges_ == b.edges_ && a.rotation_ == b.rotation_;
  }

 private:
  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<Dart> next_;
  std::vector<Dart> prev_;
};

struct ValidationReport {
  bool connected = false;
  bool two_connected = false;
  bool spherical = false;  // V - E + F = 2
  bool all_faces_triangles = false;
  bool simple = false;
  std::map<int, int> degree_histogram;
  bool in_P = false;  // 2-connected plane triangulation, degrees in {3, 6}
  bool in_H = false;  // 2-connected plane triangulation, degrees <= 6
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};

ValidationReport validate(const RotationSystem& r);

/// Face cycles as dart sequences. Throws Error(kBadInput) when disconnected.
std::vector<std::vector<Dart>> faces(const RotationSystem& r);

bool is_connected(const RotationSystem& r);

/// Reverses every rotation.
RotationSystem mirror(const RotationSystem& r);

/// An orientation-preserving isomorphism as a dart map from `a` to `b`,
/// if one exists. Both systems must be connected.
std::optional<std::vector<Dart>> op_isomorphism(const RotationSystem& a,
                                                const RotationSystem& b);

bool op_equivalent(const RotationSystem& a, const RotationSystem& b);

/// Lexicographically smallest rooted traversal word over all root darts.
/// Two connected systems have equal codes iff they are op-equivalent.
std::vector<int> canonical_code(const RotationSystem& r);

// -- documents -------------------------------------------------------------

/// A rotation system plus the optional layer metadata written by the builder.
struct GraphDocument {
  RotationSystem system;
  std::vector<std::vector<int>> layers;  // innermost first; may be empty
};

RotationSystem parse_rotation_system(std::string_view text);
GraphDocument parse_document(std::string_view text);

enum class ExportFormat { kJson, kDot, kSvg };

ExportFormat parse_export_format(std::string_view name);

/// `edge_class`, when non-empty, assigns every edge a class in {0, 1, 2}.
std::string export_graph(const RotationSystem& r,
                         std::span<const int> edge_class,
                         const std::vector<std::vector<int>>& layers,
                         ExportFormat format);

std::string to_json(const RotationSystem& r,
                    const std::vector<std::vector<int>>& layers = {});

}  // namespace hexorb
