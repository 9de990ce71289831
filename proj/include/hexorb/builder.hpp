#pragma once

// Layered normal form of a member of the (3,6)-family.
//
// Layer 0 and layer k are class paths of length m, layers 1..k-1 are class
// cycles of length 2m. Every layer has 2m slots p in Z/2m. A path layer is a
// folded cycle: slots p and p' hold the same vertex iff p + p' = 2h (mod 2m),
// where h is the layer's fold. Slot p of layer i+1 is joined to slots p and
// p+1 of layer i, and the layer edges join slots p and p+1.

#include <vector>

#include "hexorb/indexcalc.hpp"
#include "hexorb/planemap.hpp"
#include "hexorb/trifactor.hpp"

namespace hexorb {

struct LayeredDrawing {
  RotationSystem system;
  IndexVector index;           // measured on the anchor class
  ClassLabel anchor_class;     // class of the layer edges
  Dart anchor_dart = 0;        // first dart of the inner path
  std::vector<std::vector<int>> layers;  // innermost first, in path/cycle order
  int gluing_offset = 0;       // fold of the outer path

  int k = 1;
  int m = 1;
  int inner_fold = 0;
  int outer_fold = 0;

  int slots() const { return 2 * m; }
  int wrap(int p) const { return ((p % slots()) + slots()) % slots(); }

  /// Vertex in slot p of layer i (0 <= i <= k).
  int vertex(int layer, int p) const { return slot_[layer][wrap(p)]; }
  /// Dart from slot p to slot p+1 inside layer i.
  Dart layer_dart(int layer, int p) const { return layer_dart_[layer][wrap(p)]; }
  /// Edge from slot p of layer i (i >= 1) to slot p of layer i-1.
  int down_edge(int layer, int p) const { return down_[layer][wrap(p)]; }
  /// Edge from slot p of layer i (i >= 1) to slot p+1 of layer i-1.
  int down_next_edge(int layer, int p) const { return down_next_[layer][wrap(p)]; }

  /// Layer index of each vertex.
  std::vector<int> vertex_layer;

  std::vector<std::vector<int>> slot_;
  std::vector<std::vector<Dart>> layer_dart_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<int>> down_next_;
};

/// The layered system with the given folds; `index` is left unmeasured.
/// Requires k >= 1, m >= 1.
LayeredDrawing layered_drawing(int k, int m, int inner_fold, int outer_fold);

/// A drawing whose measured anchor-class index-vector equals iv. The outer
/// fold is chosen by trying every candidate and measuring S+.
LayeredDrawing build(const IndexVector& iv);

}  // namespace hexorb
