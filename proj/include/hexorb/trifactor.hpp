#pragma once

// The factorization of a member of the (3,6)-family into three classes
// indexed by Z/3, where counter-clockwise successive edges at every vertex
// carry classes q and q+1.

#include <array>
#include <vector>

#include "hexorb/planemap.hpp"

namespace hexorb {

/// Element of the cyclic group {0, 1, 2}.
class ClassLabel {
 public:
  constexpr ClassLabel() = default;
  constexpr explicit ClassLabel(int q) : q_(((q % 3) + 3) % 3) {}

  constexpr int value() const { return q_; }

  constexpr ClassLabel operator+(int d) const { return ClassLabel(q_ + d); }
  constexpr ClassLabel operator-(int d) const { return ClassLabel(q_ - d); }

  friend constexpr bool operator==(ClassLabel, ClassLabel) = default;

 private:
  int q_ = 0;
};

struct Factorization {
  std::vector<int> class_of;  // edge id -> 0, 1 or 2

  ClassLabel operator[](int edge) const { return ClassLabel(class_of[edge]); }
};

/// Propagates classes from edge 0 (class 0) around every vertex.
/// Throws Error(kPrecondition) when propagation meets a conflict.
Factorization factorize(const RotationSystem& r);

/// True iff every pair of CCW-successive darts carries classes q, q+1.
bool satisfies_star(const RotationSystem& r, const Factorization& f);

/// Adds `delta` to every class.
Factorization shifted(const Factorization& f, int delta);

/// Component structure of one class factor: two paths of length M and
/// K-1 cycles of length 2M.
struct ClassComponents {
  ClassLabel q;
  std::array<std::vector<int>, 2> paths;       // vertex sequences, M+1 each
  std::array<std::vector<int>, 2> path_edges;  // edge sequences, M each
  std::vector<std::vector<int>> cycles;        // cyclic vertex sequences
  std::vector<std::vector<int>> cycle_edges;
  int K = 0;
  int M = 0;
};

/// Throws Error(kStructural) when the factor is not 2 paths + cycles of the
/// required lengths.
ClassComponents class_components(const RotationSystem& r, const Factorization& f,
                                 ClassLabel q);

}  // namespace hexorb
