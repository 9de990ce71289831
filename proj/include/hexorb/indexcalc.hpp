#pragma once

// Index-vector arithmetic and the graph walks that measure index-vectors.
//
// An index-vector (k, m, s) describes one class of a member of the family:
// k - 1 class cycles of length 2m sit between two class paths of length m,
// and s in [0, m) is the offset at which the outer path is attached.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hexorb/planemap.hpp"
#include "hexorb/trifactor.hpp"

namespace hexorb {

using Int = std::int64_t;

struct IndexVector {
  Int k = 1;
  Int m = 1;
  Int s = 0;

  bool valid() const { return k >= 1 && m >= 1 && 0 <= s && s < m; }
  std::string str() const;

  friend auto operator<=>(const IndexVector&, const IndexVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const IndexVector& iv);

/// Throws Error(kBadInput) naming the violated bound.
void require_valid(const IndexVector& iv);

// -- arithmetic --------------------------------------------------------------

/// gcd with gcd(0, m) = m.
Int gcd0(Int s, Int m);

/// The representative of s + k (mod m) in (0, m].
Int s_minus_of(const IndexVector& iv);

struct FareyPair {
  Int a = 0;
  Int b = 0;
  friend bool operator==(const FareyPair&, const FareyPair&) = default;
};

/// a*m - b*s = gcd(s, m) with 0 < b <= m / gcd(s, m).
FareyPair farey_pair(Int s, Int m);

/// Scaled billiard sequence g[j] = 2m F(j) for the s/m-billiard, j = 1..m/d.
struct BilliardSequence {
  Int s = 0;
  Int m = 1;
  std::vector<Int> g;  // g[0] holds the term with index 1

  Int term(Int j) const { return g[static_cast<size_t>(j - 1)]; }
  Int length() const { return static_cast<Int>(g.size()); }
};

BilliardSequence billiard(Int s, Int m);

struct StepResult {
  IndexVector next;
  Int s_minus_next = 0;  // S-(q+1) = b * K(q)
  FareyPair farey;
};

StepResult step_detail(const IndexVector& iv);
IndexVector step(const IndexVector& iv);

/// Index-vectors at q, q+1, q+2 in step order.
struct Orbit {
  std::array<IndexVector, 3> triple;

  /// Distinct elements, sorted.
  std::vector<IndexVector> as_set() const;
  int size() const { return static_cast<int>(as_set().size()); }
  bool same_set(const Orbit& other) const { return as_set() == other.as_set(); }
  std::string str() const;
};

Orbit orbit(const IndexVector& iv);

struct OrbitClassification {
  bool one_point = false;
  Int n = 0;  // witness when one_point: m = k n, s = k x, n | x^2 + x + 1
  Int x = 0;
  bool double_mirror = false;
  bool simple_graph = true;
  Orbit mirror_orbit;
};

OrbitClassification classify(const Orbit& o);

/// All one-point index-vectors with m <= max_m, sorted by (m, k, s).
std::vector<IndexVector> enumerate_one_point(Int max_m);

// -- graph walks ---------------------------------------------------------------

/// A maximal class-q path v_0 ... v_M starting at the degree-3 vertex v_0.
struct PathWalk {
  int anchor = 0;
  ClassLabel q;
  std::vector<int> vertices;
  std::vector<int> edges;  // edges[j] joins vertices[j] and vertices[j+1]

  int length() const { return static_cast<int>(edges.size()); }
  /// Position of v on the walk, or -1.
  int position(int v) const;
};

PathWalk walk_path(const RotationSystem& r, const Factorization& f, int anchor, ClassLabel q);

/// True when the dart d (leaving a walk vertex) branches to the left.
bool is_left_branch(const RotationSystem& r, const PathWalk& w, Dart d);

/// j for a left branch at v_j, 2M - j for a right one. `d` must leave a walk
/// vertex along an edge that is not on the walk.
int branch_index(const RotationSystem& r, const PathWalk& w, Dart d);

/// Edge form: e must have exactly one endpoint on the walk.
int branch_index_of_edge(const RotationSystem& r, const PathWalk& w, int e);

enum class Sign { kPlus, kMinus };

/// S+(q) or S-(q) measured from the ends A and C of two different class paths.
int s_walk(const RotationSystem& r, const Factorization& f, ClassLabel q, Sign sign, int a,
           int c);

/// Uses the first end of each of the two class-q paths.
int s_walk(const RotationSystem& r, const Factorization& f, ClassLabel q, Sign sign);

IndexVector index_vector(const RotationSystem& r, const Factorization& f, ClassLabel q);

/// Branch indices, relative to [A, q], of the consecutive edges of [A, q+1]
/// that touch [A, q].
std::vector<int> consecutive_branch_indices(const RotationSystem& r, const Factorization& f,
                                            ClassLabel q, int a);

}  // namespace hexorb
