#pragma once

// Hamilton bonds and spanning partitions into induced caterpillars or paths.
//
// Constructions return certificates; verify_certificate re-derives every
// claimed property from the rotation system alone.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hexorb/builder.hpp"
#include "hexorb/planemap.hpp"

namespace hexorb {

inline constexpr int kDefaultBondLimit = 26;

struct Bipartition {
  std::vector<int> side_a;  // sorted
  std::vector<int> side_b;  // sorted
};

/// Both sides induce trees. Throws Error(kBadInput) if p is not a partition
/// of the vertex set into two non-empty sides.
bool is_hamilton_bond(const RotationSystem& r, const Bipartition& p);

/// Calls `visit` once per Hamilton bond (side_a holds vertex 0) until it
/// returns false. Throws Error(kPrecondition) when V exceeds `limit`.
void enumerate_hamilton_bonds(const RotationSystem& r,
                              const std::function<bool(const Bipartition&)>& visit,
                              int limit = kDefaultBondLimit);

std::vector<Bipartition> hamilton_bonds(const RotationSystem& r, int limit = kDefaultBondLimit);

/// Vertex count per degree on one side of a bond.
struct DegreeCensus {
  std::map<int, int> counts;

  int total() const;
  /// sum over i of (i - 2) f_i
  long weighted() const;
};

struct EndTreeCensus {
  DegreeCensus a;
  DegreeCensus b;

  /// Equal per-degree counts, two degree-3 vertices on each side.
  bool balanced_P() const;
  /// Side orders differ by at most 3.
  bool within_3() const;
  /// sum (i-2) f'_i == sum (i-2) f''_i
  bool weighted_degrees_equal() const;
};

EndTreeCensus end_tree_census(const RotationSystem& r, const Bipartition& p);

/// Smallest v in [a, b] with v = 2^j or v = m - 2^j.
Int window_pow2(Int a, Int b, Int m);

struct CaterpillarCertificate {
  std::vector<int> vertices;
  std::vector<int> spine;
  std::vector<std::vector<int>> legs;
  int leg_order = 0;
};

struct PathCertificate {
  std::vector<int> vertices;  // in path order
};

struct Verdict {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks the tree is induced, the spine is an induced path, removing it
/// leaves exactly the legs, all legs have order leg_order, and leg_order is
/// even (or there are no legs).
Verdict verify_certificate(const RotationSystem& r, const CaterpillarCertificate& c);
/// Checks the vertices induce exactly the path through them in order.
Verdict verify_certificate(const RotationSystem& r, const PathCertificate& c);

struct TwoColoring {
  int larger = 0;
  int smaller = 0;
  bool equitable = false;
};

/// Throws Error(kBadInput) when `vertices` does not induce a tree.
TwoColoring equitable_two_coloring(const RotationSystem& r, const std::vector<int>& vertices);

/// Finds a spine making the induced tree on `vertices` an even caterpillar.
/// Throws Error(kInternal) when none exists.
CaterpillarCertificate even_caterpillar_certificate(const RotationSystem& r,
                                                    const std::vector<int>& vertices);

/// Two induced even caterpillars spanning the drawing's graph.
/// Requires order = 2 (mod 4); throws Error(kPrecondition) otherwise.
std::pair<CaterpillarCertificate, CaterpillarCertificate> partition_even_caterpillars(
    const LayeredDrawing& d);

/// Two induced paths spanning the graph, for a class q with M(q) odd and
/// 3 K(q) >= M(q). Throws Error(kPrecondition) otherwise.
std::pair<PathCertificate, PathCertificate> partition_induced_paths(const LayeredDrawing& d,
                                                                    ClassLabel q);

/// The anchor-class construction steps, exposed for tests.
namespace detail {

/// Even caterpillars on a layered drawing whose layer count k is even,
/// returned as (T, S) vertex sets.
std::pair<std::vector<int>, std::vector<int>> even_caterpillar_sets(const LayeredDrawing& d);

/// Induced spanning paths on a layered drawing for its layer class.
std::pair<std::vector<int>, std::vector<int>> induced_path_sequences(const LayeredDrawing& d);

}  // namespace detail

nlohmann::json to_json(const CaterpillarCertificate& c);
nlohmann::json to_json(const PathCertificate& c);

}  // namespace hexorb
