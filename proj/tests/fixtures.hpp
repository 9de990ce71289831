#pragma once

// Hand-made maps shared by the unit tests and the acceptance runner.

#include <map>
#include <string>
#include <vector>

#include "hexorb/planemap.hpp"

namespace fixtures {

/// K4 drawn as a triangle with a centre vertex 3.
hexorb::RotationSystem k4();

/// The octahedron (all degrees 4).
hexorb::RotationSystem octahedron();

/// The icosahedron (all degrees 5).
hexorb::RotationSystem icosahedron();

/// A 12-vertex member of index (1,5,2) with a non-equitable induced tree; `names` maps the
/// vertex labels (s0..s5, cg, cg1, cg2, cd, cd1, cd2) to vertex ids.
hexorb::RotationSystem labelled_152(std::map<std::string, int>* names = nullptr);

}  // namespace fixtures
