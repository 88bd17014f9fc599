#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pbundle/complex.hpp"
#include "pbundle/group.hpp"

namespace pbundle::corpus {

/// Built-in complexes, all with vertex labels "0", "1", ... and basepoint 0:
/// circle (3-cycle), disc (filled triangle), sphere (tetrahedron boundary),
/// hexagon (6-cycle), torus (7-vertex triangulation), rp2 (6-vertex
/// projective plane), figure_eight (two 3-cycles sharing vertex 0).
std::vector<std::string> complex_names();
ComplexPtr complex(std::string_view name);

/// Z2, Z3, Z4, Z2xZ2, S3.
std::vector<std::string> group_names();
GroupPtr group(std::string_view name);

struct NamedMap {
  std::string name;
  SimplicialMap map;
};
/// Pointed maps between corpus complexes.
std::vector<NamedMap> maps();

struct NamedHom {
  std::string name;
  FiniteHom hom;
};
std::vector<NamedHom> homs();

struct ContiguousPair {
  std::string name;
  SimplicialMap f;
  SimplicialMap g;
};
std::vector<ContiguousPair> contiguous_pairs();

}  // namespace pbundle::corpus
