#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schnyder/plane_graph.hpp"

namespace schnyder {

// Clockwise rotations from an honest straight-line drawing (y axis up).
PlaneGraph embed_by_coordinates(const std::vector<std::pair<double, double>>& points,
                                const std::vector<std::pair<int, int>>& edge_list,
                                const std::array<int, 3>& roots);

PlaneGraph gen_k4();
PlaneGraph gen_wheel(int rim);
PlaneGraph gen_prism();
PlaneGraph gen_cube();
PlaneGraph gen_octahedron();
PlaneGraph gen_icosahedron();
PlaneGraph gen_dodecahedron();
PlaneGraph gen_stacked(int n, std::uint64_t seed);

// CLI dispatcher; kind in {k4, wheel, prism, cube, dodecahedron, icosahedron,
// octahedron, stacked}.
PlaneGraph gen(const std::string& kind, int param, std::uint64_t seed);

} // namespace schnyder
