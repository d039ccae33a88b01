#pragma once

#include "schnyder/generators.hpp"
#include "schnyder/plane_graph.hpp"

namespace fixtures {

// Two K4s glued along one edge: {0,1} is a 2-cut.
inline schnyder::PlaneGraph two_k4_sharing_edge() {
    std::vector<std::pair<double, double>> pts = {
        {0.0, 1.0}, {0.0, -1.0}, {-1.2, 0.0}, {-0.4, 0.0}, {1.2, 0.0}, {0.4, 0.0}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                              {2, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5},
                                              {4, 5}};
    return schnyder::embed_by_coordinates(pts, edges, {0, 4, 1});
}

// The 12-vertex suspension example used across several tests: vertices are
// r1=0, r2=1, r3=2 and inner vertices 3..11 (called 1..9 in the drawing it
// was copied from).  Returns the graph; the known Schnyder wood of it is in
// fixtures::example12_wood() (declared in test files that need wood types).
inline schnyder::PlaneGraph example12() {
    // drawing coordinates
    std::vector<std::pair<double, double>> pts = {
        {0.0, 10.0},  // 0 = r1
        {6.0, 0.0},   // 1 = r2
        {-6.0, 0.0},  // 2 = r3
        {-2.0, 0.0},  // 3  ("1")
        {2.0, 0.0},   // 4  ("2")
        {-1.5, 2.0},  // 5  ("3")
        {1.5, 2.0},   // 6  ("4")
        {-2.2, 3.3},  // 7  ("5")
        {-0.5, 3.3},  // 8  ("6")
        {2.5, 3.0},   // 9  ("7")
        {0.5, 5.0},   // 10 ("8")
        {0.0, 8.0},   // 11 ("9")
    };
    std::vector<std::pair<int, int>> edges = {
        // green-blue paths
        {2, 3}, {3, 4}, {4, 1}, {5, 6},
        // red-blue
        {2, 0}, {7, 11}, {3, 5}, {8, 10},
        // red-green
        {0, 1}, {11, 10}, {8, 6}, {7, 5}, {6, 4}, {10, 9},
        // unidirected blue
        {7, 2}, {8, 7}, {9, 6},
        // unidirected green
        {9, 1},
        // unidirected red
        {11, 0},
    };
    return schnyder::embed_by_coordinates(pts, edges, {0, 1, 2});
}

} // namespace fixtures
