#pragma once

#include "schnyder/suspension.hpp"
#include "schnyder/wood.hpp"

namespace schnyder {

// The completion: superposition of G^sigma and G^{sigma*} with one crossing
// vertex per crossing primal/dual pair (the half-edge at r_i crosses the
// triangle edge b_{i-1} b_{i+1}).  Vertex layout:
//   [0, np)            primal vertices
//   [np, np+ndv)       dual vertices (suspended dual ids)
//   [np+ndv, ...)      crossing vertices: edge e -> np+ndv+e, ray i -> np+ndv+m+i
// Edge layout (all edges join an outer vertex to a crossing):
//   4e+0 (tail half)  4e+1 (head half)  4e+2 (right dual half)  4e+3 (left)
//   rays: 4m+3i+0 (r_i half)  +1 (right dual half, b_{i-1})  +2 (left, b_{i+1})
// Six half-edges as special darts 2E+j: j in 0..2 stubs at ray crossings,
// j in 3..5 the b_j-3 half-edges.  The stub and b half-edge of index i carry
// color i+1 and are outgoing.
struct Completion {
    int np = 0, ndv = 0, m = 0;
    std::vector<std::pair<int, int>> ends; // edge -> (outer vertex, crossing vertex)
    std::vector<std::vector<int>> rot;     // clockwise dart lists
    std::vector<int> color;                // per edge, 1..3 (0 while skeleton)
    std::vector<bool> toward_crossing;     // orientation of edge k

    int edge_count() const { return static_cast<int>(ends.size()); }
    int vertex_count() const { return np + ndv + m + 3; }
    int crossing_of_edge(int e) const { return np + ndv + e; }
    int crossing_of_ray(int i) const { return np + ndv + m + i; }
    bool is_primal(int v) const { return v < np; }
    bool is_dual(int v) const { return v >= np && v < np + ndv; }
    bool is_crossing(int v) const { return v >= np + ndv; }
    bool is_special_dart(int d) const { return d >= 2 * edge_count(); }
    int special_index(int d) const { return d - 2 * edge_count(); }

    int dart_tail(int d) const {
        if (is_special_dart(d)) {
            int j = special_index(d);
            return j < 3 ? crossing_of_ray(j) : np + b_vertex[j - 3];
        }
        return (d & 1) ? ends[d >> 1].second : ends[d >> 1].first;
    }
    // outgoing at the dart's tail?
    bool dart_outgoing(int d) const {
        if (is_special_dart(d)) return true;
        return toward_crossing[d >> 1] == ((d & 1) == 0);
    }
    int dart_color(int d) const {
        if (is_special_dart(d)) return special_index(d) % 3 + 1;
        return color[d >> 1];
    }

    std::array<int, 3> b_vertex{-1, -1, -1}; // b_i as suspended-dual vertex ids
};

// Uncolored superposition (orientation/colors unset).
Completion completion_skeleton(const Suspension& gs, const SuspendedDual& sd);

// The colored completion induced by a Schnyder wood (directions and colors
// inherited from S on the primal halves and from S* on the dual halves).
Completion make_completion(const Suspension& gs, const SuspendedDual& sd,
                           const SchnyderWood& wood);

// Empty iff every crossing vertex has exactly one outgoing and three incoming
// edges, the latter colored red, green, blue counterclockwise.
ValidationReport check_crossing_vertices(const Completion& c);

// The dual Schnyder wood S* on G^{sigma*}:
//  - a unidirected c-colored primal edge or half-edge dualizes to a
//    bidirected edge with colors c+1 and c+2, the (c+1)-direction running
//    from the right of the primal direction to its left;
//  - an i-(i+1)-colored primal edge dualizes to a unidirected (i-1)-colored
//    edge pointing right of the i-colored direction;
//  - the half-edge at b_i is outgoing and i-colored.
SchnyderWood dual_wood(const Suspension& gs, const SchnyderWood& wood,
                       const SuspendedDual& sd);

// Computes a Schnyder wood of the suspension.  The orientation is found as a
// prescribed-outdegree orientation of the completion (out-degree 3 at primal
// and inner dual vertices, 1 at crossing vertices), after which the coloring
// is forced; the result is re-validated before returning.
SchnyderWood compute_wood(const Suspension& gs);
SchnyderWood compute_wood(const Suspension& gs, const SuspendedDual& sd);

} // namespace schnyder
