#pragma once

#include "schnyder/plane_graph.hpp"

namespace schnyder {

// A suspension G^sigma: the plane graph plus one outgoing half-edge per root,
// reaching into the outer face.  Half-edges are single self-reverse darts
// with ids 2m, 2m+1, 2m+2 (for roots r1, r2, r3), inserted into the root's
// rotation at its outer-face corner.
struct Suspension {
    PlaneGraph g;
    std::vector<std::vector<Dart>> rot; // rotations including half-edge darts
    FaceDecomposition faces;            // faces of the suspension (half-edges included)

    int half_dart(int i) const { return 2 * g.m() + i; }
    bool is_half(Dart d) const { return d >= 2 * g.m(); }
    int half_root_index(Dart d) const { return d - 2 * g.m(); } // 0,1,2
    int dart_count() const { return 2 * g.m() + 3; }

    int tail(Dart d) const { return is_half(d) ? g.roots[half_root_index(d)] : g.tail(d); }
    int head(Dart d) const { return is_half(d) ? -1 : g.head(d); }
    Dart reverse(Dart d) const { return is_half(d) ? d : dart_reverse(d); }

    int rot_index(Dart d) const;
    Dart rot_next(Dart d) const;
    Dart rot_prev(Dart d) const;
};

Suspension suspend(const PlaneGraph& g);

// Bijection between primal and dual edge ids.  Dual edges reuse the primal
// edge id for the m ordinary edges; the three extra dual edges (the triangle
// b1 b2 b3) have ids m, m+1, m+2, where triangle edge m+i is crossed by the
// half-edge at root r_{i+1} (0-based: ray i crosses triangle edge m+i).
struct DualCorrespondence {
    int primal_edge_count = 0;
    // For primal edge e, dual edge e has endpoints (right_face_vertex,
    // left_face_vertex) relative to dart 2e of the primal graph; these vertex
    // ids live in the suspended dual.
    std::vector<std::pair<int, int>> dual_ends; // size m+3 (rays included)

    int dual_of(int primal_edge) const { return primal_edge; }
    int primal_of(int dual_edge) const { return dual_edge; }
    bool is_triangle_edge(int dual_edge) const { return dual_edge >= primal_edge_count; }
};

struct SuspendedDual {
    Suspension dual;          // G^{sigma*}: suspension over the dual graph, roots b1,b2,b3
    DualCorrespondence corr;
    int inner_face_count = 0; // dual vertices [0, inner_face_count) are inner faces of G
    std::vector<int> face_to_dual_vertex; // primal face id -> dual vertex (-1 for outer)
    std::array<int, 3> b{-1, -1, -1};     // dual vertex ids of b1, b2, b3
};

// Builds the suspended dual G^{sigma*}: one vertex per inner face plus the
// triangle b1 b2 b3 replacing the outer face vertex (b_i not incident to
// r_i), in bijection with the primal edges, plus the triangle edges crossed
// by the half-edges, plus a half-edge at each b_i.
SuspendedDual suspended_dual(const Suspension& gs);

// Result of identifying b1, b2, b3 into one vertex x: the ordinary dual G*.
struct IdentifiedDual {
    PlaneGraph g;             // G*, simple; edge ids equal primal edge ids
    int x = -1;               // the merged outer-face vertex
    std::vector<int> dual_vertex_map; // suspended-dual vertex -> G* vertex
};

IdentifiedDual identify_roots(const SuspendedDual& sd);

// Plain plane dual of g (all faces become vertices, edge ids preserved).
// The outer face of the result is the face dual to primal vertex roots[0].
PlaneGraph direct_dual(const PlaneGraph& g);

} // namespace schnyder
