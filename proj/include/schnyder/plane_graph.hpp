#pragma once

#include <array>
#include <utility>
#include <vector>

#include "schnyder/errors.hpp"

namespace schnyder {

// Orientation conventions used throughout:
//
//  - Rotation lists are CLOCKWISE as seen in the plane.
//  - Edge e owns darts 2e (first->second endpoint) and 2e+1 (reverse).
//  - Faces are traced with next(d) = predecessor of reverse(d) in the
//    rotation at head(d).  Every face then lies to the RIGHT of its darts:
//    inner faces come out as clockwise cycles, the outer face boundary is
//    traversed counterclockwise around the graph.  Consequently the roots
//    (r1, r2, r3), clockwise on the outer boundary, appear in cyclic order
//    (r1, r3, r2) along the traced outer face.
//  - Half-edges (suspensions) are single self-reverse darts with no head.

using Dart = int;

inline int dart_edge(Dart d) { return d >> 1; }
inline Dart dart_reverse(Dart d) { return d ^ 1; }
inline Dart edge_dart(int e, bool rev = false) { return 2 * e + (rev ? 1 : 0); }

struct FaceDecomposition {
    std::vector<std::vector<Dart>> cycles; // traced dart cycles, one per face
    std::vector<int> dart_face;            // dart id -> face id
    int outer_face = -1;

    int face_count() const { return static_cast<int>(cycles.size()); }
    int face_of(Dart d) const { return dart_face[d]; }
};

struct PlaneGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // edge e: (tail of dart 2e, head of dart 2e)
    std::vector<std::vector<Dart>> rot;     // per vertex, clockwise dart list
    std::array<int, 3> roots{-1, -1, -1};
    FaceDecomposition faces;                // filled by build/trace

    int m() const { return static_cast<int>(edges.size()); }
    int f() const { return faces.face_count(); }
    int outer_face() const { return faces.outer_face; }

    int tail(Dart d) const { return (d & 1) ? edges[d >> 1].second : edges[d >> 1].first; }
    int head(Dart d) const { return (d & 1) ? edges[d >> 1].first : edges[d >> 1].second; }
    int other(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }

    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    // Position of dart d in the rotation of its tail.
    int rot_index(Dart d) const;
    // Clockwise successor / predecessor of dart d around its tail.
    Dart rot_next(Dart d) const;
    Dart rot_prev(Dart d) const;

    int find_edge(int u, int v) const; // -1 if absent
    std::vector<int> neighbors(int v) const;

    bool is_root(int v) const { return v == roots[0] || v == roots[1] || v == roots[2]; }
};

// Generic face tracing over clockwise rotation lists.  `rotations` may
// contain special self-reverse darts (ids >= 2*num_edges) for half-edges.
FaceDecomposition trace_rotation_faces(const std::vector<std::vector<Dart>>& rotations,
                                       int num_edges, int num_special = 0);

// Builds a validated embedded plane graph from clockwise neighbor lists.
// Throws: BadParams, NonSimple, EulerViolation, RootsNotOnOuterFace,
// RootsNotClockwise.
PlaneGraph build_graph(int n, const std::vector<std::vector<int>>& neighbor_lists,
                       const std::array<int, 3>& roots);

// Internal builder: explicit edge list + dart rotations (used by dual
// construction and generators that control edge ids).  Runs the same
// validation.
PlaneGraph build_graph_from_darts(int n, std::vector<std::pair<int, int>> edges,
                                  std::vector<std::vector<Dart>> rot,
                                  const std::array<int, 3>& roots);

// Re-traces faces and identifies the outer face from the roots.
FaceDecomposition trace_faces(const PlaneGraph& g);

// True iff no single vertex or vertex pair disconnects g (exhaustive scan).
bool check_three_connected(const PlaneGraph& g);

bool is_connected(const PlaneGraph& g);

// Clockwise outer boundary cycle, starting at the first root.
// (The traced outer face runs counterclockwise; this returns its reverse.)
std::vector<int> outer_boundary_clockwise(const PlaneGraph& g);

} // namespace schnyder
