#include "schnyder/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace schnyder {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NonSimple: return "NonSimple";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::RootsNotOnOuterFace: return "RootsNotOnOuterFace";
    case ErrorCode::RootsNotClockwise: return "RootsNotClockwise";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::InvalidWood: return "InvalidWood";
    case ErrorCode::CyclicConstraint: return "CyclicConstraint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InconsistentInputs: return "InconsistentInputs";
    case ErrorCode::HNotConnected: return "HNotConnected";
    case ErrorCode::CycleInHZero: return "CycleInHZero";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

int PlaneGraph::rot_index(Dart d) const {
    const auto& r = rot[tail(d)];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == d) return i;
    return -1;
}

Dart PlaneGraph::rot_next(Dart d) const {
    const auto& r = rot[tail(d)];
    int i = rot_index(d);
    return r[(i + 1) % r.size()];
}

Dart PlaneGraph::rot_prev(Dart d) const {
    const auto& r = rot[tail(d)];
    int i = rot_index(d);
    return r[(i + static_cast<int>(r.size()) - 1) % r.size()];
}

int PlaneGraph::find_edge(int u, int v) const {
    for (Dart d : rot[u])
        if (head(d) == v) return dart_edge(d);
    return -1;
}

std::vector<int> PlaneGraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(rot[v].size());
    for (Dart d : rot[v]) out.push_back(head(d));
    return out;
}

FaceDecomposition trace_rotation_faces(const std::vector<std::vector<Dart>>& rotations,
                                       int num_edges, int num_special) {
    const int dart_count = 2 * num_edges + num_special;
    std::vector<int> pos_of(dart_count, -1);   // index in its rotation list
    std::vector<int> vertex_of(dart_count, -1);
    for (int v = 0; v < static_cast<int>(rotations.size()); ++v) {
        for (int i = 0; i < static_cast<int>(rotations[v].size()); ++i) {
            Dart d = rotations[v][i];
            if (d < 0 || d >= dart_count || pos_of[d] != -1)
                throw Error(ErrorCode::EulerViolation, "dart appears more than once in rotations");
            pos_of[d] = i;
            vertex_of[d] = v;
        }
    }
    for (int d = 0; d < dart_count; ++d)
        if (pos_of[d] == -1)
            throw Error(ErrorCode::EulerViolation, "dart missing from rotations");

    auto rev = [&](Dart d) { return d < 2 * num_edges ? (d ^ 1) : d; };
    // next dart of the face: predecessor of reverse(d) at the vertex holding it
    auto next_dart = [&](Dart d) {
        Dart r = rev(d);
        int v = vertex_of[r];
        const auto& list = rotations[v];
        int i = pos_of[r];
        return list[(i + static_cast<int>(list.size()) - 1) % list.size()];
    };

    FaceDecomposition out;
    out.dart_face.assign(dart_count, -1);
    for (int d0 = 0; d0 < dart_count; ++d0) {
        if (out.dart_face[d0] != -1) continue;
        std::vector<Dart> cycle;
        int fid = static_cast<int>(out.cycles.size());
        Dart d = d0;
        do {
            if (out.dart_face[d] != -1)
                throw Error(ErrorCode::EulerViolation, "face tracing revisited a dart");
            out.dart_face[d] = fid;
            cycle.push_back(d);
            d = next_dart(d);
        } while (d != d0);
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

namespace {

// Finds the face whose boundary visits the three roots exactly once each, in
// cyclic order (r1, r3, r2) -- the traced image of a clockwise (r1, r2, r3).
int locate_outer_face(const PlaneGraph& g, const FaceDecomposition& fd) {
    bool saw_ccw_order = false;
    for (int fid = 0; fid < fd.face_count(); ++fid) {
        std::vector<int> hits;
        bool dup = false;
        for (Dart d : fd.cycles[fid]) {
            int v = g.tail(d);
            for (int k = 0; k < 3; ++k) {
                if (v == g.roots[k]) {
                    for (int h : hits)
                        if (h == k) dup = true;
                    hits.push_back(k);
                }
            }
        }
        if (dup || hits.size() != 3) continue;
        // hits is a cyclic permutation of (0,1,2); roots clockwise on the
        // boundary means (0,2,1) in trace order.
        int i0 = 0;
        while (hits[i0] != 0) ++i0;
        int second = hits[(i0 + 1) % 3];
        if (second == 2) return fid;
        saw_ccw_order = true;
    }
    if (saw_ccw_order)
        throw Error(ErrorCode::RootsNotClockwise,
                    "roots appear counterclockwise on their common face");
    throw Error(ErrorCode::RootsNotOnOuterFace, "no face contains all three roots");
}

void validate_structure(const PlaneGraph& g) {
    if (g.n < 4) throw Error(ErrorCode::BadParams, "need at least 4 vertices");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : g.edges) {
        if (u == v) throw Error(ErrorCode::NonSimple, "loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw Error(ErrorCode::NonSimple,
                        "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (!is_connected(g))
        throw Error(ErrorCode::EulerViolation, "graph is not connected");
    if (g.n - g.m() + g.f() != 2)
        throw Error(ErrorCode::EulerViolation,
                    "n - m + f = " + std::to_string(g.n - g.m() + g.f()));
    for (int r : g.roots)
        if (r < 0 || r >= g.n) throw Error(ErrorCode::BadParams, "root out of range");
    if (g.roots[0] == g.roots[1] || g.roots[1] == g.roots[2] || g.roots[0] == g.roots[2])
        throw Error(ErrorCode::BadParams, "roots must be distinct");
}

} // namespace

PlaneGraph build_graph_from_darts(int n, std::vector<std::pair<int, int>> edges,
                                  std::vector<std::vector<Dart>> rot,
                                  const std::array<int, 3>& roots) {
    PlaneGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.rot = std::move(rot);
    g.roots = roots;
    if (static_cast<int>(g.rot.size()) != n)
        throw Error(ErrorCode::BadParams, "rotation list count != n");
    // every dart must sit in the rotation of its tail
    for (int v = 0; v < n; ++v)
        for (Dart d : g.rot[v])
            if (dart_edge(d) >= g.m() || g.tail(d) != v)
                throw Error(ErrorCode::EulerViolation, "dart listed at wrong vertex");
    g.faces = trace_rotation_faces(g.rot, g.m());
    validate_structure(g);
    g.faces.outer_face = locate_outer_face(g, g.faces);
    return g;
}

PlaneGraph build_graph(int n, const std::vector<std::vector<int>>& neighbor_lists,
                       const std::array<int, 3>& roots) {
    if (n < 4) throw Error(ErrorCode::BadParams, "need at least 4 vertices");
    if (static_cast<int>(neighbor_lists.size()) != n)
        throw Error(ErrorCode::BadParams, "neighbor list count != n");

    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> edge_id;
    std::map<std::pair<int, int>, int> side_count; // ordered (v,u) occurrence count
    for (int v = 0; v < n; ++v) {
        for (int u : neighbor_lists[v]) {
            if (u < 0 || u >= n) throw Error(ErrorCode::BadParams, "neighbor out of range");
            if (u == v) throw Error(ErrorCode::NonSimple, "loop at vertex " + std::to_string(v));
            side_count[{v, u}]++;
            auto key = std::minmax(u, v);
            if (!edge_id.count(key)) {
                edge_id[key] = static_cast<int>(edges.size());
                edges.emplace_back(v, u); // tail of dart 2e is the first lister
            }
        }
    }
    for (const auto& [key, e] : edge_id) {
        int a = side_count.count({key.first, key.second}) ? side_count[{key.first, key.second}] : 0;
        int b = side_count.count({key.second, key.first}) ? side_count[{key.second, key.first}] : 0;
        if (a > 1 && b > 1)
            throw Error(ErrorCode::NonSimple, "parallel edge " + std::to_string(key.first) +
                                                  "-" + std::to_string(key.second));
        if (a != 1 || b != 1)
            throw Error(ErrorCode::EulerViolation,
                        "rotation lists are not mutually consistent at edge " +
                            std::to_string(key.first) + "-" + std::to_string(key.second));
        (void)e;
    }

    std::vector<std::vector<Dart>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v].reserve(neighbor_lists[v].size());
        for (int u : neighbor_lists[v]) {
            int e = edge_id[std::minmax(u, v)];
            rot[v].push_back(edge_dart(e, edges[e].first != v));
        }
    }

    return build_graph_from_darts(n, std::move(edges), std::move(rot), roots);
}

FaceDecomposition trace_faces(const PlaneGraph& g) {
    FaceDecomposition fd = trace_rotation_faces(g.rot, g.m());
    fd.outer_face = locate_outer_face(g, fd);
    return fd;
}

namespace {

int reachable_count(const PlaneGraph& g, const std::vector<bool>& removed) {
    int start = -1;
    for (int v = 0; v < g.n; ++v)
        if (!removed[v]) { start = v; break; }
    if (start < 0) return 0;
    std::vector<bool> seen(g.n, false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int cnt = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++cnt;
        for (Dart d : g.rot[v]) {
            int u = g.head(d);
            if (!removed[u] && !seen[u]) {
                seen[u] = true;
                q.push(u);
            }
        }
    }
    return cnt;
}

} // namespace

bool is_connected(const PlaneGraph& g) {
    std::vector<bool> removed(g.n, false);
    return reachable_count(g, removed) == g.n;
}

bool check_three_connected(const PlaneGraph& g) {
    if (g.n < 4) return false;
    std::vector<bool> removed(g.n, false);
    if (reachable_count(g, removed) != g.n) return false;
    for (int a = 0; a < g.n; ++a) {
        removed[a] = true;
        if (reachable_count(g, removed) != g.n - 1) return false;
        for (int b = a + 1; b < g.n; ++b) {
            removed[b] = true;
            if (reachable_count(g, removed) != g.n - 2) return false;
            removed[b] = false;
        }
        removed[a] = false;
    }
    return true;
}

std::vector<int> outer_boundary_clockwise(const PlaneGraph& g) {
    const auto& cycle = g.faces.cycles[g.faces.outer_face];
    std::vector<int> verts;
    verts.reserve(cycle.size());
    for (Dart d : cycle) verts.push_back(g.tail(d));
    std::reverse(verts.begin(), verts.end());
    auto it = std::find(verts.begin(), verts.end(), g.roots[0]);
    std::rotate(verts.begin(), it, verts.end());
    return verts;
}

} // namespace schnyder
