#include "schnyder/suspension.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schnyder {

int Suspension::rot_index(Dart d) const {
    const auto& r = rot[tail(d)];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == d) return i;
    return -1;
}

Dart Suspension::rot_next(Dart d) const {
    const auto& r = rot[tail(d)];
    int i = rot_index(d);
    return r[(i + 1) % r.size()];
}

Dart Suspension::rot_prev(Dart d) const {
    const auto& r = rot[tail(d)];
    int i = rot_index(d);
    return r[(i + static_cast<int>(r.size()) - 1) % r.size()];
}

Suspension suspend(const PlaneGraph& g) {
    Suspension s;
    s.g = g;
    s.rot = g.rot;
    const auto& outer_cycle = g.faces.cycles[g.faces.outer_face];
    for (int i = 0; i < 3; ++i) {
        int r = g.roots[i];
        Dart arriving = -1;
        for (Dart d : outer_cycle)
            if (g.head(d) == r) { arriving = d; break; }
        if (arriving < 0)
            throw Error(ErrorCode::RootsNotOnOuterFace,
                        "root " + std::to_string(r) + " not on outer face");
        // The outer-face corner at r lies between the leaving dart and
        // reverse(arriving); insert the half-edge there.
        Dart into = dart_reverse(arriving);
        auto& list = s.rot[r];
        auto it = std::find(list.begin(), list.end(), into);
        list.insert(it, s.half_dart(i));
    }
    s.faces = trace_rotation_faces(s.rot, g.m(), 3);
    return s;
}

SuspendedDual suspended_dual(const Suspension& gs) {
    const PlaneGraph& g = gs.g;
    const int n = g.n;
    const int m = g.m();

    // Close the three rays at a vertex "at infinity" so the outer face splits
    // into the three unbounded regions.  Rotations invert at infinity: the
    // clockwise escape order (r1, r2, r3) becomes (r1, r3, r2).
    const int vinf = n;
    std::vector<std::pair<int, int>> aux_edges = g.edges;
    for (int i = 0; i < 3; ++i) aux_edges.emplace_back(g.roots[i], vinf);
    std::vector<std::vector<Dart>> aux_rot(n + 1);
    for (int v = 0; v < n; ++v) {
        aux_rot[v] = gs.rot[v];
        for (Dart& d : aux_rot[v])
            if (gs.is_half(d)) d = edge_dart(m + gs.half_root_index(d), false);
    }
    aux_rot[vinf] = {edge_dart(m + 0, true), edge_dart(m + 2, true), edge_dart(m + 1, true)};

    FaceDecomposition aux = trace_rotation_faces(aux_rot, m + 3);

    // Identify the b-regions: the faces touching exactly two rays; the region
    // between the rays at r_i and r_{i+1} is b_{i+2} (so b_i avoids r_i).
    std::vector<int> face_vertex(aux.face_count(), -1);
    std::array<int, 3> b{-1, -1, -1};
    int inner_count = 0;
    for (int fid = 0; fid < aux.face_count(); ++fid) {
        std::set<int> rays;
        for (Dart d : aux.cycles[fid]) {
            int e = dart_edge(d);
            if (e >= m) rays.insert(e - m);
        }
        if (rays.empty()) {
            face_vertex[fid] = inner_count++;
        } else if (rays.size() == 2) {
            int missing = 3 - *rays.begin() - *rays.rbegin();
            b[missing] = fid; // store face id for now
        } else {
            throw Error(ErrorCode::EulerViolation, "unexpected ray incidence in dual build");
        }
    }
    for (int i = 0; i < 3; ++i) {
        if (b[i] < 0) throw Error(ErrorCode::EulerViolation, "missing outer region in dual build");
        face_vertex[b[i]] = inner_count + i;
        b[i] = inner_count + i;
    }

    // Dual edge e joins the faces right and left of primal dart 2e; the dual
    // dart with id d has tail face_vertex(face_of(d)).
    std::vector<std::pair<int, int>> dual_edges(m + 3);
    for (int e = 0; e < m + 3; ++e)
        dual_edges[e] = {face_vertex[aux.dart_face[edge_dart(e, false)]],
                         face_vertex[aux.dart_face[edge_dart(e, true)]]};
    std::vector<std::vector<Dart>> dual_rot(inner_count + 3);
    for (int fid = 0; fid < aux.face_count(); ++fid)
        dual_rot[face_vertex[fid]] = aux.cycles[fid];

    PlaneGraph dualg = build_graph_from_darts(inner_count + 3, dual_edges, dual_rot,
                                              {b[0], b[1], b[2]});

    SuspendedDual sd;
    sd.dual = suspend(dualg);
    sd.corr.primal_edge_count = m;
    sd.corr.dual_ends = dual_edges;
    sd.inner_face_count = inner_count;
    sd.b = {b[0], b[1], b[2]};
    sd.face_to_dual_vertex.assign(g.f(), -1);
    for (int fid = 0; fid < g.f(); ++fid) {
        if (fid == g.outer_face()) continue;
        Dart d = g.faces.cycles[fid][0];
        sd.face_to_dual_vertex[fid] = face_vertex[aux.dart_face[d]];
    }
    return sd;
}

namespace {

// rot(u) with dart (u->v) replaced by v's rotation after (v->u), dropping
// both contracted darts.
std::vector<Dart> contract_edge(const std::vector<Dart>& ru, const std::vector<Dart>& rv,
                                Dart duv) {
    Dart dvu = dart_reverse(duv);
    std::vector<Dart> out;
    out.reserve(ru.size() + rv.size() - 2);
    auto posv = std::find(rv.begin(), rv.end(), dvu) - rv.begin();
    for (Dart d : ru) {
        if (d != duv) {
            out.push_back(d);
            continue;
        }
        for (size_t k = 1; k < rv.size(); ++k) out.push_back(rv[(posv + k) % rv.size()]);
    }
    return out;
}

} // namespace

IdentifiedDual identify_roots(const SuspendedDual& sd) {
    const PlaneGraph& dg = sd.dual.g;
    const int m = sd.corr.primal_edge_count;
    const int nd = dg.n;

    // Work on rotations without the half-edges.
    std::vector<std::vector<Dart>> rot(nd);
    for (int v = 0; v < nd; ++v) {
        for (Dart d : sd.dual.rot[v])
            if (!sd.dual.is_half(d)) rot[v].push_back(d);
    }

    // Contract the three triangle edges into one vertex x.  The first two
    // contractions merge the b's; the last triangle edge becomes a loop and
    // is simply dropped along with its darts.
    auto b = sd.b;
    std::vector<int> vmap(nd);
    for (int v = 0; v < nd; ++v) vmap[v] = v;

    for (int eid = m; eid < m + 3; ++eid) {
        Dart d = edge_dart(eid, false);
        int u = vmap[dg.tail(d)];
        int v = vmap[dg.head(d)];
        if (u == v) {
            // loop: drop its darts
            auto& r = rot[u];
            r.erase(std::remove_if(r.begin(), r.end(),
                                   [&](Dart x) { return dart_edge(x) == eid; }),
                    r.end());
            continue;
        }
        rot[u] = contract_edge(rot[u], rot[v], d);
        rot[v].clear();
        for (int w = 0; w < nd; ++w)
            if (vmap[w] == v) vmap[w] = u;
    }

    int xold = vmap[b[0]];

    // Renumber: inner faces keep their ids, x becomes inner_face_count.
    IdentifiedDual out;
    out.dual_vertex_map.assign(nd, -1);
    for (int v = 0; v < nd; ++v)
        out.dual_vertex_map[v] = (vmap[v] == xold) ? sd.inner_face_count : v;
    out.x = sd.inner_face_count;

    std::vector<std::pair<int, int>> edges(m);
    for (int e = 0; e < m; ++e)
        edges[e] = {out.dual_vertex_map[dg.edges[e].first],
                    out.dual_vertex_map[dg.edges[e].second]};
    std::vector<std::vector<Dart>> new_rot(sd.inner_face_count + 1);
    for (int v = 0; v < nd; ++v) {
        if (rot[v].empty()) continue;
        new_rot[out.dual_vertex_map[v]] = rot[v];
    }

    // The format carries no preferred outer face for G*; pick the face of
    // dart 0 and spread three roots clockwise on it.
    FaceDecomposition fd = trace_rotation_faces(new_rot, m);
    const auto& cyc = fd.cycles[fd.dart_face[0]];
    std::vector<int> verts;
    auto tailof = [&](Dart d) {
        int e = dart_edge(d);
        return (d & 1) ? edges[e].second : edges[e].first;
    };
    for (Dart d : cyc) {
        int v = tailof(d);
        if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
    }
    if (verts.size() < 3) throw Error(ErrorCode::EulerViolation, "degenerate dual face");
    int k = static_cast<int>(verts.size());
    std::array<int, 3> roots{verts[0], verts[(2 * k) / 3 % k], verts[k / 3 % k]};

    out.g = build_graph_from_darts(sd.inner_face_count + 1, std::move(edges),
                                   std::move(new_rot), roots);
    return out;
}

PlaneGraph direct_dual(const PlaneGraph& g) {
    const int m = g.m();
    std::vector<std::pair<int, int>> edges(m);
    for (int e = 0; e < m; ++e)
        edges[e] = {g.faces.dart_face[edge_dart(e, false)],
                    g.faces.dart_face[edge_dart(e, true)]};
    std::vector<std::vector<Dart>> rot(g.f());
    for (int fid = 0; fid < g.f(); ++fid) rot[fid] = g.faces.cycles[fid];

    // Outer face of the dual: the face dual to primal vertex roots[0], i.e.
    // the face whose boundary edges are exactly the edges at roots[0].
    FaceDecomposition fd = trace_rotation_faces(rot, m);
    std::set<int> want;
    for (Dart d : g.rot[g.roots[0]]) want.insert(dart_edge(d));
    int outer = -1;
    for (int fid = 0; fid < fd.face_count(); ++fid) {
        std::set<int> got;
        for (Dart d : fd.cycles[fid]) got.insert(dart_edge(d));
        if (got == want) { outer = fid; break; }
    }
    if (outer < 0) throw Error(ErrorCode::EulerViolation, "dual face of root not found");
    const auto& cyc = fd.cycles[outer];
    std::vector<int> verts;
    auto tailof = [&](Dart d) {
        int e = dart_edge(d);
        return (d & 1) ? edges[e].second : edges[e].first;
    };
    for (Dart d : cyc) {
        int v = tailof(d);
        if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
    }
    int k = static_cast<int>(verts.size());
    std::array<int, 3> roots{verts[0], verts[(2 * k) / 3 % k], verts[k / 3 % k]};
    return build_graph_from_darts(g.f(), std::move(edges), std::move(rot), roots);
}

} // namespace schnyder
