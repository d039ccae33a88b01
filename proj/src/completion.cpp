#include "schnyder/completion.hpp"

#include <algorithm>

namespace schnyder {

Completion completion_skeleton(const Suspension& gs, const SuspendedDual& sd) {
    const PlaneGraph& g = gs.g;
    const PlaneGraph& dg = sd.dual.g;
    const int m = g.m();

    Completion c;
    c.np = g.n;
    c.ndv = dg.n;
    c.m = m;
    c.b_vertex = sd.b;

    c.ends.assign(4 * m + 9, {-1, -1});
    for (int e = 0; e < m; ++e) {
        int z = c.crossing_of_edge(e);
        c.ends[4 * e + 0] = {g.tail(edge_dart(e, false)), z};
        c.ends[4 * e + 1] = {g.head(edge_dart(e, false)), z};
        c.ends[4 * e + 2] = {c.np + sd.corr.dual_ends[e].first, z};
        c.ends[4 * e + 3] = {c.np + sd.corr.dual_ends[e].second, z};
    }
    for (int i = 0; i < 3; ++i) {
        int z = c.crossing_of_ray(i);
        c.ends[4 * m + 3 * i + 0] = {g.roots[i], z};
        c.ends[4 * m + 3 * i + 1] = {c.np + sd.corr.dual_ends[m + i].first, z};
        c.ends[4 * m + 3 * i + 2] = {c.np + sd.corr.dual_ends[m + i].second, z};
    }
    const int E = c.edge_count();

    c.rot.assign(c.vertex_count(), {});
    // primal vertices: same cyclic order, darts replaced by edge halves
    for (int v = 0; v < g.n; ++v) {
        for (Dart d : gs.rot[v]) {
            int k;
            if (gs.is_half(d)) k = 4 * m + 3 * gs.half_root_index(d);
            else k = 4 * dart_edge(d) + (d & 1);
            c.rot[v].push_back(2 * k); // outer-vertex side dart
        }
    }
    // dual vertices: from the suspended dual's rotations; its half darts
    // become the b half-edges (specials 3..5)
    for (int v = 0; v < dg.n; ++v) {
        for (Dart d : sd.dual.rot[v]) {
            if (sd.dual.is_half(d)) {
                c.rot[c.np + v].push_back(2 * E + 3 + sd.dual.half_root_index(d));
                continue;
            }
            int e = dart_edge(d);
            int k = (e < m ? 4 * e + 2 : 4 * m + 3 * (e - m) + 1) + (d & 1);
            c.rot[c.np + v].push_back(2 * k);
        }
    }
    // crossing vertices: clockwise (head half, right dual half, tail half,
    // left dual half); ray crossings use the outward stub in the head slot
    for (int e = 0; e < m; ++e) {
        int z = c.crossing_of_edge(e);
        c.rot[z] = {2 * (4 * e + 1) + 1, 2 * (4 * e + 2) + 1, 2 * (4 * e + 0) + 1,
                    2 * (4 * e + 3) + 1};
    }
    for (int i = 0; i < 3; ++i) {
        int z = c.crossing_of_ray(i);
        c.rot[z] = {2 * E + i, 2 * (4 * m + 3 * i + 1) + 1, 2 * (4 * m + 3 * i + 0) + 1,
                    2 * (4 * m + 3 * i + 2) + 1};
    }

    c.color.assign(E, 0);
    c.toward_crossing.assign(E, false);
    return c;
}

SchnyderWood dual_wood(const Suspension& gs, const SchnyderWood& wood,
                       const SuspendedDual& sd) {
    const int m = gs.g.m();
    {
        ValidationReport rep = validate_wood(gs, wood);
        if (!rep.ok())
            throw Error(ErrorCode::InvalidWood, "dual_wood input: " + rep.to_string());
    }
    SchnyderWood dual;
    dual.dart_color.assign(2 * (m + 3) + 3, 0);
    for (int e = 0; e < m; ++e) {
        int a = wood.dart_color[2 * e], b = wood.dart_color[2 * e + 1];
        if (a && b) {
            // i-(i+1)-colored: the dual is unidirected (i-1)-colored and runs
            // right of the i-direction; the dual dart with the parity of the
            // i-colored primal dart goes from its right face to its left.
            Dart di = (b == color_next(a)) ? 2 * e : 2 * e + 1;
            int i = wood.dart_color[di];
            dual.dart_color[2 * e + (di & 1)] = color_prev(i);
        } else {
            // unidirected c-colored: dual is (c+1)-(c+2)-bidirected with the
            // (c+1)-direction from right to left of the primal direction.
            Dart dc = a ? 2 * e : 2 * e + 1;
            int cc = wood.dart_color[dc];
            dual.dart_color[2 * e + (dc & 1)] = color_next(cc);
            dual.dart_color[2 * e + 1 - (dc & 1)] = color_next(color_next(cc));
        }
    }
    // ray at r_i is a unidirected (i)-colored half-edge crossing the triangle
    // edge b_{i-1} b_{i+1}; its outgoing dart has even parity by construction
    for (int i = 0; i < 3; ++i) {
        int cc = i + 1;
        dual.dart_color[2 * (m + i)] = color_next(cc);
        dual.dart_color[2 * (m + i) + 1] = color_next(color_next(cc));
    }
    for (int i = 0; i < 3; ++i) dual.dart_color[sd.dual.half_dart(i)] = i + 1;
    return dual;
}

Completion make_completion(const Suspension& gs, const SuspendedDual& sd,
                           const SchnyderWood& wood) {
    const PlaneGraph& g = gs.g;
    const int m = g.m();
    Completion c = completion_skeleton(gs, sd);
    SchnyderWood dw = dual_wood(gs, wood, sd);

    // Each half of a subdivided edge inherits the direction and color of its
    // side: outgoing at v means (v -> z), an incoming direction becomes
    // (z -> v) in the same color.
    auto apply = [&](int k, int dart, const SchnyderWood& w, int uni_other) {
        if (w.dart_color[dart]) {
            c.toward_crossing[k] = true;
            c.color[k] = w.dart_color[dart];
        } else {
            c.toward_crossing[k] = false;
            c.color[k] = w.dart_color[uni_other];
        }
    };
    for (int e = 0; e < m; ++e) {
        apply(4 * e + 0, 2 * e, wood, 2 * e + 1);
        apply(4 * e + 1, 2 * e + 1, wood, 2 * e);
        apply(4 * e + 2, 2 * e, dw, 2 * e + 1);
        apply(4 * e + 3, 2 * e + 1, dw, 2 * e);
    }
    for (int i = 0; i < 3; ++i) {
        c.toward_crossing[4 * m + 3 * i] = true; // r_i -> z, i-colored
        c.color[4 * m + 3 * i] = i + 1;
        apply(4 * m + 3 * i + 1, 2 * (m + i), dw, 2 * (m + i) + 1);
        apply(4 * m + 3 * i + 2, 2 * (m + i) + 1, dw, 2 * (m + i));
    }
    return c;
}

ValidationReport check_crossing_vertices(const Completion& c) {
    ValidationReport rep;
    for (int e = 0; e < c.m + 3; ++e) {
        int z = e < c.m ? c.crossing_of_edge(e) : c.crossing_of_ray(e - c.m);
        const auto& list = c.rot[z];
        int out_count = 0;
        for (int d : list)
            if (c.dart_outgoing(d)) ++out_count;
        if (out_count != 1) {
            rep.add("crossing", "crossing vertex " + std::to_string(z) + " has " +
                                    std::to_string(out_count) + " outgoing edges");
            continue;
        }
        // incoming colors, counterclockwise
        std::vector<int> ccw;
        for (auto it = list.rbegin(); it != list.rend(); ++it)
            if (!c.dart_outgoing(*it)) ccw.push_back(c.dart_color(*it));
        if (ccw.size() != 3) {
            rep.add("crossing", "crossing vertex " + std::to_string(z) +
                                    " does not have three incoming edges");
            continue;
        }
        bool ok = false;
        for (int s = 0; s < 3; ++s)
            ok = ok || (ccw[s % 3] == kRed && ccw[(s + 1) % 3] == kGreen &&
                        ccw[(s + 2) % 3] == kBlue);
        if (!ok)
            rep.add("crossing", "incoming colors at crossing vertex " + std::to_string(z) +
                                    " are not counterclockwise red, green, blue");
    }
    return rep;
}

} // namespace schnyder
