#include "schnyder/wood.hpp"

#include <array>
#include <sstream>

namespace schnyder {

const char* color_name(int c) {
    switch (c) {
    case kRed: return "red";
    case kGreen: return "green";
    case kBlue: return "blue";
    }
    return "?";
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations) out << v.rule << ": " << v.detail << '\n';
    return out.str();
}

Dart outgoing_dart(const Suspension& gs, const SchnyderWood& wood, int v, int c) {
    for (Dart d : gs.rot[v])
        if (wood.dart_color[d] == c) return d;
    return -1;
}

namespace {

std::string vstr(int v) { return std::to_string(v); }

} // namespace

ValidationReport validate_wood(const Suspension& gs, const SchnyderWood& wood) {
    ValidationReport rep;
    const PlaneGraph& g = gs.g;
    const int m = g.m();
    if (static_cast<int>(wood.dart_color.size()) != 2 * m + 3) {
        rep.add("structure", "dart color table has wrong size");
        return rep;
    }
    for (int d = 0; d < 2 * m + 3; ++d)
        if (wood.dart_color[d] < 0 || wood.dart_color[d] > 3)
            rep.add("structure", "bad color on dart " + vstr(d));
    if (!rep.ok()) return rep;

    // condition 1
    for (int e = 0; e < m; ++e) {
        int a = wood.dart_color[2 * e], b = wood.dart_color[2 * e + 1];
        if (!a && !b)
            rep.add("cond1", "edge " + vstr(g.edges[e].first) + "-" + vstr(g.edges[e].second) +
                                 " carries no direction");
        if (a && b && a == b)
            rep.add("cond1", "bidirected edge " + vstr(g.edges[e].first) + "-" +
                                 vstr(g.edges[e].second) + " repeats color " + color_name(a));
    }

    // condition 2
    for (int i = 0; i < 3; ++i)
        if (wood.dart_color[gs.half_dart(i)] != i + 1)
            rep.add("cond2", "half-edge at root " + vstr(g.roots[i]) + " is not " +
                                 color_name(i + 1) + "-colored outgoing");

    // condition 3
    for (int v = 0; v < g.n; ++v) {
        const auto& list = gs.rot[v];
        int deg = static_cast<int>(list.size());
        std::array<int, 4> out_pos{-1, -1, -1, -1};
        std::array<int, 4> out_count{0, 0, 0, 0};
        for (int i = 0; i < deg; ++i) {
            int c = wood.dart_color[list[i]];
            if (c) {
                out_count[c]++;
                out_pos[c] = i;
            }
        }
        bool counts_ok = true;
        for (int c = 1; c <= 3; ++c)
            if (out_count[c] != 1) {
                rep.add("cond3", "vertex " + vstr(v) + " has " + vstr(out_count[c]) +
                                     " outgoing " + color_name(c) + " edges");
                counts_ok = false;
            }
        if (!counts_ok) continue;

        // clockwise outgoing order red, green, blue (cyclically)
        {
            int p = out_pos[kRed];
            int seen_green = -1, seen_blue = -1, step = 0;
            for (int k = 1; k < deg; ++k) {
                int i = (p + k) % deg;
                if (i == out_pos[kGreen]) seen_green = step++;
                if (i == out_pos[kBlue]) seen_blue = step++;
            }
            if (!(seen_green == 0 && seen_blue == 1))
                rep.add("cond3", "outgoing edges at vertex " + vstr(v) +
                                     " are not clockwise red, green, blue");
        }

        // sector containment: incoming c-edges lie in the closed clockwise
        // sector from out(c+1) to out(c-1)
        for (int c = 1; c <= 3; ++c) {
            int from = out_pos[color_next(c)];
            int to = out_pos[color_prev(c)];
            std::vector<bool> in_sector(deg, false);
            for (int i = from;; i = (i + 1) % deg) {
                in_sector[i] = true;
                if (i == to) break;
            }
            for (int i = 0; i < deg; ++i) {
                Dart d = list[i];
                if (gs.is_half(d)) continue;
                if (wood.dart_color[gs.reverse(d)] == c && !in_sector[i])
                    rep.add("cond3", "incoming " + std::string(color_name(c)) +
                                         " edge at vertex " + vstr(v) +
                                         " lies outside its sector");
            }
        }
    }

    // condition 4: no monochromatic directed cycle on an inner face boundary
    for (int fid = 0; fid < gs.faces.face_count(); ++fid) {
        const auto& cyc = gs.faces.cycles[fid];
        bool outer = false;
        for (Dart d : cyc) outer = outer || gs.is_half(d);
        if (outer) continue;
        for (int c = 1; c <= 3; ++c) {
            bool forward = true, backward = true;
            for (Dart d : cyc) {
                forward = forward && wood.dart_color[d] == c;
                backward = backward && wood.dart_color[gs.reverse(d)] == c;
            }
            if (forward || backward)
                rep.add("cond4", "inner face " + vstr(fid) + " is a directed " +
                                     color_name(c) + " cycle");
        }
    }
    return rep;
}

ColorTree color_tree(const Suspension& gs, const SchnyderWood& wood, int c) {
    const PlaneGraph& g = gs.g;
    ColorTree t;
    t.color = c;
    t.root = g.roots[c - 1];
    t.parent_dart.assign(g.n, -1);
    t.parent.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        Dart d = outgoing_dart(gs, wood, v, c);
        if (d < 0)
            throw Error(ErrorCode::InvalidWood,
                        "vertex " + std::to_string(v) + " has no outgoing " + color_name(c));
        t.parent_dart[v] = d;
        t.parent[v] = gs.is_half(d) ? -1 : g.head(d);
    }
    if (t.parent[t.root] != -1)
        throw Error(ErrorCode::InvalidWood, "root does not exit via its half-edge");
    for (int v = 0; v < g.n; ++v) {
        int u = v;
        for (int steps = 0; u != t.root; ++steps) {
            if (steps > g.n)
                throw Error(ErrorCode::InvalidWood,
                            "monochromatic cycle in color " + std::string(color_name(c)));
            u = t.parent[u];
            if (u < 0) throw Error(ErrorCode::InvalidWood, "tree walk left the graph");
        }
    }
    return t;
}

} // namespace schnyder
