#include "schnyder/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace schnyder {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

PlaneGraph embed_by_coordinates(const std::vector<std::pair<double, double>>& points,
                                const std::vector<std::pair<int, int>>& edge_list,
                                const std::array<int, 3>& roots) {
    int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> nb(n);
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<double, int>> ang;
        for (const auto& [a, b] : edge_list) {
            int u = -1;
            if (a == v) u = b;
            else if (b == v) u = a;
            else continue;
            double dx = points[u].first - points[v].first;
            double dy = points[u].second - points[v].second;
            ang.emplace_back(std::atan2(dy, dx), u);
        }
        std::sort(ang.begin(), ang.end(),
                  [](const auto& p, const auto& q) { return p.first > q.first; });
        for (const auto& [a, u] : ang) nb[v].push_back(u);
    }
    return build_graph(n, nb, roots);
}

PlaneGraph gen_k4() {
    return build_graph(4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, {0, 1, 2});
}

PlaneGraph gen_wheel(int rim) {
    if (rim < 3) throw Error(ErrorCode::BadParams, "wheel rim must be >= 3");
    int hub = rim;
    std::vector<std::pair<double, double>> pts(rim + 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rim; ++i) {
        double a = -2.0 * kPi * i / rim + kPi / 2.0; // increasing i runs clockwise
        pts[i] = {std::cos(a), std::sin(a)};
        edges.emplace_back(i, (i + 1) % rim);
        edges.emplace_back(i, hub);
    }
    pts[hub] = {0.0, 0.0};
    return embed_by_coordinates(pts, edges, {0, rim / 3, (2 * rim) / 3});
}

namespace {

struct Vec3 {
    double x, y, z;
};

PlaneGraph gen_solid(const std::vector<Vec3>& pts) {
    int n = static_cast<int>(pts.size());
    auto dist2 = [&](int a, int b) {
        double dx = pts[a].x - pts[b].x, dy = pts[a].y - pts[b].y, dz = pts[a].z - pts[b].z;
        return dx * dx + dy * dy + dz * dz;
    };
    double best = 1e100;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) best = std::min(best, dist2(a, b));
    std::vector<std::pair<int, int>> edge_list;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (dist2(a, b) < best * 1.0001) edge_list.emplace_back(a, b);

    // Rotation at v: neighbors sorted by angle in the tangent plane of the
    // outward direction v/|v| (all solids here are centered at the origin).
    std::vector<std::vector<int>> nb(n);
    for (int v = 0; v < n; ++v) {
        double len = std::sqrt(pts[v].x * pts[v].x + pts[v].y * pts[v].y + pts[v].z * pts[v].z);
        Vec3 nrm{pts[v].x / len, pts[v].y / len, pts[v].z / len};
        Vec3 ref{1.13, 0.27, 0.53}; // arbitrary, not parallel to any vertex direction
        double d = ref.x * nrm.x + ref.y * nrm.y + ref.z * nrm.z;
        Vec3 u1{ref.x - d * nrm.x, ref.y - d * nrm.y, ref.z - d * nrm.z};
        double ul = std::sqrt(u1.x * u1.x + u1.y * u1.y + u1.z * u1.z);
        u1 = {u1.x / ul, u1.y / ul, u1.z / ul};
        Vec3 u2{nrm.y * u1.z - nrm.z * u1.y, nrm.z * u1.x - nrm.x * u1.z,
                nrm.x * u1.y - nrm.y * u1.x};
        std::vector<std::pair<double, int>> ang;
        for (const auto& [a, b] : edge_list) {
            int w = -1;
            if (a == v) w = b;
            else if (b == v) w = a;
            else continue;
            Vec3 e{pts[w].x - pts[v].x, pts[w].y - pts[v].y, pts[w].z - pts[v].z};
            ang.emplace_back(std::atan2(e.x * u2.x + e.y * u2.y + e.z * u2.z,
                                        e.x * u1.x + e.y * u1.y + e.z * u1.z),
                             w);
        }
        std::sort(ang.begin(), ang.end(),
                  [](const auto& p, const auto& q) { return p.first > q.first; });
        for (const auto& [a, w] : ang) nb[v].push_back(w);
    }

    // Use any face as the outer one; the handedness of the 3D rotation system
    // is unknown, so try both root orders.
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> edge_id;
    for (int v = 0; v < n; ++v)
        for (int u : nb[v]) {
            auto key = std::minmax(u, v);
            if (!edge_id.count(key)) {
                edge_id[key] = static_cast<int>(edges.size());
                edges.emplace_back(v, u);
            }
        }
    std::vector<std::vector<Dart>> rot(n);
    for (int v = 0; v < n; ++v)
        for (int u : nb[v]) {
            int e = edge_id[std::minmax(u, v)];
            rot[v].push_back(edge_dart(e, edges[e].first != v));
        }
    FaceDecomposition fd = trace_rotation_faces(rot, static_cast<int>(edges.size()));
    const auto& cyc = fd.cycles[fd.dart_face[0]];
    std::vector<int> verts;
    for (Dart d : cyc) {
        int e = dart_edge(d);
        int v = (d & 1) ? edges[e].second : edges[e].first;
        if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
    }
    int k = static_cast<int>(verts.size());
    std::array<int, 3> roots{verts[0], verts[(2 * k) / 3 % k], verts[k / 3 % k]};
    try {
        return build_graph(n, nb, roots);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::RootsNotClockwise) throw;
        std::swap(roots[1], roots[2]);
        return build_graph(n, nb, roots);
    }
}

constexpr double kPhi = 1.6180339887498948482;

} // namespace

PlaneGraph gen_prism() {
    // equilateral: triangle side sqrt(3) equals the prism height
    const double h = std::sqrt(3.0) / 2.0;
    std::vector<Vec3> pts;
    for (double z : {h, -h})
        for (int i = 0; i < 3; ++i) {
            double a = 2.0 * kPi * i / 3.0;
            pts.push_back({std::cos(a), std::sin(a), z});
        }
    return gen_solid(pts);
}

PlaneGraph gen_cube() {
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
    return gen_solid(pts);
}

PlaneGraph gen_octahedron() {
    std::vector<Vec3> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    return gen_solid(pts);
}

PlaneGraph gen_icosahedron() {
    std::vector<Vec3> pts;
    for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) {
            pts.push_back({0.0, s1, s2 * kPhi});
            pts.push_back({s1, s2 * kPhi, 0.0});
            pts.push_back({s1 * kPhi, 0.0, s2});
        }
    return gen_solid(pts);
}

PlaneGraph gen_dodecahedron() {
    std::vector<Vec3> pts;
    for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0})
            for (double sz : {1.0, -1.0}) pts.push_back({sx, sy, sz});
    for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) {
            pts.push_back({0.0, s1 / kPhi, s2 * kPhi});
            pts.push_back({s1 / kPhi, s2 * kPhi, 0.0});
            pts.push_back({s1 * kPhi, 0.0, s2 / kPhi});
        }
    return gen_solid(pts);
}

PlaneGraph gen_stacked(int n, std::uint64_t seed) {
    if (n < 4) throw Error(ErrorCode::BadParams, "stacked triangulation needs n >= 4");
    PlaneGraph g = gen_k4();
    std::mt19937_64 rng(seed);
    while (g.n < n) {
        std::vector<int> inner;
        for (int fid = 0; fid < g.f(); ++fid)
            if (fid != g.outer_face()) inner.push_back(fid);
        int fid = inner[std::uniform_int_distribution<int>(0, static_cast<int>(inner.size()) - 1)(rng)];
        const auto& cyc = g.faces.cycles[fid];
        // Insert w inside the triangle; the face cycle's tail order is its
        // clockwise corner order as drawn.
        int w = g.n;
        std::vector<std::vector<int>> nb(g.n + 1);
        for (int v = 0; v < g.n; ++v)
            for (Dart d : g.rot[v]) nb[v].push_back(g.head(d));
        for (Dart d : cyc) nb[w].push_back(g.tail(d));
        // For a face dart (a->b), the corner at b lies between the leaving
        // dart (b->c) and (b->a); the new spoke goes into that corner.
        for (Dart d : cyc) {
            auto& list = nb[g.head(d)];
            auto it = std::find(list.begin(), list.end(), g.tail(d));
            list.insert(it, w);
        }
        g = build_graph(g.n + 1, nb, g.roots);
    }
    return g;
}

PlaneGraph gen(const std::string& kind, int param, std::uint64_t seed) {
    if (kind == "k4") return gen_k4();
    if (kind == "wheel") return gen_wheel(param);
    if (kind == "prism") return gen_prism();
    if (kind == "cube") return gen_cube();
    if (kind == "octahedron") return gen_octahedron();
    if (kind == "icosahedron") return gen_icosahedron();
    if (kind == "dodecahedron") return gen_dodecahedron();
    if (kind == "stacked") return gen_stacked(param, seed);
    throw Error(ErrorCode::BadParams, "unknown generator kind: " + kind);
}

} // namespace schnyder
