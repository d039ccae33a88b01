#include "schnyder/io.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>

namespace schnyder {

PlaneGraph read_rot(std::istream& in) {
    int n = 0, m = 0;
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::IoError, "empty .rot input");
    {
        std::istringstream ls(line);
        if (!(ls >> n >> m)) throw Error(ErrorCode::IoError, "bad .rot header line");
    }
    if (n <= 0) throw Error(ErrorCode::IoError, "bad vertex count");

    std::vector<std::vector<int>> nb(n);
    int degree_sum = 0;
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw Error(ErrorCode::IoError, "truncated .rot input");
        std::istringstream ls(line);
        int v;
        char colon;
        if (!(ls >> v >> colon) || colon != ':' || v < 0 || v >= n)
            throw Error(ErrorCode::IoError, "bad vertex line: " + line);
        int u;
        while (ls >> u) nb[v].push_back(u);
        degree_sum += static_cast<int>(nb[v].size());
    }
    if (!std::getline(in, line)) throw Error(ErrorCode::IoError, "missing outer line");
    std::array<int, 3> roots{};
    {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag != "outer:")
            throw Error(ErrorCode::IoError, "bad outer line: " + line);
        if (!(ls >> roots[0] >> roots[1] >> roots[2]))
            throw Error(ErrorCode::IoError, "bad outer line: " + line);
    }
    if (degree_sum != 2 * m)
        throw Error(ErrorCode::EulerViolation, "degree sum " + std::to_string(degree_sum) +
                                                   " does not match m=" + std::to_string(m));
    PlaneGraph g = build_graph(n, nb, roots);
    if (g.m() != m)
        throw Error(ErrorCode::EulerViolation, "edge count mismatch");
    return g;
}

PlaneGraph read_rot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    return read_rot(in);
}

std::string write_rot(const PlaneGraph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (int v = 0; v < g.n; ++v) {
        out << v << ':';
        for (Dart d : g.rot[v]) out << ' ' << g.head(d);
        out << '\n';
    }
    out << "outer: " << g.roots[0] << ' ' << g.roots[1] << ' ' << g.roots[2] << '\n';
    return out.str();
}

void write_rot_file(const PlaneGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path);
    out << write_rot(g);
}

namespace {

// Picks the outer face and roots for formats that do not specify them.
PlaneGraph finish_unrooted(int n, const std::vector<std::vector<int>>& nb) {
    // Build once with placeholder roots on the face of dart 0, retrying with
    // the orientation that makes the chosen roots clockwise.
    PlaneGraph probe;
    probe.n = n;
    {
        // reuse build_graph edge/dart wiring by faking roots afterwards: we
        // trace manually here instead.
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
        probe.edges = std::move(edges);
        probe.rot = std::move(rot);
        probe.faces = trace_rotation_faces(probe.rot, probe.m());
    }
    const auto& cyc = probe.faces.cycles[probe.faces.dart_face[0]];
    std::vector<int> verts;
    for (Dart d : cyc) {
        int v = probe.tail(d);
        bool dup = false;
        for (int w : verts) dup = dup || w == v;
        if (!dup) verts.push_back(v);
    }
    if (verts.size() < 3)
        throw Error(ErrorCode::IoError, "chosen outer face has fewer than 3 vertices");
    // traced boundary is counterclockwise around the graph; clockwise = reversed
    int k = static_cast<int>(verts.size());
    std::array<int, 3> roots{verts[0], verts[(2 * k) / 3 % k], verts[k / 3 % k]};
    return build_graph(n, nb, roots);
}

} // namespace

std::vector<PlaneGraph> read_planar_code(std::istream& in) {
    std::string header;
    header.resize(15);
    in.read(header.data(), 15);
    if (in.gcount() == 15 && header == ">>planar_code<<") {
        // consumed
    } else {
        // no header: rewind
        in.clear();
        in.seekg(0);
    }
    std::vector<PlaneGraph> out;
    while (true) {
        int c = in.get();
        if (c == EOF) break;
        int n = c;
        if (n == 0)
            throw Error(ErrorCode::IoError, "planar_code graphs with >255 vertices unsupported");
        std::vector<std::vector<int>> nb(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                int u = in.get();
                if (u == EOF) throw Error(ErrorCode::IoError, "truncated planar_code input");
                if (u == 0) break;
                nb[v].push_back(u - 1);
            }
        }
        out.push_back(finish_unrooted(n, nb));
    }
    return out;
}

std::vector<PlaneGraph> read_planar_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    return read_planar_code(in);
}

} // namespace schnyder
