#include "doctest.h"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "schnyder/canonical.hpp"
#include "schnyder/generators.hpp"
#include "schnyder/io.hpp"
#include "schnyder/plane_graph.hpp"
#include "schnyder/suspension.hpp"

#include "fixtures.hpp"

using namespace schnyder;

namespace {

// Independent vertex-connectivity >= 3 check via max-flow (vertex splitting,
// unit capacities) over all non-adjacent pairs plus neighborhood fallback.
int flow_vertex_connectivity(const PlaneGraph& g) {
    int n = g.n;
    auto max_flow_st = [&](int s, int t) {
        // node v -> in 2v, out 2v+1; arcs: in->out cap 1 (inf for s,t),
        // edges both ways out->in cap inf
        int N = 2 * n;
        std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
        for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? 1000 : 1;
        for (const auto& [u, v] : g.edges) {
            cap[2 * u + 1][2 * v] = 1000;
            cap[2 * v + 1][2 * u] = 1000;
        }
        int flow = 0;
        while (true) {
            std::vector<int> prev(N, -1);
            std::queue<int> q;
            q.push(2 * s + 1);
            prev[2 * s + 1] = 2 * s + 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y = 0; y < N; ++y)
                    if (cap[x][y] > 0 && prev[y] == -1) {
                        prev[y] = x;
                        q.push(y);
                    }
            }
            if (prev[2 * t] == -1) break;
            int x = 2 * t;
            while (x != 2 * s + 1) {
                int p = prev[x];
                cap[p][x] -= 1;
                cap[x][p] += 1;
                x = p;
            }
            ++flow;
        }
        return flow;
    };
    int best = g.n;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.find_edge(s, t) >= 0) continue;
            best = std::min(best, max_flow_st(s, t));
        }
    return best;
}

} // namespace

TEST_CASE("K4 sample file parses bit-exactly and satisfies Euler") {
    std::string sample = "4 6\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\nouter: 0 1 2\n";
    std::istringstream in(sample);
    PlaneGraph g = read_rot(in);
    CHECK(g.n == 4);
    CHECK(g.m() == 6);
    CHECK(g.f() == 4);
    CHECK(write_rot(g) == sample);
}

TEST_CASE("face tracing counts") {
    CHECK(gen_k4().f() == 4);
    PlaneGraph cube = gen_cube();
    CHECK(cube.n == 8);
    CHECK(cube.m() == 12);
    CHECK(cube.f() == 6);
    PlaneGraph ico = gen_icosahedron();
    CHECK(ico.n == 12);
    CHECK(ico.m() == 30);
    CHECK(ico.f() == 20);
    for (const auto& cyc : ico.faces.cycles) CHECK(cyc.size() == 3);
    PlaneGraph w6 = gen_wheel(6);
    CHECK(w6.n == 7);
    CHECK(w6.m() == 12);
    CHECK(w6.f() == 7);
    PlaneGraph dod = gen_dodecahedron();
    CHECK(dod.n == 20);
    CHECK(dod.m() == 30);
    CHECK(dod.f() == 12);
}

TEST_CASE("malformed rotation input") {
    SUBCASE("duplicated dart") {
        std::string bad = "4 6\n0: 1 3 2 1\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\nouter: 0 1 2\n";
        std::istringstream in(bad);
        CHECK_THROWS_WITH_AS(read_rot(in), doctest::Contains("EulerViolation"), Error);
    }
    SUBCASE("counterclockwise roots") {
        std::string bad = "4 6\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\nouter: 0 2 1\n";
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_rot(in), Error);
        try {
            std::istringstream in2(bad);
            read_rot(in2);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::RootsNotClockwise);
        }
    }
}

TEST_CASE("3-connectivity: positives, negative, and flow cross-check") {
    CHECK(check_three_connected(gen_k4()));
    CHECK(check_three_connected(gen_cube()));
    CHECK(check_three_connected(gen_wheel(6)));
    CHECK(check_three_connected(gen_icosahedron()));

    PlaneGraph shared = fixtures::two_k4_sharing_edge();
    CHECK_FALSE(check_three_connected(shared));

    for (const PlaneGraph& g :
         {gen_k4(), gen_prism(), gen_cube(), gen_wheel(5), gen_octahedron()}) {
        bool mine = check_three_connected(g);
        bool flow = flow_vertex_connectivity(g) >= 3;
        CHECK(mine == flow);
    }
    CHECK(flow_vertex_connectivity(fixtures::two_k4_sharing_edge()) < 3);
}

TEST_CASE("suspension dart counts") {
    Suspension sk4 = suspend(gen_k4());
    int darts = 0;
    for (const auto& r : sk4.rot) darts += static_cast<int>(r.size());
    CHECK(darts == 2 * 6 + 3);
    Suspension scube = suspend(gen_cube());
    darts = 0;
    for (const auto& r : scube.rot) darts += static_cast<int>(r.size());
    CHECK(darts == 2 * 12 + 3);
}

TEST_CASE("suspended dual of K4") {
    PlaneGraph k4 = gen_k4();
    SuspendedDual sd = suspended_dual(suspend(k4));
    CHECK(sd.dual.g.n == 6);        // 3 inner faces + b1 b2 b3
    CHECK(sd.dual.g.m() == 6 + 3);  // edge duals + triangle
    CHECK(sd.inner_face_count == 3);

    // b_i is not incident to r_i: check via dual ends of edges at r_i
    for (int i = 0; i < 3; ++i) {
        int bi = sd.b[i];
        int ri = k4.roots[i];
        for (Dart d : k4.rot[ri]) {
            auto [a, b] = sd.corr.dual_ends[dart_edge(d)];
            CHECK(a != bi);
            CHECK(b != bi);
        }
    }
}

TEST_CASE("platonic dualities and involution") {
    PlaneGraph k4 = gen_k4();
    IdentifiedDual dk4 = identify_roots(suspended_dual(suspend(k4)));
    CHECK(plane_isomorphic(dk4.g, k4));

    IdentifiedDual dcube = identify_roots(suspended_dual(suspend(gen_cube())));
    CHECK(plane_isomorphic(dcube.g, gen_octahedron()));

    IdentifiedDual ddod = identify_roots(suspended_dual(suspend(gen_dodecahedron())));
    CHECK(plane_isomorphic(ddod.g, gen_icosahedron()));

    // involution: double dual gives the original graph back
    for (const PlaneGraph& g : {gen_k4(), gen_prism(), gen_cube(), gen_wheel(7)}) {
        PlaneGraph dd = direct_dual(identify_roots(suspended_dual(suspend(g))).g);
        CHECK(plane_isomorphic(dd, g));
    }
}

TEST_CASE("stacked triangulations are 3-connected triangulations") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        PlaneGraph g = gen_stacked(12, seed);
        CHECK(g.n == 12);
        CHECK(g.m() == 3 * 12 - 6);
        CHECK(check_three_connected(g));
        for (const auto& cyc : g.faces.cycles) CHECK(cyc.size() == 3);
    }
}

TEST_CASE("wheel bad params") {
    CHECK_THROWS_AS(gen_wheel(2), Error);
    CHECK_THROWS_AS(gen_stacked(3, 1), Error);
}

TEST_CASE("rot round trip on generated corpus") {
    for (const PlaneGraph& g : {gen_prism(), gen_wheel(8), gen_stacked(20, 7)}) {
        std::string s = write_rot(g);
        std::istringstream in(s);
        PlaneGraph h = read_rot(in);
        CHECK(write_rot(h) == s);
        CHECK(plane_isomorphic(g, h));
    }
}

TEST_CASE("planar_code reader on a hand-encoded K4") {
    // K4 rotations, 1-based, clockwise, 0-terminated
    std::string data = ">>planar_code<<";
    unsigned char body[] = {4, 2, 4, 3, 0, 3, 4, 1, 0, 1, 4, 2, 0, 1, 2, 3, 0};
    data.append(reinterpret_cast<char*>(body), sizeof(body));
    std::istringstream in(data);
    auto graphs = read_planar_code(in);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].n == 4);
    CHECK(graphs[0].m() == 6);
    CHECK(plane_isomorphic(graphs[0], gen_k4()));
}
