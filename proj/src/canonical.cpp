#include "schnyder/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace schnyder {

namespace {

// Deterministic relabeling obtained by reading rotations from a start dart.
std::string encode_from(const PlaneGraph& g, const std::vector<std::vector<Dart>>& rot,
                        Dart start) {
    std::vector<int> label(g.n, -1);
    std::vector<Dart> entry(g.n, -1); // out-dart at which reading starts
    std::vector<int> order;
    label[g.tail(start)] = 0;
    entry[g.tail(start)] = start;
    order.push_back(g.tail(start));
    std::ostringstream out;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        const auto& list = rot[v];
        int pos = 0;
        while (list[pos] != entry[v]) ++pos;
        out << list.size() << ':';
        for (size_t k = 0; k < list.size(); ++k) {
            Dart d = list[(pos + k) % list.size()];
            int h = g.head(d);
            if (label[h] == -1) {
                label[h] = static_cast<int>(order.size());
                entry[h] = dart_reverse(d);
                order.push_back(h);
            }
            out << label[h] << ',';
        }
        out << ';';
    }
    return out.str();
}

} // namespace

std::string canonical_form(const PlaneGraph& g) {
    std::vector<std::vector<Dart>> mirrored(g.n);
    for (int v = 0; v < g.n; ++v) {
        mirrored[v] = g.rot[v];
        std::reverse(mirrored[v].begin(), mirrored[v].end());
    }
    const std::vector<std::vector<Dart>>* variants[2] = {&g.rot, &mirrored};
    std::string best;
    for (int d = 0; d < 2 * g.m(); ++d) {
        for (const auto* rot : variants) {
            std::string s = encode_from(g, *rot, d);
            if (best.empty() || s < best) best = std::move(s);
        }
    }
    return best;
}

bool plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace schnyder
