#pragma once

#include <string>
#include <vector>

#include "schnyder/suspension.hpp"

namespace schnyder {

// Colors 1 (red), 2 (green), 3 (blue) with cyclic arithmetic.
inline int color_next(int c) { return c % 3 + 1; }
inline int color_prev(int c) { return (c + 1) % 3 + 1; }

constexpr int kRed = 1;
constexpr int kGreen = 2;
constexpr int kBlue = 3;

const char* color_name(int c);

// Orientation and coloring of a suspension's edges.  dart_color[d] is the
// color (1..3) of the direction running along dart d (tail -> head), or 0 if
// the edge carries no such direction.  An edge is unidirected when exactly
// one of its darts is colored and bidirected when both are (with distinct
// colors).  Half-edge darts (2m, 2m+1, 2m+2) are outgoing at their roots and
// carry the root's color.
struct SchnyderWood {
    std::vector<int> dart_color;

    bool has_dir(Dart d) const { return dart_color[d] != 0; }
    int color(Dart d) const { return dart_color[d]; }
    bool bidirected(int e) const { return dart_color[2 * e] && dart_color[2 * e + 1]; }
    bool unidirected(int e) const {
        return (dart_color[2 * e] != 0) != (dart_color[2 * e + 1] != 0);
    }
    // The single color of a unidirected edge, or 0.
    int uni_color(int e) const {
        if (!unidirected(e)) return 0;
        return dart_color[2 * e] ? dart_color[2 * e] : dart_color[2 * e + 1];
    }
    bool has_color(int e, int c) const {
        return dart_color[2 * e] == c || dart_color[2 * e + 1] == c;
    }
};

struct Violation {
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(const std::string& rule, const std::string& detail) {
        violations.push_back({rule, detail});
    }
    std::string to_string() const;
};

// Checks Definition-1 style conditions:
//  1. every edge uni- or bidirected, bidirected colors distinct
//  2. half-edge at r_i unidirected, outgoing, i-colored
//  3. per vertex: one outgoing edge per color, clockwise red green blue, and
//     incoming i-colored edges confined to the closed clockwise sector from
//     the outgoing (i+1)-edge to the outgoing (i-1)-edge
//  4. no inner face boundary is a monochromatic directed cycle
ValidationReport validate_wood(const Suspension& gs, const SchnyderWood& wood);

// Outgoing dart of color c at v (real or half dart), or -1.
Dart outgoing_dart(const Suspension& gs, const SchnyderWood& wood, int v, int c);

struct ColorTree {
    int color = 0;
    int root = -1;
    std::vector<Dart> parent_dart; // outgoing c-dart per vertex (half dart at the root)
    std::vector<int> parent;       // head vertex, -1 at the root
};

// The directed tree T_c: every vertex's outgoing c-edge, oriented toward r_c.
// Throws InvalidWood if following c-edges does not reach the root.
ColorTree color_tree(const Suspension& gs, const SchnyderWood& wood, int c);

} // namespace schnyder
