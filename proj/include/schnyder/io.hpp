#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schnyder/plane_graph.hpp"

namespace schnyder {

// `.rot` text format (bit-exact):
//   line 1:        "n m"
//   lines 2..n+1:  "v: u1 u2 ... uk"   clockwise neighbors of v
//   last line:     "outer: r1 r2 r3"
PlaneGraph read_rot(std::istream& in);
PlaneGraph read_rot_file(const std::string& path);
std::string write_rot(const PlaneGraph& g);
void write_rot_file(const PlaneGraph& g, const std::string& path);

// plantri planar_code (binary, ">>planar_code<<" header, unsigned-byte
// clockwise neighbor lists, 0-terminated, vertices 1-based).  The format
// carries no outer face or roots; these are chosen canonically: the outer
// face is the face containing dart 0, the roots are three of its vertices
// spread evenly in clockwise order.
std::vector<PlaneGraph> read_planar_code(std::istream& in);
std::vector<PlaneGraph> read_planar_code_file(const std::string& path);

} // namespace schnyder
