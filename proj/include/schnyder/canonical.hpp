#pragma once

#include <string>

#include "schnyder/plane_graph.hpp"

namespace schnyder {

// Canonical form of the embedded graph (rotation system up to relabeling and
// reflection; roots and outer face are ignored).  Two plane graphs are
// isomorphic as maps on the sphere iff their canonical forms match.
std::string canonical_form(const PlaneGraph& g);

bool plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

} // namespace schnyder
