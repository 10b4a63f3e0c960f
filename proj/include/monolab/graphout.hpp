#pragma once

// Dual-graph documents: DOT for quick visual checks, JSON for everything
// else.  Both are deterministic for a given graph (fixed component and edge
// order, no hashing anywhere).

#include <monolab/resolve.hpp>

#include <string>

namespace monolab {

std::string to_dot(const ResolutionGraph& g);
std::string to_json_text(const ResolutionGraph& g, int indent = 2);

}  // namespace monolab
