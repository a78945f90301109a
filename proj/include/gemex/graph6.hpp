#pragma once

#include <string>
#include <string_view>

#include "gemex/graph.hpp"

namespace gemex {

// graph6 text encoding (the format used by nauty's tools and by common graph
// databases). Upper triangle, column-major, six bits per printable byte.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace gemex
