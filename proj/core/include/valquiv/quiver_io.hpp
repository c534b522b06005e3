#pragma once

#include <optional>
#include <string>

#include "valquiv/orientation.hpp"

namespace valquiv {

// Parsed quiver file: the valued graph plus, when `arrow` lines are present,
// the orientation they define.
struct QuiverFile {
  ValuedGraph graph;
  std::optional<Orientation> orientation;
};

// Line-oriented format, `#` starts a comment:
//   n <count>              first non-comment line
//   edge <i> <j> <bij> <bji>
//   arrow <i> <j>          optional, i -> j
// ParseError positions are 1-based line numbers.
QuiverFile parse_quiver(const std::string& text);

QuiverFile load_quiver(const std::string& path);

// The orientation, or UnorientedEdge when the file has no arrow lines.
const Orientation& require_orientation(const QuiverFile& q);

}  // namespace valquiv
