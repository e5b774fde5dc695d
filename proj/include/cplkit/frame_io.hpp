#pragma once

#include <string>

#include "cplkit/frame.hpp"

namespace cplkit {

// Frame files: {"worlds": [...], "neighborhoods": {...}, "predicates": {...}}.
// Serialization is canonical: fixed key order, worlds sorted, each family in
// ascending mask order, member arrays in world order.
NeighborhoodFrame parse_frame_json(const std::string& text);
std::string frame_to_json(const NeighborhoodFrame& f);

// Topology files: {"points": [...], "opens": [[...], ...]}.
FiniteTopology parse_topology_json(const std::string& text);
std::string topology_to_json(const FiniteTopology& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cplkit
