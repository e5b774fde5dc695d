#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cplkit/frame.hpp"

namespace cplkit {

// All upward-closed families of subsets of an n-element set, each family
// sorted ascending. There are 3, 6, and 20 of them for n = 1, 2, 3.
std::vector<std::vector<Mask>> upward_closed_families(int n);

// Every monotonic frame on the first n letters a, b, c in a fixed order:
// the cartesian product of upward_closed_families(n) over the n worlds,
// odometer order with world a's family cycling slowest.
std::vector<NeighborhoodFrame> enumerate_monotonic_frames(int n);

// Deterministic seeded sampler. Draws generator antichains per world,
// upward-closes them, then repairs toward the target class: intersection
// closure for quasi-filter, a nonempty guarantee for filter, collapse to a
// single generator for the augmented classes.
NeighborhoodFrame random_monotonic_frame(int n, std::uint64_t seed,
                                         std::optional<FrameClass> target = std::nullopt);

// Standard labels used by the enumeration: first n of a..p.
std::vector<std::string> standard_world_labels(int n);

// Every topology on n labeled points: 1, 4, and 29 of them for n = 1, 2, 3.
// Brute-force filter of all families containing the empty and full sets for
// closure under pairwise union and intersection.
std::vector<FiniteTopology> enumerate_topologies(int n);

}  // namespace cplkit
