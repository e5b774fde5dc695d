#pragma once

namespace cplkit {

// Size caps. Everything here is a brute-force enumeration over finite
// powersets, so the caps keep every operation inside tens of millions of
// primitive steps.
inline constexpr int kMaxWorlds = 16;            // evaluation-style operations
inline constexpr int kMaxEnumerationWorlds = 3;  // exhaustive frame enumeration
inline constexpr int kMaxIsoWorlds = 6;          // isomorphism search
inline constexpr int kMaxAlgebraAtoms = 10;      // canonical extension, ultrafilter frame
inline constexpr int kMaxValuationBits = 20;     // frame_valid / bam_valid: 2^(props*worlds)

}  // namespace cplkit
