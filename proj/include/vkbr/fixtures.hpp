#pragma once

#include <string_view>

namespace vkbr::fixtures {

/// Three classical crossings, one component, alternating; the virtual trefoil
/// with two virtual crossings. Its all-A..all-B state table, in binary-counter
/// order, is (3,0,1) (2,1,2) (2,1,2) (1,2,1) (2,1,2) (1,2,1) (1,2,3) (0,3,2).
extern const std::string_view kVirtualTrefoil;

/// Two vertices joined by parallel edges a and b, with a loop c interleaved
/// between them at the first vertex. Genus one.
extern const std::string_view kGenusOneRibbon;

/// One crossing shared by two components that each pass it once.
extern const std::string_view kVirtualHopf;

extern const std::string_view kUnknot;
extern const std::string_view kTwoLoops;

/// Right-handed trefoil, all crossings positive.
extern const std::string_view kTrefoil;

}  // namespace vkbr::fixtures
