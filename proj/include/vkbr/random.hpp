#pragma once

#include <cstdint>

#include "vkbr/diagram.hpp"

namespace vkbr {

enum class RandomMode { Any, Alternating, Colorable };

inline constexpr int kMaxRandomCrossings = 12;
inline constexpr int kMaxRejectionRounds = 10000;

/// Deterministic pseudo-random virtual diagram with `crossings` classical
/// crossings. Out-ports are matched to in-ports by a uniform random
/// permutation, and each crossing picks its over direction at random.
///
/// Alternating samples are obtained by applying the canonical switch set to a
/// colorable sample; colorable samples are alternating samples with each
/// crossing switched with probability 1/2. `crossings == 0` gives the
/// crossing-free unknot. Throws Error when no sample is accepted within
/// kMaxRejectionRounds.
Diagram random_diagram(int crossings, std::uint64_t seed, RandomMode mode);

}  // namespace vkbr
