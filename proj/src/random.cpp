#include "vkbr/random.hpp"

#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vkbr/build.hpp"
#include "vkbr/errors.hpp"

namespace vkbr {

namespace {

// Rejection sampling on the raw engine output so the sequence does not
// depend on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

Diagram raw_sample(std::size_t n, std::mt19937_64& rng) {
  std::vector<Crossing> crossings(n);
  for (auto& x : crossings) x.over_in = uniform_below(rng, 2) == 0 ? 1 : 3;

  // Slots 0..n-1 are the under ports (out: 2, in: 0), n..2n-1 the over ports.
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  }
  auto out_port = [&](std::size_t slot) -> std::pair<std::size_t, int> {
    return slot < n ? std::pair{slot, 2} : std::pair{slot - n, crossings[slot - n].over_out()};
  };
  auto in_port = [&](std::size_t slot) -> std::pair<std::size_t, int> {
    return slot < n ? std::pair{slot, 0} : std::pair{slot - n, crossings[slot - n].over_in};
  };

  std::vector<std::string> names;
  for (std::size_t arc = 0; arc < 2 * n; ++arc) {
    const auto [oc, op] = out_port(arc);
    const auto [ic, ip] = in_port(perm[arc]);
    crossings[oc].ports[static_cast<std::size_t>(op)] = static_cast<ArcId>(arc);
    crossings[ic].ports[static_cast<std::size_t>(ip)] = static_cast<ArcId>(arc);
    names.push_back("a" + std::to_string(arc + 1));
  }
  return Diagram(std::move(crossings), std::move(names), 0);
}

}  // namespace

Diagram random_diagram(int crossings, std::uint64_t seed, RandomMode mode) {
  if (crossings < 0 || crossings > kMaxRandomCrossings) {
    throw Error("random diagrams need 0.." + std::to_string(kMaxRandomCrossings) + " crossings");
  }
  if (crossings == 0) return Diagram({}, {}, 1);

  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(crossings);
  if (mode == RandomMode::Any) return raw_sample(n, rng);

  for (int round = 0; round < kMaxRejectionRounds; ++round) {
    Diagram d = raw_sample(n, rng);
    auto s = find_switch_set(d);
    if (!s) continue;
    Diagram alt = d.with_switched(s->switched);
    if (mode == RandomMode::Alternating) return alt;

    std::vector<std::size_t> flips;
    for (std::size_t c = 0; c < n; ++c) {
      if (uniform_below(rng, 2) == 1) flips.push_back(c);
    }
    return alt.with_switched(flips);
  }
  throw Error("no colorable sample after " + std::to_string(kMaxRejectionRounds) + " attempts");
}

}  // namespace vkbr
