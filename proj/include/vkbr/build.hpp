#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vkbr/diagram.hpp"
#include "vkbr/ribbon.hpp"

namespace vkbr {

/// Crossings whose over/under is exchanged to reach an alternating diagram.
struct SwitchSet {
  std::vector<std::size_t> switched;  // ascending

  bool empty() const { return switched.empty(); }
  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;
};

/// True when over and under passes strictly alternate along every component.
bool is_alternating(const Diagram& d);

/// Canonical switch set, or nullopt when the diagram is not checkerboard
/// colorable. Each independent parity class contributes the smaller of its two
/// solutions; ties keep the lowest-indexed crossing of the class unswitched.
std::optional<SwitchSet> find_switch_set(const Diagram& d);

/// Every switch set that makes `d` alternating (empty when none exists).
/// Throws SizeError if there are more than 2^16 of them.
std::vector<SwitchSet> all_switch_sets(const Diagram& d);

struct BuiltRibbon {
  RibbonGraph graph;
  /// crossing index -> edge index
  std::vector<std::size_t> crossing_to_edge;
  SwitchSet switches;
};

/// Ribbon graph of an alternating diagram. Vertices are the circles of the
/// all-B state; the edge of crossing i joins the two B-corners of that
/// crossing, so keeping an edge turns its corners into the A-splitting.
/// Throws NotAlternatingError otherwise.
BuiltRibbon build_ribbon(const Diagram& d);

/// Signed ribbon graph of a colorable diagram using the canonical switch set.
/// Throws NotColorableError.
BuiltRibbon build_signed(const Diagram& d);
/// Same, with a caller-chosen switch set (must make `d` alternating).
BuiltRibbon build_signed(const Diagram& d, const SwitchSet& switches);

/// Sidecar listing, one `crossing-index edge-name` pair per line.
std::string edge_map_text(const BuiltRibbon& b);

}  // namespace vkbr
