#include "vkbr/build.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vkbr/errors.hpp"

namespace vkbr {

bool is_alternating(const Diagram& d) {
  for (const auto& passes : d.component_passes()) {
    const std::size_t m = passes.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (passes[i].over == passes[(i + 1) % m].over) return false;
    }
  }
  return true;
}

namespace {

// Union-find carrying the parity of each node relative to its root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      p ^= parity_[root];
      root = parent_[root];
    }
    // Path compression with parity fix-up.
    int acc = p;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int old = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= old;
      x = next;
    }
    return {root, p};
  }

  // Imposes value(a) ^ value(b) == rel; false on contradiction.
  bool relate(std::size_t a, std::size_t b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

struct ParityClasses {
  // members[c] lists crossings of class c with their parity relative to the root.
  std::vector<std::vector<std::pair<std::size_t, int>>> members;
};

std::optional<ParityClasses> solve_parity(const Diagram& d) {
  const std::size_t n = d.crossing_count();
  ParityUnionFind uf(n);
  for (const auto& passes : d.component_passes()) {
    const std::size_t m = passes.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Pass& a = passes[i];
      const Pass& b = passes[(i + 1) % m];
      // Switch bits must make the two consecutive passes differ.
      const int rel = 1 ^ static_cast<int>(a.over) ^ static_cast<int>(b.over);
      if (!uf.relate(a.crossing, b.crossing, rel)) return std::nullopt;
    }
  }
  ParityClasses out;
  std::vector<std::size_t> class_of_root(n, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < n; ++c) {
    auto [root, p] = uf.find(c);
    if (class_of_root[root] == static_cast<std::size_t>(-1)) {
      class_of_root[root] = out.members.size();
      out.members.emplace_back();
    }
    out.members[class_of_root[root]].emplace_back(c, p);
  }
  return out;
}

}  // namespace

std::optional<SwitchSet> find_switch_set(const Diagram& d) {
  auto classes = solve_parity(d);
  if (!classes) return std::nullopt;
  SwitchSet out;
  for (const auto& members : classes->members) {
    std::size_t ones = 0;
    for (const auto& [c, p] : members) ones += static_cast<std::size_t>(p);
    const std::size_t zeros = members.size() - ones;
    // Flip so that the chosen solution switches the crossings with bit 1.
    int flip = 0;
    if (zeros < ones) {
      flip = 1;
    } else if (zeros == ones) {
      flip = members.front().second;  // keep the lowest crossing unswitched
    }
    for (const auto& [c, p] : members) {
      if ((p ^ flip) != 0) out.switched.push_back(c);
    }
  }
  std::sort(out.switched.begin(), out.switched.end());
  return out;
}

std::vector<SwitchSet> all_switch_sets(const Diagram& d) {
  auto classes = solve_parity(d);
  if (!classes) return {};
  const std::size_t k = classes->members.size();
  if (k > 16) throw SizeError("too many independent switch classes to enumerate");
  std::vector<SwitchSet> out;
  for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << k); ++flips) {
    SwitchSet s;
    for (std::size_t i = 0; i < k; ++i) {
      const int flip = static_cast<int>((flips >> i) & 1U);
      for (const auto& [c, p] : classes->members[i]) {
        if ((p ^ flip) != 0) s.switched.push_back(c);
      }
    }
    std::sort(s.switched.begin(), s.switched.end());
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// B-splitting partner of a port: corners {0,3} and {1,2}.
int b_partner(int port) { return 3 - port; }
// Corner index 0 is {0,3}, 1 is {1,2}.
int corner_of(int port) { return (port == 0 || port == 3) ? 0 : 1; }

std::string edge_name(std::size_t c) { return "e" + std::to_string(c); }
std::string dart_name(std::size_t c, int corner) { return edge_name(c) + (corner == 0 ? "a" : "b"); }

}  // namespace

BuiltRibbon build_ribbon(const Diagram& d) {
  if (!is_alternating(d)) {
    throw NotAlternatingError("diagram is not alternating; use build_signed for colorable diagrams");
  }
  using End = std::pair<std::size_t, int>;  // (crossing, port)
  const std::size_t n = d.crossing_count();

  auto other_end = [&](End e) {
    const ArcId a = d.crossing(e.first).ports[static_cast<std::size_t>(e.second)];
    return d.head(a) == e ? d.tail(a) : d.head(a);
  };

  std::vector<RibbonGraph::VertexSpec> vertices;
  std::vector<char> arc_done(d.arc_count(), 0);
  for (ArcId start = 0; start < d.arc_count(); ++start) {
    if (arc_done[start]) continue;
    // Walk the B-circle through `start`, recording each corner crossed and
    // whether it was crossed clockwise (port p -> p-1) around the crossing.
    struct Visit {
      std::size_t crossing;
      int corner;
      bool clockwise;
    };
    std::vector<Visit> visits;
    const End first = d.head(start);
    End at = first;
    do {
      const ArcId arrived = d.crossing(at.first).ports[static_cast<std::size_t>(at.second)];
      arc_done[arrived] = 1;
      const int q = b_partner(at.second);
      visits.push_back({at.first, corner_of(at.second), q == (at.second + 3) % 4});
      at = other_end({at.first, q});
    } while (at != first);

    const auto cw = static_cast<std::size_t>(
        std::count_if(visits.begin(), visits.end(), [](const Visit& v) { return v.clockwise; }));
    if (cw != 0 && cw != visits.size()) {
      throw Error("state circle meets crossings on both sides; diagram is not checkerboard colorable");
    }
    if (cw == 0) std::reverse(visits.begin(), visits.end());

    RibbonGraph::VertexSpec v{"v" + std::to_string(vertices.size()), {}};
    for (const auto& vis : visits) v.darts.push_back(dart_name(vis.crossing, vis.corner));
    vertices.push_back(std::move(v));
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    vertices.push_back({"v" + std::to_string(vertices.size()), {}});
  }

  std::vector<RibbonGraph::EdgeSpec> edges;
  BuiltRibbon out;
  for (std::size_t c = 0; c < n; ++c) {
    edges.push_back({edge_name(c), dart_name(c, 0), dart_name(c, 1), 1});
    out.crossing_to_edge.push_back(c);
  }
  out.graph = RibbonGraph(vertices, edges);
  return out;
}

BuiltRibbon build_signed(const Diagram& d) {
  auto s = find_switch_set(d);
  if (!s) throw NotColorableError("diagram is not checkerboard colorable");
  return build_signed(d, *s);
}

BuiltRibbon build_signed(const Diagram& d, const SwitchSet& switches) {
  const Diagram alt = d.with_switched(switches.switched);
  BuiltRibbon out = build_ribbon(alt);
  std::vector<int> signs(out.graph.edge_count(), 1);
  for (std::size_t c : switches.switched) signs[out.crossing_to_edge[c]] = -1;
  out.graph = out.graph.with_signs(signs);
  out.switches = switches;
  return out;
}

std::string edge_map_text(const BuiltRibbon& b) {
  std::ostringstream os;
  for (std::size_t c = 0; c < b.crossing_to_edge.size(); ++c) {
    os << c << ' ' << b.graph.edge_name(b.crossing_to_edge[c]) << '\n';
  }
  return os.str();
}

}  // namespace vkbr
