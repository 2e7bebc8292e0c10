#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vkbr/diagram.hpp"
#include "vkbr/laurent.hpp"

namespace vkbr {

using DartId = std::uint32_t;

/// Orientable ribbon graph as a rotation system: every vertex lists its darts
/// counterclockwise, every edge pairs two darts, and edges carry a sign.
class RibbonGraph {
 public:
  struct VertexSpec {
    std::string name;
    std::vector<std::string> darts;
  };
  struct EdgeSpec {
    std::string name;
    std::string first;
    std::string second;
    int sign = 1;
  };

  RibbonGraph() = default;
  /// Throws ParseError when the darts do not form a valid rotation system.
  RibbonGraph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges);

  static RibbonGraph parse(std::string_view text);
  std::string to_text() const;

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }
  std::size_t dart_count() const { return dart_names_.size(); }

  const std::string& vertex_name(std::size_t v) const { return vertex_names_[v]; }
  const std::string& edge_name(std::size_t e) const { return edge_names_[e]; }
  const std::string& dart_name(DartId h) const { return dart_names_[h]; }

  /// Counterclockwise dart order around vertex `v`.
  const std::vector<DartId>& rotation(std::size_t v) const { return rotation_[v]; }
  std::size_t vertex_of(DartId h) const { return dart_vertex_[h]; }
  std::size_t edge_of(DartId h) const { return dart_edge_[h]; }
  /// The other dart of the same edge.
  DartId mate(DartId h) const { return dart_mate_[h]; }
  std::pair<DartId, DartId> edge_darts(std::size_t e) const { return edge_darts_[e]; }
  std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const {
    return {dart_vertex_[edge_darts_[e].first], dart_vertex_[edge_darts_[e].second]};
  }

  int sign(std::size_t e) const { return sign_[e]; }
  std::size_t negative_edge_count() const;
  bool is_signed() const { return negative_edge_count() > 0; }
  /// Copy with every edge positive.
  RibbonGraph unsigned_copy() const;
  /// Copy with the given per-edge signs.
  RibbonGraph with_signs(const std::vector<int>& signs) const;

 private:
  void build(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges,
             const std::vector<std::size_t>& vertex_lines, const std::vector<std::size_t>& edge_lines);

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<std::string> dart_names_;
  std::vector<std::vector<DartId>> rotation_;
  std::vector<std::size_t> dart_vertex_;
  std::vector<std::size_t> dart_edge_;
  std::vector<DartId> dart_mate_;
  std::vector<std::pair<DartId, DartId>> edge_darts_;
  std::vector<int> sign_;
};

/// All vertices plus a subset of the edges.
class SpanningSubgraph {
 public:
  explicit SpanningSubgraph(std::vector<bool> keep) : keep_(std::move(keep)) {}
  static SpanningSubgraph full(const RibbonGraph& g) { return SpanningSubgraph(std::vector<bool>(g.edge_count(), true)); }
  static SpanningSubgraph empty(const RibbonGraph& g) { return SpanningSubgraph(std::vector<bool>(g.edge_count(), false)); }
  /// Bit i of `mask` keeps edge i.
  static SpanningSubgraph from_mask(const RibbonGraph& g, std::uint64_t mask);

  bool contains(std::size_t e) const { return keep_[e]; }
  std::size_t size() const { return keep_.size(); }
  std::size_t edge_count() const;
  const std::vector<bool>& mask() const { return keep_; }

 private:
  std::vector<bool> keep_;
};

struct SubgraphStats {
  int v = 0;
  int e = 0;
  int k = 0;
  int r = 0;
  int n = 0;
  int bc = 0;

  /// k - bc + n; twice the genus.
  int euler_defect() const { return k - bc + n; }
  int genus() const { return euler_defect() / 2; }

  friend bool operator==(const SubgraphStats&, const SubgraphStats&) = default;
};

struct SignedStats {
  int e_minus_f = 0;
  int e_minus_complement = 0;
  /// 2 s(F) = e_-(F) - e_-(complement); kept doubled so it stays integral.
  int twice_s() const { return e_minus_f - e_minus_complement; }
};

SubgraphStats subgraph_stats(const RibbonGraph& g, const SpanningSubgraph& f);
SignedStats signed_stats(const RibbonGraph& g, const SpanningSubgraph& f);

/// Boundary orbits of the permutation h -> rotation_F(mate(h)) on the darts
/// of F, where rotation_F skips darts of edges outside F. Isolated vertices
/// are not included.
std::vector<std::vector<DartId>> boundary_orbits(const RibbonGraph& g, const SpanningSubgraph& f);

/// Sum over F of x^(r(G)-r(F)) y^n(F) z^(k(F)-bc(F)+n(F)). Signs are ignored.
LaurentPoly br_poly(const RibbonGraph& g, int max_edges = kDefaultMaxSize);

/// Signed variant: x^(r(G)-r(F)+s(F)) y^(n(F)-s(F)) z^(k(F)-bc(F)+n(F)).
LaurentPoly signed_br_poly(const RibbonGraph& g, int max_edges = kDefaultMaxSize);

/// R_G(x-1, y-1, 1), which is the Tutte polynomial of the underlying graph.
LaurentPoly tutte_via_br(const RibbonGraph& g, int max_edges = kDefaultMaxSize);

int genus(const RibbonGraph& g);

}  // namespace vkbr
