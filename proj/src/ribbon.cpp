#include "vkbr/ribbon.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "vkbr/errors.hpp"

namespace vkbr {

namespace {

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
  });
}

std::size_t line_or_zero(const std::vector<std::size_t>& lines, std::size_t i) {
  return i < lines.size() ? lines[i] : 0;
}

}  // namespace

RibbonGraph::RibbonGraph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges) {
  build(vertices, edges, {}, {});
}

void RibbonGraph::build(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges,
                        const std::vector<std::size_t>& vertex_lines,
                        const std::vector<std::size_t>& edge_lines) {
  std::map<std::string, DartId, std::less<>> dart_ids;
  std::set<std::string, std::less<>> vnames, enames;

  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto line = line_or_zero(vertex_lines, v);
    const auto& spec = vertices[v];
    if (!valid_name(spec.name)) throw ParseError(line, "bad vertex name '" + spec.name + "'");
    if (!vnames.insert(spec.name).second) throw ParseError(line, "duplicate vertex '" + spec.name + "'");
    std::vector<DartId> rot;
    for (const auto& dn : spec.darts) {
      if (!valid_name(dn)) throw ParseError(line, "bad dart name '" + dn + "'");
      const auto id = static_cast<DartId>(dart_names_.size());
      if (!dart_ids.emplace(dn, id).second) {
        throw ParseError(line, "dart '" + dn + "' appears in more than one vertex position");
      }
      dart_names_.push_back(dn);
      dart_vertex_.push_back(v);
      rot.push_back(id);
    }
    vertex_names_.push_back(spec.name);
    rotation_.push_back(std::move(rot));
  }

  constexpr auto kUnset = static_cast<std::size_t>(-1);
  dart_edge_.assign(dart_names_.size(), kUnset);
  dart_mate_.assign(dart_names_.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto line = line_or_zero(edge_lines, e);
    const auto& spec = edges[e];
    if (!valid_name(spec.name)) throw ParseError(line, "bad edge name '" + spec.name + "'");
    if (!enames.insert(spec.name).second) throw ParseError(line, "duplicate edge '" + spec.name + "'");
    if (spec.first == spec.second) throw ParseError(line, "dart '" + spec.first + "' is paired with itself");
    if (spec.sign != 1 && spec.sign != -1) throw ParseError(line, "edge sign must be + or -");
    DartId ends[2];
    const std::string* names[2] = {&spec.first, &spec.second};
    for (int i = 0; i < 2; ++i) {
      auto it = dart_ids.find(*names[i]);
      if (it == dart_ids.end()) throw ParseError(line, "dart '" + *names[i] + "' is not placed at any vertex");
      if (dart_edge_[it->second] != kUnset) {
        throw ParseError(line, "dart '" + *names[i] + "' belongs to two edges");
      }
      ends[i] = it->second;
      dart_edge_[it->second] = e;
    }
    dart_mate_[ends[0]] = ends[1];
    dart_mate_[ends[1]] = ends[0];
    edge_darts_.emplace_back(ends[0], ends[1]);
    edge_names_.push_back(spec.name);
    sign_.push_back(spec.sign);
  }
  for (DartId h = 0; h < dart_names_.size(); ++h) {
    if (dart_edge_[h] == kUnset) {
      throw ParseError(line_or_zero(vertex_lines, dart_vertex_[h]),
                       "dart '" + dart_names_[h] + "' is not paired by any edge");
    }
  }
}

RibbonGraph RibbonGraph::parse(std::string_view text) {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> vlines, elines;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string spaced;
    for (char c : raw) {
      if (c == ':') {
        spaced += " : ";
      } else {
        spaced += c;
      }
    }
    std::istringstream ls(spaced);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "V") {
      if (tok.size() < 3 || tok[2] != ":") throw ParseError(lineno, "expected 'V name : darts...'");
      vertices.push_back({tok[1], {tok.begin() + 3, tok.end()}});
      vlines.push_back(lineno);
    } else if (tok[0] == "E") {
      if (tok.size() < 5 || tok.size() > 6 || tok[2] != ":") {
        throw ParseError(lineno, "expected 'E name : d1 d2 [sign=+|-]'");
      }
      EdgeSpec spec{tok[1], tok[3], tok[4], 1};
      if (tok.size() == 6) {
        if (tok[5] == "sign=+") {
          spec.sign = 1;
        } else if (tok[5] == "sign=-") {
          spec.sign = -1;
        } else {
          throw ParseError(lineno, "sign must be sign=+ or sign=-, got '" + tok[5] + "'");
        }
      }
      edges.push_back(std::move(spec));
      elines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (vertices.empty()) throw ParseError(0, "ribbon graph has no vertices");
  RibbonGraph g;
  g.build(vertices, edges, vlines, elines);
  return g;
}

std::string RibbonGraph::to_text() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    os << "V " << vertex_names_[v] << " :";
    for (DartId h : rotation_[v]) os << ' ' << dart_names_[h];
    os << '\n';
  }
  for (std::size_t e = 0; e < edge_count(); ++e) {
    os << "E " << edge_names_[e] << " : " << dart_names_[edge_darts_[e].first] << ' '
       << dart_names_[edge_darts_[e].second];
    if (sign_[e] < 0) os << " sign=-";
    os << '\n';
  }
  return os.str();
}

std::size_t RibbonGraph::negative_edge_count() const {
  return static_cast<std::size_t>(std::count(sign_.begin(), sign_.end(), -1));
}

RibbonGraph RibbonGraph::unsigned_copy() const {
  return with_signs(std::vector<int>(edge_count(), 1));
}

RibbonGraph RibbonGraph::with_signs(const std::vector<int>& signs) const {
  if (signs.size() != edge_count()) throw Error("sign vector has wrong length");
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error("edge signs must be +1 or -1");
  }
  RibbonGraph out = *this;
  out.sign_ = signs;
  return out;
}

SpanningSubgraph SpanningSubgraph::from_mask(const RibbonGraph& g, std::uint64_t mask) {
  std::vector<bool> keep(g.edge_count());
  for (std::size_t e = 0; e < keep.size(); ++e) keep[e] = ((mask >> e) & 1U) != 0;
  return SpanningSubgraph(std::move(keep));
}

std::size_t SpanningSubgraph::edge_count() const {
  return static_cast<std::size_t>(std::count(keep_.begin(), keep_.end(), true));
}

namespace {

// Reusable scratch space for evaluating many subgraphs of one graph.
class SubsetEvaluator {
 public:
  explicit SubsetEvaluator(const RibbonGraph& g)
      : g_(g),
        parent_(g.vertex_count()),
        succ_(g.dart_count()),
        seen_(g.dart_count()),
        keep_(g.edge_count(), 0) {}

  void set_mask(std::uint64_t mask) {
    for (std::size_t e = 0; e < keep_.size(); ++e) keep_[e] = static_cast<char>((mask >> e) & 1U);
  }
  void set(const SpanningSubgraph& f) {
    if (f.size() != g_.edge_count()) throw Error("subgraph does not match the ribbon graph");
    for (std::size_t e = 0; e < keep_.size(); ++e) keep_[e] = f.contains(e) ? 1 : 0;
  }

  SubgraphStats evaluate() {
    SubgraphStats st;
    st.v = static_cast<int>(g_.vertex_count());
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    int merges = 0;
    for (std::size_t e = 0; e < keep_.size(); ++e) {
      if (!keep_[e]) continue;
      ++st.e;
      auto [a, b] = g_.endpoints(e);
      a = find(a);
      b = find(b);
      if (a != b) {
        parent_[a] = b;
        ++merges;
      }
    }
    st.k = st.v - merges;
    st.r = st.v - st.k;
    st.n = st.e - st.r;
    st.bc = isolated_and_successors();
    st.bc += static_cast<int>(walk_orbits(nullptr));
    return st;
  }

  int negatives_kept() const {
    int c = 0;
    for (std::size_t e = 0; e < keep_.size(); ++e) c += (keep_[e] && g_.sign(e) < 0) ? 1 : 0;
    return c;
  }

  std::vector<std::vector<DartId>> orbits() {
    isolated_and_successors();
    std::vector<std::vector<DartId>> out;
    walk_orbits(&out);
    return out;
  }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool kept(DartId h) const { return keep_[g_.edge_of(h)] != 0; }

  // Fills succ_ with the rotation restricted to kept darts; returns the
  // number of vertices left without kept darts.
  int isolated_and_successors() {
    int isolated = 0;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      const auto& rot = g_.rotation(v);
      DartId first = 0, prev = 0;
      bool any = false;
      for (DartId h : rot) {
        if (!kept(h)) continue;
        if (any) {
          succ_[prev] = h;
        } else {
          first = h;
        }
        prev = h;
        any = true;
      }
      if (any) {
        succ_[prev] = first;
      } else {
        ++isolated;
      }
    }
    return isolated;
  }

  std::size_t walk_orbits(std::vector<std::vector<DartId>>* out) {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::size_t count = 0;
    for (DartId start = 0; start < g_.dart_count(); ++start) {
      if (seen_[start] || !kept(start)) continue;
      ++count;
      if (out) out->emplace_back();
      DartId h = start;
      do {
        seen_[h] = 1;
        if (out) out->back().push_back(h);
        h = succ_[g_.mate(h)];
      } while (h != start);
    }
    return count;
  }

  const RibbonGraph& g_;
  std::vector<std::size_t> parent_;
  std::vector<DartId> succ_;
  std::vector<char> seen_;
  std::vector<char> keep_;
};

void check_size(const RibbonGraph& g, int max_edges) {
  const int limit = std::min(max_edges, kAbsoluteMaxSize);
  if (static_cast<int>(g.edge_count()) > limit) {
    throw SizeError("ribbon graph has " + std::to_string(g.edge_count()) + " edges; limit is " +
                    std::to_string(limit));
  }
}

// Dense histogram over (r(F), n(F), k-bc+n, e_-(F)).
struct SubsetHistogram {
  int v, e, neg;
  std::vector<std::uint64_t> counts;

  SubsetHistogram(int v_, int e_, int neg_)
      : v(v_), e(e_), neg(neg_),
        counts(static_cast<std::size_t>((v_ + 1) * (e_ + 1) * (e_ + 1) * (neg_ + 1)), 0) {}

  std::size_t index(int r, int n, int z, int em) const {
    return static_cast<std::size_t>(((r * (e + 1) + n) * (e + 1) + z) * (neg + 1) + em);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int r = 0; r <= v; ++r)
      for (int n = 0; n <= e; ++n)
        for (int z = 0; z <= e; ++z)
          for (int em = 0; em <= neg; ++em) {
            const auto c = counts[index(r, n, z, em)];
            if (c != 0) f(r, n, z, em, c);
          }
  }
};

SubsetHistogram enumerate_subsets(const RibbonGraph& g, bool track_signs) {
  const int neg = track_signs ? static_cast<int>(g.negative_edge_count()) : 0;
  SubsetHistogram hist(static_cast<int>(g.vertex_count()), static_cast<int>(g.edge_count()), neg);
  SubsetEvaluator eval(g);
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    eval.set_mask(mask);
    const SubgraphStats st = eval.evaluate();
    const int em = track_signs ? eval.negatives_kept() : 0;
    hist.counts[hist.index(st.r, st.n, st.euler_defect(), em)] += 1;
  }
  return hist;
}

}  // namespace

SubgraphStats subgraph_stats(const RibbonGraph& g, const SpanningSubgraph& f) {
  SubsetEvaluator eval(g);
  eval.set(f);
  return eval.evaluate();
}

SignedStats signed_stats(const RibbonGraph& g, const SpanningSubgraph& f) {
  if (f.size() != g.edge_count()) throw Error("subgraph does not match the ribbon graph");
  SignedStats s;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.sign(e) > 0) continue;
    (f.contains(e) ? s.e_minus_f : s.e_minus_complement) += 1;
  }
  return s;
}

std::vector<std::vector<DartId>> boundary_orbits(const RibbonGraph& g, const SpanningSubgraph& f) {
  SubsetEvaluator eval(g);
  eval.set(f);
  return eval.orbits();
}

LaurentPoly br_poly(const RibbonGraph& g, int max_edges) {
  check_size(g, max_edges);
  const int r_full = subgraph_stats(g, SpanningSubgraph::full(g)).r;
  const auto hist = enumerate_subsets(g, false);
  LaurentPoly out(ribbon_vars());
  hist.for_each([&](int r, int n, int z, int, std::uint64_t c) {
    out.add_term({(r_full - r) * Exponent::kUnit, n * Exponent::kUnit, z * Exponent::kUnit}, Coeff(c));
  });
  return out;
}

LaurentPoly signed_br_poly(const RibbonGraph& g, int max_edges) {
  check_size(g, max_edges);
  const int r_full = subgraph_stats(g, SpanningSubgraph::full(g)).r;
  const int neg = static_cast<int>(g.negative_edge_count());
  const auto hist = enumerate_subsets(g, true);
  LaurentPoly out(ribbon_vars());
  hist.for_each([&](int r, int n, int z, int em, std::uint64_t c) {
    // s(F) = (e_-(F) - (neg - e_-(F))) / 2, i.e. 2*em - neg halves.
    const int s_quarters = 2 * (2 * em - neg);
    out.add_term({(r_full - r) * Exponent::kUnit + s_quarters, n * Exponent::kUnit - s_quarters,
                  z * Exponent::kUnit},
                 Coeff(c));
  });
  return out;
}

LaurentPoly tutte_via_br(const RibbonGraph& g, int max_edges) {
  const VarList& xy = tutte_vars();
  const LaurentPoly one = LaurentPoly::constant(xy, 1);
  Substitution s;
  s.emplace("x", LaurentPoly::variable(xy, "x") - one);
  s.emplace("y", LaurentPoly::variable(xy, "y") - one);
  s.emplace("z", one);
  return poly_substitute(br_poly(g, max_edges), s, xy);
}

int genus(const RibbonGraph& g) { return subgraph_stats(g, SpanningSubgraph::full(g)).genus(); }

}  // namespace vkbr
