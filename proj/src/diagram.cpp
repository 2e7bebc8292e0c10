#include "vkbr/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "vkbr/errors.hpp"

namespace vkbr {

Crossing Crossing::switched() const {
  Crossing out;
  if (over_in == 1) {
    out.ports = {ports[1], ports[2], ports[3], ports[0]};
    out.over_in = 3;
  } else {
    out.ports = {ports[3], ports[0], ports[1], ports[2]};
    out.over_in = 1;
  }
  return out;
}

State State::from_index(std::size_t crossings, std::uint64_t index) {
  std::vector<Splitting> c(crossings);
  for (std::size_t i = 0; i < crossings; ++i) {
    c[i] = ((index >> i) & 1U) ? Splitting::B : Splitting::A;
  }
  return State(std::move(c));
}

namespace {

// Checks that every arc occurs once incoming and once outgoing. `lines[i]` is
// the source line of crossing i (0 when unknown).
void validate_ports(const std::vector<Crossing>& crossings, std::size_t arc_count,
                    const std::vector<std::string>& names, const std::vector<std::size_t>& lines) {
  std::vector<int> incoming(arc_count, 0), outgoing(arc_count, 0);
  std::vector<std::size_t> seen_at(arc_count, 0);
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const Crossing& x = crossings[c];
    const std::size_t line = lines.empty() ? 0 : lines[c];
    if (x.over_in != 1 && x.over_in != 3) {
      throw ParseError(line, "crossing " + std::to_string(c) + ": over_in must be 1 or 3");
    }
    for (int p = 0; p < 4; ++p) {
      const ArcId a = x.ports[static_cast<std::size_t>(p)];
      if (a >= arc_count) throw ParseError(line, "arc id out of range");
      int& slot = x.is_incoming(p) ? incoming[a] : outgoing[a];
      ++slot;
      seen_at[a] = line;
      if (incoming[a] + outgoing[a] > 2) {
        throw ParseError(line, "arc '" + names[a] + "' used more than twice");
      }
      if (slot > 1) {
        throw ParseError(line, "arc '" + names[a] + "' used twice as " +
                                   (x.is_incoming(p) ? "incoming" : "outgoing"));
      }
    }
  }
  for (std::size_t a = 0; a < arc_count; ++a) {
    if (incoming[a] + outgoing[a] != 2) {
      throw ParseError(seen_at[a], "arc '" + names[a] + "' is dangling");
    }
  }
}

bool valid_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { reset(); }
  void reset() { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, std::vector<std::string> arc_names,
                 int free_loops)
    : crossings_(std::move(crossings)), arc_names_(std::move(arc_names)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw ParseError(0, "negative free loop count");
  validate_ports(crossings_, arc_names_.size(), arc_names_, {});
  index_arcs();
}

void Diagram::index_arcs() {
  heads_.assign(arc_names_.size(), {0, 0});
  tails_.assign(arc_names_.size(), {0, 0});
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    for (int p = 0; p < 4; ++p) {
      const ArcId a = crossings_[c].ports[static_cast<std::size_t>(p)];
      (crossings_[c].is_incoming(p) ? heads_ : tails_)[a] = {c, p};
    }
  }
}

Diagram Diagram::parse(std::string_view text) {
  std::vector<Crossing> crossings;
  std::vector<std::size_t> lines;
  std::vector<std::string> names;
  std::map<std::string, ArcId, std::less<>> ids;
  int free_loops = 0;
  bool saw_loops = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "X") {
      if (tok.size() != 6) throw ParseError(lineno, "expected 'X p0 p1 p2 p3 o=<1|3>'");
      Crossing x;
      for (std::size_t p = 0; p < 4; ++p) {
        const std::string& label = tok[p + 1];
        if (!valid_label(label)) throw ParseError(lineno, "bad arc label '" + label + "'");
        auto [it, inserted] = ids.try_emplace(label, static_cast<ArcId>(names.size()));
        if (inserted) names.push_back(label);
        x.ports[p] = it->second;
      }
      if (tok[5] == "o=1") {
        x.over_in = 1;
      } else if (tok[5] == "o=3") {
        x.over_in = 3;
      } else {
        throw ParseError(lineno, "over marker must be o=1 or o=3, got '" + tok[5] + "'");
      }
      crossings.push_back(x);
      lines.push_back(lineno);
    } else if (tok[0] == "O") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'O k'");
      int k = 0;
      const auto& s = tok[1];
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
      if (ec != std::errc{} || ptr != s.data() + s.size() || k < 0) {
        throw ParseError(lineno, "free loop count must be a nonnegative integer");
      }
      free_loops += k;
      saw_loops = true;
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (crossings.empty() && free_loops == 0) {
    throw ParseError(saw_loops ? lineno : 0, "diagram has no components");
  }
  validate_ports(crossings, names.size(), names, lines);

  Diagram d;
  d.crossings_ = std::move(crossings);
  d.arc_names_ = std::move(names);
  d.free_loops_ = free_loops;
  d.index_arcs();
  return d;
}

std::string Diagram::to_text() const {
  std::ostringstream os;
  for (const auto& x : crossings_) {
    os << 'X';
    for (ArcId a : x.ports) os << ' ' << arc_names_[a];
    os << " o=" << x.over_in << '\n';
  }
  if (free_loops_ > 0) os << "O " << free_loops_ << '\n';
  return os.str();
}

std::vector<std::vector<Pass>> Diagram::component_passes() const {
  std::vector<std::vector<Pass>> out;
  std::vector<char> visited(arc_names_.size(), 0);
  for (ArcId start = 0; start < arc_names_.size(); ++start) {
    if (visited[start]) continue;
    std::vector<Pass> passes;
    ArcId a = start;
    do {
      visited[a] = 1;
      const auto [c, p] = heads_[a];
      passes.push_back({c, p != 0});
      a = crossings_[c].ports[static_cast<std::size_t>(crossings_[c].exit_port(p))];
    } while (a != start);
    out.push_back(std::move(passes));
  }
  return out;
}

std::size_t Diagram::component_count() const {
  return component_passes().size() + static_cast<std::size_t>(free_loops_);
}

Diagram Diagram::with_switched(const std::vector<std::size_t>& which) const {
  Diagram out = *this;
  for (std::size_t c : which) {
    if (c >= out.crossings_.size()) throw Error("switch index out of range");
    out.crossings_[c] = out.crossings_[c].switched();
  }
  out.index_arcs();
  return out;
}

Diagram Diagram::mirror() const {
  std::vector<std::size_t> all(crossings_.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return with_switched(all);
}

std::array<std::array<int, 2>, 2> splitting_pairs(Splitting s) {
  if (s == Splitting::A) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

StateStats split_stats(const Diagram& d, const State& s) {
  if (s.size() != d.crossing_count()) throw Error("state does not cover every crossing");
  UnionFind uf(d.arc_count());
  StateStats st;
  int merged = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto& ports = d.crossing(c).ports;
    (s[c] == Splitting::A ? st.alpha : st.beta) += 1;
    for (const auto& [p, q] : splitting_pairs(s[c])) {
      if (uf.unite(ports[static_cast<std::size_t>(p)], ports[static_cast<std::size_t>(q)])) ++merged;
    }
  }
  st.delta = static_cast<int>(d.arc_count()) - merged + d.free_loops();
  return st;
}

LaurentPoly kauffman_bracket(const Diagram& d, int max_crossings) {
  const std::size_t n = d.crossing_count();
  if (static_cast<int>(n) > std::min(max_crossings, kAbsoluteMaxSize)) {
    throw SizeError("diagram has " + std::to_string(n) + " crossings; limit is " +
                    std::to_string(std::min(max_crossings, kAbsoluteMaxSize)));
  }
  // Arc pairs joined at each crossing under A (index 0) and B (index 1).
  struct Joins {
    std::array<std::array<ArcId, 2>, 2> a, b;
  };
  std::vector<Joins> joins(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& ports = d.crossing(c).ports;
    auto pick = [&](Splitting s) {
      std::array<std::array<ArcId, 2>, 2> out{};
      const auto pairs = splitting_pairs(s);
      for (std::size_t k = 0; k < 2; ++k) {
        out[k] = {ports[static_cast<std::size_t>(pairs[k][0])], ports[static_cast<std::size_t>(pairs[k][1])]};
      }
      return out;
    };
    joins[c] = {pick(Splitting::A), pick(Splitting::B)};
  }

  const int arcs = static_cast<int>(d.arc_count());
  // counts[alpha][delta]
  std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(d.arc_count() + 1, 0));
  UnionFind uf(d.arc_count());
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    uf.reset();
    int merged = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& j = ((mask >> c) & 1U) ? joins[c].b : joins[c].a;
      merged += uf.unite(j[0][0], j[0][1]);
      merged += uf.unite(j[1][0], j[1][1]);
    }
    const auto alpha = n - static_cast<std::size_t>(std::popcount(mask));
    counts[alpha][static_cast<std::size_t>(arcs - merged)] += 1;
  }

  LaurentPoly out(bracket_vars());
  for (std::size_t alpha = 0; alpha <= n; ++alpha) {
    for (std::size_t circles = 0; circles < counts[alpha].size(); ++circles) {
      if (counts[alpha][circles] == 0) continue;
      const int delta = static_cast<int>(circles) + d.free_loops();
      out.add_term({static_cast<int>(alpha) * Exponent::kUnit,
                    static_cast<int>(n - alpha) * Exponent::kUnit, (delta - 1) * Exponent::kUnit},
                   Coeff(counts[alpha][circles]));
    }
  }
  return out;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) w += x.sign();
  return w;
}

Substitution jones_substitution() {
  const VarList& t = jones_vars();
  Substitution s;
  s.emplace("A", LaurentPoly::variable(t, "t", Exponent::ratio(-1, 4)));
  s.emplace("B", LaurentPoly::variable(t, "t", Exponent::ratio(1, 4)));
  s.emplace("d", -LaurentPoly::variable(t, "t", Exponent::ratio(1, 2)) -
                     LaurentPoly::variable(t, "t", Exponent::ratio(-1, 2)));
  return s;
}

LaurentPoly jones(const Diagram& d, int max_crossings) {
  const int w = writhe(d);
  const LaurentPoly bracket = kauffman_bracket(d, max_crossings);
  const LaurentPoly prefactor =
      LaurentPoly::monomial(jones_vars(), (w % 2 == 0) ? 1 : -1, {Exponent{3 * w}});
  return prefactor * poly_substitute(bracket, jones_substitution(), jones_vars());
}

}  // namespace vkbr
