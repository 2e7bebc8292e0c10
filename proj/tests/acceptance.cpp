// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <path to vkbr> <data dir>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "vkbr/build.hpp"
#include "vkbr/errors.hpp"
#include "vkbr/fixtures.hpp"
#include "vkbr/verify.hpp"

using namespace vkbr;
using nlohmann::json;
using vkbr::testing::random_corpus;

namespace {

std::string g_cli;
std::string g_data;

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::string file(const std::string& name) { return "'" + g_data + "/" + name + "'"; }

bool same_poly(const std::string& printed, const std::string& expected, const VarList& vars) {
  try {
    return LaurentPoly::parse(trim(printed), vars) == LaurentPoly::parse(expected, vars);
  } catch (const Error&) {
    return false;
  }
}

// AC1
bool bracket_example(std::string& why) {
  const Run r = run_cli("bracket " + file("virtual_trefoil.vd"));
  why = trim(r.out);
  return r.exit_code == 0 && same_poly(r.out, "A^3 + 3A^2Bd + 2AB^2 + AB^2d^2 + B^3d", bracket_vars());
}

// AC2
bool jones_example(std::string& why) {
  const Run r = run_cli("jones " + file("virtual_trefoil.vd"));
  const Run w = run_cli("--json jones " + file("virtual_trefoil.vd"));
  int writhe_value = 0;
  try {
    writhe_value = json::parse(w.out).at("writhe").get<int>();
  } catch (const std::exception&) {
    why = "no writhe in json output";
    return false;
  }
  why = "J=" + trim(r.out) + " w=" + std::to_string(writhe_value);
  return r.exit_code == 0 && trim(r.out) == "1" && writhe_value == 1;
}

// AC3
bool state_table(std::string& why) {
  const auto d = Diagram::parse(fixtures::kVirtualTrefoil);
  std::multiset<std::array<int, 3>> got;
  for (std::uint64_t i = 0; i < 8; ++i) {
    const auto s = split_stats(d, State::from_index(3, i));
    got.insert({s.alpha, s.beta, s.delta});
  }
  const std::multiset<std::array<int, 3>> expected{{3, 0, 1}, {2, 1, 2}, {2, 1, 2}, {2, 1, 2},
                                                   {1, 2, 1}, {1, 2, 1}, {1, 2, 3}, {0, 3, 2}};
  why = "8 states";
  return got == expected;
}

// AC4
bool ribbon_example(std::string& why) {
  const Run r = run_cli("br-poly " + file("genus_one.rg"));
  why = trim(r.out);
  if (r.exit_code != 0 || !same_poly(r.out, "y^2z^2 + 3y + 2 + xy + x", ribbon_vars())) return false;

  // rows keyed by which of the edges a, b, c (c the loop) are kept
  const std::vector<std::pair<std::array<bool, 3>, std::array<int, 4>>> rows{
      {{true, true, true}, {1, 1, 2, 1}},   {{true, true, false}, {1, 1, 1, 2}},
      {{true, false, true}, {1, 1, 1, 2}},  {{true, false, false}, {1, 1, 0, 1}},
      {{false, true, true}, {1, 1, 1, 2}},  {{false, true, false}, {1, 1, 0, 1}},
      {{false, false, true}, {2, 0, 1, 3}}, {{false, false, false}, {2, 0, 0, 2}},
  };
  const auto fixture = RibbonGraph::parse(fixtures::kGenusOneRibbon);
  const auto built = build_ribbon(Diagram::parse(fixtures::kVirtualTrefoil));
  for (const auto& [keep, expect] : rows) {
    const auto s = subgraph_stats(fixture, SpanningSubgraph({keep[0], keep[1], keep[2]}));
    if (std::array<int, 4>{s.k, s.r, s.n, s.bc} != expect) {
      why = "fixture row mismatch";
      return false;
    }
    std::vector<bool> mask(3);
    for (std::size_t c = 0; c < 3; ++c) mask[built.crossing_to_edge[c]] = keep[c];
    const auto b = subgraph_stats(built.graph, SpanningSubgraph(mask));
    if (std::array<int, 4>{b.k, b.r, b.n, b.bc} != expect) {
      why = "built graph row mismatch";
      return false;
    }
  }
  return true;
}

// AC5
bool main_example(std::string& why) {
  const Run r = run_cli("--json verify --main " + file("virtual_trefoil.vd"));
  try {
    const auto m = json::parse(r.out).at("checks").at("main");
    const int rr = m.at("r"), nn = m.at("n"), kk = m.at("k");
    why = "r=" + std::to_string(rr) + " n=" + std::to_string(nn) + " k=" + std::to_string(kk);
    return r.exit_code == 0 && m.at("equal").get<bool>() && rr == 1 && nn == 2 && kk == 1;
  } catch (const std::exception& e) {
    why = e.what();
    return false;
  }
}

std::vector<Diagram> alternating_corpus() { return random_corpus(RandomMode::Alternating, 200); }
std::vector<Diagram> colorable_corpus() { return random_corpus(RandomMode::Colorable, 200); }

// AC6
bool main_random(std::string& why) {
  int ok = 0;
  for (const auto& d : alternating_corpus()) {
    if (d.crossing_count() > 8 || !is_alternating(d)) break;
    if (verify_main(d).equal) ++ok;
  }
  why = std::to_string(ok) + "/200 equal";
  return ok == 200;
}

// AC7
bool signed_random(std::string& why) {
  int ok = 0;
  for (const auto& d : colorable_corpus()) {
    if (d.crossing_count() > 8) break;
    if (verify_signed(d).equal) ++ok;
  }
  int same = 0;
  const auto small = random_corpus(RandomMode::Colorable, 20, 777);
  for (const auto& d : small) {
    const auto all = signed_assemblies_for_all_switch_sets(d);
    if (!all.empty() && std::all_of(all.begin(), all.end(), [&](const LaurentPoly& p) { return p == all.front(); }))
      ++same;
  }
  why = std::to_string(ok) + "/200 equal, " + std::to_string(same) + "/20 switch-set independent";
  return ok == 200 && same == 20;
}

// AC8
bool jones_random(std::string& why) {
  int ok = 0;
  for (const auto& d : colorable_corpus()) {
    if (verify_jones(d).equal) ++ok;
  }
  int planar = 0, planar_ok = 0;
  for (const auto& d : alternating_corpus()) {
    if (genus(build_ribbon(d).graph) != 0) continue;
    ++planar;
    if (jones_via_tutte(d) == jones(d)) ++planar_ok;
  }
  for (const auto& k : vkbr::testing::classical_knots()) {
    ++planar;
    if (jones_via_tutte(k.diagram) == LaurentPoly::parse(k.jones, jones_vars())) ++planar_ok;
  }
  why = std::to_string(ok) + "/200 equal, tutte route " + std::to_string(planar_ok) + "/" +
        std::to_string(planar);
  return ok == 200 && planar > 5 && planar_ok == planar;
}

// AC9
bool structural(std::string& why) {
  long checks = 0;
  auto fail = [&](const std::string& what) {
    why = what;
    return false;
  };
  std::vector<Diagram> all = alternating_corpus();
  for (auto& d : colorable_corpus()) all.push_back(std::move(d));
  for (const auto& d : all) {
    const auto n = static_cast<int>(d.crossing_count());
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const auto st = split_stats(d, State::from_index(d.crossing_count(), i));
      if (st.alpha + st.beta != n) return fail("alpha + beta != n");
      ++checks;
    }
    const auto br = kauffman_bracket(d);
    for (const auto& [key, c] : br.terms()) {
      if (key[0] + key[1] != n * Exponent::kUnit) return fail("bracket not homogeneous");
      ++checks;
    }
    const auto g = build_signed(d).graph;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto s = subgraph_stats(g, SpanningSubgraph::from_mask(g, m));
      if (s.r + s.n != s.e || s.k + s.r != s.v) return fail("rank/nullity identity");
      if (s.euler_defect() < 0 || s.euler_defect() % 2 != 0) return fail("k - bc + n");
      ++checks;
    }
  }
  std::mt19937_64 rng(99);
  int graphs = 0;
  for (; graphs < 300; ++graphs) {
    const auto g = vkbr::testing::random_ribbon_graph(rng, 4, 10);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto s = subgraph_stats(g, SpanningSubgraph::from_mask(g, m));
      if (s.r + s.n != s.e || s.k + s.r != s.v) return fail("rank/nullity identity");
      if (s.euler_defect() < 0 || s.euler_defect() % 2 != 0) return fail("k - bc + n");
      ++checks;
    }
    const auto r = br_poly(g);
    if (genus(g) == 0 && r.degree_range(2).second != Exponent{}) return fail("planar graph with z");
    if (tutte_via_br(g) != vkbr::testing::whitney_tutte(g)) return fail("tutte oracle mismatch");
  }
  why = std::to_string(checks) + " checks, " + std::to_string(graphs) + " ribbon graphs";
  return true;
}

// AC10
bool bijection(std::string& why) {
  long states = 0;
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto d = random_diagram(n, 100 * seed + static_cast<std::uint64_t>(n), RandomMode::Alternating);
      const auto b = build_ribbon(d);
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        const auto s = State::from_index(static_cast<std::size_t>(n), i);
        std::vector<bool> keep(b.graph.edge_count());
        for (std::size_t c = 0; c < s.size(); ++c) keep[b.crossing_to_edge[c]] = s[c] == Splitting::A;
        const auto st = split_stats(d, s);
        const auto sub = subgraph_stats(b.graph, SpanningSubgraph(keep));
        if (sub.bc != st.delta || sub.e != st.alpha) {
          why = "mismatch at n=" + std::to_string(n);
          return false;
        }
        ++states;
      }
    }
  }
  why = std::to_string(states) + " states";
  return true;
}

// AC11
bool colorability(std::string& why) {
  const Run hopf = run_cli("colorable " + file("virtual_hopf.vd"));
  const bool lib_hopf = !find_switch_set(Diagram::parse(fixtures::kVirtualHopf)).has_value();
  const auto s = find_switch_set(Diagram::parse(fixtures::kVirtualTrefoil));
  const Run tre = run_cli("colorable " + file("virtual_trefoil.vd"));
  why = "hopf exit " + std::to_string(hopf.exit_code) + ", trefoil exit " + std::to_string(tre.exit_code);
  return hopf.exit_code == 3 && lib_hopf && s && s->empty() && tre.exit_code == 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <vkbr> <data dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_data = argv[2];

  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria{
      {"AC1 bracket of the virtual trefoil", bracket_example},
      {"AC2 jones of the virtual trefoil", jones_example},
      {"AC3 state table", state_table},
      {"AC4 ribbon polynomial and subgraph rows", ribbon_example},
      {"AC5 main identity on the virtual trefoil", main_example},
      {"AC6 main identity, 200 alternating", main_random},
      {"AC7 signed identity, 200 colorable", signed_random},
      {"AC8 jones routes agree", jones_random},
      {"AC9 structural invariants", structural},
      {"AC10 states and subgraphs", bijection},
      {"AC11 colorability", colorability},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    std::string why;
    bool ok = false;
    try {
      ok = check(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << why << ")\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
