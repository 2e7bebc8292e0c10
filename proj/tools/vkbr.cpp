// vkbr: Kauffman bracket, Jones and Bollobas-Riordan polynomials of virtual
// link diagrams and their ribbon graphs.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vkbr/build.hpp"
#include "vkbr/diagram.hpp"
#include "vkbr/errors.hpp"
#include "vkbr/fixtures.hpp"
#include "vkbr/random.hpp"
#include "vkbr/ribbon.hpp"
#include "vkbr/verify.hpp"

namespace {

using nlohmann::json;
using namespace vkbr;

constexpr int kExitOk = 0;
constexpr int kExitUnequal = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotColorable = 3;

int size_cap() {
  const char* env = std::getenv("VKBR_MAX_CROSSINGS");
  if (env == nullptr || *env == '\0') return kDefaultMaxSize;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > kAbsoluteMaxSize) {
    throw Error("VKBR_MAX_CROSSINGS must be an integer in 0.." + std::to_string(kAbsoluteMaxSize));
  }
  return static_cast<int>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

json stats_json(const SubgraphStats& s) {
  return {{"v", s.v}, {"e", s.e}, {"k", s.k}, {"r", s.r}, {"n", s.n}, {"bc", s.bc}, {"genus", s.genus()}};
}

json switch_json(const SwitchSet& s) { return json(s.switched); }

std::string switch_text(const SwitchSet& s) {
  std::string out;
  for (std::size_t c : s.switched) out += (out.empty() ? "" : " ") + std::to_string(c);
  return out.empty() ? "(none)" : out;
}

struct Options {
  bool json = false;
  std::string file;
  std::string out;
  bool signed_poly = false;
  bool main_only = false;
  bool signed_only = false;
  bool jones_only = false;
  int crossings = 0;
  std::uint64_t seed = 0;
  bool alternating = false;
  bool colorable = false;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

json base_json(const std::string& command, const Options& o) {
  json j;
  j["command"] = command;
  j["inputs"] = json::object();
  if (!o.file.empty()) j["inputs"]["file"] = o.file;
  return j;
}

int cmd_bracket(const Options& o) {
  const Diagram d = Diagram::parse(read_file(o.file));
  const LaurentPoly p = kauffman_bracket(d, size_cap());
  json j = base_json("bracket", o);
  j["polynomials"] = {{"bracket", p.to_string()}};
  emit(o, j, p.to_string() + "\n");
  return kExitOk;
}

int cmd_jones(const Options& o) {
  const Diagram d = Diagram::parse(read_file(o.file));
  const LaurentPoly p = jones(d, size_cap());
  json j = base_json("jones", o);
  j["polynomials"] = {{"jones", p.to_string()}};
  j["writhe"] = writhe(d);
  emit(o, j, p.to_string() + "\n");
  return kExitOk;
}

int cmd_colorable(const Options& o) {
  const Diagram d = Diagram::parse(read_file(o.file));
  const auto s = find_switch_set(d);
  json j = base_json("colorable", o);
  j["colorable"] = s.has_value();
  j["alternating"] = s.has_value() && s->empty();
  if (s) j["switch_set"] = switch_json(*s);
  emit(o, j, s ? "colorable\nswitch-set: " + switch_text(*s) + "\n" : "not colorable\n");
  return s ? kExitOk : kExitNotColorable;
}

int cmd_build(const Options& o, bool signed_graph) {
  const Diagram d = Diagram::parse(read_file(o.file));
  const BuiltRibbon b = signed_graph ? build_signed(d) : build_ribbon(d);
  const std::string ribbon = b.graph.to_text();
  const std::string map = edge_map_text(b);
  json j = base_json(signed_graph ? "build-signed" : "build-ribbon", o);
  j["ribbon"] = ribbon;
  j["edge_map"] = json::array();
  for (std::size_t c = 0; c < b.crossing_to_edge.size(); ++c) {
    j["edge_map"].push_back({{"crossing", c}, {"edge", b.graph.edge_name(b.crossing_to_edge[c])}});
  }
  j["switch_set"] = switch_json(b.switches);
  j["stats"] = stats_json(subgraph_stats(b.graph, SpanningSubgraph::full(b.graph)));

  std::string text;
  if (!o.out.empty()) {
    write_file(o.out, ribbon);
    write_file(o.out + ".map", map);
    j["outputs"] = {o.out, o.out + ".map"};
    text = "wrote " + o.out + " and " + o.out + ".map\n";
  } else {
    text = ribbon;
    std::istringstream lines(map);
    for (std::string line; std::getline(lines, line);) text += "# map " + line + "\n";
  }
  emit(o, j, text);
  return kExitOk;
}

int cmd_br_poly(const Options& o) {
  const RibbonGraph g = RibbonGraph::parse(read_file(o.file));
  const LaurentPoly p = o.signed_poly ? signed_br_poly(g, size_cap()) : br_poly(g, size_cap());
  json j = base_json("br-poly", o);
  j["inputs"]["signed"] = o.signed_poly;
  j["polynomials"] = {{o.signed_poly ? "signed_br" : "br", p.to_string()}};
  j["stats"] = stats_json(subgraph_stats(g, SpanningSubgraph::full(g)));
  emit(o, j, p.to_string() + "\n");
  return kExitOk;
}

int cmd_tutte(const Options& o) {
  const RibbonGraph g = RibbonGraph::parse(read_file(o.file));
  const LaurentPoly p = tutte_via_br(g, size_cap());
  json j = base_json("tutte", o);
  j["polynomials"] = {{"tutte", p.to_string()}};
  emit(o, j, p.to_string() + "\n");
  return kExitOk;
}

int cmd_genus(const Options& o) {
  const RibbonGraph g = RibbonGraph::parse(read_file(o.file));
  const SubgraphStats s = subgraph_stats(g, SpanningSubgraph::full(g));
  json j = base_json("genus", o);
  j["stats"] = stats_json(s);
  std::ostringstream text;
  text << s.genus() << "\n";
  emit(o, j, text.str());
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const Diagram d = Diagram::parse(read_file(o.file));
  const int cap = size_cap();
  const bool pick = o.main_only || o.signed_only || o.jones_only;
  const auto switches = find_switch_set(d);
  if (!switches && (!pick || o.signed_only || o.jones_only)) {
    throw NotColorableError("diagram is not checkerboard colorable");
  }
  const bool run_main = o.main_only || (!pick && switches->empty());
  const bool run_signed = o.signed_only || !pick;
  const bool run_jones = o.jones_only || !pick;

  json j = base_json("verify", o);
  j["checks"] = json::object();
  std::ostringstream text;
  bool all_equal = true;

  auto report = [&](const char* name, const VerifyReport& r) {
    all_equal = all_equal && r.equal;
    j["checks"][name] = {{"equal", r.equal},
                         {"left", r.left.to_string()},
                         {"right", r.right.to_string()},
                         {"r", r.r},
                         {"n", r.n},
                         {"k", r.k}};
    text << name << ": " << (r.equal ? "equal" : "NOT EQUAL") << " (r=" << r.r << " n=" << r.n
         << " k=" << r.k << ")\n"
         << "  left:  " << r.left << "\n"
         << "  right: " << r.right << "\n";
  };

  if (run_main) report("main", verify_main(d, cap));
  if (run_signed) report("signed", verify_signed(d, cap));
  if (run_jones) {
    const JonesReport r = verify_jones(d, cap);
    all_equal = all_equal && r.equal;
    j["checks"]["jones"] = {{"equal", r.equal},
                            {"jones", r.direct.to_string()},
                            {"numerator", r.numerator.to_string()},
                            {"denominator_power", r.denominator_power},
                            {"writhe", r.writhe},
                            {"r", r.r},
                            {"n", r.n},
                            {"k", r.k}};
    text << "jones: " << (r.equal ? "equal" : "NOT EQUAL") << " (w=" << r.writhe
         << " denominator (1+t)^" << r.denominator_power << ")\n"
         << "  direct:    " << r.direct << "\n"
         << "  numerator: " << r.numerator << "\n";
  }
  if (switches) j["switch_set"] = switch_json(*switches);
  j["equal"] = all_equal;
  emit(o, j, text.str());
  return all_equal ? kExitOk : kExitUnequal;
}

int cmd_random(const Options& o) {
  const RandomMode mode = o.alternating ? RandomMode::Alternating
                          : o.colorable ? RandomMode::Colorable
                                        : RandomMode::Any;
  const Diagram d = random_diagram(o.crossings, o.seed, mode);
  json j = base_json("random", o);
  j["inputs"]["n"] = o.crossings;
  j["inputs"]["seed"] = o.seed;
  j["inputs"]["mode"] = o.alternating ? "alternating" : o.colorable ? "colorable" : "any";
  j["diagram"] = d.to_text();
  emit(o, j, d.to_text());
  return kExitOk;
}

int cmd_selftest(const Options& o) {
  std::vector<std::pair<std::string, bool>> results;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    results.emplace_back(name, ok);
  };

  const Diagram trefoil = Diagram::parse(fixtures::kVirtualTrefoil);
  const RibbonGraph genus_one = RibbonGraph::parse(fixtures::kGenusOneRibbon);

  check("virtual trefoil bracket", [&] {
    return kauffman_bracket(trefoil) ==
           LaurentPoly::parse("A^3 + 3A^2Bd + 2AB^2 + AB^2d^2 + B^3d", bracket_vars());
  });
  check("virtual trefoil jones", [&] { return jones(trefoil) == LaurentPoly::constant(jones_vars(), 1); });
  check("virtual trefoil state table", [&] {
    const StateStats expected[8] = {{3, 0, 1}, {2, 1, 2}, {2, 1, 2}, {1, 2, 1},
                                    {2, 1, 2}, {1, 2, 1}, {1, 2, 3}, {0, 3, 2}};
    // Table rows read crossing 0 as the leading letter.
    for (std::uint64_t row = 0; row < 8; ++row) {
      const std::uint64_t index = ((row >> 2) & 1U) | (row & 2U) | ((row & 1U) << 2);
      if (!(split_stats(trefoil, State::from_index(3, index)) == expected[row])) return false;
    }
    return true;
  });
  check("genus-one ribbon graph polynomial", [&] {
    return br_poly(genus_one) == LaurentPoly::parse("y^2z^2 + 3y + 2 + xy + x", ribbon_vars());
  });
  check("main identity on the virtual trefoil", [&] {
    const auto r = verify_main(trefoil);
    return r.equal && r.r == 1 && r.n == 2 && r.k == 1;
  });
  check("virtual hopf link is not colorable",
        [&] { return !find_switch_set(Diagram::parse(fixtures::kVirtualHopf)).has_value(); });

  json j = base_json("selftest", o);
  j["checks"] = json::object();
  std::ostringstream text;
  bool all = true;
  for (const auto& [name, ok] : results) {
    j["checks"][name] = ok;
    text << (ok ? "PASS " : "FAIL ") << name << "\n";
    all = all && ok;
  }
  j["equal"] = all;
  emit(o, j, text.str());
  return all ? kExitOk : kExitUnequal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman bracket and Bollobas-Riordan polynomial toolkit for virtual links"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit a JSON report");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", o.file, "Input file")->required();
    return sub;
  };
  auto* bracket = file_cmd("bracket", "Kauffman bracket of a diagram");
  auto* jones_cmd = file_cmd("jones", "Jones polynomial of a diagram");
  auto* colorable = file_cmd("colorable", "Checkerboard colorability and switch set");
  auto* build = file_cmd("build-ribbon", "Ribbon graph of an alternating diagram");
  build->add_option("-o,--output", o.out, "Write the ribbon graph here and the edge map to OUT.map");
  auto* build_s = file_cmd("build-signed", "Signed ribbon graph of a colorable diagram");
  build_s->add_option("-o,--output", o.out, "Write the ribbon graph here and the edge map to OUT.map");
  auto* br = file_cmd("br-poly", "Bollobas-Riordan polynomial of a ribbon graph");
  br->add_flag("--signed", o.signed_poly, "Use edge signs");
  auto* tutte = file_cmd("tutte", "Tutte polynomial of a ribbon graph's underlying graph");
  auto* genus_cmd = file_cmd("genus", "Genus of a ribbon graph");
  auto* verify = file_cmd("verify", "Check the bracket / ribbon graph identities on a diagram");
  auto* which = verify->add_option_group("which");
  which->add_flag("--main", o.main_only, "Unsigned identity (alternating diagrams)");
  which->add_flag("--signed", o.signed_only, "Signed identity (colorable diagrams)");
  which->add_flag("--jones", o.jones_only, "Jones polynomial through the signed polynomial");
  which->require_option(0, 1);
  auto* random = app.add_subcommand("random", "Generate a pseudo-random diagram");
  random->add_option("-n", o.crossings, "Number of crossings")->required()->check(CLI::Range(0, kMaxRandomCrossings));
  random->add_option("--seed", o.seed, "Seed")->required();
  auto* mode = random->add_option_group("mode");
  mode->add_flag("--alternating", o.alternating, "Alternating sample");
  mode->add_flag("--colorable", o.colorable, "Checkerboard colorable sample");
  mode->require_option(0, 1);
  auto* selftest = app.add_subcommand("selftest", "Run the built-in example fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (bracket->parsed()) return cmd_bracket(o);
    if (jones_cmd->parsed()) return cmd_jones(o);
    if (colorable->parsed()) return cmd_colorable(o);
    if (build->parsed()) return cmd_build(o, false);
    if (build_s->parsed()) return cmd_build(o, true);
    if (br->parsed()) return cmd_br_poly(o);
    if (tutte->parsed()) return cmd_tutte(o);
    if (genus_cmd->parsed()) return cmd_genus(o);
    if (verify->parsed()) return cmd_verify(o);
    if (random->parsed()) return cmd_random(o);
    if (selftest->parsed()) return cmd_selftest(o);
  } catch (const NotColorableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotColorable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
