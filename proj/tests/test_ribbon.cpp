#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vkbr/errors.hpp"
#include "vkbr/fixtures.hpp"
#include "vkbr/ribbon.hpp"

using namespace vkbr;

namespace {

LaurentPoly R(std::string_view s) { return LaurentPoly::parse(s, ribbon_vars()); }
LaurentPoly T(std::string_view s) { return LaurentPoly::parse(s, tutte_vars()); }

SubgraphStats stats_of(const RibbonGraph& g, std::initializer_list<bool> keep) {
  return subgraph_stats(g, SpanningSubgraph(std::vector<bool>(keep)));
}

}  // namespace

TEST_CASE("parse and print a ribbon graph") {
  const auto g = RibbonGraph::parse(fixtures::kGenusOneRibbon);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.dart_count() == 6);
  CHECK(RibbonGraph::parse(g.to_text()).to_text() == g.to_text());
  const auto neg = RibbonGraph::parse("V v : h1 h2\nE l : h1 h2 sign=-\n");
  CHECK(neg.sign(0) == -1);
  CHECK(neg.to_text().find("sign=-") != std::string::npos);
}

TEST_CASE("ribbon parse errors") {
  CHECK_THROWS_AS(RibbonGraph::parse("V v : a a\nE e : a a\n"), ParseError);
  CHECK_THROWS_AS(RibbonGraph::parse("V v : a b\nE e : a c\n"), ParseError);
  CHECK_THROWS_AS(RibbonGraph::parse("V v : a b c\nE e : a b\n"), ParseError);
  CHECK_THROWS_AS(RibbonGraph::parse("V v : a b c d\nE e : a b\nE f : b c\n"), ParseError);
  CHECK_THROWS_AS(RibbonGraph::parse("V v : a b\nE e : a b sign=x\n"), ParseError);
}

TEST_CASE("subgraph rows of the genus one example") {
  const auto g = RibbonGraph::parse(fixtures::kGenusOneRibbon);
  // (k, r, n, bc) with edges a, b, c where c is the loop
  auto row = [&](std::initializer_list<bool> keep) {
    const auto s = stats_of(g, keep);
    return std::array<int, 4>{s.k, s.r, s.n, s.bc};
  };
  CHECK(row({true, true, true}) == std::array<int, 4>{1, 1, 2, 1});
  CHECK(row({true, true, false}) == std::array<int, 4>{1, 1, 1, 2});
  CHECK(row({true, false, true}) == std::array<int, 4>{1, 1, 1, 2});
  CHECK(row({true, false, false}) == std::array<int, 4>{1, 1, 0, 1});
  CHECK(row({false, true, true}) == std::array<int, 4>{1, 1, 1, 2});
  CHECK(row({false, true, false}) == std::array<int, 4>{1, 1, 0, 1});
  CHECK(row({false, false, true}) == std::array<int, 4>{2, 0, 1, 3});
  CHECK(row({false, false, false}) == std::array<int, 4>{2, 0, 0, 2});
  CHECK(genus(g) == 1);
}

TEST_CASE("small polynomials") {
  CHECK(br_poly(RibbonGraph::parse("V v :\n")) == R("1"));
  CHECK(br_poly(RibbonGraph::parse("V v : a b\nE l : a b\n")) == R("1 + y"));
  CHECK(br_poly(RibbonGraph::parse("V u : a\nV v : b\nE e : a b\n")) == R("1 + x"));
  // two interleaved loops on one vertex
  const auto torus = RibbonGraph::parse("V v : a c b d\nE e : a b\nE f : c d\n");
  CHECK(genus(torus) == 1);
  CHECK(br_poly(torus) == R("y^2z^2 + 2y + 1"));
  CHECK(br_poly(RibbonGraph::parse(fixtures::kGenusOneRibbon)) == R("y^2z^2 + 3y + 2 + xy + x"));
}

TEST_CASE("signed polynomials") {
  const auto neg_loop = RibbonGraph::parse("V v : h1 h2\nE l : h1 h2 sign=-\n");
  CHECK(signed_br_poly(neg_loop) == R("x^(-1/2)y^(1/2) + x^(1/2)y^(1/2)"));
  const auto g = RibbonGraph::parse(fixtures::kGenusOneRibbon);
  CHECK(signed_br_poly(g) == br_poly(g));
  // every edge negative: each (k, r, n, bc) row contributes with s = (|F| - |F^c|)/2
  const auto all_neg = g.with_signs({-1, -1, -1});
  CHECK(signed_br_poly(all_neg) ==
        R("x^(3/2)y^(1/2)z^2 + 3x^(1/2)y^(1/2) + 2x^(-1/2)y^(1/2) + x^(1/2)y^(3/2) + x^(-1/2)y^(3/2)"));
}

TEST_CASE("tutte through the ribbon polynomial") {
  CHECK(tutte_via_br(RibbonGraph::parse("V v : a b\nE l : a b\n")) == T("y"));
  CHECK(tutte_via_br(RibbonGraph::parse("V u : a\nV v : b\nE e : a b\n")) == T("x"));
  CHECK(tutte_via_br(RibbonGraph::parse(fixtures::kGenusOneRibbon)) == T("xy + y^2"));
}

TEST_CASE("size cap") {
  const auto g = RibbonGraph::parse(fixtures::kGenusOneRibbon);
  CHECK_THROWS_AS(br_poly(g, 2), SizeError);
}

TEST_CASE("invariants on random ribbon graphs") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    const auto g = vkbr::testing::random_ribbon_graph(rng, 4, 10);
    const auto e = g.edge_count();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << e); ++m) {
      const auto f = SpanningSubgraph::from_mask(g, m);
      const auto s = subgraph_stats(g, f);
      CHECK(s.r + s.n == s.e);
      CHECK(s.k + s.r == s.v);
      CHECK(s.euler_defect() >= 0);
      CHECK(s.euler_defect() % 2 == 0);
      CHECK(s.genus() <= genus(g));
    }
    const auto r = br_poly(g);
    if (genus(g) == 0) CHECK(r.degree_range(2).second == Exponent{});
    CHECK(tutte_via_br(g) == vkbr::testing::whitney_tutte(g));
    // with every sign positive the signed polynomial is the plain one
    CHECK(signed_br_poly(g.unsigned_copy()) == br_poly(g.unsigned_copy()));
  }
}
