#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "vkbr/diagram.hpp"
#include "vkbr/errors.hpp"
#include "vkbr/fixtures.hpp"

using namespace vkbr;
using vkbr::testing::random_corpus;
using vkbr::testing::traced_delta;

namespace {

LaurentPoly B(std::string_view s) { return LaurentPoly::parse(s, bracket_vars()); }
LaurentPoly J(std::string_view s) { return LaurentPoly::parse(s, jones_vars()); }

}  // namespace

TEST_CASE("parse the virtual trefoil") {
  const auto d = Diagram::parse(fixtures::kVirtualTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count() == 6);
  CHECK(d.component_count() == 1);
  CHECK(Diagram::parse(d.to_text()).to_text() == d.to_text());
}

TEST_CASE("parse comments, loops and blank lines") {
  const auto d = Diagram::parse("# two loops\n\nO 1\nO 1\n");
  CHECK(d.crossing_count() == 0);
  CHECK(d.free_loops() == 2);
  CHECK(d.component_count() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      Diagram::parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("X a b c d o=1\nX e f a g o=3\nX h a i j o=3\n") == 3);
  CHECK(line_of("X a b c d o=2\n") == 1);
  CHECK(line_of("X a b c\n") == 1);
  CHECK(line_of("O 1\nY\n") == 2);
  CHECK_THROWS_AS(Diagram::parse("X a b c d o=1\n"), ParseError);  // dangling
  CHECK_THROWS_AS(Diagram::parse(""), ParseError);
  CHECK_THROWS_AS(Diagram::parse("X a a b b o=1\n"), ParseError);  // a twice incoming/outgoing mix
}

TEST_CASE("state table of the virtual trefoil") {
  const auto d = Diagram::parse(fixtures::kVirtualTrefoil);
  // letter j of each label is the splitting at crossing j
  const std::map<std::string, StateStats> table{
      {"AAA", {3, 0, 1}}, {"AAB", {2, 1, 2}}, {"ABA", {2, 1, 2}}, {"ABB", {1, 2, 1}},
      {"BAA", {2, 1, 2}}, {"BAB", {1, 2, 1}}, {"BBA", {1, 2, 3}}, {"BBB", {0, 3, 2}},
  };
  for (const auto& [label, expect] : table) {
    std::vector<Splitting> s;
    for (char ch : label) s.push_back(ch == 'A' ? Splitting::A : Splitting::B);
    CAPTURE(label);
    CHECK(split_stats(d, State(s)) == expect);
  }
}

TEST_CASE("bracket examples") {
  CHECK(kauffman_bracket(Diagram::parse(fixtures::kVirtualTrefoil)) ==
        B("A^3 + 3A^2Bd + 2AB^2 + AB^2d^2 + B^3d"));
  CHECK(kauffman_bracket(Diagram::parse(fixtures::kUnknot)) == B("1"));
  CHECK(kauffman_bracket(Diagram::parse(fixtures::kTwoLoops)) == B("d"));
  CHECK(kauffman_bracket(Diagram::parse(fixtures::kVirtualHopf)) == B("A + B"));
}

TEST_CASE("bracket size cap") {
  const auto d = Diagram::parse(fixtures::kVirtualTrefoil);
  CHECK_THROWS_AS(kauffman_bracket(d, 2), SizeError);
  CHECK_NOTHROW(kauffman_bracket(d, 3));
}

TEST_CASE("writhe and jones") {
  const auto d = Diagram::parse(fixtures::kVirtualTrefoil);
  CHECK(writhe(d) == 1);
  CHECK(writhe(d.mirror()) == -1);
  CHECK(jones(d) == J("1"));
  CHECK(jones(d.mirror()) == J("1"));
  CHECK(jones(Diagram::parse(fixtures::kUnknot)) == J("1"));
  CHECK(jones(Diagram::parse(fixtures::kTwoLoops)) == J("-t^(1/2) - t^(-1/2)"));
  CHECK(jones(Diagram::parse(fixtures::kTrefoil)) == J("-t^4 + t^3 + t"));
  CHECK(jones(Diagram::parse(fixtures::kTrefoil).mirror()) == J("-t^(-4) + t^(-3) + t^(-1)"));
}

TEST_CASE("a kink does not change the jones polynomial") {
  for (std::string_view text : {"X a b b a o=1\n", "X a a b b o=3\n"}) {
    const auto d = Diagram::parse(text);
    CHECK(jones(d) == J("1"));
    CHECK(jones(d.mirror()) == J("1"));
    CHECK(kauffman_bracket(d) != kauffman_bracket(Diagram::parse(fixtures::kUnknot)));
  }
}

TEST_CASE("classical knots match published jones polynomials") {
  for (const auto& k : vkbr::testing::classical_knots()) {
    CAPTURE(k.name);
    CHECK(jones(k.diagram) == J(k.jones));
    CHECK(jones(k.diagram.mirror()) ==
          poly_substitute(J(k.jones), {{"t", J("t^(-1)")}}, jones_vars()));
  }
}

TEST_CASE("state invariants on random diagrams") {
  for (const auto& d : random_corpus(RandomMode::Any, 120)) {
    const auto n = d.crossing_count();
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const auto s = State::from_index(n, i);
      const auto st = split_stats(d, s);
      CHECK(st.alpha + st.beta == static_cast<int>(n));
      CHECK(st.delta == traced_delta(d, s));
      // a virtual diagram can keep the curve count under a toggle
      for (std::size_t c = 0; c < n; ++c) {
        auto t = s;
        t.toggle(c);
        CHECK(std::abs(split_stats(d, t).delta - st.delta) <= 1);
      }
    }
    const auto br = kauffman_bracket(d);
    Coeff total = 0;
    for (const auto& [key, c] : br.terms()) {
      CHECK(key[0] + key[1] == static_cast<int>(n) * Exponent::kUnit);
      total += c;
    }
    CHECK(total == Coeff(1) << n);
  }
}

TEST_CASE("toggles on colorable diagrams change the curve count") {
  for (const auto& d : random_corpus(RandomMode::Colorable, 80, 123)) {
    const auto n = d.crossing_count();
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const auto s = State::from_index(n, i);
      const int delta = split_stats(d, s).delta;
      for (std::size_t c = 0; c < n; ++c) {
        auto t = s;
        t.toggle(c);
        CHECK(std::abs(split_stats(d, t).delta - delta) == 1);
      }
    }
  }
}

TEST_CASE("switching a crossing and all crossings") {
  for (const auto& d : random_corpus(RandomMode::Any, 60, 500)) {
    const auto n = d.crossing_count();
    // switching swaps A and B at that crossing
    for (std::size_t c = 0; c < n; ++c) {
      const auto e = d.with_switched({c});
      CHECK(writhe(e) == writhe(d) - 2 * d.crossing(c).sign());
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        auto s = State::from_index(n, i);
        const auto before = split_stats(d, s);
        s.toggle(c);
        CHECK(split_stats(e, s).delta == before.delta);
      }
    }
    // the mirror image exchanges A and B
    const auto swapped = poly_substitute(kauffman_bracket(d), {{"A", B("B")}, {"B", B("A")}, {"d", B("d")}},
                                         bracket_vars());
    CHECK(kauffman_bracket(d.mirror()) == swapped);
  }
}
