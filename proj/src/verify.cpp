#include "vkbr/verify.hpp"

#include "vkbr/errors.hpp"

namespace vkbr {

namespace {

constexpr int kQ = Exponent::kUnit;

struct FullStats {
  int r, n, k;
};

FullStats full_stats(const RibbonGraph& g) {
  const auto st = subgraph_stats(g, SpanningSubgraph::full(g));
  return {st.r, st.n, st.k};
}

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Substitution bracket_substitution() {
  const VarList& abd = bracket_vars();
  Substitution s;
  s.emplace("x", LaurentPoly::monomial(abd, 1, {Exponent::integer(-1), Exponent::integer(1), Exponent::integer(1)}));
  s.emplace("y", LaurentPoly::monomial(abd, 1, {Exponent::integer(1), Exponent::integer(-1), Exponent::integer(1)}));
  s.emplace("z", LaurentPoly::monomial(abd, 1, {Exponent{}, Exponent{}, Exponent::integer(-1)}));
  return s;
}

LaurentPoly assemble_bracket(const RibbonGraph& g, const LaurentPoly& r_poly) {
  const auto [r, n, k] = full_stats(g);
  const LaurentPoly prefactor = LaurentPoly::monomial(
      bracket_vars(), 1, {Exponent::integer(r), Exponent::integer(n), Exponent::integer(k - 1)});
  return prefactor * poly_substitute(r_poly, bracket_substitution(), bracket_vars());
}

VerifyReport verify_main(const Diagram& d, int max_size) {
  if (!is_alternating(d)) throw NotAlternatingError("verify_main needs an alternating diagram");
  VerifyReport rep;
  rep.left = kauffman_bracket(d, max_size);
  const BuiltRibbon built = build_ribbon(d);
  rep.right = assemble_bracket(built.graph, br_poly(built.graph, max_size));
  const auto [r, n, k] = full_stats(built.graph);
  rep.r = r;
  rep.n = n;
  rep.k = k;
  rep.equal = rep.left == rep.right;
  return rep;
}

VerifyReport verify_signed(const Diagram& d, int max_size) {
  auto s = find_switch_set(d);
  if (!s) throw NotColorableError("verify_signed needs a checkerboard colorable diagram");
  return verify_signed(d, *s, max_size);
}

VerifyReport verify_signed(const Diagram& d, const SwitchSet& switches, int max_size) {
  VerifyReport rep;
  rep.left = kauffman_bracket(d, max_size);
  const BuiltRibbon built = build_signed(d, switches);
  rep.right = assemble_bracket(built.graph, signed_br_poly(built.graph, max_size));
  const auto [r, n, k] = full_stats(built.graph);
  rep.r = r;
  rep.n = n;
  rep.k = k;
  rep.equal = rep.left == rep.right;
  return rep;
}

JonesReport verify_jones(const Diagram& d, int max_size) {
  const BuiltRibbon built = build_signed(d);
  JonesReport rep;
  rep.writhe = writhe(d);
  rep.direct = jones(d, max_size);
  const auto [r, n, k] = full_stats(built.graph);
  rep.r = r;
  rep.n = n;
  rep.k = k;

  // Over (t, u): x^a y^b z^c -> (-1)^(a+b+c) t^(c/2 - b) u^(a+b-c).
  // a and b share their fractional part, so a+b is an integer.
  const VarList tu{"t", "u"};
  const LaurentPoly signed_r = signed_br_poly(built.graph, max_size);
  LaurentPoly assembled(tu);
  for (const auto& [key, c] : signed_r.terms()) {
    const int a = key[0], b = key[1], z = key[2];
    if ((a + b) % kQ != 0 || z % kQ != 0) throw Error("unexpected exponent lattice in signed polynomial");
    const int sign = parity_sign((a + b + z) / kQ);
    assembled.add_term({z / 2 - b, a + b - z}, sign * c);
  }
  // (-1)^w t^((3w - r + n)/4) D^(k-1) with D = -t^(-1/2) u.
  const int w = rep.writhe;
  const LaurentPoly prefactor = LaurentPoly::monomial(
      tu, parity_sign(w + k - 1),
      {Exponent{3 * w - r + n - 2 * (k - 1)}, Exponent::integer(k - 1)});
  assembled = prefactor * assembled;

  const int u_min = assembled.degree_range(1).first.as_integer();
  rep.denominator_power = u_min < 0 ? static_cast<unsigned>(-u_min) : 0U;
  const LaurentPoly shift =
      LaurentPoly::monomial(tu, 1, {Exponent{}, Exponent::integer(static_cast<int>(rep.denominator_power))});
  assembled = assembled * shift;

  const VarList& t = jones_vars();
  const LaurentPoly one_plus_t = LaurentPoly::constant(t, 1) + LaurentPoly::variable(t, "t");
  Substitution back;
  back.emplace("t", LaurentPoly::variable(t, "t"));
  back.emplace("u", one_plus_t);
  rep.numerator = poly_substitute(assembled, back, t);
  rep.equal = rep.direct * one_plus_t.pow(rep.denominator_power) == rep.numerator;
  return rep;
}

LaurentPoly jones_via_tutte(const Diagram& d, int max_size) {
  const BuiltRibbon built = build_ribbon(d);
  if (genus(built.graph) != 0) throw Error("jones_via_tutte needs a planar ribbon graph");
  const auto [r, n, k] = full_stats(built.graph);
  const int w = writhe(d);

  const VarList& t = jones_vars();
  Substitution s;
  s.emplace("x", -LaurentPoly::variable(t, "t"));
  s.emplace("y", -LaurentPoly::variable(t, "t", Exponent::integer(-1)));
  const LaurentPoly tutte_at = poly_substitute(tutte_via_br(built.graph, max_size), s, t);

  const LaurentPoly loop_value = -LaurentPoly::variable(t, "t", Exponent::ratio(1, 2)) -
                                 LaurentPoly::variable(t, "t", Exponent::ratio(-1, 2));
  const LaurentPoly prefactor = LaurentPoly::monomial(t, parity_sign(w), {Exponent{3 * w - r + n}});
  return prefactor * loop_value.pow(static_cast<unsigned>(k - 1)) * tutte_at;
}

std::vector<LaurentPoly> signed_assemblies_for_all_switch_sets(const Diagram& d, int max_size) {
  std::vector<LaurentPoly> out;
  for (const auto& s : all_switch_sets(d)) {
    const BuiltRibbon built = build_signed(d, s);
    out.push_back(assemble_bracket(built.graph, signed_br_poly(built.graph, max_size)));
  }
  return out;
}

}  // namespace vkbr
