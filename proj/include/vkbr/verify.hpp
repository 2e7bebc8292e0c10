#pragma once

#include <optional>
#include <vector>

#include "vkbr/build.hpp"
#include "vkbr/diagram.hpp"
#include "vkbr/laurent.hpp"
#include "vkbr/ribbon.hpp"

namespace vkbr {

/// Bracket from the state sum on the left, the ribbon-graph assembly on the
/// right, plus the prefactor exponents of the assembly.
struct VerifyReport {
  LaurentPoly left{bracket_vars()};
  LaurentPoly right{bracket_vars()};
  bool equal = false;
  int r = 0;
  int n = 0;
  int k = 0;
};

/// x -> Bd/A, y -> Ad/B, z -> 1/d.
Substitution bracket_substitution();

/// A^r(G) B^n(G) d^(k(G)-1) R(Bd/A, Ad/B, 1/d) for a (possibly signed)
/// Bollobas-Riordan polynomial `r_poly` of `g`.
LaurentPoly assemble_bracket(const RibbonGraph& g, const LaurentPoly& r_poly);

/// Throws NotAlternatingError when `d` is not alternating.
VerifyReport verify_main(const Diagram& d, int max_size = kDefaultMaxSize);

/// Throws NotColorableError when `d` is not checkerboard colorable.
VerifyReport verify_signed(const Diagram& d, int max_size = kDefaultMaxSize);
VerifyReport verify_signed(const Diagram& d, const SwitchSet& switches,
                           int max_size = kDefaultMaxSize);

/// Jones polynomial by two routes. The ribbon route substitutes
/// x = -(1+t), y = -t^-1 (1+t), z = -t^(1/2) / (1+t), so it is a Laurent
/// polynomial in t and u = 1+t with u possibly in the denominator. Writing it
/// as numerator / (1+t)^m, the check is direct * (1+t)^m == numerator.
struct JonesReport {
  LaurentPoly direct{jones_vars()};
  LaurentPoly numerator{jones_vars()};
  unsigned denominator_power = 0;
  bool equal = false;
  int writhe = 0;
  int r = 0;
  int n = 0;
  int k = 0;
};

/// Throws NotColorableError.
JonesReport verify_jones(const Diagram& d, int max_size = kDefaultMaxSize);

/// Jones polynomial through T(-t, -1/t) of the ribbon graph of an alternating
/// diagram whose ribbon graph is planar. Throws Error otherwise.
LaurentPoly jones_via_tutte(const Diagram& d, int max_size = kDefaultMaxSize);

/// Bracket-side assembly for every valid switch set of `d`.
std::vector<LaurentPoly> signed_assemblies_for_all_switch_sets(const Diagram& d,
                                                                int max_size = kDefaultMaxSize);

}  // namespace vkbr
