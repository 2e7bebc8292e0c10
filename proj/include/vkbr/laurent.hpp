#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vkbr {

using Coeff = boost::multiprecision::cpp_int;

/// Exponents are exact multiples of 1/4. `Exponent{6}` is 3/2.
struct Exponent {
  static constexpr int kUnit = 4;

  int quarters = 0;

  static constexpr Exponent integer(int k) { return {k * kUnit}; }
  /// num/den with den in {1, 2, 4}; anything finer throws.
  static Exponent ratio(int num, int den);

  constexpr bool is_integer() const { return quarters % kUnit == 0; }
  constexpr int as_integer() const { return quarters / kUnit; }

  friend constexpr Exponent operator+(Exponent a, Exponent b) { return {a.quarters + b.quarters}; }
  friend constexpr Exponent operator-(Exponent a) { return {-a.quarters}; }
  friend constexpr auto operator<=>(Exponent, Exponent) = default;
};

/// Ordered, duplicate-free list of variable names attached to every polynomial.
class VarList {
 public:
  VarList() = default;
  VarList(std::initializer_list<std::string> names);
  explicit VarList(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `name`, or -1.
  int index_of(std::string_view name) const;

  friend bool operator==(const VarList&, const VarList&) = default;

 private:
  std::vector<std::string> names_;
};

const VarList& bracket_vars();  // A, B, d
const VarList& ribbon_vars();   // x, y, z
const VarList& tutte_vars();    // x, y
const VarList& jones_vars();    // t

/// Exact sparse multivariate Laurent polynomial with integer coefficients.
///
/// Terms are keyed by exponent vectors in quarter units and kept in
/// canonical form: unique keys, no zero coefficients, iteration in
/// lexicographically descending key order.
class LaurentPoly {
 public:
  using Key = std::vector<int>;
  using TermMap = std::map<Key, Coeff, std::greater<>>;

  explicit LaurentPoly(VarList vars);

  static LaurentPoly constant(const VarList& vars, const Coeff& c);
  static LaurentPoly monomial(const VarList& vars, const Coeff& c,
                              const std::vector<Exponent>& exps);
  /// `name^e` with coefficient 1.
  static LaurentPoly variable(const VarList& vars, std::string_view name,
                              Exponent e = Exponent::integer(1));

  /// Parses the canonical printed form. Also accepts juxtaposed variables
  /// (`3A^2Bd`), `{}` around exponents and a leading sign.
  static LaurentPoly parse(std::string_view text, const VarList& vars);

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  Coeff coeff(const Key& key) const;

  /// Adds `c * monomial(key)` in place.
  void add_term(const Key& key, const Coeff& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned k) const;

  /// Minimum and maximum exponent of variable `i` over all terms.
  /// Both are zero for the zero polynomial.
  std::pair<Exponent, Exponent> degree_range(std::size_t i) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void check_same_vars(const LaurentPoly& other) const;

  VarList vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Variable name -> replacement over the target variable list.
using Substitution = std::map<std::string, LaurentPoly, std::less<>>;

/// Replaces every variable of `p` by its assignment.
///
/// A monomial replacement may be raised to any exponent as long as the result
/// stays on the quarter lattice and the coefficient power is an integer
/// (fractional powers need coefficient 1, negative powers need +-1). A
/// replacement with several terms may only be raised to nonnegative integer
/// powers. Violations and missing assignments throw VariableError.
LaurentPoly poly_substitute(const LaurentPoly& p, const Substitution& assignments,
                            const VarList& target);

}  // namespace vkbr
