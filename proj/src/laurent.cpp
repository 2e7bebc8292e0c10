#include "vkbr/laurent.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "vkbr/errors.hpp"

namespace vkbr {

Exponent Exponent::ratio(int num, int den) {
  if (den == 0) throw VariableError("exponent with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (kUnit % den != 0) {
    throw VariableError("exponent " + std::to_string(num) + "/" + std::to_string(den) +
                        " is not a multiple of 1/4");
  }
  return {num * (kUnit / den)};
}

VarList::VarList(std::initializer_list<std::string> names)
    : VarList(std::vector<std::string>(names)) {}

VarList::VarList(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw VariableError("empty variable name");
    for (char c : n) {
      if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') {
        throw VariableError("variable name '" + n + "' must be alphabetic");
      }
    }
    if (!seen.insert(n).second) throw VariableError("duplicate variable '" + n + "'");
  }
}

int VarList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

const VarList& bracket_vars() {
  static const VarList v{"A", "B", "d"};
  return v;
}
const VarList& ribbon_vars() {
  static const VarList v{"x", "y", "z"};
  return v;
}
const VarList& tutte_vars() {
  static const VarList v{"x", "y"};
  return v;
}
const VarList& jones_vars() {
  static const VarList v{"t"};
  return v;
}

LaurentPoly::LaurentPoly(VarList vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(const VarList& vars, const Coeff& c) {
  LaurentPoly p(vars);
  p.add_term(Key(vars.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const VarList& vars, const Coeff& c,
                                  const std::vector<Exponent>& exps) {
  if (exps.size() != vars.size()) throw VariableError("exponent vector has wrong length");
  Key key(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) key[i] = exps[i].quarters;
  LaurentPoly p(vars);
  p.add_term(key, c);
  return p;
}

LaurentPoly LaurentPoly::variable(const VarList& vars, std::string_view name, Exponent e) {
  const int idx = vars.index_of(name);
  if (idx < 0) throw VariableError("unknown variable '" + std::string(name) + "'");
  Key key(vars.size(), 0);
  key[static_cast<std::size_t>(idx)] = e.quarters;
  LaurentPoly p(vars);
  p.add_term(key, 1);
  return p;
}

Coeff LaurentPoly::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::add_term(const Key& key, const Coeff& c) {
  if (key.size() != vars_.size()) throw VariableError("term key has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_vars(const LaurentPoly& other) const {
  if (vars_ != other.vars_) throw VariableError("polynomials have different variable lists");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_vars(rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_same_vars(rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_vars(b);
  LaurentPoly out(a.vars_);
  LaurentPoly::Key key(a.vars_.size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = ka[i] + kb[i];
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(vars_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::pair<Exponent, Exponent> LaurentPoly::degree_range(std::size_t i) const {
  if (terms_.empty()) return {Exponent{}, Exponent{}};
  int lo = terms_.begin()->first[i];
  int hi = lo;
  for (const auto& [k, c] : terms_) {
    lo = std::min(lo, k[i]);
    hi = std::max(hi, k[i]);
  }
  return {Exponent{lo}, Exponent{hi}};
}

namespace {

void print_exponent(std::ostream& os, int quarters) {
  const int g = std::gcd(quarters, Exponent::kUnit);
  const int num = quarters / g;
  const int den = Exponent::kUnit / g;
  if (den == 1) {
    if (num == 1) return;
    if (num > 0) {
      os << '^' << num;
    } else {
      os << "^(" << num << ')';
    }
  } else {
    os << "^(" << num << '/' << den << ')';
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Coeff mag = negative ? Coeff(-c) : c;
    bool wrote = false;
    if (mag != 1) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      print_exponent(os, key[i]);
      wrote = true;
    }
    if (!wrote) os << '1';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  LaurentPoly run() {
    LaurentPoly out(vars_);
    bool first = true;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [c, key] = term();
      out.add_term(key, sign * c);
      first = false;
    }
    if (first) fail("empty polynomial");
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(0, "polynomial '" + std::string(text_) + "' at offset " +
                            std::to_string(pos_) + ": " + msg);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    bool neg = false;
    skip_ws();
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    const std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    const int v = std::stoi(d);
    return neg ? -v : v;
  }

  Exponent exponent() {
    skip_ws();
    if (!at_end() && (peek() == '(' || peek() == '{')) {
      const char close = peek() == '(' ? ')' : '}';
      ++pos_;
      const int num = small_int();
      int den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = small_int();
      }
      skip_ws();
      if (at_end() || peek() != close) fail("unterminated exponent");
      ++pos_;
      try {
        return Exponent::ratio(num, den);
      } catch (const VariableError& e) {
        fail(e.what());
      }
    }
    return Exponent::integer(small_int());
  }

  std::pair<Coeff, LaurentPoly::Key> term() {
    Coeff c = 1;
    LaurentPoly::Key key(vars_.size(), 0);
    bool any = false;
    bool need_factor = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= Coeff(digits());
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        variables(key);
      } else if (ch == '*') {
        if (!any) fail("'*' without left operand");
        ++pos_;
        need_factor = true;
        continue;
      } else {
        break;
      }
      any = true;
      need_factor = false;
    }
    if (!any) fail("expected a term");
    if (need_factor) fail("dangling '*'");
    return {c, key};
  }

  // A run of letters is split into variable names by longest match, so
  // `AB^2d` reads as A * B^2 * d. A trailing exponent binds to the last name.
  void variables(LaurentPoly::Key& key) {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view run = text_.substr(start, pos_ - start);
    std::size_t i = 0;
    int last = -1;
    while (i < run.size()) {
      int best = -1;
      std::size_t best_len = 0;
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        const auto& name = vars_[v];
        if (name.size() > best_len && run.substr(i, name.size()) == name) {
          best = static_cast<int>(v);
          best_len = name.size();
        }
      }
      if (best < 0) fail("unknown variable in '" + std::string(run) + "'");
      key[static_cast<std::size_t>(best)] += Exponent::kUnit;
      last = best;
      i += best_len;
    }
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      const Exponent e = exponent();
      key[static_cast<std::size_t>(last)] += e.quarters - Exponent::kUnit;
    }
  }

  std::string_view text_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, const VarList& vars) {
  return PolyParser(text, vars).run();
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

namespace {

LaurentPoly raise(const LaurentPoly& base, int quarters, const std::string& name) {
  if (base.is_monomial()) {
    const auto& [key, c] = *base.terms().begin();
    LaurentPoly::Key out(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
      const long long scaled = static_cast<long long>(key[i]) * quarters;
      if (scaled % Exponent::kUnit != 0) {
        throw VariableError("substituting '" + name + "' leaves the quarter-exponent lattice");
      }
      out[i] = static_cast<int>(scaled / Exponent::kUnit);
    }
    Coeff coeff;
    if (quarters % Exponent::kUnit == 0) {
      const int k = quarters / Exponent::kUnit;
      if (k < 0 && c != 1 && c != -1) {
        throw VariableError("negative power of coefficient " + c.str() + " for '" + name + "'");
      }
      coeff = boost::multiprecision::pow(c, static_cast<unsigned>(k < 0 ? -k : k));
    } else {
      if (c != 1) {
        throw VariableError("fractional power of coefficient " + c.str() + " for '" + name + "'");
      }
      coeff = 1;
    }
    LaurentPoly p(base.vars());
    p.add_term(out, coeff);
    return p;
  }
  if (quarters % Exponent::kUnit != 0 || quarters < 0) {
    throw VariableError("'" + name + "' is replaced by a multi-term polynomial and occurs with exponent " +
                        std::to_string(quarters) + "/4");
  }
  return base.pow(static_cast<unsigned>(quarters / Exponent::kUnit));
}

}  // namespace

LaurentPoly poly_substitute(const LaurentPoly& p, const Substitution& assignments,
                            const VarList& target) {
  const VarList& vars = p.vars();
  std::vector<const LaurentPoly*> values(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = assignments.find(vars[i]);
    if (it == assignments.end()) throw VariableError("no assignment for variable '" + vars[i] + "'");
    if (it->second.vars() != target) {
      throw VariableError("assignment for '" + vars[i] + "' is not over the target variables");
    }
    values[i] = &it->second;
  }

  std::map<std::pair<std::size_t, int>, LaurentPoly> powers;
  auto power = [&](std::size_t i, int q) -> const LaurentPoly& {
    auto it = powers.find({i, q});
    if (it == powers.end()) it = powers.emplace(std::pair{i, q}, raise(*values[i], q, vars[i])).first;
    return it->second;
  };

  LaurentPoly out(target);
  for (const auto& [key, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] != 0) term *= power(i, key[i]);
    }
    out += term;
  }
  return out;
}

}  // namespace vkbr
