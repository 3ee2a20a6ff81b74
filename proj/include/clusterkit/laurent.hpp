#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace clusterkit {

using Integer = boost::multiprecision::cpp_int;

/// Names of the variables a family of Laurent polynomials is written in.
/// Variable index i of a Monomial refers to entry i.
using Universe = std::vector<std::string>;
using UniversePtr = std::shared_ptr<const Universe>;

/// A Laurent monomial: exponent vector keyed by variable index. Stored
/// densely with trailing zeros trimmed, so equal monomials have equal
/// storage regardless of the universe size.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::uint32_t var, int exponent = 1);

  int exponent(std::uint32_t var) const {
    return var < exps_.size() ? exps_[var] : 0;
  }
  std::size_t extent() const { return exps_.size(); }
  bool is_one() const { return exps_.empty(); }
  long degree() const;
  /// Sum of absolute exponents.
  long absolute_degree() const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int k) const;

  bool operator==(const Monomial&) const = default;
  std::size_t hash() const;

 private:
  void trim();

  boost::container::small_vector<int, 8> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Canonical term order: graded by total degree, ties broken
/// lexicographically with the larger exponent of the lower index first.
/// Returns <0 when `a` precedes `b`.
int compare_terms(const Monomial& a, const Monomial& b);

/// Pure lexicographic comparison (larger exponent at the first differing
/// index is greater). Used by exact division.
int compare_lex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Integer coefficient;

  bool operator==(const Term&) const = default;
};

/// Exact multivariate Laurent polynomial with integer coefficients.
/// Immutable value; terms are kept in canonical order with no zero
/// coefficients, so structural equality is mathematical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Integer c);  // NOLINT: integers embed as constants
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT

  static LaurentPoly variable(std::uint32_t var);
  static LaurentPoly monomial(Monomial m, Integer coefficient = 1);
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Integer> as_integer() const;
  /// Index of x if the polynomial is exactly the variable x.
  std::optional<std::uint32_t> as_variable() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// A single term with coefficient +-1 (the units of the Laurent ring).
  bool is_unit() const;

  std::vector<std::uint32_t> support() const;
  /// Variables that occur with a negative exponent in some term.
  std::vector<std::uint32_t> denominator_support() const;
  /// Largest index used plus one.
  std::size_t extent() const;
  long max_absolute_degree() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned k) const;
  LaurentPoly shifted(const Monomial& m) const;

  bool operator==(const LaurentPoly&) const = default;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// Total order consistent with the canonical form; used to sort clusters.
std::strong_ordering compare(const LaurentPoly& a, const LaurentPoly& b);

struct LaurentHash {
  std::size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

struct LaurentLess {
  bool operator()(const LaurentPoly& a, const LaurentPoly& b) const {
    return compare(a, b) < 0;
  }
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// Quotient q with q * divisor == dividend; throws NotDivisible otherwise.
LaurentPoly div_exact(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Image of `p` under the ring map sending variable i to images[i].
/// Variables occurring with a negative exponent need an image that is a unit
/// monomial or a nonzero integer.
LaurentPoly substitute(const LaurentPoly& p,
                       std::span<const std::optional<LaurentPoly>> images);

/// Canonical textual form, e.g. `x1^-1 + x1^-1*x2`. Round-trips through
/// parse_laurent.
std::string to_string(const LaurentPoly& p, std::span<const std::string> names);

/// Compact fraction form over the least monomial denominator,
/// e.g. `(x1+x3+x2*x3)/(x1*x2)`. Also accepted by parse_laurent.
std::string to_fraction_string(const LaurentPoly& p, std::span<const std::string> names);

using VariableResolver = std::function<std::optional<std::uint32_t>(std::string_view)>;

/// Grammar: integers, identifiers, + - * / ^ and parentheses. Division is
/// only permitted by unit monomials; negative powers only of unit monomials.
LaurentPoly parse_laurent(std::string_view text, const VariableResolver& resolve);
LaurentPoly parse_laurent(std::string_view text, std::span<const std::string> names);

/// Rewrites `p` from one universe into another, matching variables by name.
LaurentPoly rebase(const LaurentPoly& p, const Universe& from, const Universe& to);

}  // namespace clusterkit
