#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "triso/interval.hpp"
#include "triso/rational.hpp"

namespace triso {

/// One exponent per ambient variable, x1 first.
using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over Q in a fixed ambient variable order.
///
/// Terms are kept sorted lexicographically descending (x1 > x2 > ...), which
/// is both the rendering order and the monomial order used for exact
/// division. Zero coefficients are never stored.
class MPoly {
 public:
  using Terms = std::map<Exponents, Rational, std::greater<Exponents>>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;

  /// Highest variable index that occurs, or -1 for constants.
  int top_var() const;
  unsigned degree(std::size_t var) const;
  unsigned total_degree() const;
  bool involves(std::size_t var) const { return degree(var) > 0; }

  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Exponents& exps, const Rational& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MPoly pow(unsigned k) const;

  /// p with x_var replaced by the rational value.
  MPoly substitute(std::size_t var, const Rational& value) const;
  /// p(..., c * x_var, ...).
  MPoly scale_var(std::size_t var, const Rational& c) const;
  /// Exact value; `point` must cover every variable that occurs.
  Rational eval(const std::vector<Rational>& point) const;
  MPoly derivative(std::size_t var) const;

  /// Positive rational c such that p / c has coprime integer coefficients.
  Rational content() const;
  /// p / content, sign-adjusted so the lex-leading coefficient is positive.
  MPoly primitive() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// a / b, throwing InexactDivision when b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);

/// Enclosure of p over the box via per-variable Horner evaluation.
Interval eval_interval(const MPoly& p, const Box& box);

/// Dense view of an MPoly in one main variable; coeffs[k] multiplies var^k
/// and never involves var. The highest stored coefficient is nonzero.
struct UPoly {
  std::size_t var = 0;
  std::vector<MPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const MPoly& lc() const { return coeffs.back(); }
  void trim();
};

/// Throws VariableOutOfRange when p involves a variable after v.
UPoly as_univariate(const MPoly& p, std::size_t v);
/// Like as_univariate, but later variables are allowed inside coefficients.
UPoly collect_in(const MPoly& p, std::size_t v);
MPoly to_mpoly(const UPoly& u, std::size_t nvars);
UPoly derivative(const UPoly& u);

struct PseudoDivision {
  UPoly quotient;
  UPoly remainder;
  unsigned power = 0;
};

/// lc(d)^power * p = quotient * d + remainder, power = max(deg p - deg d + 1, 0).
PseudoDivision pseudo_divide(const UPoly& p, const UPoly& d);
MPoly prem(const MPoly& p, const MPoly& d, std::size_t var);
MPoly pquo(const MPoly& p, const MPoly& d, std::size_t var);

std::vector<Interval> eval_interval_coeffs(const UPoly& p, const Box& box);

}  // namespace triso
