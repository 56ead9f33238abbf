#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "triso/polynomial.hpp"
#include "triso/rational.hpp"

namespace triso {

/// Dense univariate polynomial over Q; coeffs()[k] multiplies x^k.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  /// Requires every coefficient of u to be a constant.
  static QPoly from_upoly(const UPoly& u);
  /// Requires p to involve at most `var`.
  static QPoly from_mpoly(const MPoly& p, std::size_t var);
  MPoly to_mpoly(std::size_t nvars, std::size_t var) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lc() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign(eval(x)); }
  QPoly derivative() const;
  QPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  QPoly primitive() const;
  /// p(-x).
  QPoly reflect() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const Rational& c);
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = q b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly squarefree_part(const QPoly& f);
/// (x - r) for a rational r.
QPoly linear_factor(const Rational& r);

}  // namespace triso
