#include "triso/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "triso/errors.hpp"

namespace triso {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::from_upoly(const UPoly& u) {
  std::vector<Rational> c;
  c.reserve(u.coeffs.size());
  for (const auto& m : u.coeffs) {
    if (!m.is_constant()) throw std::invalid_argument("coefficient is not a rational constant");
    c.push_back(m.constant_value());
  }
  return QPoly(std::move(c));
}

QPoly QPoly::from_mpoly(const MPoly& p, std::size_t var) {
  return from_upoly(as_univariate(p, var));
}

MPoly QPoly::to_mpoly(std::size_t nvars, std::size_t var) const {
  MPoly out(nvars);
  Exponents e(nvars, 0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    e[var] = static_cast<unsigned>(k);
    out.add_term(e, c_[k]);
  }
  return out;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / lc());
}

QPoly QPoly::primitive() const {
  if (is_zero()) return *this;
  Integer g = 0;
  Integer l = 1;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale = make_rational(l, g);
  if (sign(lc()) < 0) scale = -scale;
  return *this * scale;
}

QPoly QPoly::reflect() const {
  QPoly out = *this;
  for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + b * Rational(-1); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const Rational& s) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZeroPoly();
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const auto& bc = b.coeffs();
  Rational inv = 1 / b.lc();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational t = r[static_cast<std::size_t>(k) + bc.size() - 1] * inv;
    q[static_cast<std::size_t>(k)] = t;
    if (sign(t) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= t * bc[j];
  }
  r.resize(bc.size() - 1);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a.primitive();
  QPoly y = b.primitive();
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly squarefree_part(const QPoly& f) {
  if (f.degree() <= 0) return f;
  QPoly g = gcd(f, f.derivative());
  return divmod(f, g).first.primitive();
}

QPoly linear_factor(const Rational& r) { return QPoly({-r, Rational(1)}); }

}  // namespace triso
