#include "triso/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "triso/errors.hpp"

namespace triso {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MPoly MPoly::monomial(Exponents exps, const Rational& c) {
  MPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

int MPoly::top_var() const {
  int top = -1;
  for (const auto& [e, c] : terms_) {
    for (int v = static_cast<int>(e.size()) - 1; v > top; --v) {
      if (e[v] != 0) {
        top = v;
        break;
      }
    }
  }
  return top;
}

unsigned MPoly::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

void MPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
  if (sign(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (sign(it->second) == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (sign(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, k] : terms_) k *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(std::max(a.nvars_, b.nvars_));
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(out.nvars_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::substitute(std::size_t var, const Rational& value) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) {
      out.add_term(e, c);
      continue;
    }
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c * triso::pow(value, e[var]));
  }
  return out;
}

MPoly MPoly::scale_var(std::size_t var, const Rational& c) const {
  MPoly out(nvars_);
  for (const auto& [e, k] : terms_) out.add_term(e, k * triso::pow(c, e[var]));
  return out;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw std::out_of_range("evaluation point too short");
      t *= triso::pow(point[i], e[i]);
    }
    total += t;
  }
  return total;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

Rational MPoly::content() const {
  if (terms_.empty()) return 1;
  Integer g = 0;
  Integer l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(abs(g), l);
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (sign(leading_coeff()) < 0) c = -c;
  MPoly out = *this;
  Rational inv = 1 / c;
  out *= inv;
  return out;
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw DivisionByZeroPoly();
  std::size_t n = std::max(a.nvars(), b.nvars());
  MPoly q(n);
  if (a.is_zero()) return q;
  if (b.is_constant()) {
    MPoly out = a;
    out *= 1 / b.constant_value();
    return out;
  }
  MPoly r = a;
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coeff();
  Exponents e(n);
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    for (std::size_t i = 0; i < n; ++i) {
      if (lr[i] < lb[i]) throw InexactDivision();
      e[i] = lr[i] - lb[i];
    }
    MPoly t = MPoly::monomial(e, r.leading_coeff() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

Interval eval_interval_impl(const MPoly& p, const Box& box) {
  if (p.is_constant()) return Interval::point(p.constant_value());
  int v = p.top_var();
  if (static_cast<std::size_t>(v) >= box.size()) throw std::out_of_range("box too short for polynomial");
  UPoly u = collect_in(p, static_cast<std::size_t>(v));
  const Interval& x = box[static_cast<std::size_t>(v)];
  Interval acc = eval_interval_impl(u.coeffs.back(), box);
  unsigned gap = 0;
  for (int k = u.degree() - 1; k >= 0; --k) {
    ++gap;
    const MPoly& c = u.coeffs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    acc = interval_mul(acc, interval_pow(x, gap)) + eval_interval_impl(c, box);
    gap = 0;
  }
  if (gap > 0) acc = interval_mul(acc, interval_pow(x, gap));
  return acc;
}

}  // namespace

Interval eval_interval(const MPoly& p, const Box& box) { return eval_interval_impl(p, box); }

void UPoly::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

UPoly as_univariate(const MPoly& p, std::size_t v) {
  if (!p.is_zero() && p.top_var() > static_cast<int>(v)) {
    throw VariableOutOfRange("polynomial involves a variable after the main variable");
  }
  return collect_in(p, v);
}

UPoly collect_in(const MPoly& p, std::size_t v) {
  UPoly u;
  u.var = v;
  if (p.is_zero()) return u;
  if (v >= p.nvars()) throw VariableOutOfRange("main variable index out of range");
  u.coeffs.assign(p.degree(v) + 1, MPoly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[v] = 0;
    u.coeffs[e[v]].add_term(f, c);
  }
  return u;
}

MPoly to_mpoly(const UPoly& u, std::size_t nvars) {
  MPoly out(nvars);
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) {
    for (const auto& [e, c] : u.coeffs[k].terms()) {
      Exponents f = e;
      f[u.var] += static_cast<unsigned>(k);
      out.add_term(f, c);
    }
  }
  return out;
}

UPoly derivative(const UPoly& u) {
  UPoly d;
  d.var = u.var;
  for (std::size_t k = 1; k < u.coeffs.size(); ++k) {
    d.coeffs.push_back(u.coeffs[k] * Rational(static_cast<long>(k)));
  }
  d.trim();
  return d;
}

PseudoDivision pseudo_divide(const UPoly& p, const UPoly& d) {
  if (d.is_zero()) throw DivisionByZeroPoly();
  PseudoDivision out;
  out.quotient.var = p.var;
  out.remainder = p;
  out.remainder.var = p.var;
  int dp = p.degree();
  int dd = d.degree();
  if (dp < dd) return out;
  std::size_t nvars = d.lc().nvars();
  out.power = static_cast<unsigned>(dp - dd + 1);
  const MPoly& lcd = d.lc();
  std::vector<MPoly> q(static_cast<std::size_t>(dp - dd + 1), MPoly(nvars));
  UPoly& r = out.remainder;
  unsigned steps = 0;
  while (!r.is_zero() && r.degree() >= dd) {
    int shift = r.degree() - dd;
    MPoly lr = r.lc();
    for (auto& c : q) c = c * lcd;
    q[static_cast<std::size_t>(shift)] += lr;
    for (auto& c : r.coeffs) c = c * lcd;
    for (int k = 0; k <= dd; ++k) {
      r.coeffs[static_cast<std::size_t>(k + shift)] -= lr * d.coeffs[static_cast<std::size_t>(k)];
    }
    r.trim();
    ++steps;
  }
  if (steps < out.power) {
    MPoly scale = lcd.pow(out.power - steps);
    for (auto& c : q) c = c * scale;
    for (auto& c : r.coeffs) c = c * scale;
  }
  out.quotient.coeffs = std::move(q);
  out.quotient.trim();
  r.trim();
  return out;
}

MPoly prem(const MPoly& p, const MPoly& d, std::size_t var) {
  return to_mpoly(pseudo_divide(collect_in(p, var), collect_in(d, var)).remainder,
                  std::max(p.nvars(), d.nvars()));
}

MPoly pquo(const MPoly& p, const MPoly& d, std::size_t var) {
  return to_mpoly(pseudo_divide(collect_in(p, var), collect_in(d, var)).quotient,
                  std::max(p.nvars(), d.nvars()));
}

std::vector<Interval> eval_interval_coeffs(const UPoly& p, const Box& box) {
  std::vector<Interval> out;
  out.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) out.push_back(eval_interval(c, box));
  return out;
}

}  // namespace triso
