#include "triso/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "triso/errors.hpp"

namespace triso {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

int Interval::certain_sign() const {
  if (sign(lo) > 0) return 1;
  if (sign(hi) < 0) return -1;
  return 0;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Rational& c) {
  if (sign(c) >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

Interval interval_mul(const Interval& a, const Interval& b) {
  if (a.degenerate()) return b * a.lo;
  if (b.degenerate()) return a * b.lo;
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

Interval interval_pow(const Interval& a, unsigned k) {
  if (k == 0) return Interval::point(1);
  Rational lo_k = pow(a.lo, k);
  Rational hi_k = pow(a.hi, k);
  if (k % 2 == 1) return {lo_k, hi_k};
  // even power: non-monotone across zero
  if (sign(a.lo) >= 0) return {lo_k, hi_k};
  if (sign(a.hi) <= 0) return {hi_k, lo_k};
  return {Rational(0), std::max(lo_k, hi_k)};
}

Interval interval_hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

bool disjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

bool separated(const Interval& a, const Interval& b) {
  if (disjoint(a, b)) return true;
  if (a.degenerate() || b.degenerate()) return false;
  return a.hi == b.lo || b.hi == a.lo;
}

std::string to_string(const Interval& iv) {
  return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

Box Box::prefix(std::size_t n) const {
  return Box(std::vector<Interval>(coords_.begin(), coords_.begin() + static_cast<long>(n)));
}

bool Box::contains(const std::vector<Rational>& pt) const {
  if (pt.size() != coords_.size()) return false;
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (!coords_[i].contains(pt[i])) return false;
  }
  return true;
}

Rational Box::max_width() const {
  Rational w = 0;
  for (const auto& iv : coords_) w = std::max(w, iv.width());
  return w;
}

std::pair<Box, Box> box_bisect(const Box& b, std::size_t axis) {
  if (axis >= b.size()) throw std::out_of_range("box_bisect axis");
  const Interval& iv = b[axis];
  if (iv.degenerate()) throw DegenerateAxis();
  Rational mid = iv.midpoint();
  Box left = b;
  Box right = b;
  left[axis] = Interval(iv.lo, mid);
  right[axis] = Interval(mid, iv.hi);
  return {std::move(left), std::move(right)};
}

}  // namespace triso
