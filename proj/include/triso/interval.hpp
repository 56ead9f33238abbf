#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "triso/rational.hpp"

namespace triso {

/// Closed interval [lo, hi] with exact rational endpoints; lo == hi encodes
/// an exact value.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lo_, Rational hi_);
  static Interval point(const Rational& x) { return Interval(x, x); }

  bool degenerate() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
  bool subset_of(const Interval& other) const { return other.lo <= lo && hi <= other.hi; }
  /// Sign shared by every point, or 0 when the interval contains zero.
  int certain_sign() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Rational& c);

Interval interval_mul(const Interval& a, const Interval& b);
Interval interval_pow(const Interval& a, unsigned k);
Interval interval_hull(const Interval& a, const Interval& b);
bool disjoint(const Interval& a, const Interval& b);
/// Interiors disjoint or overlap only at shared endpoints that are not
/// interior to either interval; degenerate intervals must not lie inside.
bool separated(const Interval& a, const Interval& b);

std::string to_string(const Interval& iv);

/// Product of intervals, one per variable.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const Interval& operator[](std::size_t i) const { return coords_[i]; }
  Interval& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Interval>& coords() const { return coords_; }
  void push_back(Interval iv) { coords_.push_back(std::move(iv)); }
  Box prefix(std::size_t n) const;
  bool contains(const std::vector<Rational>& pt) const;
  Rational max_width() const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> coords_;
};

/// Splits coordinate `axis` at its midpoint. Throws DegenerateAxis.
std::pair<Box, Box> box_bisect(const Box& b, std::size_t axis);

}  // namespace triso
