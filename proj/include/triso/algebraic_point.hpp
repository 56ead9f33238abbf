#pragma once

#include <cstddef>
#include <vector>

#include "triso/interval.hpp"
#include "triso/polynomial.hpp"

namespace triso {

/// f1(x1), f2(x1, x2), ..., fn(x1..xn): each fi free of later variables and
/// of positive degree in xi. Throws NotTriangular on construction.
class TriangularSystem {
 public:
  TriangularSystem() = default;
  explicit TriangularSystem(std::vector<MPoly> polys);

  std::size_t size() const { return polys_.size(); }
  std::size_t nvars() const { return polys_.empty() ? 0 : polys_.front().nvars(); }
  const MPoly& operator[](std::size_t i) const { return polys_[i]; }
  const std::vector<MPoly>& polys() const { return polys_; }

 private:
  std::vector<MPoly> polys_;
};

/// A real algebraic point xi = (xi_1..xi_level): defining polynomials
/// defs[k] in x1..x(k+1) and a box isolating xi.
///
/// Invariants: for each k the leading coefficient of defs[k] in x(k+1) is
/// nonzero at xi_1..xi_k, defs[k](xi_1..xi_k, .) is squarefree with exactly
/// one root in box[k], and a nondegenerate box[k] has defs[k] nonzero with
/// opposite signs at its endpoints. A degenerate box[k] is the exact value.
///
/// Queries take the point by reference: they may shrink the box or replace a
/// defining polynomial by a factor that still defines xi, never changing xi.
class AlgebraicPoint {
 public:
  /// The level-0 point in an ambient space of `nvars` variables.
  explicit AlgebraicPoint(std::size_t nvars = 0);
  AlgebraicPoint(std::vector<MPoly> defs, Box box);

  std::size_t nvars() const { return nvars_; }
  std::size_t level() const { return defs_.size(); }
  const std::vector<MPoly>& defs() const { return defs_; }
  const Box& box() const { return box_; }

  AlgebraicPoint prefix(std::size_t level) const;
  AlgebraicPoint extended(MPoly def, Interval iv, int lo_sign = 0) const;

  /// True when every coordinate below `level` is an exact rational.
  bool rational_below(std::size_t level) const;
  bool is_rational() const { return rational_below(level()); }
  /// g with every exact coordinate below `level` substituted.
  MPoly substitute_exact(const MPoly& g, std::size_t level) const;
  /// Pseudo-reduces g by defs[k] in x(k+1) for k < level, top-down. The
  /// result vanishes at xi exactly when g does.
  MPoly reduce(const MPoly& g, std::size_t level) const;

  // Engine hooks; prefer the free functions below.
  void set_interval(std::size_t axis, Interval iv);
  void replace_def(std::size_t axis, MPoly def);
  int cached_lo_sign(std::size_t axis) const { return lo_sign_[axis]; }
  void cache_lo_sign(std::size_t axis, int s) { lo_sign_[axis] = s; }

 private:
  std::size_t nvars_ = 0;
  std::vector<MPoly> defs_;
  Box box_;
  std::vector<int> lo_sign_;  // sign of defs[k] at box[k].lo, 0 if unknown
};

/// Same point with box[axis] halved (or collapsed to the exact value).
AlgebraicPoint refine(const AlgebraicPoint& pt, std::size_t axis);

/// g(xi) == 0, decided exactly; g may only involve x1..x(level).
bool zero_test(AlgebraicPoint& pt, const MPoly& g);
/// Exact sign of g(xi).
int sign_at(AlgebraicPoint& pt, const MPoly& g);

// Versions acting on the prefix of the given level.
bool zero_test(AlgebraicPoint& pt, std::size_t level, const MPoly& g);
int sign_at(AlgebraicPoint& pt, std::size_t level, const MPoly& g);
void refine_axis(AlgebraicPoint& pt, std::size_t axis);
/// Halves every nondegenerate interval below `level`.
void refine_all(AlgebraicPoint& pt, std::size_t level);

}  // namespace triso
