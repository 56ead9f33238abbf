#pragma once

#include <cstddef>
#include <vector>

#include "triso/algebraic_point.hpp"
#include "triso/polynomial.hpp"
#include "triso/qpoly.hpp"

namespace triso {

/// Subresultants S_j and principal coefficients R_j, indexed by j = 0..mu
/// where mu = deg(p2). R_j is the coefficient of x^j in S_j (zero for
/// defective indices).
struct SubresultantChain {
  std::size_t main_var = 0;
  std::vector<MPoly> chain;
  std::vector<MPoly> principal;
};

/// Requires deg(p1, v) >= deg(p2, v), both nonzero. Throws ZeroPolynomial.
SubresultantChain subres_chain(const MPoly& p1, const MPoly& p2, std::size_t v);

/// p as a polynomial in x(level+1) whose leading coefficient is certified
/// nonzero at the point. Throws IdenticallyZeroAtPoint.
UPoly normalize_degree(const MPoly& p, AlgebraicPoint& pt, std::size_t level);
inline UPoly normalize_degree(const MPoly& p, AlgebraicPoint& pt) {
  return normalize_degree(p, pt, pt.level());
}

/// A polynomial whose specialization at the point is a nonzero multiple of
/// gcd(p1(xi, x), p2(xi, x)) in x = x(level+1); its leading coefficient is
/// certified nonzero at the point.
MPoly alg_gcd(const MPoly& p1, const MPoly& p2, AlgebraicPoint& pt, std::size_t level);
inline MPoly alg_gcd(const MPoly& p1, const MPoly& p2, AlgebraicPoint& pt) {
  return alg_gcd(p1, p2, pt, pt.level());
}

struct AlgSqfFactor {
  MPoly factor;
  unsigned exponent = 0;
};

struct AlgSqfFactorization {
  std::vector<AlgSqfFactor> factors;
};

/// Squarefree factorization of p(xi, x) in x = x(level+1). A polynomial that
/// is already squarefree at the point with no degree drop comes back as the
/// single factor p itself; otherwise exact coordinates are substituted.
/// Throws IdenticallyZeroAtPoint.
AlgSqfFactorization alg_sqfree(const MPoly& p, AlgebraicPoint& pt);

enum class HalfLine { nonneg, nonpos };

/// low(x) <= g(xi, x) <= up(x) for every x on the half-line.
struct BoundingPair {
  QPoly low;
  QPoly up;
  HalfLine halfline = HalfLine::nonneg;
};

BoundingPair bounding_polys(const MPoly& g, const AlgebraicPoint& pt, HalfLine halfline);

/// Isolating intervals, sorted and strictly disjoint, for the real roots of
/// g(xi, x), which must be squarefree. Nondegenerate endpoints carry nonzero
/// opposite signs of g(xi, .).
std::vector<Interval> alg_isolate(const MPoly& g, AlgebraicPoint& pt);

}  // namespace triso
