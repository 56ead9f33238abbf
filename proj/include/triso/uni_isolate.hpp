#pragma once

#include <cstddef>
#include <vector>

#include "triso/interval.hpp"
#include "triso/qpoly.hpp"

namespace triso {

struct SquarefreeFactor {
  QPoly factor;  // primitive, positive leading coefficient, degree >= 1
  unsigned exponent = 0;
};

/// f = unit * prod factor^exponent, factors squarefree and pairwise coprime.
struct SquarefreeFactorization {
  Rational unit;
  std::vector<SquarefreeFactor> factors;
};

struct RootWithMultiplicity {
  Interval interval;
  unsigned multiplicity = 0;
  std::size_t factor_index = 0;
};

struct UniIsolation {
  SquarefreeFactorization factorization;
  std::vector<RootWithMultiplicity> roots;  // sorted, pairwise disjoint
};

/// Yun's algorithm. Throws ZeroPolynomial.
SquarefreeFactorization yun_squarefree(const QPoly& f);

/// Descartes-rule bisection over the Cauchy bound. Returns sorted,
/// pairwise-disjoint intervals, one per real root; rational roots come back
/// as degenerate intervals and nondegenerate endpoints are never roots.
/// Throws NotSquarefree.
std::vector<Interval> isolate_squarefree(const QPoly& f);

/// Bisects until hi - lo <= width. Degenerate intervals are returned
/// unchanged. Throws NoSignChange.
Interval refine_interval(const QPoly& f, const Interval& iv, const Rational& width);

/// Real roots with multiplicities. Throws ZeroPolynomial.
UniIsolation uni_isol(const QPoly& f);

/// Number of sign variations, zeros skipped.
int sign_variations(const std::vector<Rational>& coeffs);

}  // namespace triso
