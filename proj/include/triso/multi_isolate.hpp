#pragma once

#include <cstddef>
#include <vector>

#include "triso/algebraic_point.hpp"
#include "triso/interval.hpp"
#include "triso/polynomial.hpp"

namespace triso {

struct IntervalSolution {
  Box box;
  unsigned long multiplicity = 0;
  std::size_t branch_id = 0;
  std::vector<unsigned> exponents;  // per-level multiplicities, product = multiplicity
};

/// A triangular set that is regular and squarefree at each attached solution.
struct DecompositionBranch {
  TriangularSystem system;
  std::vector<std::size_t> solutions;  // indices into the solution list
};

struct MultiIsolation {
  std::vector<IntervalSolution> solutions;  // sorted by lower endpoints
  std::vector<DecompositionBranch> branches;
};

/// Throws NotTriangular with the offending index.
TriangularSystem check_triangular(std::vector<MPoly> polys);

inline Rational default_precision() { return Rational(1, 64); }

/// Real solutions with multiplicities. `threads` > 1 processes the branches
/// of each level concurrently; the output does not depend on it.
/// Throws PositiveDimension.
MultiIsolation multi_isolate(const TriangularSystem& t, const Rational& precision = default_precision(),
                             unsigned threads = 0);

/// The point described by a branch and a box.
AlgebraicPoint branch_point(const DecompositionBranch& branch, const Box& box);

/// Certifies the box against the branch and the original equations.
bool verify_solution(const TriangularSystem& t, const IntervalSolution& s,
                     const DecompositionBranch& branch);

}  // namespace triso
