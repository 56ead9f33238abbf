#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "triso/algebraic_point.hpp"
#include "triso/interval.hpp"

namespace triso {

/// Least k >= 1 with d^k f_level / dx_level^k nonzero at the point, using
/// only differentiation and zero_test. `level` is 0-based. Throws NotARoot.
unsigned mult_by_derivatives(const TriangularSystem& t, AlgebraicPoint& pt, std::size_t level);

/// a + b * sqrt(c) for the system-wide non-square c > 0.
struct SurdValue {
  Rational a;
  Rational b;
  friend bool operator==(const SurdValue&, const SurdValue&) = default;
};

/// Sign of (a + b sqrt(c)) - x.
int compare(const SurdValue& v, const Rational& c, const Rational& x);
bool contains(const Interval& iv, const SurdValue& v, const Rational& c);

struct PlantedRoot {
  std::vector<SurdValue> coords;
  std::vector<unsigned> exponents;
  unsigned long multiplicity = 0;
};

struct PlantedSystem {
  TriangularSystem system;
  Rational surd = 2;
  std::vector<PlantedRoot> expected;
};

/// Deterministic in (nvars, max_deg, seed). Each f_i is a product of
/// (x_i - L)^e with L linear in earlier variables, optionally a
/// ((x_i - L)^2 - c)^e surd factor, a real-rootless (x_i - L)^2 + r and a
/// positive multiplier. Requires 1 <= nvars <= 3 and 2 <= max_deg <= 6.
PlantedSystem plant_system(std::size_t nvars, unsigned max_deg, std::uint64_t seed);

}  // namespace triso
