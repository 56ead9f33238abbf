#pragma once

#include <random>
#include <string>
#include <vector>

#include "triso/algebraic_point.hpp"
#include "triso/io.hpp"
#include "triso/polynomial.hpp"
#include "triso/qpoly.hpp"

namespace test {

using namespace triso;

inline const std::vector<std::string>& xyz() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

inline MPoly P(const std::string& s, const std::vector<std::string>& vars = xyz()) { return parse_poly(s, vars); }

inline QPoly Q(const std::string& s) { return QPoly::from_mpoly(parse_poly(s, {"x"}), 0); }

inline Rational R(const std::string& s) { return parse_rational(s); }

inline Interval I(const std::string& lo, const std::string& hi) { return Interval(R(lo), R(hi)); }

/// Point with the given defining polynomials (in x, y, z) and box.
inline AlgebraicPoint point(const std::vector<std::string>& defs, const std::vector<Interval>& box,
                            std::size_t nvars = 3) {
  std::vector<std::string> names(xyz().begin(), xyz().begin() + static_cast<long>(nvars));
  std::vector<MPoly> polys;
  for (const auto& d : defs) polys.push_back(parse_poly(d, names));
  return AlgebraicPoint(std::move(polys), Box(box));
}

struct Random {
  std::mt19937_64 rng;
  explicit Random(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational rational(int num = 20, int den = 9) { return make_rational(uniform(-num, num), uniform(1, den)); }

  Interval interval() {
    Rational a = rational();
    Rational b = rational();
    return a <= b ? Interval(a, b) : Interval(b, a);
  }

  MPoly poly(std::size_t nvars, unsigned max_deg, int terms) {
    MPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
      Exponents e(nvars, 0);
      unsigned budget = static_cast<unsigned>(uniform(0, static_cast<int>(max_deg)));
      for (std::size_t k = 0; k < nvars && budget > 0; ++k) {
        unsigned ek = static_cast<unsigned>(uniform(0, static_cast<int>(budget)));
        e[k] = ek;
        budget -= ek;
      }
      p.add_term(e, rational(9, 4));
    }
    return p;
  }
};

}  // namespace test
