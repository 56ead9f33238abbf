#pragma once

#include <string>
#include <vector>

#include "support.hpp"

namespace test {

inline TriangularSystem system_of(const std::vector<std::string>& polys,
                                  const std::vector<std::string>& vars = xyz()) {
  std::vector<MPoly> ps;
  for (const auto& p : polys) ps.push_back(parse_poly(p, vars));
  return TriangularSystem(std::move(ps));
}

inline TriangularSystem multi_branch() {
  return system_of({"x - 2", "(x + y - 3)^3*(y + 3)", "(y*z^2 + x*z + 1)^2*((x - y)^4*z + x - y)"});
}

inline TriangularSystem degree_drop() {
  return system_of({"(x + 1)*(x - 2)", "(x - y + 1)^2*(y - 5) + (y - 3)*x", "(x*y - 6)*z^2 + 2*z + 1"});
}

inline TriangularSystem fat_point() { return system_of({"x^4", "x^2*y + y^4", "z + z^2 - 7*x^3 - 8*x^2"}); }

inline const std::vector<std::string>& xy_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

inline TriangularSystem quartic_pair() {
  return system_of({"x^4 - 3*x^2 - x^3 + 2*x + 2",
                    "y^4 + x*y^3 + 3*y^2 - 6*x^2*y^2 + 4*x*y + 2*x*y^2 - 4*x^2*y + 4*x + 2"},
                   xy_vars());
}

inline TriangularSystem stacked_origin() {
  return system_of({"x^3 + 2*x^5 + 7*x^7", "y^3 + y^2 + x*y", "z^2 + x*z + x*y"});
}

}  // namespace test
