// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "triso/errors.hpp"
#include "triso/interval.hpp"
#include "triso/io.hpp"
#include "triso/multi_isolate.hpp"
#include "triso/oracle.hpp"
#include "triso/polynomial.hpp"

using namespace triso;

namespace {

// Collects the reasons a criterion failed.
struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXY{"x", "y"};

MPoly P(const std::string& s, const std::vector<std::string>& vars = kXYZ) { return parse_poly(s, vars); }
Rational R(const std::string& s) { return parse_rational(s); }

TriangularSystem system_of(const std::vector<std::string>& polys, const std::vector<std::string>& vars = kXYZ) {
  std::vector<MPoly> ps;
  for (const auto& p : polys) ps.push_back(P(p, vars));
  return TriangularSystem(std::move(ps));
}

bool proportional(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_coeff() == b * a.leading_coeff();
}

MPoly specialize(MPoly p, const std::vector<Rational>& prefix) {
  for (std::size_t k = 0; k < prefix.size(); ++k) p = p.substitute(k, prefix[k]);
  return p;
}

bool pairwise_separated(const MultiIsolation& m) {
  for (std::size_t i = 0; i < m.solutions.size(); ++i) {
    for (std::size_t j = i + 1; j < m.solutions.size(); ++j) {
      bool apart = false;
      for (std::size_t k = 0; k < m.solutions[i].box.size() && !apart; ++k) {
        apart = disjoint(m.solutions[i].box[k], m.solutions[j].box[k]);
      }
      if (!apart) return false;
    }
  }
  return true;
}

bool all_verified(const TriangularSystem& t, const MultiIsolation& m) {
  for (const auto& s : m.solutions) {
    if (!verify_solution(t, s, m.branches[s.branch_id])) return false;
  }
  return true;
}

std::vector<unsigned long> sorted_mults(const MultiIsolation& m) {
  std::vector<unsigned long> out;
  for (const auto& s : m.solutions) out.push_back(s.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void multi_branch(Check& c) {
  auto t = system_of({"x - 2", "(x + y - 3)^3*(y + 3)", "(y*z^2 + x*z + 1)^2*((x - y)^4*z + x - y)"});
  auto m = multi_isolate(t);
  c.expect(m.solutions.size() == 4, "expected 4 solutions");
  c.expect(sorted_mults(m) == std::vector<unsigned long>{1, 2, 2, 15}, "multiplicities differ from {1,2,2,15}");
  struct Root {
    const char* y;
    const char* z;
    unsigned long mult;
  };
  for (const Root& r : {Root{"-3", "-1/125", 1}, Root{"-3", "1", 2}, Root{"-3", "-1/3", 2}, Root{"1", "-1", 15}}) {
    int hits = 0;
    for (const auto& s : m.solutions) {
      if (s.box.contains({2, R(r.y), R(r.z)})) {
        ++hits;
        c.expect(s.multiplicity == r.mult, std::string("wrong multiplicity at z=") + r.z);
      }
    }
    c.expect(hits == 1, std::string("no unique box around y=") + r.y + ", z=" + r.z);
  }
  struct Branch {
    std::vector<Rational> at;
    std::vector<std::string> polys;
  };
  std::vector<Branch> want{{{2, -3}, {"x - 2", "y + 3", "125*z + 1"}},
                           {{2, -3}, {"x - 2", "y + 3", "3*z^2 - 2*z - 1"}},
                           {{2, 1}, {"x - 2", "y - 1", "z + 1"}}};
  c.expect(m.branches.size() == 3, "expected 3 branches");
  for (const auto& w : want) {
    bool found = false;
    for (const auto& b : m.branches) {
      bool same = true;
      for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Rational> prefix(w.at.begin(), w.at.begin() + static_cast<long>(k));
        same = same && proportional(specialize(b.system[k], prefix), specialize(P(w.polys[k]), prefix));
      }
      found = found || same;
    }
    c.expect(found, "missing branch with third polynomial " + w.polys[2]);
  }
  c.expect(pairwise_separated(m) && all_verified(t, m), "boxes not separated or not certified");
}

void degree_drop(Check& c) {
  MPoly expanded = P("x^2*y - 5*x^2 - 2*x*y^2 + 13*x*y - 13*x + y^3 - 7*y^2 + 11*y - 5");
  auto t = system_of({"(x + 1)*(x - 2)", "(x - y + 1)^2*(y - 5) + (y - 3)*x", "(x*y - 6)*z^2 + 2*z + 1"});
  auto m = multi_isolate(t);
  c.expect(m.solutions.size() == 7, "expected 7 solutions");
  for (const auto& s : m.solutions) c.expect(s.multiplicity == 1, "multiplicity other than 1");
  c.expect(m.branches.size() == 2, "expected 2 branches");
  bool x2 = false;
  for (const auto& b : m.branches) {
    c.expect(b.system[1] == expanded, "second branch polynomial is not f verbatim");
    if (specialize(b.system[0], {2}).is_zero()) {
      x2 = proportional(specialize(b.system[2], {2, 3}), P("2*z + 1"));
    }
  }
  c.expect(x2, "x=2 branch does not specialize to 2z+1");
  c.expect(pairwise_separated(m) && all_verified(t, m), "boxes not separated or not certified");
}

void fat_point(Check& c) {
  auto t = system_of({"x^4", "x^2*y + y^4", "z + z^2 - 7*x^3 - 8*x^2"});
  auto m = multi_isolate(t);
  c.expect(m.solutions.size() == 2, "expected 2 solutions");
  for (const auto& s : m.solutions) c.expect(s.multiplicity == 16, "multiplicity other than 16");
  for (const auto& root : {std::vector<Rational>{0, 0, -1}, std::vector<Rational>{0, 0, 0}}) {
    int hits = 0;
    for (const auto& s : m.solutions) hits += s.box.contains(root) ? 1 : 0;
    c.expect(hits == 1, "root not boxed exactly once");
  }
  bool found = false;
  for (const auto& b : m.branches) {
    bool same = true;
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<Rational> prefix(k, Rational(0));
      const char* want[] = {"x", "y", "z + z^2 - 7*x^3 - 8*x^2"};
      same = same && proportional(specialize(b.system[k], prefix), specialize(P(want[k]), prefix));
    }
    found = found || same;
  }
  c.expect(found, "decomposition does not specialize to [x, y, z + z^2 - 7x^3 - 8x^2]");
}

void quartic_pair(Check& c) {
  auto t = system_of({"x^4 - 3*x^2 - x^3 + 2*x + 2",
                      "y^4 + x*y^3 + 3*y^2 - 6*x^2*y^2 + 4*x*y + 2*x*y^2 - 4*x^2*y + 4*x + 2"},
                     kXY);
  auto m = multi_isolate(t);
  c.expect(m.solutions.size() == 12, "expected 12 solutions");
  int doubles = 0;
  int singles = 0;
  for (const auto& s : m.solutions) {
    doubles += s.multiplicity == 2 ? 1 : 0;
    singles += s.multiplicity == 1 ? 1 : 0;
  }
  c.expect(doubles == 2 && singles == 10, "expected two double and ten simple roots");
  c.expect(m.branches.size() == 3, "expected 3 branches");
  MPoly golden = P("x^2 - x - 1", kXY);
  MPoly sqrt2 = P("x^2 - 2", kXY);
  MPoly h3 = P("-104*x*y + 335*y - 335*x + 208", kXY);
  int n_golden = 0;
  int n_sqrt2 = 0;
  bool h3_found = false;
  for (const auto& b : m.branches) {
    n_golden += proportional(b.system[0], golden) ? 1 : 0;
    n_sqrt2 += proportional(b.system[0], sqrt2) ? 1 : 0;
    if (b.system[1].degree(1) == 1) h3_found = h3_found || proportional(b.system[1], h3);
  }
  c.expect(n_golden == 1 && n_sqrt2 == 2, "first polynomials differ from {x^2-x-1, x^2-2, x^2-2}");
  c.expect(h3_found, "no degree-1 branch factor proportional to h3");
  c.expect(pairwise_separated(m) && all_verified(t, m), "boxes not separated or not certified");
}

void stacked_origin(Check& c) {
  auto m = multi_isolate(system_of({"x^3 + 2*x^5 + 7*x^7", "y^3 + y^2 + x*y", "z^2 + x*z + x*y"}));
  c.expect(m.solutions.size() == 2, "expected 2 solutions");
  struct Root {
    std::vector<Rational> at;
    unsigned long mult;
  };
  for (const Root& r : {Root{{0, 0, 0}, 12}, Root{{0, -1, 0}, 6}}) {
    int hits = 0;
    for (const auto& s : m.solutions) {
      if (s.box.contains(r.at)) {
        ++hits;
        c.expect(s.multiplicity == r.mult, "wrong multiplicity");
      }
    }
    c.expect(hits == 1, "root not boxed exactly once");
  }
}

void planted_suite(Check& c) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::string tag = "seed " + std::to_string(seed) + ": ";
    PlantedSystem ps = plant_system(1 + seed % 3, 2 + static_cast<unsigned>(seed % 5), seed);
    const TriangularSystem& t = ps.system;
    MultiIsolation m;
    try {
      m = multi_isolate(t);
    } catch (const std::exception& e) {
      c.expect(false, tag + e.what());
      continue;
    }
    c.expect(m.solutions.size() == ps.expected.size(), tag + "solution count");
    for (const auto& r : ps.expected) {
      int hits = 0;
      for (const auto& s : m.solutions) {
        bool inside = true;
        for (std::size_t k = 0; k < r.coords.size(); ++k) inside = inside && contains(s.box[k], r.coords[k], ps.surd);
        if (inside) {
          ++hits;
          c.expect(s.multiplicity == r.multiplicity && s.exponents == r.exponents, tag + "multiplicity");
        }
      }
      c.expect(hits == 1, tag + "planted root not boxed exactly once");
    }
    for (const auto& s : m.solutions) {
      AlgebraicPoint pt = branch_point(m.branches[s.branch_id], s.box);
      for (std::size_t k = 0; k < t.size(); ++k) {
        c.expect(mult_by_derivatives(t, pt, k) == s.exponents[k], tag + "derivative oracle disagrees");
      }
    }
    c.expect(pairwise_separated(m), tag + "boxes overlap");
    c.expect(all_verified(t, m), tag + "certificate failed");
  }
}

// Runs the CLI on {x^2, x*y + x} and checks exit code and stderr.
void positive_dimension(Check& c) {
  try {
    multi_isolate(system_of({"x^2", "x*y + x"}, kXY));
    c.expect(false, "library did not throw PositiveDimension");
  } catch (const PositiveDimension& e) {
    c.expect(std::string(e.what()) == "The dimension of the system is positive.", "library message differs");
  }
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("triso_acc_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  fs::path input = dir / "posdim.tri";
  fs::path err = dir / "stderr.txt";
  std::ofstream(input) << "vars: x, y\nf1 = x^2\nf2 = x*y + x\n";
  std::string cmd = std::string("\"") + TRISO_CLI_PATH + "\" isolate \"" + input.string() + "\" > /dev/null 2> \"" +
                    err.string() + "\"";
  int status = std::system(cmd.c_str());
  c.expect(WIFEXITED(status) && WEXITSTATUS(status) == 2, "CLI exit code is not 2");
  std::ifstream in(err);
  std::string line;
  std::getline(in, line);
  c.expect(line == "The dimension of the system is positive.", "CLI message differs: " + line);
  fs::remove_all(dir);
}

struct Gen {
  std::mt19937_64 rng{2024};
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rational rational() { return make_rational(uniform(-30, 30), uniform(1, 12)); }
  Interval interval() {
    Rational a = rational();
    Rational b = rational();
    return a <= b ? Interval(a, b) : Interval(b, a);
  }
  Rational inside(const Interval& iv) { return iv.lo + iv.width() * make_rational(uniform(0, 16), 16); }
  MPoly poly(unsigned max_deg, int terms) {
    MPoly p(3);
    for (int t = 0; t < terms; ++t) {
      Exponents e(3, 0);
      for (auto& ek : e) ek = static_cast<unsigned>(uniform(0, static_cast<int>(max_deg)));
      p.add_term(e, rational());
    }
    return p;
  }
};

void invariants(Check& c) {
  Gen g;
  for (int t = 0; t < 1000; ++t) {
    Interval a = g.interval();
    Interval b = g.interval();
    Rational x = g.inside(a);
    Rational y = g.inside(b);
    unsigned k = static_cast<unsigned>(g.uniform(0, 6));
    bool ok = (a + b).contains(x + y) && (a - b).contains(x - y) && interval_mul(a, b).contains(x * y) &&
              interval_pow(a, k).contains(Rational(pow(x, k)));
    MPoly p = g.poly(3, g.uniform(1, 5));
    Box box({g.interval(), g.interval(), g.interval()});
    std::vector<Rational> pt{g.inside(box[0]), g.inside(box[1]), g.inside(box[2])};
    ok = ok && eval_interval(p, box).contains(p.eval(pt));
    c.expect(ok, "interval soundness case " + std::to_string(t));
  }
  for (int t = 0; t < 1000; ++t) {
    MPoly p = g.poly(4, g.uniform(1, 6));
    MPoly d = g.poly(3, g.uniform(1, 4));
    std::size_t v = static_cast<std::size_t>(g.uniform(0, 2));
    if (d.degree(v) == 0) d += MPoly::variable(3, v);
    UPoly up = collect_in(p, v);
    UPoly ud = collect_in(d, v);
    PseudoDivision pd = pseudo_divide(up, ud);
    bool ok = ud.lc().pow(pd.power) * p == to_mpoly(pd.quotient, 3) * d + to_mpoly(pd.remainder, 3) &&
              pd.remainder.degree() < ud.degree();
    c.expect(ok, "pseudo-division case " + std::to_string(t));
  }
  for (int t = 0; t < 1000; ++t) {
    MPoly p = g.poly(4, g.uniform(0, 7));
    std::string text = render(p, kXYZ);
    c.expect(parse_poly(text, kXYZ) == p, "round trip failed on " + text);
  }
}

struct Criterion {
  int id;
  std::string name;
  double limit;  // seconds, 0 for none
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "multi-branch fixture multiplicities, boxes and branches", 60, multi_branch},
      {2, "degree-drop fixture seven simple roots and verbatim f", 60, degree_drop},
      {3, "fat-point fixture two roots of multiplicity 16", 10, fat_point},
      {4, "quartic-pair fixture twelve roots and h3 branch", 120, quartic_pair},
      {5, "stacked-origin fixture multiplicities 12 and 6", 0, stacked_origin},
      {6, "200 planted systems", 600, planted_suite},
      {7, "positive dimension exit code and message", 0, positive_dimension},
      {8, "interval, pseudo-division and round-trip invariants", 0, invariants},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = seconds_since(start);
    if (cr.limit > 0 && secs > cr.limit) c.expect(false, "exceeded " + std::to_string(cr.limit) + " s");
    bool ok = c.problems.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs);
    for (std::size_t i = 0; i < c.problems.size() && i < 10; ++i) std::printf("    %s\n", c.problems[i].c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
