#include "triso/oracle.hpp"

#include <random>
#include <stdexcept>

#include "triso/errors.hpp"

namespace triso {

unsigned mult_by_derivatives(const TriangularSystem& t, AlgebraicPoint& pt, std::size_t level) {
  const MPoly& f = t[level];
  if (!zero_test(pt, level + 1, f)) throw NotARoot();
  MPoly d = f;
  for (unsigned k = 1;; ++k) {
    d = d.derivative(level);
    if (!zero_test(pt, level + 1, d)) return k;
  }
}

int compare(const SurdValue& v, const Rational& c, const Rational& x) {
  Rational u = v.a - x;
  int su = sign(u);
  int sb = sign(v.b);
  if (sb == 0) return su;
  if (su == 0 || su == sb) return sb;
  return u * u > v.b * v.b * c ? su : sb;
}

bool contains(const Interval& iv, const SurdValue& v, const Rational& c) {
  return compare(v, c, iv.lo) >= 0 && compare(v, c, iv.hi) <= 0;
}

namespace {

struct Linear {
  Rational c0;
  std::vector<Rational> coef;  // one per earlier variable
};

class Planter {
 public:
  Planter(std::size_t nvars, std::uint64_t seed) : n_(nvars), rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return uniform(1, 100) <= percent; }

  Rational small_rational() {
    int den = chance(60) ? 1 : uniform(2, 9);
    return make_rational(uniform(-9, 9), den);
  }

  Linear linear(std::size_t level) {
    Linear l{small_rational(), {}};
    for (std::size_t k = 0; k < level; ++k) l.coef.push_back(chance(50) ? small_rational() : Rational(0));
    return l;
  }

  MPoly shifted(std::size_t level, const Linear& l) const {
    MPoly p = MPoly::variable(n_, level) - MPoly::constant(n_, l.c0);
    for (std::size_t k = 0; k < level; ++k) p -= l.coef[k] * MPoly::variable(n_, k);
    return p;
  }

  static SurdValue eval(const Linear& l, const std::vector<SurdValue>& xi) {
    SurdValue v{l.c0, 0};
    for (std::size_t k = 0; k < l.coef.size(); ++k) {
      v.a += l.coef[k] * xi[k].a;
      v.b += l.coef[k] * xi[k].b;
    }
    return v;
  }

  std::size_t n_;
  std::mt19937_64 rng_;
};

}  // namespace

PlantedSystem plant_system(std::size_t nvars, unsigned max_deg, std::uint64_t seed) {
  if (nvars < 1 || nvars > 3 || max_deg < 2 || max_deg > 6) {
    throw std::invalid_argument("plant_system needs 1 <= nvars <= 3 and 2 <= max_deg <= 6");
  }
  Planter pl(nvars, seed);
  static const int kSurds[] = {2, 3, 5, 6, 7, 10};
  PlantedSystem out;
  out.surd = kSurds[pl.uniform(0, 5)];

  std::vector<PlantedRoot> roots{PlantedRoot{{}, {}, 1}};
  std::vector<MPoly> polys;
  for (std::size_t i = 0; i < nvars; ++i) {
    unsigned budget = static_cast<unsigned>(pl.uniform(1, static_cast<int>(max_deg)));
    MPoly f = MPoly::constant(nvars, 1);
    std::vector<std::pair<Linear, unsigned>> lins;
    std::vector<std::pair<Linear, unsigned>> surds;
    unsigned used = 0;

    do {
      unsigned e = static_cast<unsigned>(pl.uniform(1, static_cast<int>(std::min(3u, budget - used))));
      Linear l = pl.linear(i);
      f = f * pl.shifted(i, l).pow(e);
      lins.emplace_back(l, e);
      used += e;
    } while (used < budget && pl.chance(50));
    if (used + 2 <= max_deg && pl.chance(35)) {
      Linear l = pl.linear(i);
      MPoly s = pl.shifted(i, l);
      f = f * (s * s - MPoly::constant(nvars, out.surd));
      surds.emplace_back(l, 1);
      used += 2;
    }
    if (used + 2 <= max_deg && pl.chance(25)) {
      MPoly s = pl.shifted(i, pl.linear(i));
      f = f * (s * s + MPoly::constant(nvars, make_rational(pl.uniform(1, 9), pl.uniform(1, 4))));
      used += 2;
    }
    if (i > 0 && pl.chance(25)) {
      MPoly x = MPoly::variable(nvars, static_cast<std::size_t>(pl.uniform(0, static_cast<int>(i) - 1)));
      f = f * (x * x + MPoly::constant(nvars, pl.uniform(1, 3)));
    }
    polys.push_back(f);

    std::vector<PlantedRoot> next;
    for (const auto& r : roots) {
      std::vector<std::pair<SurdValue, unsigned>> values;
      auto add = [&](SurdValue v, unsigned e) {
        for (auto& [w, m] : values) {
          if (w == v) {
            m += e;
            return;
          }
        }
        values.emplace_back(v, e);
      };
      for (const auto& [l, e] : lins) add(Planter::eval(l, r.coords), e);
      for (const auto& [l, e] : surds) {
        SurdValue v = Planter::eval(l, r.coords);
        add({v.a, v.b + 1}, e);
        add({v.a, v.b - 1}, e);
      }
      for (const auto& [v, e] : values) {
        PlantedRoot child = r;
        child.coords.push_back(v);
        child.exponents.push_back(e);
        child.multiplicity *= e;
        next.push_back(std::move(child));
      }
    }
    roots = std::move(next);
  }
  out.system = TriangularSystem(std::move(polys));
  out.expected = std::move(roots);
  return out;
}

}  // namespace triso
