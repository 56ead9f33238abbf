#include "triso/algebraic_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "triso/errors.hpp"
#include "triso/uni_isolate.hpp"

namespace triso {

namespace {

UPoly scale(const UPoly& u, const MPoly& c) {
  UPoly out{u.var, {}};
  out.coeffs.reserve(u.coeffs.size());
  for (const auto& a : u.coeffs) out.coeffs.push_back(a * c);
  out.trim();
  return out;
}

UPoly divide(const UPoly& u, const MPoly& c) {
  UPoly out{u.var, {}};
  out.coeffs.reserve(u.coeffs.size());
  for (const auto& a : u.coeffs) out.coeffs.push_back(a.is_zero() ? a : exact_div(a, c));
  out.trim();
  return out;
}

}  // namespace

SubresultantChain subres_chain(const MPoly& p1, const MPoly& p2, std::size_t v) {
  if (p1.is_zero() || p2.is_zero()) throw ZeroPolynomial();
  UPoly a = collect_in(p1, v);
  UPoly b = collect_in(p2, v);
  int m = a.degree();
  int n = b.degree();
  if (m < n) throw std::invalid_argument("subres_chain needs deg p1 >= deg p2");

  std::size_t nv = p1.nvars();
  SubresultantChain out;
  out.main_var = v;
  out.chain.assign(static_cast<std::size_t>(n) + 1, MPoly(nv));
  out.principal.assign(static_cast<std::size_t>(n) + 1, MPoly(nv));

  if (m == n) {
    // Equal degrees: S_{n-1} = r = prem(p1, p2) and, below deg r = e,
    // S_j(p1, p2) = S_j(p2, r) / lc(p2)^(e - j); in between they vanish.
    out.chain[static_cast<std::size_t>(n)] = p2;
    out.principal[static_cast<std::size_t>(n)] = b.lc();
    UPoly r = pseudo_divide(a, b).remainder;
    if (r.is_zero() || n == 0) return out;
    MPoly rp = to_mpoly(r, nv);
    int e = r.degree();
    SubresultantChain sub = subres_chain(p2, rp, v);
    out.chain[static_cast<std::size_t>(n - 1)] = rp;
    for (int j = 0; j <= e; ++j) {
      auto k = static_cast<std::size_t>(j);
      MPoly scale = b.lc().pow(static_cast<unsigned>(e - j));
      out.chain[k] = sub.chain[k].is_zero() ? sub.chain[k] : exact_div(sub.chain[k], scale);
      out.principal[k] = sub.principal[k].is_zero() ? sub.principal[k] : exact_div(sub.principal[k], scale);
    }
    return out;
  }

  // a plays S_{ja+1} with principal coefficient ra.
  MPoly ra = MPoly::constant(nv, 1);
  int ja = m;
  for (;;) {
    int d = b.degree();
    int j = ja - 1;
    if (j <= n && j > d) out.chain[static_cast<std::size_t>(j)] = to_mpoly(b, nv);
    UPoly t = b;
    for (int i = 0; i < j - d; ++i) t = divide(scale(t, b.lc()), ra);
    out.chain[static_cast<std::size_t>(d)] = to_mpoly(t, nv);
    out.principal[static_cast<std::size_t>(d)] = t.lc();
    if (d == 0) break;
    UPoly r = pseudo_divide(a, b).remainder;
    if (r.is_zero()) break;
    MPoly den = (-ra).pow(static_cast<unsigned>(j - d + 2));
    UPoly c = divide(r, den);
    a = std::move(t);
    ra = a.lc();
    ja = d;
    b = std::move(c);
  }
  return out;
}

UPoly normalize_degree(const MPoly& p, AlgebraicPoint& pt, std::size_t level) {
  UPoly u = collect_in(pt.substitute_exact(p, level), level);
  int top = u.degree();
  while (top >= 0 && zero_test(pt, level, u.coeffs[static_cast<std::size_t>(top)])) --top;
  if (top < 0) throw IdenticallyZeroAtPoint();
  u.coeffs.resize(static_cast<std::size_t>(top) + 1);
  return u;
}

namespace {

/// Both arguments have leading coefficients certified nonzero at the point.
MPoly gcd_normalized(MPoly a, MPoly b, AlgebraicPoint& pt, std::size_t level) {
  std::size_t v = level;
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  if (b.degree(v) == 0) return MPoly::constant(a.nvars(), 1);
  a = pt.reduce(a, level);
  b = pt.reduce(b, level);
  SubresultantChain sc = subres_chain(a, b, v);
  std::size_t mu = b.degree(v);
  for (std::size_t j = 0; j < mu; ++j) {
    if (sc.principal[j].is_zero()) continue;
    if (!zero_test(pt, level, sc.principal[j])) return pt.reduce(sc.chain[j], level);
  }
  return b;
}

MPoly normalized(const MPoly& p, AlgebraicPoint& pt, std::size_t level) {
  return to_mpoly(normalize_degree(p, pt, level), p.nvars());
}

}  // namespace

MPoly alg_gcd(const MPoly& p1, const MPoly& p2, AlgebraicPoint& pt, std::size_t level) {
  return gcd_normalized(normalized(p1, pt, level), normalized(p2, pt, level), pt, level);
}

AlgSqfFactorization alg_sqfree(const MPoly& p, AlgebraicPoint& pt) {
  std::size_t v = pt.level();
  std::size_t nv = p.nvars();
  unsigned full = p.degree(v);
  MPoly ps = pt.substitute_exact(p, v);
  AlgSqfFactorization out;

  bool rational = true;
  for (std::size_t k = 0; k < v; ++k) rational = rational && !ps.involves(k);
  if (rational) {
    QPoly g = QPoly::from_mpoly(ps, v);
    if (g.is_zero()) throw IdenticallyZeroAtPoint();
    if (g.degree() == 0) return out;
    SquarefreeFactorization sq = yun_squarefree(g);
    if (sq.factors.size() == 1 && sq.factors[0].exponent == 1 &&
        static_cast<unsigned>(g.degree()) == full) {
      out.factors.push_back({p, 1});
      return out;
    }
    for (const auto& f : sq.factors) out.factors.push_back({f.factor.to_mpoly(nv, v), f.exponent});
    return out;
  }

  UPoly u = normalize_degree(ps, pt, v);
  if (u.degree() == 0) return out;
  bool truncated = static_cast<unsigned>(u.degree()) < full;
  MPoly a = pt.reduce(to_mpoly(u, nv), v);

  // gcd-and-divide squarefree decomposition: factor_i = w_i / gcd(w_i, c_i).
  MPoly c = gcd_normalized(a, a.derivative(v), pt, v);
  MPoly w = c.degree(v) == 0 ? a : pt.reduce(pquo(a, c, v), v);
  unsigned i = 1;
  while (w.degree(v) > 0) {
    MPoly y = c.degree(v) == 0 ? MPoly::constant(nv, 1) : gcd_normalized(w, c, pt, v);
    MPoly f = y.degree(v) == 0 ? w : pt.reduce(pquo(w, y, v), v);
    if (f.degree(v) > 0) out.factors.push_back({f, i});
    if (y.degree(v) > 0) c = pt.reduce(pquo(c, y, v), v);
    w = std::move(y);
    ++i;
  }
  if (out.factors.size() == 1 && out.factors[0].exponent == 1 && !truncated) {
    out.factors[0].factor = p;
    return out;
  }
  for (auto& f : out.factors) f.factor = f.factor.primitive();
  return out;
}

BoundingPair bounding_polys(const MPoly& g, const AlgebraicPoint& pt, HalfLine halfline) {
  std::size_t v = pt.level();
  MPoly h = halfline == HalfLine::nonneg ? g : g.scale_var(v, -1);
  UPoly u = collect_in(h, v);
  std::vector<Interval> ivs = eval_interval_coeffs(u, pt.box());
  std::vector<Rational> lo;
  std::vector<Rational> hi;
  for (const auto& iv : ivs) {
    lo.push_back(iv.lo);
    hi.push_back(iv.hi);
  }
  BoundingPair out{QPoly(std::move(lo)), QPoly(std::move(hi)), halfline};
  if (halfline == HalfLine::nonpos) {
    out.low = out.low.reflect();
    out.up = out.up.reflect();
  }
  return out;
}

namespace {

struct Piece {
  Rational lo;
  Rational hi;
  bool candidate;
};

/// Roots of g(xi, x) in (0, inf), where g(xi, 0) may or may not vanish.
/// Returns false when the point needs refinement first.
bool isolate_positive(const MPoly& g, AlgebraicPoint& pt, std::vector<Interval>& roots,
                      std::vector<int>& lo_signs) {
  std::size_t v = pt.level();
  UPoly u = collect_in(g, v);
  std::vector<Interval> ivs = eval_interval_coeffs(u, pt.box());
  const Interval& lead = ivs.back();
  if (lead.contains_zero()) return false;
  Rational lmin = std::min(Rational(abs(lead.lo)), Rational(abs(lead.hi)));
  Rational ratio = 0;
  for (std::size_t k = 0; k + 1 < ivs.size(); ++k) {
    ratio = std::max(ratio, Rational(std::max(Rational(abs(ivs[k].lo)), Rational(abs(ivs[k].hi))) / lmin));
  }
  Rational bound = pow2_ceil(1 + ratio);

  BoundingPair bp = bounding_polys(g, pt, HalfLine::nonneg);
  Rational tol = bound * pt.box().max_width();
  if (sign(tol) == 0) tol = bound;

  // Crossings of low and up, widened to tolerance and clipped to [0, bound].
  std::vector<Interval> crit;
  for (const QPoly* q : {&bp.low, &bp.up}) {
    if (q->degree() <= 0) continue;
    QPoly sq = squarefree_part(*q);
    for (const auto& iv : isolate_squarefree(sq)) {
      if (iv.hi < 0 || iv.lo > bound) continue;
      Interval r = iv.degenerate() ? iv : refine_interval(sq, iv, tol);
      if (r.hi < 0 || r.lo > bound) continue;
      crit.emplace_back(std::max(r.lo, Rational(0)), std::min(r.hi, bound));
    }
  }
  std::sort(crit.begin(), crit.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  std::vector<Piece> pieces;
  Rational cursor = 0;
  auto gap = [&](const Rational& to) {
    if (to <= cursor) return;
    Rational t = (cursor + to) / 2;
    bool excluded = sign(bp.low.eval(t)) > 0 || sign(bp.up.eval(t)) < 0;
    pieces.push_back({cursor, to, !excluded});
  };
  for (const auto& c : crit) {
    gap(c.lo);
    if (!pieces.empty() && pieces.back().candidate && pieces.back().hi >= c.lo) {
      pieces.back().hi = std::max(pieces.back().hi, c.hi);
    } else {
      pieces.push_back({std::max(cursor, c.lo), c.hi, true});
    }
    cursor = std::max(cursor, c.hi);
  }
  gap(bound);

  std::vector<Piece> cands;
  for (const auto& p : pieces) {
    if (!p.candidate) continue;
    if (!cands.empty() && cands.back().hi >= p.lo) {
      cands.back().hi = std::max(cands.back().hi, p.hi);
    } else {
      cands.push_back(p);
    }
  }

  MPoly dg = g.derivative(v);
  std::vector<Interval> found;
  std::vector<int> found_signs;
  for (const auto& c : cands) {
    Box ext = pt.box();
    ext.push_back(Interval(c.lo, c.hi));
    if (eval_interval(dg, ext).contains_zero()) return false;
    int sa = sign_at(pt, v, g.substitute(v, c.lo));
    int sb = sign_at(pt, v, g.substitute(v, c.hi));
    if (sa == 0) {
      if (sign(c.lo) > 0) {
        found.push_back(Interval::point(c.lo));
        found_signs.push_back(0);
      }
    } else if (sb == 0) {
      found.push_back(Interval::point(c.hi));
      found_signs.push_back(0);
    } else if (sa != sb) {
      found.emplace_back(c.lo, c.hi);
      found_signs.push_back(sa);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    roots.push_back(std::move(found[i]));
    lo_signs.push_back(found_signs[i]);
  }
  return true;
}

struct Root {
  Interval iv;
  int lo_sign;
};

}  // namespace

std::vector<Interval> alg_isolate(const MPoly& g0, AlgebraicPoint& pt) {
  std::size_t v = pt.level();
  MPoly g = pt.substitute_exact(g0, v);
  bool rational = true;
  for (std::size_t k = 0; k < v; ++k) rational = rational && !g.involves(k);
  if (rational) return isolate_squarefree(QPoly::from_mpoly(g, v));

  UPoly u = normalize_degree(g, pt, v);
  if (u.degree() == 0) return {};
  g = pt.reduce(to_mpoly(u, g.nvars()), v);

  std::vector<Root> roots;
  for (;;) {
    roots.clear();
    std::vector<Interval> pos;
    std::vector<int> pos_signs;
    std::vector<Interval> neg;
    std::vector<int> neg_signs;
    MPoly reflected = g.scale_var(v, -1);
    if (!isolate_positive(g, pt, pos, pos_signs) ||
        !isolate_positive(reflected, pt, neg, neg_signs)) {
      refine_all(pt, v);
      continue;
    }
    if (zero_test(pt, v, g.substitute(v, 0))) roots.push_back({Interval::point(0), 0});
    for (std::size_t i = 0; i < pos.size(); ++i) roots.push_back({pos[i], pos_signs[i]});
    for (std::size_t i = 0; i < neg.size(); ++i) {
      // g(xi, -x) at -hi has the sign neg_signs flips to at hi.
      roots.push_back({Interval(-neg[i].hi, -neg[i].lo), -neg_signs[i]});
    }
    break;
  }

  // Strict disjointness: only intervals touching at a shared endpoint collide.
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.iv.lo < b.iv.lo; });
  for (;;) {
    bool clean = true;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (roots[i].iv.hi < roots[i + 1].iv.lo) continue;
      clean = false;
      for (Root* r : {&roots[i], &roots[i + 1]}) {
        if (r->iv.degenerate()) continue;
        Rational mid = r->iv.midpoint();
        int sm = sign_at(pt, v, g.substitute(v, mid));
        if (sm == 0) {
          r->iv = Interval::point(mid);
        } else if (sm == r->lo_sign) {
          r->iv = Interval(mid, r->iv.hi);
        } else {
          r->iv = Interval(r->iv.lo, mid);
        }
      }
    }
    if (clean) break;
  }
  std::vector<Interval> out;
  for (auto& r : roots) out.push_back(std::move(r.iv));
  return out;
}

}  // namespace triso
