#include "triso/algebraic_point.hpp"

#include <stdexcept>
#include <utility>

#include "triso/algebraic_poly.hpp"
#include "triso/errors.hpp"
#include "triso/qpoly.hpp"

namespace triso {

TriangularSystem::TriangularSystem(std::vector<MPoly> polys) : polys_(std::move(polys)) {
  std::size_t n = polys_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const MPoly& f = polys_[i];
    if (f.nvars() != n) throw NotTriangular(i, "expected " + std::to_string(n) + " variables");
    if (f.is_zero()) throw NotTriangular(i, "zero polynomial");
    if (f.top_var() > static_cast<int>(i)) throw NotTriangular(i, "involves a later variable");
    if (f.degree(i) == 0) throw NotTriangular(i, "does not involve its main variable");
  }
}

AlgebraicPoint::AlgebraicPoint(std::size_t nvars) : nvars_(nvars) {}

AlgebraicPoint::AlgebraicPoint(std::vector<MPoly> defs, Box box)
    : nvars_(defs.empty() ? 0 : defs.front().nvars()),
      defs_(std::move(defs)),
      box_(std::move(box)),
      lo_sign_(defs_.size(), 0) {
  if (box_.size() != defs_.size()) throw std::invalid_argument("box and defs differ in size");
}

AlgebraicPoint AlgebraicPoint::prefix(std::size_t level) const {
  AlgebraicPoint out(nvars_);
  out.defs_.assign(defs_.begin(), defs_.begin() + static_cast<long>(level));
  out.box_ = box_.prefix(level);
  out.lo_sign_.assign(lo_sign_.begin(), lo_sign_.begin() + static_cast<long>(level));
  return out;
}

AlgebraicPoint AlgebraicPoint::extended(MPoly def, Interval iv, int lo_sign) const {
  AlgebraicPoint out = *this;
  if (out.nvars_ == 0) out.nvars_ = def.nvars();
  out.defs_.push_back(std::move(def));
  out.box_.push_back(std::move(iv));
  out.lo_sign_.push_back(lo_sign);
  return out;
}

bool AlgebraicPoint::rational_below(std::size_t level) const {
  for (std::size_t k = 0; k < level; ++k) {
    if (!box_[k].degenerate()) return false;
  }
  return true;
}

MPoly AlgebraicPoint::substitute_exact(const MPoly& g, std::size_t level) const {
  MPoly out = g;
  for (std::size_t k = 0; k < level; ++k) {
    if (box_[k].degenerate() && out.involves(k)) out = out.substitute(k, box_[k].lo);
  }
  return out;
}

MPoly AlgebraicPoint::reduce(const MPoly& g, std::size_t level) const {
  MPoly out = g;
  for (std::size_t k = level; k-- > 0;) {
    if (box_[k].degenerate() || out.is_zero()) continue;
    unsigned dk = defs_[k].degree(k);
    if (out.degree(k) < dk) continue;
    out = prem(out, substitute_exact(defs_[k], k), k);
    out = substitute_exact(out, level);
  }
  return out.is_zero() ? out : out.primitive();
}

void AlgebraicPoint::set_interval(std::size_t axis, Interval iv) { box_[axis] = std::move(iv); }

void AlgebraicPoint::replace_def(std::size_t axis, MPoly def) {
  defs_[axis] = std::move(def);
  lo_sign_[axis] = 0;
}

AlgebraicPoint refine(const AlgebraicPoint& pt, std::size_t axis) {
  AlgebraicPoint out = pt;
  refine_axis(out, axis);
  return out;
}

namespace {

void check_level(const AlgebraicPoint& pt, std::size_t level, const MPoly& g) {
  if (level > pt.level() || g.top_var() >= static_cast<int>(level)) {
    throw VariableOutOfRange("polynomial involves variables beyond the point");
  }
}

}  // namespace

bool zero_test(AlgebraicPoint& pt, const MPoly& g) { return zero_test(pt, pt.level(), g); }

int sign_at(AlgebraicPoint& pt, const MPoly& g) { return sign_at(pt, pt.level(), g); }

bool zero_test(AlgebraicPoint& pt, std::size_t level, const MPoly& g0) {
  check_level(pt, level, g0);
  MPoly g = pt.substitute_exact(g0, level);
  if (g.is_constant()) return g.is_zero();
  g = pt.reduce(g, level);
  if (g.is_constant()) return g.is_zero();

  auto k = static_cast<std::size_t>(g.top_var());
  MPoly f = pt.substitute_exact(pt.defs()[k], k);

  if (k == 0) {
    // Exact gcd over Q; also narrows the defining polynomial.
    QPoly G = QPoly::from_mpoly(g, 0);
    QPoly F = QPoly::from_mpoly(f, 0);
    QPoly d = gcd(G, F);
    if (d.degree() == 0) return false;
    const Interval& iv = pt.box()[0];
    bool zero = d.sign_at(iv.lo) * d.sign_at(iv.hi) < 0;
    if (d.degree() < F.degree()) {
      QPoly keep = zero ? d : divmod(F, d).first;
      pt.replace_def(0, keep.primitive().to_mpoly(pt.nvars(), 0));
    }
    return zero;
  }

  if (eval_interval(g, pt.box()).certain_sign() != 0) return false;

  UPoly u = collect_in(g, k);
  int top = u.degree();
  while (top >= 0 && zero_test(pt, k, u.coeffs[static_cast<std::size_t>(top)])) --top;
  if (top < 0) return true;
  if (top == 0) return false;
  u.coeffs.resize(static_cast<std::size_t>(top) + 1);
  MPoly gt = to_mpoly(u, g.nvars());

  MPoly d = alg_gcd(gt, f, pt, k);
  unsigned dk = d.degree(k);
  if (dk == 0) return false;
  // d(xi_<k, .) is a factor of f(xi_<k, .), whose only root in box[k] is xi_k.
  const Interval iv = pt.box()[k];
  int slo = sign_at(pt, k, d.substitute(k, iv.lo));
  int shi = sign_at(pt, k, d.substitute(k, iv.hi));
  bool zero = slo * shi < 0;
  if (dk < f.degree(k)) {
    pt.replace_def(k, zero ? d.primitive() : pquo(f, d, k).primitive());
  }
  return zero;
}

int sign_at(AlgebraicPoint& pt, std::size_t level, const MPoly& g0) {
  check_level(pt, level, g0);
  MPoly g = pt.substitute_exact(g0, level);
  if (g.is_constant()) return sign(g.constant_value());
  int s = eval_interval(g, pt.box()).certain_sign();
  if (s != 0) return s;
  if (zero_test(pt, level, g)) return 0;
  for (;;) {
    g = pt.substitute_exact(g, level);
    if (g.is_constant()) return sign(g.constant_value());
    s = eval_interval(g, pt.box()).certain_sign();
    if (s != 0) return s;
    refine_all(pt, static_cast<std::size_t>(g.top_var()) + 1);
  }
}

void refine_axis(AlgebraicPoint& pt, std::size_t axis) {
  const Interval iv = pt.box()[axis];
  if (iv.degenerate()) return;
  // Queries at this level only touch lower axes, so f stays the definition.
  MPoly f = pt.substitute_exact(pt.defs()[axis], axis);
  int slo = pt.cached_lo_sign(axis);
  if (slo == 0) {
    slo = sign_at(pt, axis, f.substitute(axis, iv.lo));
    if (slo == 0) throw NoSignChange();
    pt.cache_lo_sign(axis, slo);
  }
  Rational mid = iv.midpoint();
  int sm = sign_at(pt, axis, f.substitute(axis, mid));
  if (sm == 0) {
    pt.set_interval(axis, Interval::point(mid));
  } else if (sm == slo) {
    pt.set_interval(axis, Interval(mid, iv.hi));
    pt.cache_lo_sign(axis, sm);
  } else {
    pt.set_interval(axis, Interval(iv.lo, mid));
  }
}

void refine_all(AlgebraicPoint& pt, std::size_t level) {
  for (std::size_t k = 0; k < level; ++k) refine_axis(pt, k);
}

}  // namespace triso
