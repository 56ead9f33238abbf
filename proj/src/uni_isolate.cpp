#include "triso/uni_isolate.hpp"

#include <algorithm>
#include <utility>

#include "triso/errors.hpp"

namespace triso {

namespace {

using ZPoly = std::vector<Integer>;

ZPoly to_zpoly(const QPoly& f) {
  QPoly p = f.primitive();
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) z.push_back(c.get_num());
  return z;
}

int variations(const ZPoly& p) {
  int count = 0;
  int last = 0;
  for (const auto& c : p) {
    int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void taylor_shift1(ZPoly& a) {
  std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
  }
}

void remove_content(ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

/// Upper bound on sign changes in (0, 1); exact when 0 or 1.
int descartes01(const ZPoly& q) {
  ZPoly t(q.rbegin(), q.rend());
  taylor_shift1(t);
  return variations(t);
}

/// Quotient of q by (x - 1), q(1) == 0.
ZPoly deflate_at_one(const ZPoly& q) {
  ZPoly b(q.size() - 1);
  Integer carry = 0;
  for (std::size_t i = q.size() - 1; i >= 1; --i) {
    carry += q[i];
    b[i - 1] = carry;
  }
  return b;
}

struct Task {
  ZPoly q;
  Integer c;
  unsigned long k;
};

/// Roots in (0, inf) of p, which must not vanish at 0.
std::vector<Interval> isolate_positive(const ZPoly& p) {
  std::vector<Interval> out;
  std::size_t n = p.size() - 1;
  if (n == 0) return out;
  Rational ratio = 0;
  Rational lead = abs(Rational(p[n]));
  for (std::size_t i = 0; i < n; ++i) ratio = std::max(ratio, Rational(abs(Rational(p[i])) / lead));
  Rational bound = pow2_ceil(1 + ratio);
  Integer scale = bound.get_num();  // bound >= 2 is an integer power of two

  ZPoly scaled(p.size());
  Integer power = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    scaled[i] = p[i] * power;
    power *= scale;
  }
  remove_content(scaled);

  auto to_point = [&](const Integer& c, unsigned long k) {
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return make_rational(c * scale, den);
  };

  std::vector<Task> stack;
  stack.push_back({std::move(scaled), Integer(0), 0});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (t.q.size() < 2) continue;
    int v = descartes01(t.q);
    if (v == 0) continue;
    if (v == 1) {
      out.emplace_back(to_point(t.c, t.k), to_point(t.c + 1, t.k));
      continue;
    }
    std::size_t m = t.q.size() - 1;
    ZPoly left(t.q.size());
    for (std::size_t i = 0; i <= m; ++i) {
      mpz_mul_2exp(left[i].get_mpz_t(), t.q[i].get_mpz_t(), m - i);
    }
    ZPoly right = left;
    taylor_shift1(right);
    if (sign(right[0]) == 0) {
      out.push_back(Interval::point(to_point(2 * t.c + 1, t.k + 1)));
      right.erase(right.begin());
      left = deflate_at_one(left);
    }
    remove_content(left);
    remove_content(right);
    stack.push_back({std::move(right), 2 * t.c + 1, t.k + 1});
    stack.push_back({std::move(left), 2 * t.c, t.k + 1});
  }
  return out;
}

Interval bisect_once(const QPoly& f, const Interval& iv) {
  Rational mid = iv.midpoint();
  int sm = f.sign_at(mid);
  if (sm == 0) return Interval::point(mid);
  if (sm == f.sign_at(iv.lo)) return {mid, iv.hi};
  return {iv.lo, mid};
}

struct Tagged {
  Interval iv;
  const QPoly* poly;
  std::size_t tag;
};

/// Refines until every pair is strictly disjoint; roots must be distinct.
void separate(std::vector<Tagged>& roots) {
  for (;;) {
    std::sort(roots.begin(), roots.end(),
              [](const Tagged& a, const Tagged& b) { return a.iv.lo < b.iv.lo; });
    bool clean = true;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (roots[i].iv.hi < roots[i + 1].iv.lo) continue;
      clean = false;
      for (auto* r : {&roots[i], &roots[i + 1]}) {
        if (!r->iv.degenerate()) r->iv = bisect_once(*r->poly, r->iv);
      }
    }
    if (clean) return;
  }
}

}  // namespace

int sign_variations(const std::vector<Rational>& coeffs) {
  int count = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

SquarefreeFactorization yun_squarefree(const QPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  SquarefreeFactorization out;
  if (f.degree() > 0) {
    QPoly d = f.derivative();
    QPoly c = gcd(f, d);
    QPoly w = divmod(f, c).first;
    QPoly y = divmod(d, c).first;
    QPoly z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
      QPoly g = gcd(w, z);
      if (g.degree() > 0) out.factors.push_back({g.primitive(), i});
      w = divmod(w, g).first;
      y = divmod(z, g).first;
      z = y - w.derivative();
      ++i;
    }
  }
  Rational lead = 1;
  for (const auto& fac : out.factors) lead *= pow(fac.factor.lc(), fac.exponent);
  out.unit = f.lc() / lead;
  return out;
}

std::vector<Interval> isolate_squarefree(const QPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.degree() == 0) return {};
  if (gcd(f, f.derivative()).degree() > 0) throw NotSquarefree();

  ZPoly z = to_zpoly(f);
  std::vector<Interval> found;
  if (sign(z[0]) == 0) {
    found.push_back(Interval::point(0));
    z.erase(z.begin());
  }
  for (auto& iv : isolate_positive(z)) found.push_back(std::move(iv));
  ZPoly reflected = z;
  for (std::size_t k = 1; k < reflected.size(); k += 2) reflected[k] = -reflected[k];
  for (auto& iv : isolate_positive(reflected)) found.emplace_back(-iv.hi, -iv.lo);

  // Pull nondegenerate intervals off rational roots sitting on their endpoints.
  QPoly rest = f;
  for (const auto& iv : found) {
    if (iv.degenerate()) rest = divmod(rest, linear_factor(iv.lo)).first;
  }
  for (auto& iv : found) {
    if (iv.degenerate()) continue;
    while (!iv.degenerate() && (f.sign_at(iv.lo) == 0 || f.sign_at(iv.hi) == 0)) {
      iv = bisect_once(rest, iv);
    }
  }

  // A rational root p/q of the primitive integer polynomial has q | lc, so
  // once an interval is narrower than 1/|lc| it holds at most one candidate.
  Rational lead = abs(Rational(z.back()));
  Rational narrow = 1 / (2 * lead);
  for (auto& iv : found) {
    if (iv.degenerate()) continue;
    iv = refine_interval(f, iv, narrow);
    if (iv.degenerate()) continue;
    Rational cand = make_rational(floor(iv.lo * lead) + 1, lead.get_num());
    if (cand < iv.hi && f.sign_at(cand) == 0) iv = Interval::point(cand);
  }

  std::vector<Tagged> tagged;
  for (auto& iv : found) tagged.push_back({iv, &f, 0});
  separate(tagged);
  std::vector<Interval> out;
  for (auto& t : tagged) out.push_back(std::move(t.iv));
  return out;
}

Interval refine_interval(const QPoly& f, const Interval& iv, const Rational& width) {
  if (iv.degenerate()) return iv;
  int slo = f.sign_at(iv.lo);
  int shi = f.sign_at(iv.hi);
  if (slo == 0 || shi == 0 || slo == shi) throw NoSignChange();
  Interval cur = iv;
  while (!cur.degenerate() && cur.width() > width) cur = bisect_once(f, cur);
  return cur;
}

UniIsolation uni_isol(const QPoly& f) {
  UniIsolation out;
  out.factorization = yun_squarefree(f);
  const auto& factors = out.factorization.factors;
  std::vector<Tagged> tagged;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (auto& iv : isolate_squarefree(factors[i].factor)) {
      tagged.push_back({std::move(iv), &factors[i].factor, i});
    }
  }
  separate(tagged);
  for (auto& t : tagged) {
    out.roots.push_back({std::move(t.iv), factors[t.tag].exponent, t.tag});
  }
  return out;
}

}  // namespace triso
