#include "triso/multi_isolate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "triso/algebraic_poly.hpp"
#include "triso/errors.hpp"
#include "triso/qpoly.hpp"
#include "triso/uni_isolate.hpp"

namespace triso {

TriangularSystem check_triangular(std::vector<MPoly> polys) { return TriangularSystem(std::move(polys)); }

namespace {

struct Node {
  AlgebraicPoint pt;
  std::vector<unsigned> exps;
  unsigned long mult = 1;
};

/// Refines the last coordinate of sibling nodes until pairwise disjoint.
void separate_last(std::vector<Node>& nodes, std::size_t axis) {
  for (;;) {
    std::sort(nodes.begin(), nodes.end(),
              [axis](const Node& a, const Node& b) { return a.pt.box()[axis].lo < b.pt.box()[axis].lo; });
    bool clean = true;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (nodes[i].pt.box()[axis].hi < nodes[i + 1].pt.box()[axis].lo) continue;
      clean = false;
      refine_axis(nodes[i].pt, axis);
      refine_axis(nodes[i + 1].pt, axis);
    }
    if (clean) return;
  }
}

std::vector<Node> extend(Node node, const MPoly& f, std::size_t level) {
  AlgSqfFactorization sq;
  try {
    sq = alg_sqfree(f, node.pt);
  } catch (const IdenticallyZeroAtPoint&) {
    throw PositiveDimension();
  }
  std::vector<Node> out;
  for (const auto& fac : sq.factors) {
    std::vector<Interval> ivs = alg_isolate(fac.factor, node.pt);
    for (auto& iv : ivs) {
      Node child{node.pt.extended(fac.factor, std::move(iv)), node.exps, node.mult * fac.exponent};
      child.exps.push_back(fac.exponent);
      out.push_back(std::move(child));
    }
  }
  separate_last(out, level);
  return out;
}

template <class Fn>
void for_each_index(std::size_t count, unsigned threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

bool lex_less(const Box& a, const Box& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].lo != b[k].lo) return a[k].lo < b[k].lo;
    if (a[k].hi != b[k].hi) return a[k].hi < b[k].hi;
  }
  return false;
}

}  // namespace

MultiIsolation multi_isolate(const TriangularSystem& t, const Rational& precision, unsigned threads) {
  if (sign(precision) <= 0) throw std::invalid_argument("precision must be positive");
  std::size_t n = t.size();
  MultiIsolation out;
  if (n == 0) return out;

  std::vector<Node> nodes;
  UniIsolation first = uni_isol(QPoly::from_mpoly(t[0], 0));
  for (const auto& r : first.roots) {
    const auto& fac = first.factorization.factors[r.factor_index];
    Node node{AlgebraicPoint(n).extended(fac.factor.to_mpoly(n, 0), r.interval), {fac.exponent},
              fac.exponent};
    nodes.push_back(std::move(node));
  }

  for (std::size_t level = 1; level < n; ++level) {
    std::vector<std::vector<Node>> children(nodes.size());
    for_each_index(nodes.size(), threads,
                   [&](std::size_t i) { children[i] = extend(std::move(nodes[i]), t[level], level); });
    nodes.clear();
    for (auto& group : children) {
      for (auto& c : group) nodes.push_back(std::move(c));
    }
  }

  for_each_index(nodes.size(), threads, [&](std::size_t i) {
    AlgebraicPoint& pt = nodes[i].pt;
    for (std::size_t k = 0; k < n; ++k) {
      while (pt.box()[k].width() > precision) refine_axis(pt, k);
    }
  });

  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return lex_less(a.pt.box(), b.pt.box()); });

  for (auto& node : nodes) {
    std::size_t id = out.branches.size();
    for (std::size_t b = 0; b < out.branches.size(); ++b) {
      if (out.branches[b].system.polys() == node.pt.defs()) {
        id = b;
        break;
      }
    }
    if (id == out.branches.size()) {
      out.branches.push_back({TriangularSystem(node.pt.defs()), {}});
    }
    out.branches[id].solutions.push_back(out.solutions.size());
    out.solutions.push_back({node.pt.box(), node.mult, id, node.exps});
  }
  return out;
}

AlgebraicPoint branch_point(const DecompositionBranch& branch, const Box& box) {
  return AlgebraicPoint(branch.system.polys(), box);
}

bool verify_solution(const TriangularSystem& t, const IntervalSolution& s, const DecompositionBranch& branch) {
  std::size_t n = t.size();
  if (s.box.size() != n || branch.system.size() != n || s.exponents.size() != n) return false;
  unsigned long prod = 1;
  for (unsigned e : s.exponents) {
    if (e == 0) return false;
    prod *= e;
  }
  if (prod != s.multiplicity) return false;
  try {
    AlgebraicPoint pt(n);
    for (std::size_t k = 0; k < n; ++k) {
      const MPoly& q = branch.system[k];
      const Interval& iv = s.box[k];
      if (iv.degenerate()) {
        if (!zero_test(pt, k, q.substitute(k, iv.lo))) return false;
      } else {
        int slo = sign_at(pt, k, q.substitute(k, iv.lo));
        int shi = sign_at(pt, k, q.substitute(k, iv.hi));
        if (slo == 0 || shi == 0 || slo == shi) return false;
      }
      pt = pt.extended(q, iv);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!zero_test(pt, k + 1, t[k])) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace triso
