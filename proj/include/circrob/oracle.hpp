#pragma once

// Exhaustive reference checkers for small spaces. Everything here is written
// straight from the definitions and shares no code with verify/recognize.

#include "circrob/core.hpp"
#include "circrob/predicates.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace circrob::oracle {

inline constexpr Index kMaxEnumerate = 10;
inline constexpr Index kMaxClassify = 8;

/// Calls `visit` once per canonical circular order on n points:
/// max(1, (n-1)!/2) calls in total.
inline void for_each_circular_order(Index n, const std::function<void(const CircularOrder&)>& visit) {
  if (n < 1 || n > kMaxEnumerate) {
    throw InputError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerate));
  }
  std::vector<Index> seq(n);
  std::iota(seq.begin(), seq.end(), Index{0});
  if (n <= 2) {
    visit(CircularOrder::from_sequence(seq));
    return;
  }
  do {
    if (seq[1] < seq[n - 1]) visit(CircularOrder::from_sequence(seq));
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

inline std::vector<CircularOrder> enumerate_circular_orders(Index n) {
  std::vector<CircularOrder> out;
  for_each_circular_order(n, [&](const CircularOrder& o) { out.push_back(o); });
  return out;
}

namespace detail {

inline Index distinct_count(const Quadruple& q) {
  Index pts[4] = {q.x, q.y, q.z, q.t};
  std::sort(pts, pts + 4);
  return static_cast<Index>(std::unique(pts, pts + 4) - pts);
}

/// Every chain x<y<z<t of the order, pairwise distinct when `strict`, with at
/// least three distinct points otherwise (fewer make the chain empty of
/// content and the conditions trivial).
template <typename Pred>
bool all_chain_quadruples(const CircularOrder& order, bool strict, Pred&& pred) {
  const Index n = order.size();
  if (strict) {
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b)
        for (Index c = b + 1; c < n; ++c)
          for (Index e = c + 1; e < n; ++e) {
            Quadruple q{order.at(a), order.at(b), order.at(c), order.at(e)};
            for (int r = 0; r < 4; ++r, q = q.rotated()) {
              if (!pred(q)) return false;
            }
          }
    return true;
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        for (Index t = 0; t < n; ++t) {
          const Quadruple q{x, y, z, t};
          if (distinct_count(q) < 3) continue;
          const Index pts[4] = {x, y, z, t};
          if (!chain_holds(order, pts)) continue;
          if (!pred(q)) return false;
        }
  return true;
}

/// Three-point Robinson condition on a linear sequence, all triples.
template <typename Scalar>
bool linear_robinson_triples(const DissimilarityMatrix<Scalar>& d, const std::vector<Index>& seq,
                             bool strict) {
  const Index m = seq.size();
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j)
      for (Index k = j + 1; k < m; ++k) {
        const Scalar outer = d(seq[i], seq[k]);
        const Scalar inner = std::max(d(seq[i], seq[j]), d(seq[j], seq[k]));
        if (strict ? !d.greater(outer, inner) : !d.greater_equal(outer, inner)) return false;
      }
  return true;
}

}  // namespace detail

template <typename Scalar>
bool pre_circular_by_quadruples(const DissimilarityMatrix<Scalar>& d, const CircularOrder& order,
                                bool strict) {
  return detail::all_chain_quadruples(order, strict, [&](const Quadruple& q) {
    return strict ? scr(d, q) : cr(d, q);
  });
}

template <typename Scalar>
bool quasi_circular_by_quadruples(const DissimilarityMatrix<Scalar>& d,
                                  const CircularOrder& order, bool strict) {
  return detail::all_chain_quadruples(order, strict, [&](const Quadruple& q) {
    return strict ? sqcr(d, q) : qcr(d, q);
  });
}

/// For every pair a != b one of the two arcs joining them, read in the
/// order, is a (strict) linear Robinson space.
template <typename Scalar>
bool circular_robinson_by_arcs(const DissimilarityMatrix<Scalar>& d, const CircularOrder& order,
                               bool strict) {
  const Index n = order.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) {
      const auto ab = arc_between(order, a, b).members(order);
      if (detail::linear_robinson_triples(d, ab, strict)) continue;
      const auto ba = arc_between(order, b, a).members(order);
      if (!detail::linear_robinson_triples(d, ba, strict)) return false;
    }
  return true;
}

struct Classification {
  std::vector<CircularOrder> pre_circular;
  std::vector<CircularOrder> strict_pre_circular;
  std::vector<CircularOrder> quasi;
  std::vector<CircularOrder> strict_quasi;
  std::vector<CircularOrder> circular;
  std::vector<CircularOrder> strict_circular;
};

template <typename Scalar>
Classification classify(const DissimilarityMatrix<Scalar>& d) {
  if (d.size() > kMaxClassify) {
    throw InputError("oracle supports at most " + std::to_string(kMaxClassify) + " points");
  }
  Classification c;
  for_each_circular_order(d.size(), [&](const CircularOrder& o) {
    if (pre_circular_by_quadruples(d, o, false)) c.pre_circular.push_back(o);
    if (pre_circular_by_quadruples(d, o, true)) c.strict_pre_circular.push_back(o);
    if (quasi_circular_by_quadruples(d, o, false)) c.quasi.push_back(o);
    if (quasi_circular_by_quadruples(d, o, true)) c.strict_quasi.push_back(o);
    if (circular_robinson_by_arcs(d, o, false)) c.circular.push_back(o);
    if (circular_robinson_by_arcs(d, o, true)) c.strict_circular.push_back(o);
  });
  return c;
}

}  // namespace circrob::oracle
