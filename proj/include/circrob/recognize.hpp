#pragma once

#include "circrob/core.hpp"
#include "circrob/predicates.hpp"
#include "circrob/verify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace circrob {

/// N gathers the points at least as close to x as to x', F the points at
/// least as close to x' as to x. Both are arcs of every compatible order.
struct NearFarPartition {
  Index x = 0;
  Index x_prime = 0;
  std::vector<Index> near;  // ascending
  std::vector<Index> far;   // ascending
  std::vector<Index> meet;  // near ∩ far, ascending
};

template <typename Scalar>
struct Bipartition {
  std::vector<Index> near;  // the block containing point 0
  std::vector<Index> far;
  Scalar delta{};
};

template <typename Scalar>
struct OrderSet {
  std::vector<CircularOrder> orders;  // canonical, sorted, at most two
  std::optional<Bipartition<Scalar>> bipartition;
};

/// Output of the construction, with the information needed to enumerate every
/// compatible order afterwards.
struct Construction {
  CircularOrder order;
  /// The other composition X_N ++ reverse(X_F) when the four-arc branch ran.
  std::optional<CircularOrder> alternative;
  bool meet_branch = false;
  /// Set when two keys compared equal inside a sort; on a strict instance
  /// this signals that the input is not strict after all.
  bool tie_warning = false;
};

/// J(x, y): x, y and every u with max{d(x,u), d(u,y)} < d(x,y). Ascending.
template <typename Scalar>
std::vector<Index> j_set(const DissimilarityMatrix<Scalar>& d, Index x, Index y) {
  const Index n = d.size();
  if (x >= n || y >= n) throw InputError("point index out of range");
  if (x == y) throw std::invalid_argument("J-set needs two distinct points");
  const Scalar* rx = d.column_data(x);
  const Scalar* ry = d.column_data(y);
  const Scalar dxy = rx[y];
  std::vector<Index> out;
  for (Index u = 0; u < n; ++u) {
    if (u == x || u == y || d.greater(dxy, std::max(rx[u], ry[u]))) out.push_back(u);
  }
  return out;
}

template <typename Scalar>
NearFarPartition near_far_partition(const DissimilarityMatrix<Scalar>& d, Index x,
                                    Index x_prime) {
  const Index n = d.size();
  if (x >= n || x_prime >= n) throw InputError("point index out of range");
  const auto fx = farthest_set(d, x);
  if (!std::binary_search(fx.members.begin(), fx.members.end(), x_prime)) {
    throw std::invalid_argument("x' must be a farthest neighbour of x");
  }
  NearFarPartition p;
  p.x = x;
  p.x_prime = x_prime;
  const Scalar* rx = d.column_data(x);
  const Scalar* rxp = d.column_data(x_prime);
  for (Index u = 0; u < n; ++u) {
    const bool in_near = d.less_equal(rx[u], rxp[u]);
    const bool in_far = d.less_equal(rxp[u], rx[u]);
    if (in_near) p.near.push_back(u);
    if (in_far) p.far.push_back(u);
    if (in_near && in_far) p.meet.push_back(u);
  }
  return p;
}

/// Decides which of X_N ++ X_F and X_N ++ reverse(X_F) to keep. Checks the
/// strict quasi condition on O(|X_N| + |X_F|) quadruples straddling the two
/// blocks, each under all four rotations.
template <typename Scalar>
bool orders_agree(const DissimilarityMatrix<Scalar>& d, std::span<const Index> xn,
                  std::span<const Index> xf) {
  const Index n = d.size();
  if (xn.empty() || xf.empty()) throw std::invalid_argument("both blocks must be nonempty");
  std::vector<bool> seen(n, false);
  for (auto block : {xn, xf}) {
    for (Index v : block) {
      if (v >= n) throw InputError("point index out of range: " + std::to_string(v));
      if (seen[v]) throw std::invalid_argument("blocks overlap or repeat a point");
      seen[v] = true;
    }
  }
  if (xn.size() + xf.size() != n) throw std::invalid_argument("blocks do not cover all points");

  const Index k = xn.size();
  const Index l = xf.size();
  if (k == 1 || l == 1) return true;
  auto x = [&](Index i) { return xn[i - 1]; };  // 1-based like the block labels
  auto y = [&](Index j) { return xf[j - 1]; };

  for (Index i = 1; i < k; ++i) {
    if (!sqcr_all_rotations(d, {x(i), x(k), y(1), y(2)})) return false;
  }
  for (Index i = 2; i <= k; ++i) {
    if (!sqcr_all_rotations(d, {x(1), x(i), y(l - 1), y(l)})) return false;
  }
  for (Index j = 1; j < l; ++j) {
    if (!sqcr_all_rotations(d, {y(j), y(l), x(1), x(2)})) return false;
  }
  for (Index j = 2; j <= l; ++j) {
    if (!sqcr_all_rotations(d, {y(1), y(j), x(k - 1), x(k)})) return false;
  }
  return true;
}

namespace detail {

/// Sorts `points` by distance from `base` (ties to the lower index) and
/// reports whether any two keys were equal under the matrix tolerance.
template <typename Scalar>
bool sort_by_distance(const DissimilarityMatrix<Scalar>& d, Index base,
                      std::vector<Index>& points, bool descending) {
  const Scalar* row = d.column_data(base);
  std::sort(points.begin(), points.end(), [&](Index a, Index b) {
    if (row[a] != row[b]) return descending ? row[a] > row[b] : row[a] < row[b];
    return a < b;
  });
  bool tie = false;
  for (Index i = 1; i < points.size(); ++i) tie |= d.equal(row[points[i - 1]], row[points[i]]);
  return tie;
}

template <typename Scalar>
Index argmax_from(const DissimilarityMatrix<Scalar>& d, Index base,
                  const std::vector<Index>& points) {
  const Scalar* row = d.column_data(base);
  Index best = base;
  Scalar value = Scalar(0);
  for (Index u : points) {
    if (row[u] > value) {
      value = row[u];
      best = u;
    }
  }
  return best;
}

/// J(a, b) ∩ block, or {a} when b == a.
template <typename Scalar>
std::vector<Index> j_set_within(const DissimilarityMatrix<Scalar>& d, Index a, Index b,
                                const std::vector<bool>& in_block) {
  if (a == b) return {a};
  std::vector<Index> out;
  for (Index u : j_set(d, a, b)) {
    if (in_block[u]) out.push_back(u);
  }
  return out;
}

}  // namespace detail

/// The construction step: an O(n log n) candidate order that is compatible
/// whenever the space is strictly quasi-circular (or strictly circular)
/// Robinson. On other inputs it still returns some order.
template <typename Scalar>
Construction construct_order(const DissimilarityMatrix<Scalar>& d) {
  const Index n = d.size();
  Construction out;
  if (n <= 3) {
    out.order = CircularOrder::identity(n);
    return out;
  }
  const Index x = 0;
  const Index xp = farthest_set(d, x).members.front();
  const auto part = near_far_partition(d, x, xp);

  if (!part.meet.empty()) {
    out.meet_branch = true;
    const Index y = part.meet.front();
    std::vector<bool> in_first(n, false);
    for (Index u : j_set(d, x, y)) in_first[u] = true;
    for (Index u : j_set(d, y, xp)) in_first[u] = true;
    std::vector<Index> first, second;
    for (Index u = 0; u < n; ++u) {
      if (u == xp) continue;
      (in_first[u] ? first : second).push_back(u);
    }
    out.tie_warning |= detail::sort_by_distance(d, x, first, false);
    out.tie_warning |= detail::sort_by_distance(d, x, second, true);
    first.push_back(xp);
    first.insert(first.end(), second.begin(), second.end());
    out.order = CircularOrder::from_sequence(std::move(first)).canonical();
    return out;
  }

  std::vector<bool> in_near(n, false), in_far(n, false);
  for (Index u : part.near) in_near[u] = true;
  for (Index u : part.far) in_far[u] = true;

  const Index z = detail::argmax_from(d, x, part.near);
  std::vector<Index> near_inner = detail::j_set_within(d, x, z, in_near);
  std::vector<bool> mark(n, false);
  for (Index u : near_inner) mark[u] = true;
  std::vector<Index> near_outer;
  for (Index u : part.near) {
    if (!mark[u]) near_outer.push_back(u);
  }

  const Index y = detail::argmax_from(d, xp, part.far);
  std::vector<Index> far_inner = detail::j_set_within(d, xp, y, in_far);
  for (Index u : far_inner) mark[u] = true;
  std::vector<Index> far_outer;
  for (Index u : part.far) {
    if (!mark[u]) far_outer.push_back(u);
  }

  // X_N runs from the outer part of N down to x, then out to z; X_F runs from
  // y down to x', then out through the rest of F back towards N.
  out.tie_warning |= detail::sort_by_distance(d, x, near_outer, true);
  out.tie_warning |= detail::sort_by_distance(d, x, near_inner, false);
  out.tie_warning |= detail::sort_by_distance(d, xp, far_inner, true);
  out.tie_warning |= detail::sort_by_distance(d, xp, far_outer, false);

  std::vector<Index> xn = std::move(near_outer);
  xn.insert(xn.end(), near_inner.begin(), near_inner.end());
  std::vector<Index> xf = std::move(far_inner);
  xf.insert(xf.end(), far_outer.begin(), far_outer.end());

  std::vector<Index> kept = xn;
  std::vector<Index> other = xn;
  const bool agree = orders_agree<Scalar>(d, xn, xf);
  if (agree) {
    kept.insert(kept.end(), xf.begin(), xf.end());
    other.insert(other.end(), xf.rbegin(), xf.rend());
  } else {
    kept.insert(kept.end(), xf.rbegin(), xf.rend());
    other.insert(other.end(), xf.begin(), xf.end());
  }
  out.order = CircularOrder::from_sequence(std::move(kept)).canonical();
  out.alternative = CircularOrder::from_sequence(std::move(other)).canonical();
  return out;
}

template <typename Scalar>
CircularOrder find_compatible_order(const DissimilarityMatrix<Scalar>& d) {
  return construct_order(d).order;
}

/// A split of X into two blocks of size at least two such that every cross
/// pair is farther apart than delta and no intra pair is. Found through the
/// heaviest edge of a minimum spanning tree in O(n^2).
template <typename Scalar>
std::optional<Bipartition<Scalar>> bipartition_criterion(const DissimilarityMatrix<Scalar>& d) {
  const Index n = d.size();
  if (n < 4) return std::nullopt;

  // Prim on the dense graph.
  constexpr Index none = std::numeric_limits<Index>::max();
  std::vector<Scalar> key(n, std::numeric_limits<Scalar>::infinity());
  std::vector<Index> parent(n, none);
  std::vector<bool> done(n, false);
  key[0] = Scalar(0);
  Index heavy_child = none;
  for (Index step = 0; step < n; ++step) {
    Index v = none;
    for (Index u = 0; u < n; ++u) {
      if (!done[u] && (v == none || key[u] < key[v])) v = u;
    }
    done[v] = true;
    if (parent[v] != none && (heavy_child == none || key[v] > key[heavy_child])) heavy_child = v;
    const Scalar* row = d.column_data(v);
    for (Index u = 0; u < n; ++u) {
      if (!done[u] && row[u] < key[u]) {
        key[u] = row[u];
        parent[u] = v;
      }
    }
  }

  // Cutting the edge (heavy_child, parent) splits the tree; the side holding
  // heavy_child is its subtree.
  std::vector<int> side(n, -1);
  side[heavy_child] = 1;
  for (Index u = 0; u < n; ++u) {
    std::vector<Index> path;
    Index w = u;
    while (side[w] < 0 && parent[w] != none) {
      path.push_back(w);
      w = parent[w];
    }
    const int s = side[w] < 0 ? 0 : side[w];
    side[u] = s;
    for (Index p : path) side[p] = s;
  }
  if (side[0] == 1) {
    for (auto& s : side) s = 1 - s;
  }

  Bipartition<Scalar> b;
  for (Index u = 0; u < n; ++u) (side[u] == 0 ? b.near : b.far).push_back(u);
  if (b.near.size() < 2 || b.far.size() < 2) return std::nullopt;

  Scalar max_intra = Scalar(0);
  Scalar min_cross = std::numeric_limits<Scalar>::infinity();
  for (Index u = 0; u < n; ++u) {
    const Scalar* row = d.column_data(u);
    for (Index v = u + 1; v < n; ++v) {
      if (side[u] == side[v]) {
        max_intra = std::max(max_intra, row[v]);
      } else {
        min_cross = std::min(min_cross, row[v]);
      }
    }
  }
  if (!d.greater(min_cross, max_intra)) return std::nullopt;
  b.delta = max_intra;
  return b;
}

/// Every compatible order for a strict class, up to reversal. Both candidate
/// compositions from the construction are re-verified in O(n^2).
template <typename Scalar>
OrderSet<Scalar> compatible_orders(const DissimilarityMatrix<Scalar>& d, RobinsonClass c,
                                   VerifyOptions options = {}) {
  if (!is_strict(c)) {
    throw std::invalid_argument("order enumeration is only available for the strict classes");
  }
  const auto built = construct_order(d);
  OrderSet<Scalar> out;
  if (is_compatible(d, built.order, c, options)) out.orders.push_back(built.order);
  if (built.alternative && *built.alternative != built.order &&
      is_compatible(d, *built.alternative, c, options)) {
    out.orders.push_back(*built.alternative);
  }
  std::sort(out.orders.begin(), out.orders.end());
  if (out.orders.size() == 2) out.bipartition = bipartition_criterion(d);
  return out;
}

}  // namespace circrob
