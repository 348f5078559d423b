#pragma once

#include "circrob/core.hpp"

namespace circrob {

/// Four points read as the chain x < y < z < t of some circular order.
struct Quadruple {
  Index x, y, z, t;

  bool pairwise_distinct() const noexcept {
    return x != y && x != z && x != t && y != z && y != t && z != t;
  }
  /// (y, z, t, x): the same four points, chain started one step later.
  Quadruple rotated() const noexcept { return {y, z, t, x}; }
};

namespace detail {

inline void require_distinct(const Quadruple& q) {
  if (!q.pairwise_distinct()) {
    throw std::invalid_argument("strict four-point condition needs pairwise distinct points");
  }
}

template <typename Scalar>
Scalar one_side_bound(const DissimilarityMatrix<Scalar>& d, const Quadruple& q) {
  return std::min(std::max(d(q.x, q.y), d(q.y, q.z)), std::max(d(q.x, q.t), d(q.t, q.z)));
}

template <typename Scalar>
Scalar quasi_bound(const DissimilarityMatrix<Scalar>& d, const Quadruple& q) {
  return std::min(d(q.y, q.z), d(q.t, q.z));
}

}  // namespace detail

// d(x,z) >= min{max{d(x,y), d(y,z)}, max{d(x,t), d(t,z)}}
template <typename Scalar>
bool cr(const DissimilarityMatrix<Scalar>& d, const Quadruple& q) {
  return d.greater_equal(d(q.x, q.z), detail::one_side_bound(d, q));
}

template <typename Scalar>
bool scr(const DissimilarityMatrix<Scalar>& d, const Quadruple& q) {
  detail::require_distinct(q);
  return d.greater(d(q.x, q.z), detail::one_side_bound(d, q));
}

// d(x,z) >= min{d(y,z), d(t,z)}
template <typename Scalar>
bool qcr(const DissimilarityMatrix<Scalar>& d, const Quadruple& q) {
  return d.greater_equal(d(q.x, q.z), detail::quasi_bound(d, q));
}

template <typename Scalar>
bool sqcr(const DissimilarityMatrix<Scalar>& d, const Quadruple& q) {
  detail::require_distinct(q);
  return d.greater(d(q.x, q.z), detail::quasi_bound(d, q));
}

/// sqcr on all four rotations of a cyclically ordered distinct quadruple,
/// i.e. the quadruple is compatible for the strict quasi-circular condition.
template <typename Scalar>
bool sqcr_all_rotations(const DissimilarityMatrix<Scalar>& d, Quadruple q) {
  for (int r = 0; r < 4; ++r, q = q.rotated()) {
    if (!sqcr(d, q)) return false;
  }
  return true;
}

}  // namespace circrob
