#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circrob {

using Index = std::size_t;

/// Malformed user input (matrix text, order strings, generator parameters).
/// Carries the offending cell when one can be named.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what,
                      std::optional<Index> row = std::nullopt,
                      std::optional<Index> col = std::nullopt)
      : std::runtime_error(what), row_(row), col_(col) {}

  std::optional<Index> row() const noexcept { return row_; }
  std::optional<Index> col() const noexcept { return col_; }

 private:
  std::optional<Index> row_;
  std::optional<Index> col_;
};

/// A finite dissimilarity space stored as a dense symmetric matrix.
///
/// Construction validates the dissimilarity axioms: zero diagonal, strictly
/// positive off-diagonal values, symmetry up to `epsilon`. The lower triangle
/// is mirrored into the upper one so the stored matrix is exactly symmetric.
///
/// All comparisons used by the algorithms go through `less`, `equal`, ... so
/// that a single absolute tolerance coarsens equality consistently. With the
/// default tolerance of zero every comparison is exact.
template <typename Scalar = double>
class DissimilarityMatrix {
 public:
  using scalar_type = Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  DissimilarityMatrix() = default;

  explicit DissimilarityMatrix(Dense values, Scalar epsilon = Scalar(0))
      : values_(std::move(values)), epsilon_(epsilon) {
    validate_and_mirror();
  }

  Index size() const noexcept { return static_cast<Index>(values_.rows()); }

  Scalar operator()(Index i, Index j) const noexcept {
    return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Contiguous storage of column `j`; by symmetry this is also row `j`.
  const Scalar* column_data(Index j) const noexcept {
    return values_.data() + static_cast<std::ptrdiff_t>(j) * values_.rows();
  }

  const Dense& values() const noexcept { return values_; }
  Scalar epsilon() const noexcept { return epsilon_; }

  DissimilarityMatrix with_epsilon(Scalar epsilon) const {
    DissimilarityMatrix copy = *this;
    copy.epsilon_ = epsilon;
    return copy;
  }

  bool greater(Scalar a, Scalar b) const noexcept { return a - b > epsilon_; }
  bool less(Scalar a, Scalar b) const noexcept { return b - a > epsilon_; }
  bool greater_equal(Scalar a, Scalar b) const noexcept { return a - b >= -epsilon_; }
  bool less_equal(Scalar a, Scalar b) const noexcept { return b - a >= -epsilon_; }
  bool equal(Scalar a, Scalar b) const noexcept {
    return !greater(a, b) && !less(a, b);
  }

  friend bool operator==(const DissimilarityMatrix& a, const DissimilarityMatrix& b) {
    return a.epsilon_ == b.epsilon_ && a.values_.rows() == b.values_.rows() &&
           a.values_ == b.values_;
  }

 private:
  void validate_and_mirror();

  Dense values_;
  Scalar epsilon_ = Scalar(0);
};

namespace detail {

inline std::string cell(Index i, Index j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace detail

template <typename Scalar>
void DissimilarityMatrix<Scalar>::validate_and_mirror() {
  if (values_.rows() != values_.cols()) {
    throw InputError("dissimilarity matrix is not square: " +
                     std::to_string(values_.rows()) + "x" + std::to_string(values_.cols()));
  }
  if (values_.rows() == 0) throw InputError("dissimilarity matrix is empty");
  if (!(epsilon_ >= Scalar(0))) throw InputError("tolerance must be nonnegative");

  const Index n = size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Scalar v = (*this)(i, j);
      if (!std::isfinite(static_cast<double>(v))) {
        throw InputError("non-finite entry at " + detail::cell(i, j), i, j);
      }
      if (v < Scalar(0)) throw InputError("negative entry at " + detail::cell(i, j), i, j);
      if (i == j) {
        if (v > epsilon_) throw InputError("nonzero diagonal at " + detail::cell(i, j), i, j);
      } else if (v <= epsilon_) {
        throw InputError("zero dissimilarity between distinct points at " + detail::cell(i, j),
                         i, j);
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > epsilon_) {
        throw InputError("asymmetric entries at " + detail::cell(i, j) + " and " +
                             detail::cell(j, i),
                         i, j);
      }
    }
  }
  auto& m = values_;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    m(i, i) = Scalar(0);
    for (Eigen::Index j = 0; j < i; ++j) m(j, i) = m(i, j);
  }
}

/// Arrangement of the points 0..n-1 on a cycle, read counterclockwise.
///
/// The stored sequence keeps the orientation it was built with, because the
/// betweenness relation depends on it. `canonical()` picks the representative
/// of the rotation/reflection class (starts at 0, `seq[1] < seq[n-1]`), so
/// two orders are the same up to reversal iff their canonical forms compare
/// equal.
class CircularOrder {
 public:
  CircularOrder() = default;

  /// Throws InputError unless `seq` is a permutation of 0..n-1, n >= 1.
  static CircularOrder from_sequence(std::vector<Index> seq);
  static CircularOrder identity(Index n);

  Index size() const noexcept { return seq_.size(); }
  std::span<const Index> sequence() const noexcept { return seq_; }
  Index at(Index position) const noexcept { return seq_[position % seq_.size()]; }
  Index position_of(Index point) const {
    if (point >= pos_.size()) throw InputError("point index out of range: " + std::to_string(point));
    return pos_[point];
  }
  /// positions()[p] is the position of point p in sequence().
  std::span<const Index> positions() const noexcept { return pos_; }

  /// beta(u, v, w): the counterclockwise path from u to w passes through v.
  /// False unless u, v, w are distinct.
  bool between(Index u, Index v, Index w) const;

  CircularOrder reversed() const;
  CircularOrder canonical() const;
  bool is_canonical() const { return *this == canonical(); }

  friend bool operator==(const CircularOrder& a, const CircularOrder& b) {
    return a.seq_ == b.seq_;
  }
  friend auto operator<=>(const CircularOrder& a, const CircularOrder& b) {
    return a.seq_ <=> b.seq_;
  }

 private:
  explicit CircularOrder(std::vector<Index> seq);

  std::vector<Index> seq_;
  std::vector<Index> pos_;
};

CircularOrder canonicalize(std::span<const Index> seq);
bool same_up_to_reversal(const CircularOrder& a, const CircularOrder& b);

/// True iff every triple of pairwise-distinct entries of `points`, taken in
/// sequence order, is in betweenness relation. Repeated points are skipped.
bool chain_holds(const CircularOrder& order, std::span<const Index> points);

/// Contiguous run of `length` positions starting at position `start`.
struct Arc {
  Index start = 0;
  Index length = 0;
  Index n = 0;

  bool contains_position(Index p) const noexcept {
    return (p + n - start) % n < length;
  }
  bool contains(const CircularOrder& order, Index point) const {
    return contains_position(order.position_of(point));
  }
  /// The remaining positions; requires 1 <= length < n.
  Arc complement() const;
  std::vector<Index> members(const CircularOrder& order) const;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// The arc from `a` counterclockwise to `b`, both inclusive.
Arc arc_between(const CircularOrder& order, Index a, Index b);

template <typename Scalar>
struct FarthestSet {
  Scalar radius{};
  std::vector<Index> members;  // ascending
};

/// Eccentricity of `x` and its farthest neighbours.
template <typename Scalar>
FarthestSet<Scalar> farthest_set(const DissimilarityMatrix<Scalar>& d, Index x) {
  const Index n = d.size();
  if (n < 2) throw InputError("a single point has no farthest neighbour");
  if (x >= n) throw InputError("point index out of range: " + std::to_string(x));
  const Scalar* row = d.column_data(x);
  FarthestSet<Scalar> out;
  out.radius = *std::max_element(row, row + n);
  for (Index y = 0; y < n; ++y) {
    if (y != x && d.equal(row[y], out.radius)) out.members.push_back(y);
  }
  return out;
}

template <typename Scalar>
std::vector<FarthestSet<Scalar>> farthest_data(const DissimilarityMatrix<Scalar>& d) {
  std::vector<FarthestSet<Scalar>> out;
  out.reserve(d.size());
  for (Index x = 0; x < d.size(); ++x) out.push_back(farthest_set(d, x));
  return out;
}

}  // namespace circrob
