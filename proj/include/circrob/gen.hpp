#pragma once

#include "circrob/core.hpp"
#include "circrob/verify.hpp"

#include <cstdint>
#include <map>
#include <numbers>
#include <random>

namespace circrob {

enum class CircleMetric { Arc, Chord };

/// Raised when a randomized generator cannot produce a valid instance within
/// its retry budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <typename Scalar>
DissimilarityMatrix<Scalar> from_function(Index n, auto&& dist) {
  typename DissimilarityMatrix<Scalar>::Dense m(n, n);
  for (Index i = 0; i < n; ++i) {
    m(i, i) = Scalar(0);
    for (Index j = 0; j < i; ++j) m(i, j) = m(j, i) = dist(i, j);
  }
  return DissimilarityMatrix<Scalar>(std::move(m));
}

}  // namespace detail

/// Points on a circle, labelled in angle order.
///
/// Without `angles` the points are evenly spaced: the arc metric then uses
/// unit spacing (circumference n) and the chord metric the unit circle. Both
/// read distances from a per-offset table, so symmetric offsets tie exactly.
/// With `angles` (radians, strictly increasing in [0, 2*pi)) the unit circle
/// is used for both metrics.
template <typename Scalar = double>
DissimilarityMatrix<Scalar> circle_instance(Index n, CircleMetric metric,
                                            const std::optional<std::vector<double>>& angles = {}) {
  if (n < 1) throw InputError("circle instance needs at least one point");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!angles) {
    std::vector<Scalar> table(n / 2 + 1, Scalar(0));
    for (Index m = 1; m < table.size(); ++m) {
      table[m] = metric == CircleMetric::Arc
                     ? static_cast<Scalar>(m)
                     : static_cast<Scalar>(2.0 * std::sin(std::numbers::pi * static_cast<double>(m) /
                                                          static_cast<double>(n)));
    }
    return detail::from_function<Scalar>(n, [&](Index i, Index j) {
      const Index gap = i - j;
      return table[std::min(gap, n - gap)];
    });
  }
  const auto& a = *angles;
  if (a.size() != n) throw InputError("expected " + std::to_string(n) + " angles");
  for (Index i = 0; i < n; ++i) {
    if (!(a[i] >= 0.0 && a[i] < two_pi)) throw InputError("angle out of [0, 2pi) at " + std::to_string(i));
    if (i > 0 && !(a[i] > a[i - 1])) throw InputError("angles must be strictly increasing");
  }
  return detail::from_function<Scalar>(n, [&](Index i, Index j) {
    const double gap = std::abs(a[i] - a[j]);
    const double arc = std::min(gap, two_pi - gap);
    return static_cast<Scalar>(metric == CircleMetric::Arc ? arc : 2.0 * std::sin(arc / 2.0));
  });
}

/// Angles near the even spacing, each displaced by up to `jitter` times the
/// spacing (jitter < 0.5), which rules out distance ties in practice.
inline std::vector<double> jittered_angles(Index n, double jitter, std::uint64_t seed) {
  if (!(jitter >= 0.0 && jitter < 0.5)) throw InputError("jitter must lie in [0, 0.5)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-jitter, jitter);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::vector<double> out(n);
  for (Index i = 0; i < n; ++i) {
    const double shift = i == 0 ? std::abs(u(rng)) : u(rng);
    out[i] = step * (static_cast<double>(i) + shift);
  }
  return out;
}

/// Rows (0,1,2,3), (1,0,3,2), (2,3,0,1), (3,2,1,0): strictly quasi-circular
/// for the order 0,1,2,3 without being strictly circular for it.
template <typename Scalar = double>
DissimilarityMatrix<Scalar> counterexample_fixture() {
  typename DissimilarityMatrix<Scalar>::Dense m(4, 4);
  m << 0, 1, 2, 3,
       1, 0, 3, 2,
       2, 3, 0, 1,
       3, 2, 1, 0;
  return DissimilarityMatrix<Scalar>(std::move(m));
}

/// Point i of `d` becomes point perm[i] of the result.
template <typename Scalar>
DissimilarityMatrix<Scalar> relabel(const DissimilarityMatrix<Scalar>& d,
                                    std::span<const Index> perm) {
  const Index n = d.size();
  const auto check = CircularOrder::from_sequence(std::vector<Index>(perm.begin(), perm.end()));
  if (check.size() != n) throw InputError("relabelling has the wrong size");
  typename DissimilarityMatrix<Scalar>::Dense m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(perm[i], perm[j]) = d(i, j);
  return DissimilarityMatrix<Scalar>(std::move(m), d.epsilon());
}

/// Independent uniform jitter in [-epsilon, epsilon] on each unordered pair,
/// kept strictly positive. Deterministic per seed.
template <typename Scalar>
DissimilarityMatrix<Scalar> perturb(const DissimilarityMatrix<Scalar>& d, double epsilon,
                                    std::uint64_t seed) {
  if (!(epsilon >= 0.0)) throw InputError("perturbation magnitude must be nonnegative");
  if (epsilon == 0.0) return d;
  const Index n = d.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-epsilon, epsilon);
  typename DissimilarityMatrix<Scalar>::Dense m = d.values();
  const Scalar floor = std::max(std::numeric_limits<Scalar>::min(), d.epsilon() * Scalar(2));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j) {
      const Scalar v = std::max(floor, static_cast<Scalar>(m(i, j) + u(rng)));
      m(i, j) = m(j, i) = v;
    }
  return DissimilarityMatrix<Scalar>(std::move(m), d.epsilon());
}

namespace detail {

/// Random strictly unimodal sequence: strictly up to a peak, an optional
/// repeat of the peak value, strictly down. Values lie in [0, 1.5 * len].
inline std::vector<double> unimodal_sequence(Index len, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> step(0.5, 1.5);
  std::uniform_int_distribution<Index> peak_at(0, len - 1);
  std::bernoulli_distribution twin(0.25);
  const Index peak = peak_at(rng);
  const bool plateau = peak + 1 < len && twin(rng);
  std::vector<double> out(len, 0.0);
  double v = 0.0;
  for (Index i = 1; i <= peak; ++i) out[i] = v += step(rng);
  for (Index i = peak + 1; i < len; ++i) {
    if (!(i == peak + 1 && plateau)) v -= step(rng);
    out[i] = v;
  }
  const double lo = *std::min_element(out.begin(), out.end());
  for (auto& x : out) x -= lo;
  return out;
}

}  // namespace detail

/// Two blocks N (k points) and F (l points), each a line metric with gaps in
/// [0.5, 1.5] and diameter at most delta, with every cross distance above
/// delta and shaped unimodally on both sides. Such spaces have exactly the two
/// compatible orders N ++ F and N ++ reverse(F). Labels are shuffled; N is the
/// block holding point 0 afterwards. Each draw is checked by verification and
/// redrawn up to `retries` times.
template <typename Scalar = double>
DissimilarityMatrix<Scalar> two_cluster_instance(Index k, Index l, std::uint64_t seed,
                                                 int retries = 32) {
  if (k < 2 || l < 2) throw InputError("two-cluster instance needs blocks of size at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gap(0.5, 1.5);
  const Index n = k + l;
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<double> p(n, 0.0);
    for (Index i = 1; i < k; ++i) p[i] = p[i - 1] + gap(rng);
    for (Index j = k + 1; j < n; ++j) p[j] = p[j - 1] + gap(rng);
    const double delta = std::max(p[k - 1], p[n - 1]);
    const auto f = detail::unimodal_sequence(k, rng);
    const auto g = detail::unimodal_sequence(l, rng);
    auto base = detail::from_function<Scalar>(n, [&](Index i, Index j) {
      if ((i < k) == (j < k)) return static_cast<Scalar>(std::abs(p[i] - p[j]));
      const Index a = std::min(i, j);
      const Index b = std::max(i, j) - k;
      return static_cast<Scalar>(delta + 1.0 + f[a] + g[b]);
    });

    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    auto d = relabel(base, perm);

    std::vector<Index> forward, backward;
    for (Index i = 0; i < k; ++i) forward.push_back(perm[i]);
    backward = forward;
    for (Index j = k; j < n; ++j) forward.push_back(perm[j]);
    for (Index j = n; j-- > k;) backward.push_back(perm[j]);
    const auto o1 = CircularOrder::from_sequence(forward);
    const auto o2 = CircularOrder::from_sequence(backward);
    if (is_strictly_unimodal(d, o1).ok && is_strictly_unimodal(d, o2).ok) return d;
  }
  throw GenerationError("two-cluster generation failed after " + std::to_string(retries) +
                        " attempts");
}

/// Recipe for a generated instance; written next to emitted matrices.
struct GeneratorSpec {
  std::string kind = "circle-chord";  // circle-arc | circle-chord | two-cluster | perturbed | fixture
  Index n = 10;
  std::uint64_t seed = 1;
  double epsilon = 0.0;
  std::map<std::string, double> params;
};

/// Builds the instance described by `spec`.
///
/// circle-arc, circle-chord: evenly spaced unless params["jitter"] > 0.
/// two-cluster: params["k"] points in the first block (default n / 2).
/// perturbed: a chord circle jittered by `epsilon`.
/// fixture: the 4-point counterexample (n must be 4).
/// A positive `epsilon` perturbs every kind except perturbed, which already
/// uses it.
DissimilarityMatrix<double> generate(const GeneratorSpec& spec);

}  // namespace circrob
