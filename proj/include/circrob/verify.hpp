#pragma once

#include "circrob/core.hpp"

#include <cstdint>
#include <limits>
#include <string_view>
#include <thread>
#include <utility>

namespace circrob {

enum class Strictness { NonStrict, Strict };

/// The four compatibility notions a circular order can be checked against.
enum class RobinsonClass { Quasi, StrictQuasi, Circular, StrictCircular };

std::string_view to_string(RobinsonClass c) noexcept;
/// Accepts "quasi", "strict-quasi", "circular", "strict-circular".
RobinsonClass parse_robinson_class(std::string_view text);

inline bool is_strict(RobinsonClass c) noexcept {
  return c == RobinsonClass::StrictQuasi || c == RobinsonClass::StrictCircular;
}

struct UnimodalityReport {
  bool ok = true;
  std::optional<Index> violating_row;
  /// Positions (in the order) of the two consecutive entries of the
  /// violating row where the required shape breaks.
  std::optional<std::pair<Index, Index>> violating_positions;
  /// Per point: how many entries of its row attain the row maximum.
  std::vector<Index> max_run_lengths;
};

enum class CrossingPattern {
  FarthestFirst,  // x < x' < y < y'
  OtherFirst,     // x < y' < y < x'
};

/// Two non-crossing farthest-neighbour chords xx' and yy'.
struct CrossingWitness {
  Index x = 0, y = 0, x_prime = 0, y_prime = 0;
  CrossingPattern pattern = CrossingPattern::FarthestFirst;

  friend bool operator==(const CrossingWitness&, const CrossingWitness&) = default;
};

struct ClassificationReport {
  bool quasi = false;
  bool strict_quasi = false;
  bool circular = false;
  bool strict_circular = false;
  UnimodalityReport unimodality;
  UnimodalityReport strict_unimodality;
  std::optional<CrossingWitness> crossing;
  std::optional<CrossingWitness> strict_crossing;

  bool holds(RobinsonClass c) const noexcept {
    switch (c) {
      case RobinsonClass::Quasi: return quasi;
      case RobinsonClass::StrictQuasi: return strict_quasi;
      case RobinsonClass::Circular: return circular;
      case RobinsonClass::StrictCircular: return strict_circular;
    }
    return false;
  }
};

struct VerifyOptions {
  /// Worker threads for the row and pair sweeps; 0 picks the hardware
  /// concurrency. Results do not depend on this value.
  unsigned threads = 1;
};

namespace detail {

/// Shape of one row of the matrix read circularly from the diagonal, for
/// both the plain and the strict unimodality notion at once.
struct RowProfile {
  bool ok[2] = {true, true};  // [NonStrict, Strict]
  Index bad_from[2] = {0, 0};
  Index bad_to[2] = {0, 0};
  /// Offsets (1..n-1, counted from the row's own position) of the first
  /// and last maximal entries.
  Index far_first = 0;
  Index far_last = 0;
  Index max_count = 0;
};

template <typename Scalar>
RowProfile scan_row(const DissimilarityMatrix<Scalar>& d, const CircularOrder& order, Index x) {
  RowProfile out;
  const Index n = order.size();
  if (n < 2) return out;
  const Index* seq = order.sequence().data();
  const Index px = order.positions()[x];
  const Scalar* row = d.column_data(x);
  auto value_at = [&](Index offset) {
    Index p = px + offset;
    if (p >= n) p -= n;
    return row[seq[p]];
  };

  enum Phase { Rising, Plateau, Falling };
  Phase loose = Rising;
  Phase strict = Rising;
  Scalar best = value_at(1);
  Index arg = 1;
  Scalar prev = best;
  Index prev_pos = (px + 1) % n;
  for (Index k = 2; k < n; ++k) {
    Index p = px + k;
    if (p >= n) p -= n;
    const Scalar v = row[seq[p]];
    if (v > best) {
      best = v;
      arg = k;
    }
    if (out.ok[0]) {
      if (loose == Rising) {
        if (d.less(v, prev)) loose = Falling;
      } else if (d.greater(v, prev)) {
        out.ok[0] = false;
        out.bad_from[0] = prev_pos;
        out.bad_to[0] = p;
      }
    }
    if (out.ok[1]) {
      bool fail = false;
      switch (strict) {
        case Rising:
          if (d.equal(v, prev)) {
            strict = Plateau;
          } else if (d.less(v, prev)) {
            strict = Falling;
          }
          break;
        case Plateau:
        case Falling:
          if (d.less(v, prev)) {
            strict = Falling;
          } else {
            fail = true;
          }
          break;
      }
      if (fail) {
        out.ok[1] = false;
        out.bad_from[1] = prev_pos;
        out.bad_to[1] = p;
      }
    }
    prev = v;
    prev_pos = p;
  }

  if (out.ok[0]) {
    // Maximal entries are contiguous around the argmax.
    Index lo = arg, hi = arg;
    while (lo > 1 && d.equal(value_at(lo - 1), best)) --lo;
    while (hi + 1 < n && d.equal(value_at(hi + 1), best)) ++hi;
    out.far_first = lo;
    out.far_last = hi;
    out.max_count = hi - lo + 1;
  } else {
    out.far_first = arg;
    out.far_last = arg;
    for (Index k = 1; k < n; ++k) out.max_count += d.equal(value_at(k), best) ? 1 : 0;
  }
  return out;
}

template <typename Fn>
void parallel_chunks(Index count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<Index>(threads, std::max<Index>(count, 1)));
  if (threads <= 1) {
    fn(Index{0}, count, 0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const Index chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const Index lo = std::min(count, t * chunk);
    const Index hi = std::min(count, lo + chunk);
    pool.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

template <typename Scalar>
std::vector<RowProfile> row_profiles(const DissimilarityMatrix<Scalar>& d,
                                     const CircularOrder& order, unsigned threads) {
  std::vector<RowProfile> rows(order.size());
  parallel_chunks(order.size(), threads, [&](Index lo, Index hi, unsigned) {
    for (Index x = lo; x < hi; ++x) rows[x] = scan_row(d, order, x);
  });
  return rows;
}

inline UnimodalityReport make_unimodality_report(const std::vector<RowProfile>& rows,
                                                 Strictness s) {
  const int m = s == Strictness::Strict ? 1 : 0;
  UnimodalityReport report;
  report.max_run_lengths.reserve(rows.size());
  for (Index x = 0; x < rows.size(); ++x) {
    report.max_run_lengths.push_back(rows[x].max_count);
    if (report.ok && !rows[x].ok[m]) {
      report.ok = false;
      report.violating_row = x;
      report.violating_positions = std::make_pair(rows[x].bad_from[m], rows[x].bad_to[m]);
    }
  }
  return report;
}

struct Span {
  std::int64_t lo, hi;
  bool empty() const noexcept { return lo > hi; }
  bool contains(std::int64_t v) const noexcept { return lo <= v && v <= hi; }
};

inline Span intersect(Span a, Span b) noexcept {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

/// Smallest element of `a` outside `excluded`, if any.
inline std::optional<std::int64_t> first_outside(Span a, Span excluded) noexcept {
  if (a.empty()) return std::nullopt;
  if (excluded.empty() || !excluded.contains(a.lo)) return a.lo;
  if (excluded.hi < a.hi) return excluded.hi + 1;
  return std::nullopt;
}

constexpr Span kEmptySpan{1, 0};

/// Looks for farthest-neighbour chords xx', yy' (x' in F_x, y' in F_y) that do
/// not cross, in one of the two orientations x<x'<y<y' or x<y'<y<x'. The
/// farthest sets are the arcs recorded in `rows`. In the non-strict mode the
/// pair must also avoid x, x' in F_y and y, y' in F_x.
inline std::optional<CrossingWitness> find_crossing(const CircularOrder& order,
                                                    const std::vector<RowProfile>& rows,
                                                    Strictness s, unsigned threads) {
  const Index n = order.size();
  if (n < 4) return std::nullopt;
  const Index* seq = order.sequence().data();
  const Index* pos = order.positions().data();
  const auto N = static_cast<std::int64_t>(n);
  const bool strict = s == Strictness::Strict;

  auto wrap = [N](std::int64_t v) { return ((v % N) + N) % N; };

  auto check_pair = [&](Index x, Index y) -> std::optional<CrossingWitness> {
    const auto px = static_cast<std::int64_t>(pos[x]);
    const auto py = static_cast<std::int64_t>(pos[y]);
    const std::int64_t oy = wrap(py - px);  // y seen from x
    const std::int64_t ox = N - oy;         // x seen from y
    const Span fx{static_cast<std::int64_t>(rows[x].far_first),
                  static_cast<std::int64_t>(rows[x].far_last)};
    const Span fy{static_cast<std::int64_t>(rows[y].far_first),
                  static_cast<std::int64_t>(rows[y].far_last)};
    Span fy_from_x = kEmptySpan;
    Span fx_from_y = kEmptySpan;
    if (!strict) {
      if (fx.contains(oy) || fy.contains(ox)) return std::nullopt;
      fy_from_x = {wrap(oy + fy.lo), wrap(oy + fy.hi)};
      fx_from_y = {wrap(ox + fx.lo), wrap(ox + fx.hi)};
    }
    auto point = [&](std::int64_t base, std::int64_t offset) {
      return seq[static_cast<Index>(wrap(base + offset))];
    };
    // x < x' < y < y'
    if (auto xp = first_outside(intersect(fx, {1, oy - 1}), fy_from_x)) {
      if (auto yp = first_outside(intersect(fy, {1, ox - 1}), fx_from_y)) {
        return CrossingWitness{x, y, point(px, *xp), point(py, *yp),
                               CrossingPattern::FarthestFirst};
      }
    }
    // x < y' < y < x'
    if (auto yp = first_outside(intersect(fy, {ox + 1, N - 1}), fx_from_y)) {
      if (auto xp = first_outside(intersect(fx, {oy + 1, N - 1}), fy_from_x)) {
        return CrossingWitness{x, y, point(px, *xp), point(py, *yp),
                               CrossingPattern::OtherFirst};
      }
    }
    return std::nullopt;
  };

  if (threads == 1) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = x + 1; y < n; ++y) {
        if (auto w = check_pair(x, y)) return w;
      }
    }
    return std::nullopt;
  }
  std::vector<std::optional<CrossingWitness>> found(
      std::max(1u, threads == 0 ? std::thread::hardware_concurrency() : threads));
  std::vector<Index> chunk_lo(found.size(), n);
  parallel_chunks(n, static_cast<unsigned>(found.size()), [&](Index lo, Index hi, unsigned t) {
    chunk_lo[t] = lo;
    for (Index x = lo; x < hi && !found[t]; ++x) {
      for (Index y = x + 1; y < n; ++y) {
        if (auto w = check_pair(x, y)) {
          found[t] = w;
          break;
        }
      }
    }
  });
  std::optional<CrossingWitness> best;
  Index best_lo = n;
  for (Index t = 0; t < found.size(); ++t) {
    if (found[t] && chunk_lo[t] < best_lo) {
      best = found[t];
      best_lo = chunk_lo[t];
    }
  }
  return best;
}

}  // namespace detail

/// Rows read circularly from the diagonal are non-decreasing up to a maximal
/// plateau and non-increasing afterwards. Equivalent to `order` being
/// compatible with the quasi-circular Robinson condition.
template <typename Scalar>
UnimodalityReport is_unimodal(const DissimilarityMatrix<Scalar>& d, const CircularOrder& order,
                              VerifyOptions options = {}) {
  return detail::make_unimodality_report(detail::row_profiles(d, order, options.threads),
                                         Strictness::NonStrict);
}

/// Rows strictly increase, have one or two maximal entries, then strictly
/// decrease. Equivalent to compatibility with the strict quasi-circular
/// condition.
template <typename Scalar>
UnimodalityReport is_strictly_unimodal(const DissimilarityMatrix<Scalar>& d,
                                       const CircularOrder& order, VerifyOptions options = {}) {
  return detail::make_unimodality_report(detail::row_profiles(d, order, options.threads),
                                         Strictness::Strict);
}

/// Non-crossing farthest-neighbour chords, which rule out (strict) circular
/// compatibility of an order that is already (strictly) unimodal. Throws
/// std::invalid_argument when the unimodality precondition fails.
template <typename Scalar>
std::optional<CrossingWitness> crossing_violation(const DissimilarityMatrix<Scalar>& d,
                                                  const CircularOrder& order, Strictness s,
                                                  VerifyOptions options = {}) {
  if (d.size() != order.size()) throw std::invalid_argument("order size does not match matrix");
  const auto rows = detail::row_profiles(d, order, options.threads);
  const int m = s == Strictness::Strict ? 1 : 0;
  for (const auto& r : rows) {
    if (!r.ok[m]) throw std::invalid_argument("crossing test needs a unimodal order");
  }
  return detail::find_crossing(order, rows, s, options.threads);
}

/// Linear (strict) Robinson check of the points of `seq` in sequence order:
/// every row moving away from the diagonal is (strictly) non-decreasing.
template <typename Scalar>
bool is_linear_robinson(const DissimilarityMatrix<Scalar>& d, std::span<const Index> seq,
                        Strictness s) {
  std::vector<bool> seen(d.size(), false);
  for (Index v : seq) {
    if (v >= d.size()) throw InputError("point index out of range: " + std::to_string(v));
    if (seen[v]) throw std::invalid_argument("linear sequence repeats a point");
    seen[v] = true;
  }
  const bool strict = s == Strictness::Strict;
  auto rises = [&](Scalar from, Scalar to) {
    return strict ? d.greater(to, from) : d.greater_equal(to, from);
  };
  const Index m = seq.size();
  for (Index i = 0; i < m; ++i) {
    const Scalar* row = d.column_data(seq[i]);
    for (Index j = i + 2; j < m; ++j) {
      if (!rises(row[seq[j - 1]], row[seq[j]])) return false;
    }
    for (Index j = i; j-- > 1;) {
      if (!rises(row[seq[j]], row[seq[j - 1]])) return false;
    }
  }
  return true;
}

/// All four compatibility flags of `order`, each with a witness when false.
template <typename Scalar>
ClassificationReport verify(const DissimilarityMatrix<Scalar>& d, const CircularOrder& order,
                            VerifyOptions options = {}) {
  if (d.size() != order.size()) throw InputError("order size does not match matrix");
  const auto rows = detail::row_profiles(d, order, options.threads);
  ClassificationReport r;
  r.unimodality = detail::make_unimodality_report(rows, Strictness::NonStrict);
  r.strict_unimodality = detail::make_unimodality_report(rows, Strictness::Strict);
  r.quasi = r.unimodality.ok;
  r.strict_quasi = r.strict_unimodality.ok;
  if (r.quasi) {
    r.crossing = detail::find_crossing(order, rows, Strictness::NonStrict, options.threads);
    r.circular = !r.crossing;
  }
  if (r.strict_quasi) {
    r.strict_crossing = detail::find_crossing(order, rows, Strictness::Strict, options.threads);
    r.strict_circular = !r.strict_crossing;
  }
  return r;
}

/// Single-flag check, skipping work the requested class does not need.
template <typename Scalar>
bool is_compatible(const DissimilarityMatrix<Scalar>& d, const CircularOrder& order,
                   RobinsonClass c, VerifyOptions options = {}) {
  if (d.size() != order.size()) throw InputError("order size does not match matrix");
  const auto rows = detail::row_profiles(d, order, options.threads);
  const Strictness s = is_strict(c) ? Strictness::Strict : Strictness::NonStrict;
  const int m = s == Strictness::Strict ? 1 : 0;
  for (const auto& row : rows) {
    if (!row.ok[m]) return false;
  }
  if (c == RobinsonClass::Quasi || c == RobinsonClass::StrictQuasi) return true;
  return !detail::find_crossing(order, rows, s, options.threads);
}

}  // namespace circrob
