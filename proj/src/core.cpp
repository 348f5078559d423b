#include "circrob/core.hpp"

#include <numeric>

namespace circrob {

CircularOrder::CircularOrder(std::vector<Index> seq) : seq_(std::move(seq)), pos_(seq_.size()) {
  for (Index p = 0; p < seq_.size(); ++p) pos_[seq_[p]] = p;
}

CircularOrder CircularOrder::from_sequence(std::vector<Index> seq) {
  if (seq.empty()) throw InputError("circular order must contain at least one point");
  std::vector<bool> seen(seq.size(), false);
  for (Index v : seq) {
    if (v >= seq.size()) {
      throw InputError("order entry " + std::to_string(v) + " out of range for " +
                       std::to_string(seq.size()) + " points");
    }
    if (seen[v]) throw InputError("order repeats point " + std::to_string(v));
    seen[v] = true;
  }
  return CircularOrder(std::move(seq));
}

CircularOrder CircularOrder::identity(Index n) {
  std::vector<Index> seq(n);
  std::iota(seq.begin(), seq.end(), Index{0});
  return from_sequence(std::move(seq));
}

bool CircularOrder::between(Index u, Index v, Index w) const {
  const Index n = seq_.size();
  if (u >= n || v >= n || w >= n) throw InputError("point index out of range");
  if (u == v || v == w || u == w) return false;
  const Index pu = pos_[u];
  return (pos_[v] + n - pu) % n < (pos_[w] + n - pu) % n;
}

CircularOrder CircularOrder::reversed() const {
  return CircularOrder(std::vector<Index>(seq_.rbegin(), seq_.rend()));
}

CircularOrder CircularOrder::canonical() const {
  const Index n = seq_.size();
  std::vector<Index> out(n);
  if (n <= 2) {
    std::iota(out.begin(), out.end(), Index{0});
    return CircularOrder(std::move(out));
  }
  const Index start = pos_[0];
  const bool forward = seq_[(start + 1) % n] < seq_[(start + n - 1) % n];
  for (Index k = 0; k < n; ++k) {
    out[k] = forward ? seq_[(start + k) % n] : seq_[(start + n - k) % n];
  }
  return CircularOrder(std::move(out));
}

CircularOrder canonicalize(std::span<const Index> seq) {
  return CircularOrder::from_sequence(std::vector<Index>(seq.begin(), seq.end())).canonical();
}

bool same_up_to_reversal(const CircularOrder& a, const CircularOrder& b) {
  return a.size() == b.size() && a.canonical() == b.canonical();
}

bool chain_holds(const CircularOrder& order, std::span<const Index> points) {
  for (Index p : points) {
    if (p >= order.size()) throw InputError("point index out of range: " + std::to_string(p));
  }
  const Index m = points.size();
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      if (points[j] == points[i]) continue;
      for (Index k = j + 1; k < m; ++k) {
        if (points[k] == points[i] || points[k] == points[j]) continue;
        if (!order.between(points[i], points[j], points[k])) return false;
      }
    }
  }
  return true;
}

Arc Arc::complement() const {
  if (length == 0 || length >= n) throw std::logic_error("complement of a full or empty arc");
  return Arc{(start + length) % n, n - length, n};
}

std::vector<Index> Arc::members(const CircularOrder& order) const {
  std::vector<Index> out;
  out.reserve(length);
  for (Index i = 0; i < length; ++i) out.push_back(order.at(start + i));
  return out;
}

Arc arc_between(const CircularOrder& order, Index a, Index b) {
  const Index n = order.size();
  const Index pa = order.position_of(a);
  const Index pb = order.position_of(b);
  return Arc{pa, (pb + n - pa) % n + 1, n};
}

}  // namespace circrob
