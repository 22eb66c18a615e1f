#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ngcheck/graph.hpp"

namespace ngcheck {

/// Nonnegative rational num/den kept in lowest terms. Ordering and equality
/// go through cross-multiplication; values here are bounded by n^2.
class ExactRatio {
 public:
  constexpr ExactRatio() = default;
  ExactRatio(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// A minimizing vertex subset and the ratio it achieves.
///
/// For the Cheeger short-circuit on a disconnected graph the witness is the
/// component of vertex 0; `denominator` is then the true smaller volume, which
/// may be 0 when that component is an isolated vertex, and `ratio` is 0.
struct CutWitness {
  VertexSet subset;
  std::uint64_t boundary = 0;
  std::uint64_t denominator = 1;
  ExactRatio ratio;
};

/// |boundary(X)| / min(|X|, |V \ X|).
ExactRatio isoperimetric_ratio(const Graph& g, VertexSet x);

/// Minimum isoperimetric ratio over 1 <= |X| <= n/2, scanned by increasing
/// size then increasing mask; the first minimizer in that order is the witness.
CutWitness isoperimetric_number(const Graph& g);

/// |boundary(X)| / min(vol(X), vol(V \ X)). Throws std::domain_error if the
/// smaller volume is zero.
ExactRatio cheeger_ratio(const Graph& g, VertexSet x);

/// Minimum Cheeger ratio. Disconnected graphs return 0 immediately; otherwise
/// every nonempty proper X containing vertex 0 is scanned by increasing size
/// then increasing mask.
CutWitness cheeger_constant(const Graph& g);

ExactRatio max_pair_isoperimetric(const Graph& g);
ExactRatio max_pair_cheeger(const Graph& g);

/// 1 / floor(n/2), the Cheeger pair bound.
ExactRatio cheeger_pair_bound(int n);

}  // namespace ngcheck
