#include "ngcheck/cuts.hpp"

#include <numeric>

namespace ngcheck {

namespace {

void require_order(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("cut invariants need n >= 2");
}

void require_proper(const Graph& g, VertexSet x) {
  const std::uint64_t all = g.vertices().mask;
  if (x.empty() || (x.mask & all) == all) {
    throw std::invalid_argument("ratio needs a nonempty proper vertex subset");
  }
  if ((x.mask & ~all) != 0) throw std::invalid_argument("vertex set exceeds graph order");
}

// Next larger integer with the same popcount.
constexpr std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

// Calls fn(mask) for every k-subset of the low `bits` bits in increasing order;
// stops early when fn returns false.
template <typename Fn>
bool for_each_k_subset(int bits, int k, Fn&& fn) {
  if (k == 0) return fn(std::uint64_t{0});
  if (k > bits) return true;
  const std::uint64_t limit = std::uint64_t{1} << bits;
  for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < limit; m = next_same_popcount(m)) {
    if (!fn(m)) return false;
  }
  return true;
}

int raw_boundary(const Graph& g, std::uint64_t x) {
  const std::uint64_t outside = ~x;
  int total = 0;
  for (std::uint64_t m = x; m != 0; m &= m - 1) {
    total += std::popcount(g.neighbors(std::countr_zero(m)) & outside);
  }
  return total;
}

int raw_volume(const Graph& g, std::uint64_t x) {
  int total = 0;
  for (std::uint64_t m = x; m != 0; m &= m - 1) total += g.degree(std::countr_zero(m));
  return total;
}

}  // namespace

ExactRatio::ExactRatio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("ExactRatio with zero denominator");
  const std::uint64_t d = std::gcd(num, den);
  num_ = num / d;
  den_ = den / d;
}

std::string ExactRatio::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExactRatio isoperimetric_ratio(const Graph& g, VertexSet x) {
  require_order(g);
  require_proper(g, x);
  const int size = x.size();
  return ExactRatio(static_cast<std::uint64_t>(raw_boundary(g, x.mask)),
                    static_cast<std::uint64_t>(std::min(size, g.order() - size)));
}

CutWitness isoperimetric_number(const Graph& g) {
  require_order(g);
  const int n = g.order();
  std::uint64_t best_mask = 0;
  std::uint64_t best_b = 0;
  std::uint64_t best_d = 1;
  bool found = false;
  for (int k = 1; k <= n / 2; ++k) {
    const bool go_on = for_each_k_subset(n, k, [&](std::uint64_t x) {
      const auto b = static_cast<std::uint64_t>(raw_boundary(g, x));
      // denominator is k since k <= n/2
      if (!found || b * best_d < best_b * static_cast<std::uint64_t>(k)) {
        found = true;
        best_mask = x;
        best_b = b;
        best_d = static_cast<std::uint64_t>(k);
      }
      return best_b != 0;
    });
    if (!go_on) break;
  }
  return CutWitness{VertexSet(best_mask), best_b, best_d, ExactRatio(best_b, best_d)};
}

ExactRatio cheeger_ratio(const Graph& g, VertexSet x) {
  require_order(g);
  require_proper(g, x);
  const int vol_x = raw_volume(g, x.mask);
  const int vol_rest = raw_volume(g, x.complement_in(g.order()).mask);
  const int smaller = std::min(vol_x, vol_rest);
  if (smaller == 0) {
    throw std::domain_error("Cheeger ratio undefined: a side has zero volume");
  }
  return ExactRatio(static_cast<std::uint64_t>(raw_boundary(g, x.mask)),
                    static_cast<std::uint64_t>(smaller));
}

CutWitness cheeger_constant(const Graph& g) {
  require_order(g);
  const int n = g.order();
  const std::uint64_t all = g.vertices().mask;
  if (!is_connected(g)) {
    const VertexSet first = components(g).front();
    const auto smaller = static_cast<std::uint64_t>(
        std::min(volume(g, first), volume(g, first.complement_in(n))));
    return CutWitness{first, 0, smaller, ExactRatio(0, 1)};
  }

  int total_volume = 0;
  for (int v = 0; v < n; ++v) total_volume += g.degree(v);

  std::uint64_t best_mask = 0;
  std::uint64_t best_b = 0;
  std::uint64_t best_d = 1;
  bool found = false;
  // X always holds vertex 0; the remaining k-1 members come from vertices 1..n-1.
  for (int k = 1; k < n; ++k) {
    for_each_k_subset(n - 1, k - 1, [&](std::uint64_t rest) {
      const std::uint64_t x = (rest << 1) | 1U;
      if (x == all) return true;
      const int vol_x = raw_volume(g, x);
      const auto d = static_cast<std::uint64_t>(std::min(vol_x, total_volume - vol_x));
      const auto b = static_cast<std::uint64_t>(raw_boundary(g, x));
      if (!found || b * best_d < best_b * d) {
        found = true;
        best_mask = x;
        best_b = b;
        best_d = d;
      }
      return true;
    });
  }
  return CutWitness{VertexSet(best_mask), best_b, best_d, ExactRatio(best_b, best_d)};
}

ExactRatio max_pair_isoperimetric(const Graph& g) {
  return std::max(isoperimetric_number(g).ratio, isoperimetric_number(complement(g)).ratio);
}

ExactRatio max_pair_cheeger(const Graph& g) {
  return std::max(cheeger_constant(g).ratio, cheeger_constant(complement(g)).ratio);
}

ExactRatio cheeger_pair_bound(int n) {
  if (n < 2) throw std::invalid_argument("cheeger_pair_bound needs n >= 2");
  return ExactRatio(1, static_cast<std::uint64_t>(n / 2));
}

}  // namespace ngcheck
