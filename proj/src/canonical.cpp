#include "ngcheck/graph.hpp"

#include <algorithm>
#include <array>

namespace ngcheck {

namespace {

// Depth-first search over vertex orders. Placing vertex p[j] fixes column j of
// the upper triangle, so the bit string is compared column by column, each
// column read as a j-bit number with row 0 most significant. Branches whose
// prefix already exceeds the best complete string are cut.
class MinimalRelabeling {
 public:
  explicit MinimalRelabeling(const Graph& g) : g_(g), n_(g.order()) {}

  std::array<int, Graph::kMaxOrder> run() {
    search(0, 0, true);
    return best_order_;
  }

 private:
  // `tied`: the current prefix equals the best string's prefix. Whenever a
  // descendant leaf replaces the best, the prefix becomes tied again.
  void search(int depth, std::uint64_t used, bool tied) {
    if (depth == n_) {
      if (!have_best_ || !tied) {
        have_best_ = true;
        best_order_ = order_;
        std::copy(cols_.begin(), cols_.begin() + n_, best_cols_.begin());
        ++updates_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | (g_.has_edge(order_[i], v) ? 1U : 0U);
      bool child_tied = false;
      if (have_best_ && tied) {
        if (col > best_cols_[depth]) continue;
        child_tied = col == best_cols_[depth];
      }
      order_[depth] = v;
      cols_[depth] = col;
      const auto before = updates_;
      search(depth + 1, used | (std::uint64_t{1} << v), child_tied);
      if (updates_ != before) tied = true;
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::uint64_t updates_ = 0;
  std::array<int, Graph::kMaxOrder> order_{};
  std::array<int, Graph::kMaxOrder> best_order_{};
  std::array<std::uint64_t, Graph::kMaxOrder> cols_{};
  std::array<std::uint64_t, Graph::kMaxOrder> best_cols_{};
};

}  // namespace

std::string canonical_form(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw std::invalid_argument("canonical_form: order " + std::to_string(g.order()) +
                                " exceeds limit " + std::to_string(limit));
  }
  const auto order = MinimalRelabeling(g).run();
  // order[new] = old; permute() wants perm[old] = new.
  std::vector<int> perm(g.order());
  for (int k = 0; k < g.order(); ++k) perm[order[k]] = k;
  return encode_graph6(permute(g, perm));
}

std::string pair_canonical_form(const Graph& g, int limit) {
  return std::min(canonical_form(g, limit), canonical_form(complement(g), limit));
}

}  // namespace ngcheck
