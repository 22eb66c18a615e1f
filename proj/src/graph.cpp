#include "ngcheck/graph.hpp"

#include <algorithm>
#include <string>

namespace ngcheck {

namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [1, 62]");
  }
}

std::uint64_t reach_from(const Graph& g, int start, std::uint64_t within) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= 0 && v >= 0 && u < n && v < n && u != v && g.has_edge(u, v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    g.add_edge(u, v);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint outside vertex range");
  }
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint outside vertex range");
  }
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) { return complement(Graph(n)); }

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  Graph g(na + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + na, v + na);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  const int na = a.order();
  for (int u = 0; u < na; ++u) {
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, na + v);
  }
  return g;
}

Graph join_vertex_two_cliques(int n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("join_vertex_two_cliques needs odd n >= 3");
  }
  const int half = (n - 1) / 2;
  return join(disjoint_union(complete(half), complete(half)), empty_graph(1));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = g.vertices().mask;
  Graph c(n);
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t m = all & ~g.neighbors(v) & ~(std::uint64_t{1} << v); m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (u > v) c.add_edge(v, u);
    }
  }
  return c;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::uint64_t used = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((used >> p) & 1U)) throw std::invalid_argument("not a permutation");
    used |= std::uint64_t{1} << p;
  }
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  const auto members = keep.members();
  Graph out(static_cast<int>(members.size()));
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (g.has_edge(members[a], members[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return out;
}

int boundary_size(const Graph& g, VertexSet x) {
  const VertexSet all = g.vertices();
  if (x.empty() || (x.mask & all.mask) == all.mask) {
    throw std::invalid_argument("boundary needs a nonempty proper vertex subset");
  }
  if ((x.mask & ~all.mask) != 0) throw std::invalid_argument("vertex set exceeds graph order");
  const std::uint64_t outside = ~x.mask;
  int total = 0;
  for (std::uint64_t m = x.mask; m != 0; m &= m - 1) {
    total += std::popcount(g.neighbors(std::countr_zero(m)) & outside);
  }
  return total;
}

int volume(const Graph& g, VertexSet x) {
  if ((x.mask & ~g.vertices().mask) != 0) throw std::invalid_argument("vertex set exceeds graph order");
  int total = 0;
  for (std::uint64_t m = x.mask; m != 0; m &= m - 1) total += g.degree(std::countr_zero(m));
  return total;
}

bool is_connected(const Graph& g) {
  const std::uint64_t all = g.vertices().mask;
  return reach_from(g, 0, all) == all;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::uint64_t m = g.neighbors(v); m != 0; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int regular_degree(const Graph& g) {
  const int k = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != k) return -1;
  }
  return k;
}

bool is_k_regular(const Graph& g, int k) { return regular_degree(g) == k; }

VertexSet dominating_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) out.mask |= std::uint64_t{1} << v;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  std::uint64_t left = within.mask & g.vertices().mask;
  while (left != 0) {
    const std::uint64_t comp = reach_from(g, std::countr_zero(left), within.mask);
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_clique(const Graph& g, VertexSet x) {
  for (std::uint64_t m = x.mask; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    const std::uint64_t others = x.mask & ~(std::uint64_t{1} << v);
    if ((g.neighbors(v) & others) != others) return false;
  }
  return true;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  if (n > kMaxMaskOrder) throw std::invalid_argument("edge masks support n <= 11");
  Graph g(n);
  int slot = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++slot) {
      if ((mask >> slot) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t edge_mask(const Graph& g) {
  const int n = g.order();
  if (n > kMaxMaskOrder) throw std::invalid_argument("edge masks support n <= 11");
  std::uint64_t mask = 0;
  int slot = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++slot) {
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << slot;
    }
  }
  return mask;
}

}  // namespace ngcheck
