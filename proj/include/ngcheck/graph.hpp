#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ngcheck {

/// Subset of the vertices of a graph, one bit per vertex.
struct VertexSet {
  std::uint64_t mask = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t m) : mask(m) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr int size() const { return std::popcount(mask); }
  constexpr bool empty() const { return mask == 0; }
  constexpr bool contains(int v) const { return (mask >> v) & 1U; }
  constexpr VertexSet complement_in(int n) const { return VertexSet(full(n).mask & ~mask); }

  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
};

/// Simple undirected graph on at most 62 vertices with bitset adjacency rows.
///
/// Order 1 is accepted so that K1 can act as an operand of joins and unions;
/// every invariant computed on a graph (cuts, spectra, suites) requires n >= 2.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  explicit Graph(int n);

  /// Builds from an edge list; rejects loops, duplicates and out-of-range endpoints.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::full(n_); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_;
  std::array<std::uint64_t, kMaxOrder> adj_{};
};

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constructors.
Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
/// K1 joined with two disjoint cliques of order (n-1)/2; apex is vertex n-1.
Graph join_vertex_two_cliques(int n);

Graph complement(const Graph& g);
/// Relabels so that vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const int> perm);
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// |boundary(X)|, the number of edges with exactly one end in X.
int boundary_size(const Graph& g, VertexSet x);
int volume(const Graph& g, VertexSet x);

// Structural predicates.
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_k_regular(const Graph& g, int k);
/// Returns the common degree, or -1 if g is not regular.
int regular_degree(const Graph& g);
VertexSet dominating_vertices(const Graph& g);
/// Connected components ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
bool is_clique(const Graph& g, VertexSet x);

// graph6 codec.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Upper-triangle edge-slot masks, slot(i, j) = j(j-1)/2 + i for i < j. Needs n <= 11.
constexpr int kMaxMaskOrder = 11;
constexpr int edge_slot_count(int n) { return n * (n - 1) / 2; }
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g);

constexpr int kCanonicalLimit = 10;

/// Graph6 string of the relabeling whose upper-triangle bit string is
/// lexicographically minimal. Equal exactly for isomorphic graphs.
std::string canonical_form(const Graph& g, int limit = kCanonicalLimit);

/// Canonical identity of the unordered pair {g, complement(g)}.
std::string pair_canonical_form(const Graph& g, int limit = kCanonicalLimit);

}  // namespace ngcheck
