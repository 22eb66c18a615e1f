#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngcheck/graph.hpp"

namespace ngcheck {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite, splittable sequence of graphs.
///
/// Every stream is addressed by a dense position range [0, positions()).
/// Workers take disjoint position ranges; concatenating their output in
/// range order reproduces sequential iteration exactly.
class GraphStream {
 public:
  enum class Source { labeled, representatives, graph6_file, explicit_list };
  using Filter = std::function<bool(const Graph&)>;

  static constexpr int kMaxLabeledOrder = 8;

  /// Every labeled graph on n vertices, by increasing upper-triangle edge mask.
  static GraphStream labeled(int n);
  /// One graph per labeled complement pair: the one whose mask is below its complement's.
  static GraphStream representatives(int n);
  /// Newline-separated graph6 records; every line is validated up front.
  static GraphStream graph6_file(const std::filesystem::path& path);
  static GraphStream from_graphs(std::vector<Graph> graphs, std::string provenance = "explicit");

  Source source() const { return source_; }
  /// Vertex count for labeled sources, 0 for corpora.
  int order() const { return order_; }
  std::uint64_t positions() const { return positions_; }
  /// Number of graphs yielded, when known without iterating (no filter applied).
  std::optional<std::uint64_t> total() const;
  const std::string& provenance() const { return provenance_; }

  /// Returns a stream yielding only the graphs accepted by `keep` (and any earlier filters).
  GraphStream filtered(Filter keep, const std::string& label) const;

  /// Graph at a position, ignoring filters.
  Graph at(std::uint64_t position) const;
  bool accepts(const Graph& g) const;

  /// Calls fn(position, graph) for each accepted graph with position in [begin, end).
  template <typename Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    end = std::min(end, positions_);
    for (std::uint64_t p = begin; p < end; ++p) {
      Graph g = at(p);
      if (accepts(g)) fn(p, g);
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for_each(0, positions_, std::forward<Fn>(fn));
  }

  std::vector<Graph> collect() const;
  std::uint64_t count() const;

 private:
  GraphStream() = default;

  Source source_ = Source::labeled;
  int order_ = 0;
  std::uint64_t positions_ = 0;
  std::string provenance_;
  std::shared_ptr<const std::vector<std::string>> records_;
  std::shared_ptr<const std::vector<Graph>> graphs_;
  std::vector<Filter> filters_;
};

GraphStream labeled_graphs(int n);
GraphStream complement_pair_representatives(int n);
GraphStream ingest_graph6(const std::filesystem::path& path);
GraphStream filter_k_regular(const GraphStream& stream, int k);
GraphStream filter_regular(const GraphStream& stream);

}  // namespace ngcheck
