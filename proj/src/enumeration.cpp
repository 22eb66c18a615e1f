#include "ngcheck/enumeration.hpp"

#include <fstream>

namespace ngcheck {

namespace {

void check_labeled_order(int n) {
  if (n < 2 || n > GraphStream::kMaxLabeledOrder) {
    throw std::invalid_argument("labeled enumeration supports 2 <= n <= 8, got " + std::to_string(n));
  }
}

}  // namespace

GraphStream GraphStream::labeled(int n) {
  check_labeled_order(n);
  GraphStream s;
  s.source_ = Source::labeled;
  s.order_ = n;
  s.positions_ = std::uint64_t{1} << edge_slot_count(n);
  s.provenance_ = "labeled(n=" + std::to_string(n) + ")";
  return s;
}

GraphStream GraphStream::representatives(int n) {
  check_labeled_order(n);
  GraphStream s;
  s.source_ = Source::representatives;
  s.order_ = n;
  // mask < mask ^ full exactly when the top edge slot is clear, so the
  // representatives are the masks of the lower half.
  s.positions_ = std::uint64_t{1} << (edge_slot_count(n) - 1);
  s.provenance_ = "representatives(n=" + std::to_string(n) + ")";
  return s;
}

GraphStream GraphStream::graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open graph6 corpus " + path.string());
  auto records = std::make_shared<std::vector<std::string>>();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      const Graph g = parse_graph6(line);
      if (g.order() < 2) throw Graph6Error("graph6: order below 2");
    } catch (const Graph6Error& e) {
      throw CorpusError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    records->push_back(std::move(line));
  }
  if (in.bad()) throw CorpusError("read failure on " + path.string());
  GraphStream s;
  s.source_ = Source::graph6_file;
  s.positions_ = records->size();
  s.provenance_ = "graph6_file(" + path.string() + ", " + std::to_string(records->size()) + " graphs)";
  s.records_ = std::move(records);
  return s;
}

GraphStream GraphStream::from_graphs(std::vector<Graph> graphs, std::string provenance) {
  for (const auto& g : graphs) {
    if (g.order() < 2) throw std::invalid_argument("streams carry graphs with n >= 2");
  }
  GraphStream s;
  s.source_ = Source::explicit_list;
  s.positions_ = graphs.size();
  s.provenance_ = std::move(provenance);
  s.graphs_ = std::make_shared<const std::vector<Graph>>(std::move(graphs));
  return s;
}

std::optional<std::uint64_t> GraphStream::total() const {
  if (!filters_.empty()) return std::nullopt;
  return positions_;
}

GraphStream GraphStream::filtered(Filter keep, const std::string& label) const {
  GraphStream s = *this;
  s.filters_.push_back(std::move(keep));
  s.provenance_ += " | " + label;
  return s;
}

Graph GraphStream::at(std::uint64_t position) const {
  if (position >= positions_) throw std::out_of_range("stream position out of range");
  switch (source_) {
    case Source::labeled:
    case Source::representatives:
      return graph_from_edge_mask(order_, position);
    case Source::graph6_file:
      return parse_graph6((*records_)[position]);
    case Source::explicit_list:
      return (*graphs_)[position];
  }
  throw std::logic_error("unknown stream source");
}

bool GraphStream::accepts(const Graph& g) const {
  for (const auto& f : filters_) {
    if (!f(g)) return false;
  }
  return true;
}

std::vector<Graph> GraphStream::collect() const {
  std::vector<Graph> out;
  for_each([&](std::uint64_t, const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t GraphStream::count() const {
  if (auto t = total()) return *t;
  std::uint64_t c = 0;
  for_each([&](std::uint64_t, const Graph&) { ++c; });
  return c;
}

GraphStream labeled_graphs(int n) { return GraphStream::labeled(n); }

GraphStream complement_pair_representatives(int n) { return GraphStream::representatives(n); }

GraphStream ingest_graph6(const std::filesystem::path& path) { return GraphStream::graph6_file(path); }

GraphStream filter_k_regular(const GraphStream& stream, int k) {
  return stream.filtered([k](const Graph& g) { return is_k_regular(g, k); },
                         "k_regular(" + std::to_string(k) + ")");
}

GraphStream filter_regular(const GraphStream& stream) {
  return stream.filtered([](const Graph& g) { return regular_degree(g) >= 0; }, "regular");
}

}  // namespace ngcheck
