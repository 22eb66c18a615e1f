#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ngcheck/cuts.hpp"
#include "ngcheck/enumeration.hpp"
#include "ngcheck/graph.hpp"
#include "ngcheck/parallel.hpp"
#include "ngcheck/spectra.hpp"
#include "ngcheck/verify.hpp"

namespace fs = std::filesystem;

namespace ngcheck::cli {

namespace {

struct RunConfig {
  int order = 0;
  std::string source = "representatives";
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::string out;
  std::string suite = "all";
  double tol_eig = 1e-9;
  bool resume = false;
  std::string figure = "all";
  std::string format = "text";
  std::uint64_t chunk_size = 4096;
  std::uint64_t checkpoint_every = std::uint64_t{1} << 16;
  std::uint64_t stop_after = 0;
  int k_max = 3;
  std::string graph6;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

GraphStream make_stream(const RunConfig& cfg) {
  if (cfg.source.rfind("file=", 0) == 0) {
    const std::string path = cfg.source.substr(5);
    if (path.empty()) throw UsageError("--source file= needs a path");
    return GraphStream::graph6_file(path);
  }
  if (cfg.order == 0) throw UsageError("--order is required for source " + cfg.source);
  if (cfg.source == "labeled") return GraphStream::labeled(cfg.order);
  if (cfg.source == "representatives") return GraphStream::representatives(cfg.order);
  throw UsageError("unknown source '" + cfg.source + "' (labeled, representatives, file=<path>)");
}

// ---------------------------------------------------------------------------
// info

std::string set_text(VertexSet s) {
  std::string t = "{";
  for (int v : s.members()) t += (t.size() > 1 ? "," : "") + std::to_string(v);
  return t + "}";
}

std::string join_values(const std::vector<double>& xs) {
  std::string t;
  for (double x : xs) t += (t.empty() ? "" : " ") + fmt(std::abs(x) < 1e-12 ? 0.0 : x);
  return t;
}

void describe_side(std::ostream& out, const char* label, const Graph& g, const CutWitness& iso,
                   const CutWitness& ch) {
  const auto edges = g.edges();
  out << label << ": " << encode_graph6(g) << "\n";
  out << "  n = " << g.order() << ", edges = " << edges.size() << ", connected = "
      << (is_connected(g) ? "yes" : "no") << "\n";
  out << "  edge list:";
  if (edges.empty()) out << " (none)";
  for (const auto& [u, v] : edges) out << " " << u << "-" << v;
  out << "\n";
  out << "  i = " << iso.ratio.to_string() << "  witness X = " << set_text(iso.subset) << ", boundary "
      << iso.boundary << ", |X| " << iso.denominator << "\n";
  out << "  h = " << ch.ratio.to_string() << "  witness X = " << set_text(ch.subset) << ", boundary "
      << ch.boundary << ", vol " << ch.denominator << "\n";
  const SpectralSummary norm = normalized_spectrum(g);
  out << "  lambda2 = " << fmt(norm.lambda2) << "\n";
  out << "  mu2 = " << fmt(mu2(g)) << "\n";
  out << "  normalized spectrum: " << join_values(norm.eigenvalues) << "\n";
}

std::string compare_word(double value, double bound, double tol) {
  if (std::abs(value - bound) <= tol) return "tight";
  return value > bound ? "holds" : "below";
}

int cmd_info(const RunConfig& cfg, std::ostream& out) {
  const Graph g = parse_graph6(cfg.graph6);
  if (g.order() < 2) throw UsageError("info needs a graph with at least 2 vertices");
  const PairEvaluation e = evaluate_pair(g, true);
  const ScanRecord& r = e.record;
  const int n = g.order();
  const double tol = cfg.tol_eig;

  describe_side(out, "graph", e.graph, e.iso, e.cheeger);
  describe_side(out, "complement", e.complement, e.iso_c, e.cheeger_c);

  const bool is_p4 = n == 4 && pair_canonical_form(g) == pair_canonical_form(path(4));
  out << "bounds:\n";

  const ExactRatio max_i = std::max(r.i, r.i_c);
  const ExactRatio one(1, 1);
  std::string word = max_i == one ? "tight" : (max_i > one ? "holds" : "below");
  if (max_i < one && is_p4) word = "isoperimetric pair bound exception (P4)";
  out << "  max{i, i^c} = " << max_i.to_string() << " vs 1: " << word << "\n";

  const ExactRatio max_h = std::max(r.h, r.h_c);
  const ExactRatio hb = cheeger_pair_bound(n);
  word = max_h == hb ? "tight" : (max_h > hb ? "holds" : "below");
  if (max_h < hb && is_p4) word = "Cheeger pair bound exception (P4)";
  out << "  max{h, h^c} = " << max_h.to_string() << " vs 1/floor(n/2) = " << hb.to_string() << ": " << word
      << "\n";

  for (const auto& [side, disconnected, partner_i] :
       {std::tuple{"graph", !r.connected, r.i_c}, std::tuple{"complement", !r.connected_c, r.i}}) {
    if (!disconnected) continue;
    out << "  " << side << " disconnected, partner i = " << partner_i.to_string() << " vs 1: "
        << (partner_i == one ? "tight" : (partner_i > one ? "holds" : "below")) << "\n";
  }

  const double max_l = std::max(r.lambda2, r.lambda2_c);
  const double lb = lambda2_pair_bound(n);
  out << "  max{lambda2, lambda2^c} = " << fmt(max_l) << " vs " << (n % 2 == 0 ? "2/n^2" : "2/(n-1)^2") << " = "
      << fmt(lb) << ": " << (max_l > lb + tol ? "holds (strict)" : "below") << "\n";
  if (n >= 5) {
    out << "  max{lambda2, lambda2^c} vs conjectured 2/(n-1) = " << fmt(2.0 / (n - 1)) << ": "
        << compare_word(max_l, 2.0 / (n - 1), tol) << "\n";
  }

  for (const auto& [side, connected, l2, h] : {std::tuple{"graph", r.connected, r.lambda2, r.h},
                                               std::tuple{"complement", r.connected_c, r.lambda2_c, r.h_c}}) {
    if (!connected) continue;
    const double hd = h.to_double();
    out << "  " << side << " lambda2 = " << fmt(l2) << " vs h^2/2 = " << fmt(hd * hd / 2) << ": "
        << (l2 > hd * hd / 2 ? "holds (strict)" : "below") << "\n";
  }

  const double sum = r.lambda2 + r.lambda2_c;
  if (r.connected && r.connected_c) {
    out << "  lambda2 + lambda2^c = " << fmt(sum) << " vs conjectured 2/sqrt(n) = " << fmt(2.0 / std::sqrt(n))
        << ": " << compare_word(sum, 2.0 / std::sqrt(n), tol) << "\n";
  }
  if (regular_degree(g) >= 0) {
    out << "  regular: lambda2 + lambda2^c = " << fmt(sum) << " vs 1/(n-1) = " << fmt(1.0 / (n - 1)) << ": "
        << compare_word(sum, 1.0 / (n - 1), tol) << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// scan

std::string stream_signature(const RunConfig& cfg, const GraphStream& stream) {
  return cfg.source + "|order=" + std::to_string(cfg.order) + "|positions=" + std::to_string(stream.positions()) +
         "|" + stream.provenance();
}

struct Checkpoint {
  std::uint64_t next_position = 0;
  std::uint64_t csv_bytes = 0;
};

void write_checkpoint(const fs::path& path, const std::string& signature, const Checkpoint& c) {
  nlohmann::ordered_json j;
  j["signature"] = signature;
  j["next_position"] = c.next_position;
  j["csv_bytes"] = c.csv_bytes;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    f << j.dump(2) << "\n";
    if (!f) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  fs::rename(tmp, path);
}

Checkpoint read_checkpoint(const fs::path& path, const std::string& signature) {
  std::ifstream f(path);
  if (!f) throw UsageError("--resume: no checkpoint at " + path.string());
  const auto j = nlohmann::json::parse(f);
  if (j.at("signature").get<std::string>() != signature) {
    throw UsageError("--resume: checkpoint " + path.string() + " belongs to a different scan");
  }
  return {j.at("next_position").get<std::uint64_t>(), j.at("csv_bytes").get<std::uint64_t>()};
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GraphStream stream = make_stream(cfg);
  const std::uint64_t positions = stream.positions();
  const std::uint64_t chunk = std::max<std::uint64_t>(1, cfg.chunk_size);
  const std::uint64_t every = std::max<std::uint64_t>(1, cfg.checkpoint_every);

  const auto render = [&](std::uint64_t begin, std::uint64_t end) {
    std::string rows;
    stream.for_each(begin, end, [&](std::uint64_t, const Graph& g) {
      rows += to_csv_row(scan_record(g));
      rows += '\n';
    });
    return rows;
  };

  if (cfg.out.empty()) {
    if (cfg.resume) throw UsageError("--resume needs --out");
    out << csv_header() << "\n";
    const std::uint64_t chunks = (positions + chunk - 1) / chunk;
    ordered_chunks(
        0, chunks, cfg.workers, [&](std::uint64_t c) { return render(c * chunk, (c + 1) * chunk); },
        [&](std::uint64_t, std::string&& rows) { out << rows; });
    return kPass;
  }

  const fs::path csv_path = cfg.out;
  const fs::path ckpt_path = cfg.out + ".ckpt";
  const std::string signature = stream_signature(cfg, stream);
  Checkpoint state;
  std::ofstream csv;
  if (cfg.resume) {
    state = read_checkpoint(ckpt_path, signature);
    if (!fs::exists(csv_path) || fs::file_size(csv_path) < state.csv_bytes) {
      throw UsageError("--resume: " + csv_path.string() + " is shorter than its checkpoint");
    }
    // Rows written after the last checkpoint are recomputed.
    fs::resize_file(csv_path, state.csv_bytes);
    csv.open(csv_path, std::ios::binary | std::ios::app);
    err << "resuming at position " << state.next_position << " of " << positions << "\n";
  } else {
    csv.open(csv_path, std::ios::binary | std::ios::trunc);
    const std::string header = csv_header() + "\n";
    csv << header;
    state.csv_bytes = header.size();
  }
  if (!csv) throw std::runtime_error("cannot write " + csv_path.string());

  const std::uint64_t start = state.next_position;
  std::uint64_t stop = positions;
  if (cfg.stop_after > 0) stop = std::min(positions, start + cfg.stop_after);
  const std::uint64_t chunks = stop > start ? (stop - start + chunk - 1) / chunk : 0;
  std::uint64_t rows_written = 0;
  ordered_chunks(
      0, chunks, cfg.workers,
      [&](std::uint64_t c) { return render(start + c * chunk, start + (c + 1) * chunk); },
      [&](std::uint64_t c, std::string&& rows) {
        csv << rows;
        state.csv_bytes += rows.size();
        rows_written += static_cast<std::uint64_t>(std::count(rows.begin(), rows.end(), '\n'));
        const std::uint64_t before = start + c * chunk;
        state.next_position = std::min(positions, start + (c + 1) * chunk);
        if (state.next_position / every != before / every && state.next_position < positions) {
          csv.flush();
          if (!csv) throw std::runtime_error("write failure on " + csv_path.string());
          write_checkpoint(ckpt_path, signature, state);
          err << "checkpoint " << state.next_position << "/" << positions << "\n";
        }
      });
  csv.close();
  if (!csv) throw std::runtime_error("write failure on " + csv_path.string());
  if (state.next_position < positions) {
    write_checkpoint(ckpt_path, signature, state);
    err << "stopped at position " << state.next_position << " of " << positions << "; continue with --resume\n";
    return kPass;
  }
  fs::remove(ckpt_path);
  err << "wrote " << rows_written << " rows to " << csv_path.string() << " (" << stream.provenance() << ")\n";
  return kPass;
}

// ---------------------------------------------------------------------------
// verify

std::vector<SuiteId> parse_suites(const std::string& text) {
  std::vector<SuiteId> ids;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "all") {
      for (SuiteId id : all_stream_suites()) ids.push_back(id);
      ids.push_back(SuiteId::join_spectrum);
      continue;
    }
    const auto id = parse_suite_name(name);
    if (!id) throw UsageError("unknown suite '" + name + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("no suite selected");
  std::vector<SuiteId> unique;
  for (SuiteId id : ids) {
    if (std::find(unique.begin(), unique.end(), id) == unique.end()) unique.push_back(id);
  }
  return unique;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<SuiteId> ids = parse_suites(cfg.suite);
  SuiteConfig sc;
  sc.eig_tol = cfg.tol_eig;

  std::vector<SuiteId> stream_ids;
  bool join = false;
  for (SuiteId id : ids) {
    if (id == SuiteId::join_spectrum) {
      join = true;
    } else {
      stream_ids.push_back(id);
    }
  }

  std::vector<SuiteReport> reports;
  if (!stream_ids.empty()) {
    const GraphStream stream = make_stream(cfg);
    reports = run_suites(stream, stream_ids, sc, RunOptions{cfg.workers, cfg.chunk_size});
  }
  if (join) reports.push_back(suite_join_spectrum(cfg.k_max, sc));

  if (cfg.format == "json") {
    out << reports_to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) out << report_to_text(r);
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::trunc);
    f << reports_to_json(reports) << "\n";
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
  }

  bool violation = false;
  bool counterexample = false;
  for (const auto& r : reports) {
    violation = violation || r.status() == SuiteStatus::violation;
    counterexample = counterexample || r.status() == SuiteStatus::counterexample;
  }
  if (violation) return kFailure;
  return counterexample ? kCounterexample : kPass;
}

// ---------------------------------------------------------------------------
// plotdata

enum class Figure { iso, cheeger, lambda };

const char* figure_name(Figure f) {
  switch (f) {
    case Figure::iso:
      return "iso";
    case Figure::cheeger:
      return "cheeger";
    case Figure::lambda:
      return "lambda";
  }
  return "?";
}

std::vector<Figure> parse_figures(const std::string& text) {
  if (text == "all") return {Figure::iso, Figure::cheeger, Figure::lambda};
  if (text == "iso") return {Figure::iso};
  if (text == "cheeger") return {Figure::cheeger};
  if (text == "lambda") return {Figure::lambda};
  throw UsageError("unknown figure '" + text + "' (iso, cheeger, lambda, all)");
}

// Points are keyed by their printed form so that float noise below 12
// significant digits does not produce duplicate points.
using Point = std::pair<double, double>;
using PointSets = std::map<int, std::set<Point>>;  // by order

double rounded(double v) { return std::stod(fmt(std::abs(v) < 1e-12 ? 0.0 : v)); }

void add_point(std::set<Point>& s, double x, double y) {
  s.emplace(rounded(x), rounded(y));
  s.emplace(rounded(y), rounded(x));
}

void write_plot_file(const fs::path& path, Figure f, int n, const std::string& provenance,
                     const std::set<Point>& points) {
  std::ofstream file(path, std::ios::trunc);
  const double half = 1.0 / (n / 2);
  double min_max = std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : points) min_max = std::min(min_max, std::max(x, y));

  file << "# figure " << figure_name(f) << "\n";
  file << "# order " << n << "\n";
  file << "# source " << provenance << "\n";
  switch (f) {
    case Figure::iso:
      file << "# columns i(G) i(G^c)\n";
      file << "# box x=1 y=1\n";
      break;
    case Figure::cheeger:
      file << "# columns h(G) h(G^c)\n";
      file << "# box x=" << fmt(half) << " y=" << fmt(half) << "  (1/floor(n/2))\n";
      break;
    case Figure::lambda:
      file << "# columns lambda2(G) lambda2(G^c)\n";
      file << "# box x=" << fmt(half) << " y=" << fmt(half) << "  (1/floor(n/2))\n";
      file << "# line x+y=" << fmt(2.0 / std::sqrt(n)) << "  (2/sqrt(n))\n";
      break;
  }
  file << "# points " << points.size() << " (distinct, both orientations of each pair)\n";
  file << "# min_max_coordinate " << fmt(points.empty() ? 0.0 : min_max) << "\n";
  for (const auto& [x, y] : points) file << fmt(x) << " " << fmt(y) << "\n";
  if (!file) throw std::runtime_error("cannot write " + path.string());
}

int cmd_plotdata(const RunConfig& cfg, std::ostream& out) {
  const std::vector<Figure> figures = parse_figures(cfg.figure);
  const bool spectra = std::find(figures.begin(), figures.end(), Figure::lambda) != figures.end();
  const GraphStream stream = make_stream(cfg);
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);

  std::map<Figure, PointSets> merged;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, cfg.chunk_size);
  const std::uint64_t chunks = (stream.positions() + chunk - 1) / chunk;
  ordered_chunks(
      0, chunks, cfg.workers,
      [&](std::uint64_t c) {
        std::map<Figure, PointSets> local;
        stream.for_each(c * chunk, (c + 1) * chunk, [&](std::uint64_t, const Graph& g) {
          const ScanRecord r = evaluate_pair(g, spectra).record;
          for (Figure f : figures) {
            auto& s = local[f][r.n];
            if (f == Figure::iso) add_point(s, r.i.to_double(), r.i_c.to_double());
            if (f == Figure::cheeger) add_point(s, r.h.to_double(), r.h_c.to_double());
            if (f == Figure::lambda) add_point(s, r.lambda2, r.lambda2_c);
          }
        });
        return local;
      },
      [&](std::uint64_t, std::map<Figure, PointSets>&& local) {
        for (auto& [f, by_order] : local) {
          for (auto& [n, pts] : by_order) merged[f][n].merge(pts);
        }
      });

  for (Figure f : figures) {
    for (const auto& [n, pts] : merged[f]) {
      const fs::path path = dir / (std::string(figure_name(f)) + "_n" + std::to_string(n) + ".dat");
      write_plot_file(path, f, n, stream.provenance(), pts);
      out << path.string() << ": " << pts.size() << " points\n";
    }
  }
  return kPass;
}

void add_stream_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--order", cfg.order, "Vertex count for labeled/representatives sources")->check(CLI::Range(2, 8));
  cmd->add_option("--source", cfg.source, "labeled | representatives | file=<graph6 path>")->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--chunk-size", cfg.chunk_size, "Stream positions per work unit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"ngcheck: complement-pair bounds on isoperimetric, Cheeger and spectral invariants"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "Invariants of one graph and its complement");
  info->add_option("graph6", cfg.graph6, "Graph in graph6 format")->required();
  info->add_option("--tol-eig", cfg.tol_eig, "Tolerance for spectral equality")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Write one CSV row per graph of a stream");
  add_stream_options(scan, cfg);
  scan->add_option("--out", cfg.out, "CSV path (stdout if omitted)");
  scan->add_flag("--resume", cfg.resume, "Continue from <out>.ckpt");
  scan->add_option("--checkpoint-every", cfg.checkpoint_every, "Positions between checkpoints")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scan->add_option("--stop-after", cfg.stop_after, "Stop after this many positions, leaving a checkpoint");

  auto* verify = app.add_subcommand("verify", "Run verification suites over a stream");
  add_stream_options(verify, cfg);
  verify->add_option("--suite", cfg.suite, "Suite name, comma list, or all")->capture_default_str();
  verify->add_option("--tol-eig", cfg.tol_eig, "Tolerance for spectral comparisons")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--out", cfg.out, "Also write JSON reports to this path");
  verify->add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--k-max", cfg.k_max, "Largest degree for the join-spectrum suite")->check(CLI::Range(0, 5));

  auto* plot = app.add_subcommand("plotdata", "Write scatter data files for the complement-pair plots");
  add_stream_options(plot, cfg);
  plot->add_option("--figure", cfg.figure, "iso | cheeger | lambda | all")->capture_default_str();
  plot->add_option("--out", cfg.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kFailure;
  }

  try {
    if (*info) return cmd_info(cfg, out);
    if (*scan) return cmd_scan(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out);
    if (*plot) return cmd_plotdata(cfg, out);
  } catch (const std::exception& e) {
    err << "ngcheck: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace ngcheck::cli
