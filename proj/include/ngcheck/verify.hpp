#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngcheck/cuts.hpp"
#include "ngcheck/enumeration.hpp"
#include "ngcheck/graph.hpp"

namespace ngcheck {

/// All complement-pair invariants of one graph; one CSV row / one scatter point.
struct ScanRecord {
  std::string graph6;
  int n = 0;
  ExactRatio i, i_c, h, h_c;
  double lambda2 = 0.0;
  double lambda2_c = 0.0;
  bool connected = false;
  bool connected_c = false;
};

/// A ScanRecord together with the graphs and cut witnesses it came from.
struct PairEvaluation {
  Graph graph;
  Graph complement;
  CutWitness iso, iso_c, cheeger, cheeger_c;
  ScanRecord record;
  bool has_spectra = false;
};

/// Computes i, h for g and its complement, and lambda2 for both when
/// `with_spectra` is set (otherwise the lambda2 fields are NaN).
PairEvaluation evaluate_pair(const Graph& g, bool with_spectra = true);
ScanRecord scan_record(const Graph& g);
std::vector<ScanRecord> scan_records(const GraphStream& stream);

std::string csv_header();
/// Floats use 12 significant digits; booleans are 1/0.
std::string to_csv_row(const ScanRecord& r);

// ---------------------------------------------------------------------------
// Suite reports

enum class SuiteStatus { pass, violation, counterexample };
std::string_view to_string(SuiteStatus s);

struct Finding {
  std::string graph6;
  std::string detail;
};

struct Witness {
  std::string graph6;
  std::string canonical;  // canonical form of the complement pair
  std::string value;
};

struct Metric {
  enum class Kind { min, max, count };
  Kind kind = Kind::min;
  double value = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::string provenance;
  std::uint64_t scanned = 0;
  std::uint64_t applicable = 0;
  std::vector<Finding> violations;
  std::uint64_t violation_count = 0;
  std::vector<Finding> counterexamples;
  std::uint64_t counterexample_count = 0;
  std::vector<Witness> exceptions;
  std::vector<Witness> equality_witnesses;
  std::map<std::string, Metric> metrics;
  double elapsed_ms = 0.0;
  std::size_t max_findings = 100;

  SuiteStatus status() const;

  void add_violation(std::string graph6, std::string detail);
  void add_counterexample(std::string graph6, std::string detail);
  /// Deduplicated by canonical form; the first occurrence in stream order wins.
  void add_exception(Witness w);
  void add_equality_witness(Witness w);
  void observe_min(const std::string& name, double v);
  void observe_max(const std::string& name, double v);
  void add_count(const std::string& name, double v = 1.0);
  std::optional<double> metric(const std::string& name) const;

  /// Appends a report covering a later part of the same stream.
  void merge(const SuiteReport& later);
};

// ---------------------------------------------------------------------------
// Suites

enum class SuiteId {
  isoperimetric,
  disconnected,
  cheeger,
  characterization,
  lambda2,
  conjecture_max,
  conjecture_sum,
  regular_sum,
  join_spectrum,
};

std::string_view suite_name(SuiteId id);
std::optional<SuiteId> parse_suite_name(std::string_view name);
std::vector<SuiteId> all_stream_suites();
bool suite_needs_spectra(SuiteId id);

struct SuiteConfig {
  double eig_tol = 1e-9;
  double cheeger_slack = 1e-12;
  std::size_t max_findings = 100;
};

SuiteReport empty_report(SuiteId id, const std::string& provenance, const SuiteConfig& config);

/// Feeds one evaluated graph to a suite.
void consume(SuiteId id, SuiteReport& report, const PairEvaluation& eval, const SuiteConfig& config);

struct RunOptions {
  unsigned workers = 1;
  std::uint64_t chunk_size = std::uint64_t{1} << 16;
};

/// Runs several stream suites in one pass. Per-chunk partial reports are merged
/// in chunk order, so the result does not depend on the worker count.
std::vector<SuiteReport> run_suites(const GraphStream& stream, std::span<const SuiteId> ids,
                                    const SuiteConfig& config = {}, const RunOptions& options = {});

SuiteReport suite_isoperimetric(const GraphStream& stream, const SuiteConfig& config = {});
SuiteReport suite_disconnected_lemma(const GraphStream& stream, const SuiteConfig& config = {});
SuiteReport suite_cheeger(const GraphStream& stream, const SuiteConfig& config = {});
SuiteReport suite_cheeger_characterization(const GraphStream& stream, const SuiteConfig& config = {});
SuiteReport suite_lambda2(const GraphStream& stream, const SuiteConfig& config = {});
SuiteReport suite_conjecture_max(const GraphStream& stream, const SuiteConfig& config = {});
SuiteReport suite_conjecture_sum_connected(const GraphStream& stream, const SuiteConfig& config = {});
SuiteReport suite_regular_sum(const GraphStream& stream, const SuiteConfig& config = {});

/// K1 joined with every pair of connected k-regular components of order at
/// most `max_component_order`, for k = 0..k_max, compared against the
/// closed-form spectrum.
SuiteReport suite_join_spectrum(int k_max, const SuiteConfig& config = {}, int max_component_order = 6);

// Structural shapes used by the equality characterizations.

/// Has a dominating vertex v such that g - v is disconnected.
bool has_dominating_cut_vertex(const Graph& g);
/// n even: K1 joined with cliques of orders n/2 and n/2 - 1.
/// n odd: K1 joined with (K_m + H), |H| = m = (n-1)/2, 2|E(H)| >= m(m-3).
bool matches_cheeger_equality_shape(const Graph& g);
/// K1 joined with two disjoint cliques of order (n-1)/2.
bool is_vertex_two_cliques(const Graph& g);

/// 2/n^2 for even n, 2/(n-1)^2 for odd n.
double lambda2_pair_bound(int n);

// Serialization (field names: suite, status, scanned, violations, equality_witnesses, provenance, ...).
std::string report_to_json(const SuiteReport& r, bool include_timing = false);
std::string reports_to_json(std::span<const SuiteReport> reports, bool include_timing = false);
std::string report_to_text(const SuiteReport& r);

}  // namespace ngcheck
